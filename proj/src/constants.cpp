// Copyright 2026 The Lochs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lochs/constants.hpp"

#include <mpfr.h>

#include <cstdio>
#include <vector>

#include "lochs/errors.hpp"

namespace lochs {

namespace {

constexpr mpfr_prec_t kBits = 256;

// Minimal RAII holder; MPFR has no C++ wrapper in the base install.
class Real {
 public:
  Real() { mpfr_init2(v_, kBits); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Leaves (6 log 2 log beta) / pi^2 in out.
void lochs_constant_into(const ExactRational& beta, Real& out) {
  if (beta <= ExactRational(1)) throw DomainError("beta must exceed 1, got " + beta.to_string());
  Real pi, ln2, lb;
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_sqr(pi.get(), pi.get(), MPFR_RNDN);
  mpfr_const_log2(ln2.get(), MPFR_RNDN);
  mpfr_set_q(lb.get(), beta.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_log(lb.get(), lb.get(), MPFR_RNDN);
  mpfr_mul(out.get(), ln2.get(), lb.get(), MPFR_RNDN);
  mpfr_mul_ui(out.get(), out.get(), 6, MPFR_RNDN);
  mpfr_div(out.get(), out.get(), pi.get(), MPFR_RNDN);
}

}  // namespace

double critical_log_beta() {
  Real pi, ln2;
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_sqr(pi.get(), pi.get(), MPFR_RNDN);
  mpfr_const_log2(ln2.get(), MPFR_RNDN);
  mpfr_mul_ui(ln2.get(), ln2.get(), 6, MPFR_RNDN);
  mpfr_div(pi.get(), pi.get(), ln2.get(), MPFR_RNDN);
  return mpfr_get_d(pi.get(), MPFR_RNDN);
}

double golden_lyapunov() {
  Real phi;
  mpfr_set_ui(phi.get(), 5, MPFR_RNDN);
  mpfr_sqrt(phi.get(), phi.get(), MPFR_RNDN);
  mpfr_add_ui(phi.get(), phi.get(), 1, MPFR_RNDN);
  mpfr_div_ui(phi.get(), phi.get(), 2, MPFR_RNDN);
  mpfr_log(phi.get(), phi.get(), MPFR_RNDN);
  mpfr_mul_ui(phi.get(), phi.get(), 2, MPFR_RNDN);
  return mpfr_get_d(phi.get(), MPFR_RNDN);
}

double log_beta(const ExactRational& beta) {
  if (beta.sign() <= 0) throw DomainError("log of non-positive beta");
  Real lb;
  mpfr_set_q(lb.get(), beta.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_log(lb.get(), lb.get(), MPFR_RNDN);
  return mpfr_get_d(lb.get(), MPFR_RNDN);
}

double lochs_constant(const ExactRational& beta) {
  Real out;
  lochs_constant_into(beta, out);
  return mpfr_get_d(out.get(), MPFR_RNDN);
}

std::string lochs_constant_digits(const ExactRational& beta, int digits) {
  if (digits < 1 || digits > 64) throw DomainError("digits must lie in [1, 64]");
  Real out;
  lochs_constant_into(beta, out);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, out.get());
  return std::string(buf.data());
}

}  // namespace lochs
