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

#include "lochs/fixtures.hpp"

#include <cstdint>
#include <string>

#include "lochs/errors.hpp"

namespace lochs {

namespace {

// First 1100 decimals of pi - 3, truncated (not rounded).
constexpr std::string_view kPiMinus3Digits =
    "1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679"
    "8214808651328230664709384460955058223172535940812848111745028410270193852110555964462294895493038196"
    "4428810975665933446128475648233786783165271201909145648566923460348610454326648213393607260249141273"
    "7245870066063155881748815209209628292540917153643678925903600113305305488204665213841469519415116094"
    "3305727036575959195309218611738193261179310511854807446237996274956735188575272489122793818301194912"
    "9833673362440656643086021394946395224737190702179860943702770539217176293176752384674818467669405132"
    "0005681271452635608277857713427577896091736371787214684409012249534301465495853710507922796892589235"
    "4201995611212902196086403441815981362977477130996051870721134999999837297804995105973173281609631859"
    "5024459455346908302642522308253344685035261931188171010003137838752886587533208381420617177669147303"
    "5982534904287554687311595628638823537875937519577818577805321712268066130019278766111959092164201989"
    "3809525720106548586327886593615338182796823030195203530185296899577362259941389124972177528347913151";

constexpr std::uint64_t kPiMinus3Checksum = 0x1739fa1c571957ffULL;

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view pi_fixture_digits() { return kPiMinus3Digits; }

std::uint64_t pi_fixture_checksum() { return kPiMinus3Checksum; }

bool pi_fixture_intact() {
  return kPiMinus3Digits.size() == 1100 && fnv1a64(kPiMinus3Digits) == kPiMinus3Checksum;
}

Fixture load_fixture(std::string_view name) {
  if (name != "pi") throw DomainError("unknown fixture '" + std::string(name) + "'");
  if (!pi_fixture_intact()) throw Error("pi fixture checksum mismatch");
  Fixture f;
  f.name = "pi";
  f.value = ExactRational::from_decimal("0." + std::string(kPiMinus3Digits));
  f.cell_width = ExactRational(BigInt(1), BigInt(f.value.denominator()));
  return f;
}

}  // namespace lochs
