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

#pragma once

#include <cstddef>
#include <functional>

namespace lochs {

// Runs body(i) for every i in [0, count). Bodies write to their own slot,
// so the caller reduces in index order afterwards and results never depend
// on the thread count.
using Executor = std::function<void(std::size_t count, const std::function<void(std::size_t)>& body)>;

Executor serial_executor();

// Splits the index range over `threads` workers for the duration of each
// call. The first exception thrown by a body is rethrown on the caller's
// thread once all workers have stopped.
Executor threaded_executor(unsigned threads);

}  // namespace lochs
