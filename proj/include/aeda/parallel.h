//
// Copyright 2026 The AEDA Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef AEDA_PARALLEL_H_
#define AEDA_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace aeda {

// Runs fn(i) for i in [0, n) on up to `jobs` threads (0 = hardware
// concurrency). If any call throws, the exception from the lowest failing
// index is rethrown after all workers stop, so failures are reported the
// same way regardless of scheduling.
void ParallelFor(size_t n, size_t jobs, const std::function<void(size_t)>& fn);

}  // namespace aeda

#endif  // AEDA_PARALLEL_H_
