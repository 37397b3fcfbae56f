// Copyright 2026 The disagree-kit Authors
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

#ifndef DISAGREE_PARALLEL_H_
#define DISAGREE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace disagree {

// Number of worker threads: DISAGREE_THREADS when set to a positive integer,
// otherwise std::thread::hardware_concurrency().
std::size_t worker_count();

// Runs fn(i) for every i in [0, n). Tasks are claimed dynamically, so fn must
// write its output to a slot owned by i. Calls made from inside a worker run
// inline. The first exception thrown by any task is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace disagree

#endif  // DISAGREE_PARALLEL_H_
