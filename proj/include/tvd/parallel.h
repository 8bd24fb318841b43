// Copyright 2026 The tvd Authors
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

#ifndef TVD_PARALLEL_H
#define TVD_PARALLEL_H

namespace tvd {

/// Which implementation of a kernel to run. The serial variants are kept as
/// references for testing and benchmarking.
enum class Exec { kSerial, kParallel };

/// Caps the number of OpenMP workers; values < 1 restore the runtime default.
void set_num_threads(int n);
int num_threads();

}  // namespace tvd

#endif  // TVD_PARALLEL_H
