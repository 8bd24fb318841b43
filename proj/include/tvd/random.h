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

#ifndef TVD_RANDOM_H
#define TVD_RANDOM_H

#include <cstdint>
#include <random>

namespace tvd {

/// Engine used for every random draw in the library.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
uint64_t mix64(uint64_t x);

/// Seed for substream `index` of `seed`; distinct indices give unrelated streams.
uint64_t substream_seed(uint64_t seed, uint64_t index);

/// A fresh engine for substream (seed, index).
Rng substream(uint64_t seed, uint64_t index);

/// Uniform integer in [0, n) by rejection on the raw 64-bit output.
///
/// std::uniform_int_distribution is implementation-defined, which would make
/// sample streams differ between standard libraries.
uint64_t uniform_below(Rng& rng, uint64_t n);

}  // namespace tvd

#endif  // TVD_RANDOM_H
