// Copyright 2026 The SGQT Authors
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

#ifndef SGQT_RNG_HPP
#define SGQT_RNG_HPP

#include <cstdint>
#include <random>

namespace sgqt {

using Rng = std::mt19937_64;

/// splitmix64 finalizer, used to spread a counter into a 64-bit seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Counter-based stream derivation: trial i under a base seed always gets
/// the same generator, independent of how trials are scheduled.
inline Rng make_trial_rng(std::uint64_t base_seed, std::uint64_t trial_index) {
    return Rng(splitmix64(splitmix64(base_seed) ^ splitmix64(trial_index ^ 0x632BE59BD9B4E019ull)));
}

}  // namespace sgqt

#endif
