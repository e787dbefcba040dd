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

#ifndef SGQT_MEASUREMENT_HPP
#define SGQT_MEASUREMENT_HPP

#include <cstdint>
#include <optional>

#include "sgqt/quantum_core.hpp"

namespace sgqt {

enum class TrueStateKind { Pure, Depolarized };

/// The hidden state the experiment measures against. Only this module (and
/// diagnostics) may read it; the optimizer sees nothing but noisy estimates.
struct TrueStateModel {
    TrueStateKind kind = TrueStateKind::Pure;
    StateVector pure_part;
    double p = 0.0;  // depolarizing probability, 0 when Pure

    double fidelity_to(const StateVector &phi) const;
};

/// Shot budget and measurement-direction noise for the oracle.
/// shots == nullopt returns the exact expectation (testing mode).
struct OracleConfig {
    std::optional<std::uint64_t> shots = 10000;
    double measurement_noise_std = 0.0;
};

struct InfidelityEstimate {
    double value = 0.0;          // in {0, 1/N, ..., 1} for finite N
    std::uint64_t shots_used = 0;  // 0 for exact-mode calls
};

/// Per-run shot accounting. After k SPSA iterations at finite N the total
/// is exactly 2*N*k. Exact-mode calls are counted, with zero shots.
struct OracleSession {
    std::uint64_t total_shots = 0;
    std::uint64_t calls = 0;
    std::uint64_t exact_calls = 0;
};

/// The noisy objective f(sigma): simulate N two-outcome measurements in the
/// basis containing the target state and return the estimated infidelity
/// 1 - count/N. With measurement noise, the target's parameters get a fresh
/// Gaussian perturbation on every call before being turned into a state.
InfidelityEstimate estimate_infidelity(const TrueStateModel &model,
                                       const ParamVector &target,
                                       const OracleConfig &cfg,
                                       OracleSession &session,
                                       Rng &rng);

}  // namespace sgqt

#endif
