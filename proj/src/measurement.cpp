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

#include "sgqt/measurement.hpp"

#include <algorithm>

namespace sgqt {

double TrueStateModel::fidelity_to(const StateVector &phi) const {
    if (kind == TrueStateKind::Pure) {
        return fidelity_pure(pure_part, phi);
    }
    return fidelity_depolarized(DepolarizedTrueState{pure_part, p}, phi);
}

InfidelityEstimate estimate_infidelity(const TrueStateModel &model,
                                       const ParamVector &target,
                                       const OracleConfig &cfg,
                                       OracleSession &session,
                                       Rng &rng) {
    StateVector phi = cfg.measurement_noise_std > 0.0
                          ? to_state(perturb_params(target, cfg.measurement_noise_std, rng),
                                     model.pure_part.n_qubits)
                          : to_state(target, model.pure_part.n_qubits);

    const double fidelity = model.fidelity_to(phi);

    session.calls += 1;
    if (!cfg.shots.has_value()) {
        session.exact_calls += 1;
        return InfidelityEstimate{1.0 - fidelity, 0};
    }

    const std::uint64_t n = *cfg.shots;
    if (n == 0) {
        throw ParameterError("shot count must be positive");
    }
    // The two-outcome measurement along |phi> is a Bernoulli trial with
    // success probability F; a binomial draw replaces per-shot simulation.
    std::binomial_distribution<std::uint64_t> binom(n, std::clamp(fidelity, 0.0, 1.0));
    const std::uint64_t count = binom(rng);
    session.total_shots += n;
    return InfidelityEstimate{1.0 - static_cast<double>(count) / static_cast<double>(n), n};
}

}  // namespace sgqt
