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

#include "sgqt/spsa.hpp"

#include <cmath>

namespace sgqt {

double alpha(std::uint64_t k, const GainSchedule &g) {
    return g.a / std::pow(static_cast<double>(k) + 1.0 + g.A, g.s);
}

double beta(std::uint64_t k, const GainSchedule &g) {
    return g.b / std::pow(static_cast<double>(k) + 1.0, g.t);
}

std::vector<double> sample_direction(std::size_t dim, Rng &rng) {
    if (dim == 0) {
        throw ParameterError("direction dimension must be positive");
    }
    std::vector<double> delta(dim);
    std::bernoulli_distribution coin(0.5);
    for (auto &d : delta) {
        d = coin(rng) ? 1.0 : -1.0;
    }
    return delta;
}

std::vector<double> gradient_estimate(double f_plus,
                                      double f_minus,
                                      double beta_k,
                                      const std::vector<double> &delta) {
    if (!(beta_k > 0.0)) {
        throw ParameterError("beta_k must be positive");
    }
    // With +-1 entries, multiplying by delta equals dividing componentwise.
    const double scale = (f_plus - f_minus) / (2.0 * beta_k);
    std::vector<double> g(delta.size());
    for (std::size_t i = 0; i < delta.size(); ++i) {
        g[i] = scale * delta[i];
    }
    return g;
}

namespace {

struct StepOutcome {
    SpsaIterate next;
    double estimate_plus;
    double estimate_minus;
};

StepOutcome step_impl(const SpsaIterate &it,
                      const TrueStateModel &model,
                      const OracleConfig &cfg,
                      const GainSchedule &g,
                      OracleSession &session,
                      Rng &rng) {
    const double a_k = alpha(it.k, g);
    const double b_k = beta(it.k, g);
    const std::vector<double> delta = sample_direction(it.sigma.size(), rng);

    ParamVector probe = it.sigma;
    for (std::size_t i = 0; i < probe.size(); ++i) {
        probe.values[i] = it.sigma.values[i] + b_k * delta[i];
    }
    const double f_plus = estimate_infidelity(model, probe, cfg, session, rng).value;
    for (std::size_t i = 0; i < probe.size(); ++i) {
        probe.values[i] = it.sigma.values[i] - b_k * delta[i];
    }
    const double f_minus = estimate_infidelity(model, probe, cfg, session, rng).value;

    const std::vector<double> grad = gradient_estimate(f_plus, f_minus, b_k, delta);

    SpsaIterate next;
    next.k = it.k + 1;
    next.sigma = it.sigma;
    for (std::size_t i = 0; i < next.sigma.size(); ++i) {
        next.sigma.values[i] -= a_k * grad[i];
    }
    return StepOutcome{std::move(next), f_plus, f_minus};
}

}  // namespace

SpsaIterate step(const SpsaIterate &it,
                 const TrueStateModel &model,
                 const OracleConfig &cfg,
                 const GainSchedule &g,
                 OracleSession &session,
                 Rng &rng) {
    return step_impl(it, model, cfg, g, session, rng).next;
}

Trajectory run(const ParamVector &initial,
               std::uint64_t iterations,
               const TrueStateModel &model,
               const OracleConfig &cfg,
               const GainSchedule &g,
               OracleSession &session,
               Rng &rng) {
    if (iterations < 1) {
        throw ParameterError("iterations must be at least 1");
    }
    const int n = model.pure_part.n_qubits;

    Trajectory traj;
    traj.n_qubits = n;
    traj.initial_infidelity = 1.0 - model.fidelity_to(to_state(initial, n));
    traj.records.reserve(iterations);

    SpsaIterate it{0, initial};
    for (std::uint64_t k = 0; k < iterations; ++k) {
        StepOutcome out = step_impl(it, model, cfg, g, session, rng);
        it = std::move(out.next);
        const double infid = 1.0 - model.fidelity_to(to_state(it.sigma, n));
        traj.records.push_back(TrajectoryRecord{it.k, infid, out.estimate_plus, out.estimate_minus});
    }
    return traj;
}

}  // namespace sgqt
