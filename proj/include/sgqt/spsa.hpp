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

#ifndef SGQT_SPSA_HPP
#define SGQT_SPSA_HPP

#include <cstdint>
#include <vector>

#include "sgqt/measurement.hpp"
#include "sgqt/quantum_core.hpp"

namespace sgqt {

/// Gain sequences alpha_k = a/(k+1+A)^s and beta_k = b/(k+1)^t.
struct GainSchedule {
    double a = 1.0;
    double A = 0.0;
    double b = 0.1;
    double s = 0.602;
    double t = 0.101;

    /// s=0.602, t=0.101: the robust general-purpose exponents.
    static GainSchedule standard(double a, double A, double b) {
        return GainSchedule{a, A, b, 0.602, 0.101};
    }
    /// s=1, t=1/6: the asymptotically optimal exponents.
    static GainSchedule asymptotic(double a, double A, double b) {
        return GainSchedule{a, A, b, 1.0, 1.0 / 6.0};
    }
};

double alpha(std::uint64_t k, const GainSchedule &g);
double beta(std::uint64_t k, const GainSchedule &g);

/// Random search direction: each entry independently +1 or -1.
std::vector<double> sample_direction(std::size_t dim, Rng &rng);

/// Two-point gradient estimate [(f_plus - f_minus) / (2 beta_k)] * delta.
std::vector<double> gradient_estimate(double f_plus,
                                      double f_minus,
                                      double beta_k,
                                      const std::vector<double> &delta);

struct SpsaIterate {
    std::uint64_t k = 0;
    ParamVector sigma;  // unnormalized; normalized by to_state on every use
};

struct TrajectoryRecord {
    std::uint64_t k = 0;          // 1-based iteration count
    double true_infidelity = 0.0;  // diagnostic; never fed to the optimizer
    double estimate_plus = 0.0;
    double estimate_minus = 0.0;
};

struct Trajectory {
    int n_qubits = 0;
    double initial_infidelity = 0.0;  // of the starting guess, before any step
    std::vector<TrajectoryRecord> records;
};

/// One SPSA iteration: draw a direction, query the oracle at
/// sigma +- beta_k * delta, descend: sigma - alpha_k * g_k.
SpsaIterate step(const SpsaIterate &it,
                 const TrueStateModel &model,
                 const OracleConfig &cfg,
                 const GainSchedule &g,
                 OracleSession &session,
                 Rng &rng);

/// Full run of `iterations` steps. Record k holds the true infidelity of the
/// iterate after the k-th update plus the two estimates that produced it.
Trajectory run(const ParamVector &initial,
               std::uint64_t iterations,
               const TrueStateModel &model,
               const OracleConfig &cfg,
               const GainSchedule &g,
               OracleSession &session,
               Rng &rng);

}  // namespace sgqt

#endif
