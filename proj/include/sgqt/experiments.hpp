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

#ifndef SGQT_EXPERIMENTS_HPP
#define SGQT_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgqt/spsa.hpp"

namespace sgqt {

enum class Scenario { SingleQubit, MultiQubit, WDepolarized, NoisyMeasurement };
enum class InitMode { Haar, Perturbed };

std::string scenario_name(Scenario s);
Scenario scenario_from_name(const std::string &name);

struct ExperimentConfig {
    Scenario scenario = Scenario::SingleQubit;
    int n_qubits = 1;
    std::optional<std::uint64_t> shots = 100;  // nullopt = exact oracle
    std::uint64_t iterations = 1000;
    int n_trials = 100;
    GainSchedule gains = GainSchedule::standard(3.0, 0.0, 0.1);
    InitMode init_mode = InitMode::Haar;
    double init_std = 0.0;               // Perturbed init only
    double depolarizing_p = 0.0;         // WDepolarized only
    double measurement_noise_std = 0.0;  // NoisyMeasurement only
    std::uint64_t base_seed = 0;
    int threads = 0;  // 0 = hardware concurrency

    Parametrization parametrization() const;
};

/// Rejects scenario/field combinations that make no sense together; throws
/// ConfigError when a noise field is set for a scenario that ignores it.
void validate(const ExperimentConfig &cfg);

/// Per-iteration ensemble statistics of the true infidelity.
struct EnsembleSummary {
    std::vector<std::uint64_t> ks;
    std::vector<double> median;
    std::vector<double> q25;
    std::vector<double> q75;
    double initial_median = 0.0;  // median infidelity of the starting guesses
    std::uint64_t total_shots = 0;
    int below_floor_count = 0;  // statistics pushed below a subtracted floor
    ExperimentConfig config;
};

struct ScalingFit {
    double exponent = 0.0;
    double intercept = 0.0;  // of log10(y) on log10(x)
    double stderr_exponent = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    std::size_t n_points = 0;
};

/// One seeded trial: sample the hidden true state, build the initial guess,
/// run SPSA. Deterministic in (cfg.base_seed, trial_index).
Trajectory run_trial(const ExperimentConfig &cfg, int trial_index);
Trajectory run_trial(const ExperimentConfig &cfg, int trial_index, OracleSession &session);

/// All trials of an ensemble; parallel across trials, deterministic in order.
std::vector<Trajectory> run_trials(const ExperimentConfig &cfg, std::uint64_t *total_shots = nullptr);

/// Reduce trajectories to per-iteration median and interquartile range.
EnsembleSummary summarize(const std::vector<Trajectory> &trials, const ExperimentConfig &cfg);

EnsembleSummary run_ensemble(const ExperimentConfig &cfg);

/// Linear-interpolated percentile of an unsorted sample, p in [0, 1].
double percentile(std::vector<double> values, double p);

/// OLS of log10(y) on log10(x) over points with x in [window_lo, window_hi].
/// `decay` reports the exponent as minus the slope (gamma); otherwise as the
/// slope itself (eta).
ScalingFit fit_power_law(const std::vector<double> &xs,
                         const std::vector<double> &ys,
                         double window_lo,
                         double window_hi,
                         bool decay);

/// Infidelity of the best pure state to a p-depolarized model: p*(1 - 1/2^n).
double min_infidelity_depolarized(double p, int n_qubits);

/// Subtracts a constant floor from every statistic. Values driven below the
/// floor keep their signed value; below_floor_count records how many.
EnsembleSummary rescale_infidelity(const EnsembleSummary &summary, double floor);

struct SweepResult {
    std::vector<int> n_qubits;
    std::vector<EnsembleSummary> summaries;  // one per qubit count
    // One eta fit per requested fixed k: median infidelity vs physical_dim.
    std::vector<std::pair<std::uint64_t, ScalingFit>> eta_fits;
};

/// Run the ensemble at each qubit count and fit infidelity vs dimension.
SweepResult dimension_sweep(const ExperimentConfig &base,
                            const std::vector<int> &n_list,
                            const std::vector<std::uint64_t> &fixed_ks);

}  // namespace sgqt

#endif
