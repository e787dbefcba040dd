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

#include "sgqt/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace sgqt {

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::SingleQubit: return "single-qubit";
        case Scenario::MultiQubit: return "multi-qubit";
        case Scenario::WDepolarized: return "w-depolarized";
        case Scenario::NoisyMeasurement: return "noisy-measurement";
    }
    throw ConfigError("unknown scenario");
}

Scenario scenario_from_name(const std::string &name) {
    if (name == "single-qubit") return Scenario::SingleQubit;
    if (name == "multi-qubit") return Scenario::MultiQubit;
    if (name == "w-depolarized") return Scenario::WDepolarized;
    if (name == "noisy-measurement") return Scenario::NoisyMeasurement;
    throw ConfigError("unknown scenario: " + name);
}

Parametrization ExperimentConfig::parametrization() const {
    switch (scenario) {
        case Scenario::SingleQubit:
        case Scenario::MultiQubit:
            return Parametrization::Full;
        case Scenario::WDepolarized:
        case Scenario::NoisyMeasurement:
            return Parametrization::WClass;
    }
    throw ConfigError("unknown scenario");
}

void validate(const ExperimentConfig &cfg) {
    if (cfg.n_trials < 1) {
        throw ConfigError("n_trials must be at least 1");
    }
    if (cfg.iterations < 1) {
        throw ConfigError("iterations must be at least 1");
    }
    if (cfg.init_mode == InitMode::Haar && cfg.init_std != 0.0) {
        throw ConfigError("init_std must be 0 for Haar init");
    }
    if (cfg.init_std < 0.0) {
        throw ConfigError("init_std must be nonnegative");
    }
    switch (cfg.scenario) {
        case Scenario::SingleQubit:
            if (cfg.n_qubits != 1) {
                throw ConfigError("single-qubit scenario requires n_qubits = 1");
            }
            [[fallthrough]];
        case Scenario::MultiQubit:
            if (cfg.depolarizing_p != 0.0 || cfg.measurement_noise_std != 0.0) {
                throw ConfigError("pure-state scenarios take no noise fields");
            }
            break;
        case Scenario::WDepolarized:
            if (cfg.n_qubits < 2) {
                throw ConfigError("W-class scenarios require n_qubits >= 2");
            }
            if (cfg.measurement_noise_std != 0.0) {
                throw ConfigError("w-depolarized takes no measurement noise");
            }
            if (cfg.depolarizing_p < 0.0 || cfg.depolarizing_p > 1.0) {
                throw ConfigError("depolarizing_p must be in [0, 1]");
            }
            break;
        case Scenario::NoisyMeasurement:
            if (cfg.n_qubits < 2) {
                throw ConfigError("W-class scenarios require n_qubits >= 2");
            }
            if (cfg.depolarizing_p != 0.0) {
                throw ConfigError("noisy-measurement takes no depolarizing noise");
            }
            if (cfg.measurement_noise_std < 0.0) {
                throw ConfigError("measurement_noise_std must be nonnegative");
            }
            break;
    }
}

namespace {

ParamVector true_state_params(const ExperimentConfig &cfg, Rng &rng, TrueStateModel &model) {
    if (cfg.parametrization() == Parametrization::Full) {
        StateVector psi = haar_random_state(cfg.n_qubits, rng);
        model.kind = TrueStateKind::Pure;
        model.pure_part = psi;
        model.p = 0.0;
        return params_from_state(psi);
    }
    WClassParams w = haar_random_w_state(cfg.n_qubits, rng);
    if (cfg.scenario == Scenario::WDepolarized) {
        model.kind = TrueStateKind::Depolarized;
        model.p = cfg.depolarizing_p;
    } else {
        model.kind = TrueStateKind::Pure;
        model.p = 0.0;
    }
    model.pure_part = embed_w(w);
    return params_from_w(w);
}

ParamVector initial_guess(const ExperimentConfig &cfg, const ParamVector &true_params, Rng &rng) {
    if (cfg.init_mode == InitMode::Perturbed) {
        return perturb_params(true_params, cfg.init_std, rng);
    }
    if (cfg.parametrization() == Parametrization::Full) {
        return params_from_state(haar_random_state(cfg.n_qubits, rng));
    }
    return params_from_w(haar_random_w_state(cfg.n_qubits, rng));
}

}  // namespace

Trajectory run_trial(const ExperimentConfig &cfg, int trial_index) {
    OracleSession session;
    return run_trial(cfg, trial_index, session);
}

Trajectory run_trial(const ExperimentConfig &cfg, int trial_index, OracleSession &session) {
    validate(cfg);
    Rng rng = make_trial_rng(cfg.base_seed, static_cast<std::uint64_t>(trial_index));

    TrueStateModel model;
    const ParamVector true_params = true_state_params(cfg, rng, model);
    const ParamVector initial = initial_guess(cfg, true_params, rng);

    OracleConfig oracle;
    oracle.shots = cfg.shots;
    oracle.measurement_noise_std = cfg.measurement_noise_std;

    return run(initial, cfg.iterations, model, oracle, cfg.gains, session, rng);
}

std::vector<Trajectory> run_trials(const ExperimentConfig &cfg, std::uint64_t *total_shots) {
    validate(cfg);
    const int n_trials = cfg.n_trials;
    std::vector<Trajectory> trials(static_cast<std::size_t>(n_trials));
    std::vector<std::uint64_t> shots(static_cast<std::size_t>(n_trials), 0);

    unsigned hw = std::thread::hardware_concurrency();
    unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : (hw > 0 ? hw : 1);
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(n_trials));

    if (n_threads <= 1) {
        for (int i = 0; i < n_trials; ++i) {
            OracleSession session;
            trials[static_cast<std::size_t>(i)] = run_trial(cfg, i, session);
            shots[static_cast<std::size_t>(i)] = session.total_shots;
        }
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n_trials) {
                    return;
                }
                OracleSession session;
                trials[static_cast<std::size_t>(i)] = run_trial(cfg, i, session);
                shots[static_cast<std::size_t>(i)] = session.total_shots;
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    if (total_shots != nullptr) {
        std::uint64_t sum = 0;
        for (auto s : shots) {
            sum += s;
        }
        *total_shots = sum;
    }
    return trials;
}

double percentile(std::vector<double> values, double p) {
    if (values.empty()) {
        throw ParameterError("percentile of empty sample");
    }
    std::sort(values.begin(), values.end());
    const double pos = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= values.size()) {
        return values.back();
    }
    const double frac = pos - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
}

EnsembleSummary summarize(const std::vector<Trajectory> &trials, const ExperimentConfig &cfg) {
    if (trials.empty()) {
        throw ParameterError("summarize needs at least one trial");
    }
    const std::size_t k_max = trials.front().records.size();
    for (const auto &t : trials) {
        if (t.records.size() != k_max) {
            throw DimensionError("trials have mismatched lengths");
        }
    }

    EnsembleSummary out;
    out.config = cfg;
    out.ks.resize(k_max);
    out.median.resize(k_max);
    out.q25.resize(k_max);
    out.q75.resize(k_max);

    std::vector<double> column(trials.size());
    for (std::size_t k = 0; k < k_max; ++k) {
        for (std::size_t i = 0; i < trials.size(); ++i) {
            column[i] = trials[i].records[k].true_infidelity;
        }
        out.ks[k] = trials.front().records[k].k;
        out.median[k] = percentile(column, 0.5);
        out.q25[k] = percentile(column, 0.25);
        out.q75[k] = percentile(column, 0.75);
    }

    for (std::size_t i = 0; i < trials.size(); ++i) {
        column[i] = trials[i].initial_infidelity;
    }
    out.initial_median = percentile(column, 0.5);
    return out;
}

EnsembleSummary run_ensemble(const ExperimentConfig &cfg) {
    std::uint64_t total_shots = 0;
    std::vector<Trajectory> trials = run_trials(cfg, &total_shots);
    EnsembleSummary out = summarize(trials, cfg);
    out.total_shots = total_shots;
    return out;
}

ScalingFit fit_power_law(const std::vector<double> &xs,
                         const std::vector<double> &ys,
                         double window_lo,
                         double window_hi,
                         bool decay) {
    if (xs.size() != ys.size()) {
        throw DimensionError("fit_power_law: xs and ys differ in length");
    }
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < window_lo || xs[i] > window_hi) {
            continue;
        }
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
            throw FitError("fit_power_law: nonpositive data in window");
        }
        lx.push_back(std::log10(xs[i]));
        ly.push_back(std::log10(ys[i]));
    }
    const std::size_t m = lx.size();
    if (m < 3) {
        throw FitError("fit_power_law: fewer than 3 points in window");
    }

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw FitError("fit_power_law: degenerate x values");
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    double ssr = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = ly[i] - (intercept + slope * lx[i]);
        ssr += r * r;
    }
    const double stderr_slope = std::sqrt(ssr / static_cast<double>(m - 2) / sxx);

    ScalingFit fit;
    fit.exponent = decay ? -slope : slope;
    fit.intercept = intercept;
    fit.stderr_exponent = stderr_slope;
    fit.window_lo = window_lo;
    fit.window_hi = window_hi;
    fit.n_points = m;
    return fit;
}

double min_infidelity_depolarized(double p, int n_qubits) {
    if (p < 0.0 || p > 1.0) {
        throw ParameterError("p must be in [0, 1]");
    }
    const double dim = std::ldexp(1.0, n_qubits);
    return p * (1.0 - 1.0 / dim);
}

EnsembleSummary rescale_infidelity(const EnsembleSummary &summary, double floor) {
    if (floor < 0.0 || floor >= 1.0) {
        throw ParameterError("floor must be in [0, 1)");
    }
    EnsembleSummary out = summary;
    out.below_floor_count = 0;
    auto shift = [&](std::vector<double> &v) {
        for (auto &x : v) {
            x -= floor;
            if (x < 0.0) {
                out.below_floor_count += 1;
            }
        }
    };
    shift(out.median);
    shift(out.q25);
    shift(out.q75);
    out.initial_median -= floor;
    return out;
}

SweepResult dimension_sweep(const ExperimentConfig &base,
                            const std::vector<int> &n_list,
                            const std::vector<std::uint64_t> &fixed_ks) {
    if (n_list.size() < 3) {
        throw ConfigError("dimension sweep needs at least 3 qubit counts");
    }
    SweepResult result;
    result.n_qubits = n_list;
    result.summaries.reserve(n_list.size());
    for (int n : n_list) {
        ExperimentConfig cfg = base;
        cfg.n_qubits = n;
        result.summaries.push_back(run_ensemble(cfg));
    }

    const Parametrization tag = base.parametrization();
    for (std::uint64_t k : fixed_ks) {
        std::vector<double> dims;
        std::vector<double> medians;
        for (std::size_t i = 0; i < n_list.size(); ++i) {
            const auto &s = result.summaries[i];
            auto it = std::find(s.ks.begin(), s.ks.end(), k);
            if (it == s.ks.end()) {
                throw FitError("dimension sweep: fixed k not recorded");
            }
            const std::size_t idx = static_cast<std::size_t>(it - s.ks.begin());
            // W-depolarized sweeps compare rescaled infidelity: the analytic
            // floor p*(1 - 1/2^n) differs per qubit count and must come off
            // before the dimension fit.
            const double floor = base.scenario == Scenario::WDepolarized
                                     ? min_infidelity_depolarized(base.depolarizing_p, n_list[i])
                                     : 0.0;
            dims.push_back(static_cast<double>(physical_dim(n_list[i], tag)));
            medians.push_back(s.median[idx] - floor);
        }
        result.eta_fits.emplace_back(
            k, fit_power_law(dims, medians, dims.front(), dims.back(), /*decay=*/false));
    }
    return result;
}

}  // namespace sgqt
