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
//
// sgqt: iterative state estimation driven by noisy fidelity measurements.
//
//   sgqt run --scenario single-qubit --shots 100 --iterations 1000 \
//            --trials 100 --seed 7 --out out/
//   sgqt fit --input out/summary_n1.csv --window 100,1000
//
// Scenario presets bake in the gain schedules and noise settings of the
// four standard experiments; flags override the preset, a --config JSON
// file sits in between (flags > config file > preset).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgqt/experiments.hpp"
#include "sgqt/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sgqt;

namespace {

constexpr const char *kToolVersion = "sgqt 0.1.0";

struct RunOptions {
    ExperimentConfig cfg;           // n_qubits is overwritten per sweep entry
    std::vector<int> qubit_list;    // one or more qubit counts
    std::string out_dir = "sgqt_out";
    bool write_svg = false;
    bool write_trajectories = false;
    bool allow_large = false;
    double fit_window_lo = 0.0;  // 0 = last decade default
    double fit_window_hi = 0.0;
};

ExperimentConfig preset_for(Scenario scenario, std::vector<int> &qubits) {
    ExperimentConfig cfg;
    cfg.scenario = scenario;
    switch (scenario) {
        case Scenario::SingleQubit:
            cfg.n_qubits = 1;
            cfg.shots = 100;
            cfg.iterations = 1000;
            cfg.n_trials = 100;
            cfg.gains = GainSchedule::standard(3.0, 0.0, 0.1);
            cfg.init_mode = InitMode::Haar;
            qubits = {1};
            break;
        case Scenario::MultiQubit:
            cfg.shots = 10000;
            cfg.iterations = 10000;
            cfg.n_trials = 50;
            cfg.gains = GainSchedule::asymptotic(0.3, 1000.0, 0.1);
            cfg.init_mode = InitMode::Perturbed;
            cfg.init_std = 0.01;
            qubits = {2, 3, 4, 5, 6};
            break;
        case Scenario::WDepolarized:
            cfg.shots = 10000;
            cfg.iterations = 10000;
            cfg.n_trials = 50;
            cfg.gains = GainSchedule::asymptotic(0.3, 1000.0, 0.1);
            cfg.init_mode = InitMode::Perturbed;
            cfg.init_std = 0.01;
            cfg.depolarizing_p = 0.05;
            qubits = {2, 4, 6, 8};
            break;
        case Scenario::NoisyMeasurement:
            cfg.shots = 10000;
            cfg.iterations = 10000;
            cfg.n_trials = 50;
            cfg.gains = GainSchedule::asymptotic(0.3, 1000.0, 0.1);
            cfg.init_mode = InitMode::Perturbed;
            cfg.init_std = 0.01;
            cfg.measurement_noise_std = 0.1;
            qubits = {2, 4, 6, 8};
            break;
    }
    return cfg;
}

void apply_config_json(const json &j, ExperimentConfig &cfg, std::vector<int> &qubits) {
    const json &c = j.contains("config") ? j.at("config") : j;
    if (c.contains("scenario")) cfg.scenario = scenario_from_name(c.at("scenario").get<std::string>());
    if (c.contains("n_qubits")) {
        if (c.at("n_qubits").is_array()) {
            qubits = c.at("n_qubits").get<std::vector<int>>();
        } else {
            qubits = {c.at("n_qubits").get<int>()};
        }
    }
    if (c.contains("shots_N")) {
        const auto &s = c.at("shots_N");
        if (s.is_null()) {
            cfg.shots = std::nullopt;
        } else {
            cfg.shots = s.get<std::uint64_t>();
        }
    }
    if (c.contains("iterations_k")) cfg.iterations = c.at("iterations_k").get<std::uint64_t>();
    if (c.contains("n_trials")) cfg.n_trials = c.at("n_trials").get<int>();
    if (c.contains("gains")) {
        const json &g = c.at("gains");
        cfg.gains.a = g.value("a", cfg.gains.a);
        cfg.gains.A = g.value("A", cfg.gains.A);
        cfg.gains.b = g.value("b", cfg.gains.b);
        cfg.gains.s = g.value("s", cfg.gains.s);
        cfg.gains.t = g.value("t", cfg.gains.t);
    }
    if (c.contains("init_mode")) {
        const std::string mode = c.at("init_mode").get<std::string>();
        if (mode == "haar") {
            cfg.init_mode = InitMode::Haar;
            cfg.init_std = 0.0;
        } else if (mode == "perturbed") {
            cfg.init_mode = InitMode::Perturbed;
        } else {
            throw ConfigError("unknown init_mode: " + mode);
        }
    }
    if (c.contains("init_std")) cfg.init_std = c.at("init_std").get<double>();
    if (c.contains("depolarizing_p")) cfg.depolarizing_p = c.at("depolarizing_p").get<double>();
    if (c.contains("measurement_noise_std"))
        cfg.measurement_noise_std = c.at("measurement_noise_std").get<double>();
    if (c.contains("base_seed")) cfg.base_seed = c.at("base_seed").get<std::uint64_t>();
    if (c.contains("threads")) cfg.threads = c.at("threads").get<int>();
}

json config_to_json(const ExperimentConfig &cfg, const std::vector<int> &qubits) {
    json g = {{"a", cfg.gains.a}, {"A", cfg.gains.A}, {"b", cfg.gains.b},
              {"s", cfg.gains.s}, {"t", cfg.gains.t}};
    json c = {
        {"scenario", scenario_name(cfg.scenario)},
        {"n_qubits", qubits.size() == 1 ? json(qubits.front()) : json(qubits)},
        {"shots_N", cfg.shots.has_value() ? json(*cfg.shots) : json(nullptr)},
        {"iterations_k", cfg.iterations},
        {"n_trials", cfg.n_trials},
        {"gains", g},
        {"init_mode", cfg.init_mode == InitMode::Haar ? "haar" : "perturbed"},
        {"init_std", cfg.init_std},
        {"depolarizing_p", cfg.depolarizing_p},
        {"measurement_noise_std", cfg.measurement_noise_std},
        {"base_seed", cfg.base_seed},
        {"threads", cfg.threads},
    };
    return c;
}

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(std::stoi(cell));
    }
    if (out.empty()) {
        throw ConfigError("empty qubit list");
    }
    return out;
}

void check_scale(const ExperimentConfig &cfg, int n, bool allow_large) {
    const int cap = cfg.parametrization() == Parametrization::Full ? 6 : 8;
    if (n > cap) {
        if (!allow_large) {
            throw ConfigError("n_qubits=" + std::to_string(n) + " exceeds the desk-scale cap of " +
                              std::to_string(cap) + "; pass --allow-large to override");
        }
        std::cerr << "warning: n_qubits=" << n << " exceeds the desk-scale cap; expect long runtimes\n";
    }
}

int do_run(const RunOptions &opt) {
    fs::create_directories(opt.out_dir);

    struct PerQubit {
        int n;
        EnsembleSummary summary;
        ScalingFit gamma;
        double floor;
    };
    std::vector<PerQubit> results;
    std::uint64_t total_shots = 0;

    for (int n : opt.qubit_list) {
        check_scale(opt.cfg, n, opt.allow_large);
        ExperimentConfig cfg = opt.cfg;
        cfg.n_qubits = n;
        validate(cfg);

        std::uint64_t shots = 0;
        std::vector<Trajectory> trials = run_trials(cfg, &shots);
        total_shots += shots;
        EnsembleSummary summary = summarize(trials, cfg);
        summary.total_shots = shots;

        const double floor = cfg.scenario == Scenario::WDepolarized
                                 ? min_infidelity_depolarized(cfg.depolarizing_p, n)
                                 : 0.0;

        const double k_max = static_cast<double>(cfg.iterations);
        const double lo = opt.fit_window_lo > 0.0 ? opt.fit_window_lo : k_max / 10.0;
        const double hi = opt.fit_window_hi > 0.0 ? opt.fit_window_hi : k_max;
        std::vector<double> ks(summary.ks.begin(), summary.ks.end());
        std::vector<double> med = summary.median;
        for (auto &v : med) {
            v -= floor;
        }
        ScalingFit gamma = fit_power_law(ks, med, lo, hi, /*decay=*/true);

        const std::string csv_path = opt.out_dir + "/summary_n" + std::to_string(n) + ".csv";
        write_file(csv_path, summary_csv(summary));
        if (opt.write_trajectories) {
            for (std::size_t i = 0; i < trials.size(); ++i) {
                write_file(opt.out_dir + "/trajectory_n" + std::to_string(n) + "_t" +
                               std::to_string(i) + ".csv",
                           trajectory_csv(trials[i]));
            }
        }
        results.push_back(PerQubit{n, std::move(summary), gamma, floor});
    }

    // Dimension fit needs at least three qubit counts.
    std::optional<ScalingFit> eta;
    if (opt.qubit_list.size() >= 3) {
        std::vector<double> dims, finals;
        for (const auto &r : results) {
            dims.push_back(static_cast<double>(physical_dim(r.n, opt.cfg.parametrization())));
            finals.push_back(r.summary.median.back() - r.floor);
        }
        eta = fit_power_law(dims, finals, dims.front(), dims.back(), /*decay=*/false);
    }

    json fits = json::array();
    for (const auto &r : results) {
        fits.push_back({{"kind", "gamma"},
                        {"n_qubits", r.n},
                        {"exponent", r.gamma.exponent},
                        {"stderr", r.gamma.stderr_exponent},
                        {"window", {r.gamma.window_lo, r.gamma.window_hi}},
                        {"rescale_floor", r.floor},
                        {"initial_median", r.summary.initial_median},
                        {"final_median", r.summary.median.back()}});
        std::printf("gamma(n=%d) = %.4f +- %.4f  window [%g, %g]\n", r.n, r.gamma.exponent,
                    r.gamma.stderr_exponent, r.gamma.window_lo, r.gamma.window_hi);
    }
    if (eta.has_value()) {
        fits.push_back({{"kind", "eta"},
                        {"fixed_k", opt.cfg.iterations},
                        {"exponent", eta->exponent},
                        {"stderr", eta->stderr_exponent},
                        {"window", {eta->window_lo, eta->window_hi}}});
        std::printf("eta(k=%llu) = %.4f +- %.4f over d in [%g, %g]\n",
                    static_cast<unsigned long long>(opt.cfg.iterations), eta->exponent,
                    eta->stderr_exponent, eta->window_lo, eta->window_hi);
    }

    json summary_doc = {{"tool_version", kToolVersion},
                        {"scenario", scenario_name(opt.cfg.scenario)},
                        {"config", config_to_json(opt.cfg, opt.qubit_list)},
                        {"total_shots", total_shots},
                        {"fits", fits}};
    write_file(opt.out_dir + "/summary.json", summary_doc.dump(2) + "\n");

    json outputs = json::array();
    for (const auto &r : results) {
        outputs.push_back("summary_n" + std::to_string(r.n) + ".csv");
    }
    outputs.push_back("summary.json");
    json manifest = {{"tool_version", kToolVersion},
                     {"scenario", scenario_name(opt.cfg.scenario)},
                     {"base_seed", opt.cfg.base_seed},
                     {"config", config_to_json(opt.cfg, opt.qubit_list)},
                     {"outputs", outputs}};
    write_file(opt.out_dir + "/manifest.json", manifest.dump(2) + "\n");

    if (opt.write_svg) {
        std::vector<SvgSeries> series;
        for (const auto &r : results) {
            SvgSeries s;
            s.label = "n=" + std::to_string(r.n);
            s.xs.assign(r.summary.ks.begin(), r.summary.ks.end());
            for (std::size_t i = 0; i < r.summary.median.size(); ++i) {
                s.ys.push_back(r.summary.median[i] - r.floor);
            }
            series.push_back(std::move(s));
        }
        write_file(opt.out_dir + "/summary.svg", loglog_svg(series, "k", "infidelity"));
    }
    return 0;
}

int do_fit(const std::string &input,
           const std::string &xcol,
           const std::string &ycol,
           const std::string &window,
           const std::string &mode) {
    CsvTable table = read_csv_file(input);
    std::vector<double> xs = table.column(xcol);
    std::vector<double> ys = table.column(ycol);

    double lo = xs.empty() ? 0.0 : *std::min_element(xs.begin(), xs.end());
    double hi = xs.empty() ? 0.0 : *std::max_element(xs.begin(), xs.end());
    if (!window.empty()) {
        const auto comma = window.find(',');
        if (comma == std::string::npos) {
            throw ConfigError("--window expects LO,HI");
        }
        lo = std::stod(window.substr(0, comma));
        hi = std::stod(window.substr(comma + 1));
    }
    const bool decay = mode == "decay";
    if (!decay && mode != "growth") {
        throw ConfigError("--mode must be decay or growth");
    }
    ScalingFit fit = fit_power_law(xs, ys, lo, hi, decay);
    std::printf("%s = %.6f +- %.6f  window [%g, %g]  points %zu\n", decay ? "gamma" : "eta",
                fit.exponent, fit.stderr_exponent, fit.window_lo, fit.window_hi, fit.n_points);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Self-guided state estimation from noisy fidelity measurements"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    // run
    auto *run_cmd = app.add_subcommand("run", "Run a scenario ensemble and write CSV/JSON outputs");
    std::string scenario_str, qubits_str, gains_str, init_str, config_path, out_dir = "sgqt_out";
    std::string fit_window_str;
    long long shots_flag = -1;
    long long iterations_flag = -1, trials_flag = -1, threads_flag = -1;
    long long seed_flag = -1;
    double depol_flag = -1.0, measnoise_flag = -1.0;
    bool exact_flag = false, svg_flag = false, traj_flag = false, allow_large = false;
    run_cmd->add_option("--scenario", scenario_str,
                        "single-qubit | multi-qubit | w-depolarized | noisy-measurement");
    run_cmd->add_option("--config", config_path, "JSON config (or a manifest.json from a prior run)");
    run_cmd->add_option("--qubits", qubits_str, "comma-separated qubit counts");
    run_cmd->add_option("--shots", shots_flag, "measurements per fidelity estimate");
    run_cmd->add_flag("--exact", exact_flag, "exact-expectation oracle (no shot noise)");
    run_cmd->add_option("--iterations", iterations_flag, "SPSA iterations per trial");
    run_cmd->add_option("--trials", trials_flag, "trials per qubit count");
    run_cmd->add_option("--seed", seed_flag, "base seed (falls back to SGQT_SEED, then 0)");
    run_cmd->add_option("--gains", gains_str, "a,A,b,s,t");
    run_cmd->add_option("--init", init_str, "haar | perturbed:STD");
    run_cmd->add_option("--depolarizing", depol_flag, "depolarizing probability p");
    run_cmd->add_option("--meas-noise", measnoise_flag, "measurement-target perturbation std");
    run_cmd->add_option("--out", out_dir, "output directory");
    run_cmd->add_option("--threads", threads_flag, "worker threads (default: all cores)");
    run_cmd->add_option("--fit-window", fit_window_str, "gamma fit window LO,HI (default: last decade)");
    run_cmd->add_flag("--svg", svg_flag, "also write a log-log SVG plot");
    run_cmd->add_flag("--trajectories", traj_flag, "write per-trial trajectory CSVs");
    run_cmd->add_flag("--allow-large", allow_large, "lift the desk-scale qubit cap");

    // fit
    auto *fit_cmd = app.add_subcommand("fit", "Re-fit a power-law exponent from a saved CSV");
    std::string fit_input, fit_xcol = "k", fit_ycol = "median", fit_window, fit_mode = "decay";
    fit_cmd->add_option("--input", fit_input, "input CSV path")->required();
    fit_cmd->add_option("--xcol", fit_xcol, "x column (default k)");
    fit_cmd->add_option("--ycol", fit_ycol, "y column (default median)");
    fit_cmd->add_option("--window", fit_window, "fit window LO,HI (default: full range)");
    fit_cmd->add_option("--mode", fit_mode, "decay (gamma) | growth (eta)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fit_cmd->parsed()) {
            return do_fit(fit_input, fit_xcol, fit_ycol, fit_window, fit_mode);
        }

        RunOptions opt;
        if (scenario_str.empty() && config_path.empty()) {
            throw ConfigError("run needs --scenario or --config");
        }

        // Preset first (scenario may come from the config file instead).
        json config_json;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                throw ConfigError("cannot open config file: " + config_path);
            }
            try {
                in >> config_json;
            } catch (const json::exception &e) {
                throw ConfigError(std::string("invalid config JSON: ") + e.what());
            }
        }
        Scenario scenario;
        if (!scenario_str.empty()) {
            scenario = scenario_from_name(scenario_str);
        } else {
            const json &c = config_json.contains("config") ? config_json.at("config") : config_json;
            if (!c.contains("scenario")) {
                throw ConfigError("config file does not name a scenario");
            }
            scenario = scenario_from_name(c.at("scenario").get<std::string>());
        }
        opt.cfg = preset_for(scenario, opt.qubit_list);
        if (!config_json.is_null() && !config_json.empty()) {
            try {
                apply_config_json(config_json, opt.cfg, opt.qubit_list);
            } catch (const json::exception &e) {
                throw ConfigError(std::string("invalid config field: ") + e.what());
            }
        }
        opt.cfg.scenario = scenario;

        // Flags override everything.
        if (!qubits_str.empty()) opt.qubit_list = parse_int_list(qubits_str);
        if (exact_flag) opt.cfg.shots = std::nullopt;
        if (shots_flag >= 0) {
            if (shots_flag == 0) {
                throw ConfigError("--shots must be positive (use --exact for the exact oracle)");
            }
            opt.cfg.shots = static_cast<std::uint64_t>(shots_flag);
        }
        if (iterations_flag >= 0) opt.cfg.iterations = static_cast<std::uint64_t>(iterations_flag);
        if (trials_flag >= 0) opt.cfg.n_trials = static_cast<int>(trials_flag);
        if (threads_flag >= 0) opt.cfg.threads = static_cast<int>(threads_flag);
        if (seed_flag >= 0) {
            opt.cfg.base_seed = static_cast<std::uint64_t>(seed_flag);
        } else if (const char *env = std::getenv("SGQT_SEED"); env != nullptr && *env != '\0') {
            opt.cfg.base_seed = std::strtoull(env, nullptr, 10);
        }
        if (!gains_str.empty()) {
            std::stringstream ss(gains_str);
            std::string cell;
            std::vector<double> vals;
            while (std::getline(ss, cell, ',')) {
                vals.push_back(std::stod(cell));
            }
            if (vals.size() != 5) {
                throw ConfigError("--gains expects a,A,b,s,t");
            }
            opt.cfg.gains = GainSchedule{vals[0], vals[1], vals[2], vals[3], vals[4]};
        }
        if (!init_str.empty()) {
            if (init_str == "haar") {
                opt.cfg.init_mode = InitMode::Haar;
                opt.cfg.init_std = 0.0;
            } else if (init_str.rfind("perturbed:", 0) == 0) {
                opt.cfg.init_mode = InitMode::Perturbed;
                opt.cfg.init_std = std::stod(init_str.substr(10));
            } else {
                throw ConfigError("--init expects haar or perturbed:STD");
            }
        }
        if (depol_flag >= 0.0) opt.cfg.depolarizing_p = depol_flag;
        if (measnoise_flag >= 0.0) opt.cfg.measurement_noise_std = measnoise_flag;
        if (!fit_window_str.empty()) {
            const auto comma = fit_window_str.find(',');
            if (comma == std::string::npos) {
                throw ConfigError("--fit-window expects LO,HI");
            }
            opt.fit_window_lo = std::stod(fit_window_str.substr(0, comma));
            opt.fit_window_hi = std::stod(fit_window_str.substr(comma + 1));
        }
        opt.out_dir = out_dir;
        opt.write_svg = svg_flag;
        opt.write_trajectories = traj_flag;
        opt.allow_large = allow_large;

        return do_run(opt);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FitError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
