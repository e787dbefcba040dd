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
// End-to-end acceptance suite: scaled reproductions of the four standard
// experiments plus the statistical property checks. Prints one PASS/FAIL
// line per criterion; exit status is the number of failures.

#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "sgqt/experiments.hpp"
#include "sgqt/report.hpp"

using namespace sgqt;

namespace {

int g_failures = 0;

void check(bool ok, const std::string &label, const std::string &detail) {
    std::printf("%s  %s  [%s]\n", ok ? "PASS" : "FAIL", label.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++g_failures;
    }
}

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

constexpr std::uint64_t kSeed = 20260823;

ExperimentConfig single_qubit_config(std::uint64_t shots) {
    ExperimentConfig cfg;
    cfg.scenario = Scenario::SingleQubit;
    cfg.n_qubits = 1;
    cfg.shots = shots;
    cfg.iterations = 1000;
    cfg.n_trials = 100;
    cfg.gains = GainSchedule::standard(3.0, 0.0, 0.1);
    cfg.init_mode = InitMode::Haar;
    cfg.base_seed = kSeed;
    return cfg;
}

ExperimentConfig sweep_base() {
    ExperimentConfig cfg;
    cfg.scenario = Scenario::MultiQubit;
    cfg.shots = 10000;
    cfg.iterations = 10000;
    cfg.n_trials = 50;
    cfg.gains = GainSchedule::asymptotic(0.3, 1000.0, 0.1);
    cfg.init_mode = InitMode::Perturbed;
    cfg.init_std = 0.01;
    cfg.base_seed = kSeed;
    return cfg;
}

ScalingFit gamma_fit(const EnsembleSummary &s, double lo, double hi, double floor = 0.0) {
    std::vector<double> ks(s.ks.begin(), s.ks.end());
    std::vector<double> med = s.median;
    for (auto &v : med) {
        v -= floor;
    }
    return fit_power_law(ks, med, lo, hi, /*decay=*/true);
}

void criterion_1_and_2() {
    double medians_at_end[2] = {0.0, 0.0};
    int idx = 0;
    for (std::uint64_t shots : {std::uint64_t{100}, std::uint64_t{10000}}) {
        const EnsembleSummary s = run_ensemble(single_qubit_config(shots));
        const ScalingFit fit = gamma_fit(s, 100, 1000);
        medians_at_end[idx++] = s.median.back();
        check(fit.exponent > 0.9 && fit.exponent < 1.4,
              "criterion 1: single-qubit gamma in (0.9, 1.4) at N=" + std::to_string(shots),
              fmt("gamma=%.3f +- %.3f", fit.exponent, fit.stderr_exponent));
    }
    const double ratio = medians_at_end[0] > medians_at_end[1]
                             ? medians_at_end[0] / medians_at_end[1]
                             : medians_at_end[1] / medians_at_end[0];
    check(ratio < 3.0, "criterion 2: final medians for N=1e2 and N=1e4 within a factor of 3",
          fmt("median(1e2)=%.2e median(1e4)=%.2e ratio=%.2f", medians_at_end[0], medians_at_end[1],
              ratio));
}

void criterion_3() {
    std::vector<double> dims, finals;
    for (int n = 2; n <= 6; ++n) {
        ExperimentConfig cfg = sweep_base();
        cfg.n_qubits = n;
        const EnsembleSummary s = run_ensemble(cfg);
        const ScalingFit fit = gamma_fit(s, 1000, 10000);
        check(fit.exponent > 0.7 && fit.exponent < 1.2,
              "criterion 3: multi-qubit gamma in (0.7, 1.2) at n=" + std::to_string(n),
              fmt("gamma=%.3f +- %.3f", fit.exponent, fit.stderr_exponent));
        dims.push_back(static_cast<double>(physical_dim(n, Parametrization::Full)));
        finals.push_back(s.median.back());
    }
    const ScalingFit eta = fit_power_law(dims, finals, dims.front(), dims.back(), false);
    check(eta.exponent > 0.8 && eta.exponent < 1.6,
          "criterion 3: multi-qubit eta in (0.8, 1.6) over n=2..6 at k=1e4",
          fmt("eta=%.3f +- %.3f", eta.exponent, eta.stderr_exponent));
}

void criterion_4() {
    const double p = 0.05;
    std::vector<double> dims, finals;
    bool floor_ok = true;
    double worst_margin = 1.0;
    for (int n : {2, 4, 6, 8}) {
        ExperimentConfig cfg = sweep_base();
        cfg.scenario = Scenario::WDepolarized;
        cfg.n_qubits = n;
        cfg.depolarizing_p = p;

        std::uint64_t shots = 0;
        const std::vector<Trajectory> trials = run_trials(cfg, &shots);
        EnsembleSummary s = summarize(trials, cfg);
        s.total_shots = shots;

        const double floor = min_infidelity_depolarized(p, n);
        for (const auto &t : trials) {
            for (const auto &r : t.records) {
                worst_margin = std::min(worst_margin, r.true_infidelity - floor);
                if (r.true_infidelity < floor - 1e-12) {
                    floor_ok = false;
                }
            }
        }

        const ScalingFit fit = gamma_fit(s, 1000, 10000, floor);
        check(fit.exponent > 0.8 && fit.exponent < 1.2,
              "criterion 4: w-depolarized rescaled gamma in (0.8, 1.2) at n=" + std::to_string(n),
              fmt("gamma=%.3f +- %.3f", fit.exponent, fit.stderr_exponent));
        dims.push_back(static_cast<double>(physical_dim(n, Parametrization::WClass)));
        finals.push_back(s.median.back() - floor);
    }
    check(floor_ok, "criterion 4: every trajectory respects the floor p(1-2^-n) to 1e-12",
          fmt("worst infidelity-floor margin=%.3e", worst_margin));
    const ScalingFit eta = fit_power_law(dims, finals, dims.front(), dims.back(), false);
    check(eta.exponent > 1.1 && eta.exponent < 1.8,
          "criterion 4: w-depolarized eta in (1.1, 1.8) over n={2,4,6,8}",
          fmt("eta=%.3f +- %.3f", eta.exponent, eta.stderr_exponent));
}

void criterion_5() {
    for (int n : {2, 4, 6, 8}) {
        ExperimentConfig cfg = sweep_base();
        cfg.scenario = Scenario::NoisyMeasurement;
        cfg.n_qubits = n;
        cfg.measurement_noise_std = 0.1;
        const EnsembleSummary s = run_ensemble(cfg);
        const ScalingFit fit = gamma_fit(s, 1000, 10000);
        check(fit.exponent > 0.3 && fit.exponent < 0.8,
              "criterion 5: noisy-measurement gamma in (0.3, 0.8) at n=" + std::to_string(n),
              fmt("gamma=%.3f +- %.3f", fit.exponent, fit.stderr_exponent));
        check(s.median.back() < s.initial_median,
              "criterion 5: final median below initial median at n=" + std::to_string(n),
              fmt("initial=%.3e final=%.3e", s.initial_median, s.median.back()));
    }
}

void criterion_6() {
    // Estimator unbiasedness at F = 0.5, N = 1e4, 1e4 seeds.
    {
        Rng rng(kSeed);
        StateVector zero;
        zero.n_qubits = 1;
        zero.amplitudes = {Complex{1, 0}, Complex{0, 0}};
        const TrueStateModel model{TrueStateKind::Pure, zero, 0.0};
        const ParamVector plus{Parametrization::Full, {1, 0, 1, 0}};
        const OracleConfig cfg{10000, 0.0};
        OracleSession session;
        const int reps = 10000;
        double sum = 0.0;
        for (int i = 0; i < reps; ++i) {
            sum += estimate_infidelity(model, plus, cfg, session, rng).value;
        }
        const double mean = sum / reps;
        const double bound = 3.0 * std::sqrt(0.25 / 10000.0) / std::sqrt(static_cast<double>(reps));
        check(std::abs(mean - 0.5) < bound, "criterion 6: estimator unbiasedness (3-sigma)",
              fmt("mean=%.6f bound=%.1e", mean, bound));
    }

    // Haar mean fidelity 1/2^n within 3 sigma.
    {
        Rng rng(kSeed + 1);
        bool ok = true;
        std::string detail;
        for (int n : {1, 2}) {
            StateVector fixed;
            fixed.n_qubits = n;
            fixed.amplitudes.assign(std::size_t{1} << n, Complex{0, 0});
            fixed.amplitudes[0] = 1.0;
            const int samples = 100000;
            double sum = 0.0, sum_sq = 0.0;
            for (int i = 0; i < samples; ++i) {
                const double f = fidelity_pure(haar_random_state(n, rng), fixed);
                sum += f;
                sum_sq += f * f;
            }
            const double mean = sum / samples;
            const double var = sum_sq / samples - mean * mean;
            const double sigma = std::sqrt(var / samples);
            ok = ok && std::abs(mean - 1.0 / std::ldexp(1.0, n)) < 3.0 * sigma;
            detail += fmt("n=%.0f mean=%.4f ", n, mean);
        }
        check(ok, "criterion 6: Haar mean fidelity 1/2^n (3-sigma)", detail);
    }

    // W-class fast fidelity equals the full-space inner product.
    {
        Rng rng(kSeed + 2);
        double worst = 0.0;
        int pairs = 0;
        while (pairs < 1000) {
            for (int n = 2; n <= 8 && pairs < 1000; ++n, ++pairs) {
                const WClassParams a = haar_random_w_state(n, rng);
                const WClassParams b = haar_random_w_state(n, rng);
                worst = std::max(worst,
                                 std::abs(w_fidelity(a, b) - fidelity_pure(embed_w(a), embed_w(b))));
            }
        }
        check(worst < 1e-12, "criterion 6: w_fidelity vs full-space fidelity on 1000 pairs",
              fmt("worst |diff|=%.2e", worst));
    }

    // SPSA mean gradient vs finite differences on a noiseless quadratic.
    {
        const std::vector<double> x = {1.5, 0.9, 0.2, -0.4};
        const std::vector<double> target = {0.5, 0.1, -0.4, -1.0};
        auto f = [&](const std::vector<double> &v) {
            double out = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                out += (v[i] - target[i]) * (v[i] - target[i]);
            }
            return out;
        };
        std::vector<double> fd(x.size());
        const double h = 1e-6;
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::vector<double> xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            fd[i] = (f(xp) - f(xm)) / (2.0 * h);
        }
        Rng rng(kSeed + 3);
        const double b = 0.1;
        const int samples = 10000;
        std::vector<double> mean(x.size(), 0.0);
        for (int s = 0; s < samples; ++s) {
            const std::vector<double> delta = sample_direction(x.size(), rng);
            std::vector<double> xp = x, xm = x;
            for (std::size_t i = 0; i < x.size(); ++i) {
                xp[i] += b * delta[i];
                xm[i] -= b * delta[i];
            }
            const auto g = gradient_estimate(f(xp), f(xm), b, delta);
            for (std::size_t i = 0; i < x.size(); ++i) {
                mean[i] += g[i] / samples;
            }
        }
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            num += (mean[i] - fd[i]) * (mean[i] - fd[i]);
            den += fd[i] * fd[i];
        }
        const double rel = std::sqrt(num / den);
        check(rel < 0.05, "criterion 6: SPSA gradient vs finite differences (beta=0.1)",
              fmt("relative L2 error=%.4f", rel));
    }

    // Exact power-law recovery.
    {
        std::vector<double> xs, ys;
        for (int i = 1; i <= 40; ++i) {
            xs.push_back(i);
            ys.push_back(7.0 * std::pow(i, -1.37));
        }
        const ScalingFit fit = fit_power_law(xs, ys, 1, 40, true);
        check(std::abs(fit.exponent - 1.37) < 1e-10,
              "criterion 6: fit_power_law exact recovery to 1e-10",
              fmt("|gamma-1.37|=%.2e", std::abs(fit.exponent - 1.37)));
    }

    // Determinism: byte-identical serialized outputs, thread independent.
    {
        ExperimentConfig cfg = single_qubit_config(100);
        cfg.iterations = 200;
        cfg.n_trials = 16;
        cfg.threads = 1;
        const EnsembleSummary a = run_ensemble(cfg);
        cfg.threads = 4;
        const EnsembleSummary b = run_ensemble(cfg);
        const bool same_trial =
            trajectory_csv(run_trial(cfg, 5)) == trajectory_csv(run_trial(cfg, 5));
        check(summary_csv(a) == summary_csv(b) && same_trial,
              "criterion 6: determinism (byte-equal reruns, thread independent)",
              std::string("summary bytes equal: ") + (summary_csv(a) == summary_csv(b) ? "yes" : "no"));

        // Shot accounting: N_tot = 2*N*k per trial.
        const std::uint64_t expected =
            static_cast<std::uint64_t>(cfg.n_trials) * 2 * 100 * cfg.iterations;
        check(a.total_shots == expected && b.total_shots == expected,
              "criterion 6: shot accounting N_tot = 2*N*k exact",
              fmt("total=%.0f expected=%.0f", static_cast<double>(a.total_shots),
                  static_cast<double>(expected)));
    }
}

}  // namespace

int main() {
    criterion_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    std::printf("%s: %d failure(s)\n", g_failures == 0 ? "ALL PASS" : "FAILURES", g_failures);
    return g_failures;
}
