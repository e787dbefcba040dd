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

#include <cmath>
#include <set>

#include "doctest.h"
#include "sgqt/measurement.hpp"

using namespace sgqt;

namespace {

TrueStateModel pure_model(const StateVector &psi) {
    return TrueStateModel{TrueStateKind::Pure, psi, 0.0};
}

StateVector ket0() {
    StateVector s;
    s.n_qubits = 1;
    s.amplitudes = {Complex{1, 0}, Complex{0, 0}};
    return s;
}

ParamVector plus_params() {
    return ParamVector{Parametrization::Full, {1, 0, 1, 0}};
}

}  // namespace

TEST_CASE("F=1 gives estimate 0 with probability 1") {
    Rng rng(1);
    OracleSession session;
    const StateVector psi = ket0();
    const ParamVector target{Parametrization::Full, {1, 0, 0, 0}};
    for (int i = 0; i < 200; ++i) {
        auto est = estimate_infidelity(pure_model(psi), target, OracleConfig{100, 0.0}, session, rng);
        CHECK(est.value == 0.0);
        CHECK(est.shots_used == 100);
    }
    CHECK(session.total_shots == 200 * 100);
    CHECK(session.calls == 200);
}

TEST_CASE("exact mode returns 1 - F exactly") {
    Rng rng(2);
    OracleSession session;
    auto est = estimate_infidelity(pure_model(ket0()), plus_params(),
                                   OracleConfig{std::nullopt, 0.0}, session, rng);
    CHECK(std::abs(est.value - 0.5) < 1e-12);
    CHECK(est.shots_used == 0);
    CHECK(session.exact_calls == 1);
    CHECK(session.total_shots == 0);
}

TEST_CASE("depolarized model, exact oracle") {
    Rng rng(3);
    OracleSession session;
    StateVector psi;
    psi.n_qubits = 2;
    psi.amplitudes = {Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{0, 0}};
    TrueStateModel model{TrueStateKind::Depolarized, psi, 0.05};
    auto est = estimate_infidelity(model, params_from_state(psi), OracleConfig{std::nullopt, 0.0},
                                   session, rng);
    CHECK(std::abs(est.value - 0.0375) < 1e-12);
}

TEST_CASE("unbiasedness at F=0.5 over 10^4 seeds") {
    Rng rng(4);
    OracleSession session;
    const TrueStateModel model = pure_model(ket0());
    const ParamVector target = plus_params();
    const OracleConfig cfg{10000, 0.0};
    const int reps = 10000;
    double sum = 0.0;
    for (int i = 0; i < reps; ++i) {
        sum += estimate_infidelity(model, target, cfg, session, rng).value;
    }
    const double mean = sum / reps;
    // 3 sigma of the mean of binomial proportions: 3*sqrt(0.25/N)/sqrt(reps)
    const double bound = 3.0 * std::sqrt(0.25 / 10000.0) / std::sqrt(static_cast<double>(reps));
    CHECK(std::abs(mean - 0.5) < bound);
    CHECK(session.total_shots == static_cast<std::uint64_t>(reps) * 10000);
}

TEST_CASE("finite-N estimates are multiples of 1/N") {
    Rng rng(5);
    OracleSession session;
    const TrueStateModel model = pure_model(ket0());
    const ParamVector target = plus_params();
    const OracleConfig cfg{64, 0.0};
    for (int i = 0; i < 500; ++i) {
        const double v = estimate_infidelity(model, target, cfg, session, rng).value;
        const double scaled = v * 64.0;
        CHECK(std::abs(scaled - std::round(scaled)) < 1e-12);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("measurement noise draws a fresh perturbation per call") {
    Rng rng(6);
    OracleSession session;
    const TrueStateModel model = pure_model(ket0());
    const ParamVector target{Parametrization::Full, {1, 0, 0, 0}};
    const OracleConfig cfg{std::nullopt, 0.1};
    std::set<double> values;
    for (int i = 0; i < 50; ++i) {
        values.insert(estimate_infidelity(model, target, cfg, session, rng).value);
    }
    // Same target, advancing rng: the exact estimates must differ.
    CHECK(values.size() > 40);
}

TEST_CASE("degenerate target propagates") {
    Rng rng(7);
    OracleSession session;
    const ParamVector zeros{Parametrization::Full, {0, 0, 0, 0}};
    CHECK_THROWS_AS(
        estimate_infidelity(pure_model(ket0()), zeros, OracleConfig{100, 0.0}, session, rng),
        DegenerateParametrizationError);
}
