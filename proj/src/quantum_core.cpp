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

#include "sgqt/quantum_core.hpp"

#include <algorithm>
#include <cmath>

namespace sgqt {

namespace {

std::size_t hilbert_dim(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw ParameterError("n_qubits must be in [1, 30]");
    }
    return std::size_t{1} << n_qubits;
}

/// Basis index of the state with a single excitation on qubit i, qubit 0
/// being the leftmost label: |10...0> for i=0, |01...0> for i=1, ...
std::size_t excitation_index(int i, int n_qubits) {
    return std::size_t{1} << (n_qubits - 1 - i);
}

double norm_of(const std::vector<Complex> &v) {
    double s = 0.0;
    for (const auto &c : v) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

}  // namespace

std::size_t param_length(Parametrization tag, int n_qubits) {
    if (tag == Parametrization::Full) {
        return 2 * hilbert_dim(n_qubits);
    }
    if (n_qubits < 1) {
        throw ParameterError("n_qubits must be positive");
    }
    return 2 * static_cast<std::size_t>(n_qubits);
}

int physical_dim(int n_qubits, Parametrization tag) {
    if (tag == Parametrization::Full) {
        return 2 * (static_cast<int>(hilbert_dim(n_qubits)) - 1);
    }
    if (n_qubits < 2) {
        throw ParameterError("W-class states need at least 2 qubits");
    }
    return 2 * (n_qubits - 1);
}

StateVector to_state(const ParamVector &params, int n_qubits) {
    const std::size_t dim = hilbert_dim(n_qubits);
    if (params.size() != param_length(params.tag, n_qubits)) {
        throw DimensionError("parameter vector length does not match tag and qubit count");
    }

    StateVector psi;
    psi.n_qubits = n_qubits;
    psi.amplitudes.assign(dim, Complex{0.0, 0.0});

    if (params.tag == Parametrization::Full) {
        for (std::size_t j = 0; j < dim; ++j) {
            psi.amplitudes[j] = Complex{params.values[2 * j], params.values[2 * j + 1]};
        }
    } else {
        for (int i = 0; i < n_qubits; ++i) {
            psi.amplitudes[excitation_index(i, n_qubits)] =
                Complex{params.values[2 * i], params.values[2 * i + 1]};
        }
    }

    const double norm = norm_of(psi.amplitudes);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DegenerateParametrizationError("parameter vector cannot be normalized");
    }
    for (auto &c : psi.amplitudes) {
        c /= norm;
    }
    return psi;
}

ParamVector params_from_state(const StateVector &psi) {
    ParamVector p;
    p.tag = Parametrization::Full;
    p.values.resize(2 * psi.dim());
    for (std::size_t j = 0; j < psi.dim(); ++j) {
        p.values[2 * j] = psi.amplitudes[j].real();
        p.values[2 * j + 1] = psi.amplitudes[j].imag();
    }
    return p;
}

ParamVector params_from_w(const WClassParams &w) {
    ParamVector p;
    p.tag = Parametrization::WClass;
    p.values.resize(2 * w.alphas.size());
    for (std::size_t i = 0; i < w.alphas.size(); ++i) {
        p.values[2 * i] = w.alphas[i].real();
        p.values[2 * i + 1] = w.alphas[i].imag();
    }
    return p;
}

StateVector embed_w(const WClassParams &w) {
    return to_state(params_from_w(w), w.n_qubits);
}

double fidelity_pure(const StateVector &psi, const StateVector &phi) {
    if (psi.n_qubits != phi.n_qubits || psi.dim() != phi.dim()) {
        throw DimensionError("fidelity_pure: qubit counts differ");
    }
    Complex inner{0.0, 0.0};
    for (std::size_t j = 0; j < psi.dim(); ++j) {
        inner += std::conj(psi.amplitudes[j]) * phi.amplitudes[j];
    }
    return std::clamp(std::norm(inner), 0.0, 1.0);
}

double fidelity_depolarized(const DepolarizedTrueState &model, const StateVector &phi) {
    if (model.pure_part.n_qubits != phi.n_qubits) {
        throw DimensionError("fidelity_depolarized: qubit counts differ");
    }
    const double dim = static_cast<double>(hilbert_dim(phi.n_qubits));
    const double f = (1.0 - model.p) * fidelity_pure(model.pure_part, phi) + model.p / dim;
    return std::clamp(f, 0.0, 1.0);
}

double w_fidelity(const WClassParams &a, const WClassParams &b) {
    if (a.n_qubits != b.n_qubits || a.alphas.size() != b.alphas.size()) {
        throw DimensionError("w_fidelity: qubit counts differ");
    }
    Complex inner{0.0, 0.0};
    for (std::size_t i = 0; i < a.alphas.size(); ++i) {
        inner += std::conj(a.alphas[i]) * b.alphas[i];
    }
    return std::clamp(std::norm(inner), 0.0, 1.0);
}

StateVector haar_random_state(int n_qubits, Rng &rng) {
    const std::size_t dim = hilbert_dim(n_qubits);
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector psi;
    psi.n_qubits = n_qubits;
    psi.amplitudes.resize(dim);
    for (auto &c : psi.amplitudes) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        c = Complex{re, im};
    }
    const double norm = norm_of(psi.amplitudes);
    for (auto &c : psi.amplitudes) {
        c /= norm;
    }
    return psi;
}

WClassParams haar_random_w_state(int n_qubits, Rng &rng) {
    if (n_qubits < 2) {
        throw ParameterError("W-class states need at least 2 qubits");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    WClassParams w;
    w.n_qubits = n_qubits;
    w.alphas.resize(static_cast<std::size_t>(n_qubits));
    for (auto &c : w.alphas) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        c = Complex{re, im};
    }
    const double norm = norm_of(w.alphas);
    for (auto &c : w.alphas) {
        c /= norm;
    }
    return w;
}

ParamVector perturb_params(const ParamVector &params, double std_dev, Rng &rng) {
    if (std_dev < 0.0) {
        throw ParameterError("perturbation std must be nonnegative");
    }
    if (std_dev == 0.0) {
        return params;
    }
    std::normal_distribution<double> gauss(0.0, std_dev);
    ParamVector out = params;
    for (auto &v : out.values) {
        v += gauss(rng);
    }
    return out;
}

}  // namespace sgqt
