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

#ifndef SGQT_QUANTUM_CORE_HPP
#define SGQT_QUANTUM_CORE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgqt/errors.hpp"
#include "sgqt/rng.hpp"

namespace sgqt {

using Complex = std::complex<double>;

/// How a real parameter vector maps onto a state.
///   Full:   2*2^n reals, one (re, im) pair per computational-basis amplitude.
///   WClass: 2*n reals, one (re, im) pair per single-excitation amplitude.
enum class Parametrization { Full, WClass };

/// Unit-norm pure state over 2^n basis vectors.
struct StateVector {
    int n_qubits = 0;
    std::vector<Complex> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
};

/// Flat real vector the optimizer perturbs and updates. Unnormalized; it is
/// turned into a state (and normalized) by to_state on every use.
struct ParamVector {
    Parametrization tag = Parametrization::Full;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

/// Complex amplitudes of a W-class state: alphas[i] multiplies the basis
/// vector with a single excitation on qubit i (qubit 0 leftmost).
struct WClassParams {
    int n_qubits = 0;
    std::vector<Complex> alphas;
};

/// Pure state mixed with the maximally mixed state with probability p.
struct DepolarizedTrueState {
    StateVector pure_part;
    double p = 0.0;
};

/// Expected parameter-vector length for a tag at a given qubit count.
std::size_t param_length(Parametrization tag, int n_qubits);

/// Physical real dimension used by the scaling fits:
/// Full -> 2*(2^n - 1), WClass -> 2*(n - 1).
int physical_dim(int n_qubits, Parametrization tag);

/// Pairs consecutive reals into complex amplitudes and normalizes.
/// WClass parameters are embedded at the single-excitation basis indices.
StateVector to_state(const ParamVector &params, int n_qubits);

/// Inverse of to_state for states (Full tag); no information is lost.
ParamVector params_from_state(const StateVector &psi);
ParamVector params_from_w(const WClassParams &w);

/// The 2^n-dimensional state vector of a W-class state.
StateVector embed_w(const WClassParams &w);

/// |<psi|phi>|^2, clamped to [0, 1].
double fidelity_pure(const StateVector &psi, const StateVector &phi);

/// <phi| (1-p)|psi><psi| + p I/2^n |phi> evaluated analytically:
/// (1-p) * fidelity_pure + p / 2^n.
double fidelity_depolarized(const DepolarizedTrueState &model, const StateVector &phi);

/// |sum_i conj(a_i) b_i|^2 on the W-class amplitudes; O(n) and equal to
/// fidelity_pure of the embedded states.
double w_fidelity(const WClassParams &a, const WClassParams &b);

/// Haar-random pure state: 2^n iid standard complex Gaussians, normalized.
StateVector haar_random_state(int n_qubits, Rng &rng);

/// Uniformly random W-class state: n iid complex Gaussians, normalized.
WClassParams haar_random_w_state(int n_qubits, Rng &rng);

/// Adds iid zero-mean Gaussian noise of the given std to every entry.
ParamVector perturb_params(const ParamVector &params, double std_dev, Rng &rng);

}  // namespace sgqt

#endif
