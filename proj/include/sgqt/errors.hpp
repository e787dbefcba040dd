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

#ifndef SGQT_ERRORS_HPP
#define SGQT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgqt {

/// Mismatched qubit counts or vector lengths.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// Out-of-range scalar argument (negative std, nonpositive gain, ...).
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// A parameter vector that cannot be normalized into a state.
struct DegenerateParametrizationError : std::runtime_error {
    explicit DegenerateParametrizationError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Invalid scenario/field combination in an experiment config.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Power-law fit failure (underdetermined window, nonpositive data).
struct FitError : std::runtime_error {
    explicit FitError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace sgqt

#endif
