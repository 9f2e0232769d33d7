// Copyright 2026 The locpur Authors
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

#ifndef LOCPUR_IO_H
#define LOCPUR_IO_H

#include <string>

#include <nlohmann/json.hpp>

#include "locpur/filter.h"
#include "locpur/optimize.h"
#include "locpur/states.h"

namespace locpur {

// Matrices are flat row-major lists of [re, im] pairs.
nlohmann::json matrix_to_json(const ComplexMatrix &m);
/// Throws ParseError unless `j` is a list of rows * cols [re, im] pairs.
ComplexMatrix matrix_from_json(const nlohmann::json &j, std::size_t rows, std::size_t cols);
/// Square matrix whose side is inferred from the entry count.
ComplexMatrix square_matrix_from_json(const nlohmann::json &j);

/// {"dims": [n_a, n_b], "matrix": [[re, im], ...]}
nlohmann::json to_json(const DensityMatrix &rho);
/// {"dims": [n_a, n_b], "amplitudes": [[re, im], ...]}
nlohmann::json to_json(const PureState &psi);
/// {"A": [[re, im], ...], "B": [[re, im], ...]}
nlohmann::json to_json(const LocalFilter &f);
nlohmann::json to_json(const DeltaCurve &curve);
nlohmann::json to_json(const OptimizationReport &report);

DensityMatrix density_matrix_from_json(const nlohmann::json &j);
PureState pure_state_from_json(const nlohmann::json &j);
/// Reads either a density matrix or a pure state (promoted to its projector).
DensityMatrix state_from_json(const nlohmann::json &j);
/// Pre-normalization operators are accepted.
LocalFilter filter_from_json(const nlohmann::json &j);

nlohmann::json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace locpur

#endif
