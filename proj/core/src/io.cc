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

#include "locpur/io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "locpur/errors.h"

namespace locpur {

using nlohmann::json;

namespace {

std::vector<Complex> complex_list(const json &j, const char *what) {
    if (!j.is_array()) {
        throw ParseError(std::string(what) + " must be a list of [re, im] pairs");
    }
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto &pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw ParseError(std::string(what) + " entries must be [re, im] number pairs");
        }
        out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return out;
}

BipartiteDims dims_from_json(const json &j) {
    if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2 || !j["dims"][0].is_number_unsigned() ||
        !j["dims"][1].is_number_unsigned()) {
        throw ParseError("state needs \"dims\": [n_a, n_b]");
    }
    return BipartiteDims::checked(j["dims"][0].get<std::size_t>(), j["dims"][1].get<std::size_t>());
}

json dims_to_json(BipartiteDims d) {
    return json::array({d.n_a, d.n_b});
}

}  // namespace

json matrix_to_json(const ComplexMatrix &m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
    }
    return out;
}

ComplexMatrix matrix_from_json(const json &j, std::size_t rows, std::size_t cols) {
    auto entries = complex_list(j, "matrix");
    if (entries.size() != rows * cols) {
        throw ParseError("matrix has " + std::to_string(entries.size()) + " entries, expected " +
                         std::to_string(rows * cols));
    }
    ComplexMatrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        m.data()[k] = entries[k];
    }
    return m;
}

ComplexMatrix square_matrix_from_json(const json &j) {
    auto entries = complex_list(j, "operator");
    auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
    if (side * side != entries.size() || side == 0) {
        throw ParseError("operator entry count " + std::to_string(entries.size()) + " is not a perfect square");
    }
    return matrix_from_json(j, side, side);
}

json to_json(const DensityMatrix &rho) {
    return {{"dims", dims_to_json(rho.dims())}, {"matrix", matrix_to_json(rho.matrix())}};
}

json to_json(const PureState &psi) {
    json amps = json::array();
    for (Eigen::Index k = 0; k < psi.amplitudes().size(); ++k) {
        amps.push_back(json::array({psi.amplitudes()(k).real(), psi.amplitudes()(k).imag()}));
    }
    return {{"dims", dims_to_json(psi.dims())}, {"amplitudes", amps}};
}

json to_json(const LocalFilter &f) {
    return {{"A", matrix_to_json(f.a())}, {"B", matrix_to_json(f.b())}};
}

json to_json(const DeltaCurve &c) {
    return {{"alpha", c.alpha}, {"gamma", c.gamma}, {"mu", c.mu}, {"nu", c.nu}, {"beta_prime", c.beta_prime}};
}

json to_json(const OptimizationReport &r) {
    json out;
    out["best_fidelity"] = r.best_fidelity;
    out["best_delta"] = r.best_delta ? json(*r.best_delta) : json(nullptr);
    out["best_params"] = r.best_params;
    out["epsilon_hat"] = r.epsilon_hat;
    out["restarts"] = r.restarts;
    out["evaluations"] = r.evaluations;
    out["seed"] = r.seed;
    out["per_restart_best"] = r.per_restart_best;
    out["dims"] = dims_to_json(r.dims);
    return out;
}

DensityMatrix density_matrix_from_json(const json &j) {
    if (!j.is_object() || !j.contains("matrix")) {
        throw ParseError("density matrix JSON needs \"dims\" and \"matrix\"");
    }
    auto dims = dims_from_json(j);
    auto m = matrix_from_json(j["matrix"], dims.total(), dims.total());
    try {
        return DensityMatrix::from_matrix(dims, std::move(m));
    } catch (const NotDensityMatrix &e) {
        throw ParseError(e.what());
    }
}

PureState pure_state_from_json(const json &j) {
    if (!j.is_object() || !j.contains("amplitudes")) {
        throw ParseError("pure state JSON needs \"dims\" and \"amplitudes\"");
    }
    auto dims = dims_from_json(j);
    auto entries = complex_list(j["amplitudes"], "amplitudes");
    if (entries.size() != dims.total()) {
        throw ParseError("pure state has the wrong number of amplitudes");
    }
    ComplexVector v(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        v(k) = entries[k];
    }
    try {
        return PureState::from_amplitudes(dims, std::move(v));
    } catch (const OutOfRange &e) {
        throw ParseError(e.what());
    }
}

DensityMatrix state_from_json(const json &j) {
    if (j.is_object() && j.contains("amplitudes")) {
        return DensityMatrix::from_pure(pure_state_from_json(j));
    }
    return density_matrix_from_json(j);
}

LocalFilter filter_from_json(const json &j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("B")) {
        throw ParseError("filter JSON needs \"A\" and \"B\"");
    }
    return LocalFilter::make(square_matrix_from_json(j["A"]), square_matrix_from_json(j["B"]));
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write " + path);
    }
    out << text;
}

}  // namespace locpur
