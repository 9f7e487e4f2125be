/*
 * Copyright 2026 The phaseperm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "matrix.hpp"
#include "mcint.hpp"

namespace phaseperm {

/// {"rows": r, "cols": c, "entries": [[re, im], ...]}, row-major.
inline nlohmann::json matrix_to_json(const ComplexMatrix &a) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto &z : a.entries())
        entries.push_back({z.real(), z.imag()});
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

inline ComplexMatrix matrix_from_json(const nlohmann::json &j) {
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const auto &raw = j.at("entries");
        if (!raw.is_array())
            throw std::invalid_argument("\"entries\" must be an array");
        std::vector<complex_t> entries;
        entries.reserve(raw.size());
        for (const auto &e : raw) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("each entry must be a [re, im] pair");
            entries.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        return ComplexMatrix(rows, cols, std::move(entries));
    } catch (const nlohmann::json::exception &ex) {
        throw std::invalid_argument(std::string("malformed matrix JSON: ") + ex.what());
    }
}

inline ComplexMatrix load_matrix(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open matrix file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error &ex) {
        throw std::invalid_argument("cannot parse '" + path + "': " + ex.what());
    }
    return matrix_from_json(j);
}

namespace detail {
/// JSON has no infinities; non-finite values become null.
inline nlohmann::json finite_or_null(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}
} // namespace detail

inline nlohmann::json estimate_to_json(const MCEstimate &e, std::optional<double> reference = {}) {
    nlohmann::json j{{"form", e.form},          {"mean", e.mean}, {"std_error", e.std_error},
                     {"n_samples", e.n_samples}, {"seed", e.seed}};
    if (reference) {
        j["reference"] = *reference;
        j["z"] = detail::finite_or_null(z_score(e.mean, e.std_error, *reference, 0.0));
    }
    return j;
}

inline nlohmann::json report_to_json(const CrossFormReport &r) {
    nlohmann::json forms = nlohmann::json::array();
    for (const auto &f : r.forms)
        forms.push_back(estimate_to_json(f.estimate, r.reference));
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto &p : r.pairwise)
        pairs.push_back({{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"z", detail::finite_or_null(p.z)}});
    return {{"reference", r.reference}, {"forms", std::move(forms)}, {"pairwise", std::move(pairs)}};
}

} // namespace phaseperm
