/*
   Copyright 2026 The SchurKit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "schurkit/decompose.hpp"
#include "schurkit/equivalence.hpp"
#include "schurkit/parser.hpp"

namespace schurkit {

/// All emitted objects use insertion-ordered keys so identical invocations
/// are byte-identical.
using Json = nlohmann::ordered_json;

/// Matrix text format: a JSON array of rows; entries are "p", "p/q", or
/// polynomial strings in the CLI's entry grammar.
inline Json matrix_to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json matrix_to_json(const PMatrix& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

using MatrixVariant = std::variant<QMatrix, PMatrix>;

/// Reads the matrix text format. Entries without variables produce a
/// rational matrix; otherwise all entries are parsed over the union of the
/// variables that occur, sorted by name.
inline MatrixVariant matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix: expected a JSON array of rows");
    std::vector<std::vector<std::string>> cells;
    std::set<std::string> vars;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("matrix: expected rows to be arrays");
        std::vector<std::string> r;
        for (const auto& entry : row) {
            if (!entry.is_string())
                throw std::invalid_argument("matrix: entries must be strings");
            r.push_back(entry.get<std::string>());
            collect_poly_vars(r.back(), vars);
        }
        cells.push_back(std::move(r));
    }
    long rows = static_cast<long>(cells.size());
    long cols = rows == 0 ? 0 : static_cast<long>(cells[0].size());
    for (const auto& r : cells)
        if (static_cast<long>(r.size()) != cols)
            throw std::invalid_argument("matrix: ragged rows");
    PolyVars ring = make_vars(std::vector<std::string>(vars.begin(), vars.end()));
    if (vars.empty()) {
        QMatrix m(rows, cols);
        for (long i = 0; i < rows; ++i)
            for (long jx = 0; jx < cols; ++jx) {
                MPoly p = parse_poly(cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(jx)], ring);
                m(i, jx) = p.constant_value();
            }
        return m;
    }
    PMatrix m(rows, cols, MPoly(ring));
    for (long i = 0; i < rows; ++i)
        for (long jx = 0; jx < cols; ++jx)
            m(i, jx) = parse_poly(cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(jx)], ring);
    return m;
}

/// {"pieces":[{"degree":n,"dim_V":v,"multiplicities":{"[l]":m,...}}]}
inline Json classification_to_json(const ClassifiedOperation& c) {
    Json pieces = Json::array();
    for (const ClassifiedPiece& p : c.pieces) {
        Json jp;
        jp["degree"] = p.degree;
        jp["dim_V"] = p.module.dim();
        Json mults = Json::object();
        for (const auto& [lambda, m] : p.mults) mults[lambda.str()] = m;
        jp["multiplicities"] = std::move(mults);
        pieces.push_back(std::move(jp));
    }
    Json out;
    out["pieces"] = std::move(pieces);
    return out;
}

/// {"subject":..., "per_dim":[{"d":..., "invertible":...}],
///  "naturality":[...], "verdict":..., "seed":...}
inline Json report_to_json(const ComparisonReport& r) {
    Json out;
    out["subject"] = r.subject;
    Json per_dim = Json::array();
    for (const auto& pd : r.per_dim) {
        Json jd;
        jd["d"] = pd.d;
        jd["invertible"] = pd.invertible;
        per_dim.push_back(std::move(jd));
    }
    out["per_dim"] = std::move(per_dim);
    Json nat = Json::array();
    for (const auto& nc : r.naturality) {
        Json jn;
        jn["check"] = nc.what;
        jn["exact"] = nc.exact;
        nat.push_back(std::move(jn));
    }
    out["naturality"] = std::move(nat);
    out["verdict"] = r.verdict;
    out["seed"] = r.seed;
    if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
    return out;
}

/// Character table as a map from partition literal to the character row,
/// ordered by the conjugacy_classes enumeration.
inline Json chartable_to_json(int n) {
    auto table = character_table(n);
    auto classes = conjugacy_classes(n);
    Json out = Json::object();
    for (const auto& [lambda, row] : table) {
        Json values = Json::array();
        for (const auto& [mu, size] : classes) values.push_back(row.values.at(mu).str());
        out[lambda.str()] = std::move(values);
    }
    return out;
}

inline Json boundedness_to_json(const std::map<long, std::vector<Partition>>& report) {
    Json out = Json::object();
    for (const auto& [d, lambdas] : report) {
        Json list = Json::array();
        for (const Partition& l : lambdas) list.push_back(l.str());
        out[std::to_string(d)] = std::move(list);
    }
    return out;
}

}  // namespace schurkit
