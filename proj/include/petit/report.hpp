/*
   Copyright 2026 The petit authors

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

/// @file report.hpp
/// @brief JSON serialization of the domain values. Every number is an exact
/// integer coordinate; key order is deterministic (alphabetical), so output
/// bytes depend only on the inputs and the seed. Reports carry schema: 1.

#pragma once

#include <json.hpp>

#include "petit/chain_ring.hpp"
#include "petit/matrix.hpp"
#include "petit/petit_algebra.hpp"
#include "petit/skew_poly.hpp"

namespace petit::report {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

inline json element_json(const RingElement& a) { return json(a.coords()); }

inline json element_list_json(const std::vector<RingElement>& v) {
    json out = json::array();
    for (const auto& a : v) out.push_back(element_json(a));
    return out;
}

inline json poly_json(const SkewPoly& f) {
    json out = json::array();
    for (const auto& c : f.coeffs()) out.push_back(element_json(c));
    return out;
}

inline json matrix_json(const MatrixOverS& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(element_list_json(m.row(i)));
    return out;
}

inline json ring_json(const ChainRing& s) {
    json out;
    out["p"] = s.p();
    out["e"] = s.e();
    out["n"] = s.n();
    out["modulus"] = json(s.modulus());
    out["cardinality"] = s.cardinality();
    out["unit_count"] = s.unit_count();
    return out;
}

inline json alg_elem_json(const AlgElem& x) {
    json out = json::array();
    for (const auto& c : x.coords) out.push_back(element_json(c));
    return out;
}

}  // namespace petit::report
