/*
 * Copyright 2026 The ovalcode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "ovalcode/lrc.hpp"
#include "ovalcode/nmds.hpp"
#include "ovalcode/ovalpoly.hpp"

namespace ovalcode {

// Counts can exceed 64 bits, so JSON carries them as decimal strings.
using json = nlohmann::ordered_json;

inline json oval_to_json(const OvalPoly& poly) {
    json terms = json::array();
    for (const OvalTerm& t : poly.terms) terms.push_back({t.exponent, t.coefficient});
    return json{{"family", to_string(poly.family)}, {"terms", terms}};
}

/// Generator-matrix export: {m, modulus, oval: {family, terms}, columns}.
/// The modulus is the integer bitmask of the irreducible polynomial and the
/// columns are 3-element integer vectors in coordinate order.
inline json matrix_to_json(const LinearCode& code) {
    json columns = json::array();
    for (std::size_t j = 0; j < code.length(); ++j) {
        columns.push_back({code.generator(0, j), code.generator(1, j), code.generator(2, j)});
    }
    return json{{"m", code.field.degree()},
                {"modulus", code.field.modulus()},
                {"oval", oval_to_json(code.oval)},
                {"columns", columns}};
}

inline std::string weights_to_csv(const WeightDistribution& dist) {
    std::string out = "weight,count\n";
    for (std::size_t w = 0; w <= dist.length; ++w) {
        out += std::to_string(w) + "," + dist.counts[w].str() + "\n";
    }
    return out;
}

inline json weights_to_json(const WeightDistribution& dist) {
    json counts = json::array();
    for (const Count& c : dist.counts) counts.push_back(c.str());
    return json{{"length", dist.length}, {"counts", counts}};
}

inline json supports_to_json(const DualWeightThree& dual) {
    json supports = json::array();
    for (const auto& s : dual.supports) supports.push_back({s[0], s[1], s[2]});
    return json{{"dual_distance", dual.dual_distance},
                {"weight3_codewords", dual.weight3_codewords.str()},
                {"supports", supports}};
}

inline json buckets_to_json(const std::vector<SupportBucket>& buckets) {
    json out = json::array();
    for (const SupportBucket& b : buckets) {
        out.push_back({{"in_first_q", b.in_first_q},
                       {"fixed_offsets", b.fixed_offsets},
                       {"supports", b.support_count},
                       {"codewords", b.codeword_count.str()}});
    }
    return out;
}

inline json repair_plan_to_json(const RepairPlan& plan) {
    return json{{"i", plan.coordinate},
                {"repair_set", plan.repair_set},
                {"coefficients", plan.coefficients}};
}

inline json locality_to_json(const LocalityReport& report) {
    json out{{"primal_locality", report.primal_locality},
             {"dual_supports_cover", report.dual_supports_cover},
             {"uncovered", report.uncovered},
             {"support_intersection", report.support_intersection},
             {"primal_distance", report.primal_distance},
             {"dual_distance", report.dual_distance}};
    if (report.dual_locality.has_value()) {
        out["dual_locality"] = *report.dual_locality;
    } else {
        out["dual_locality"] = nullptr;
    }
    return out;
}

inline json optimality_to_json(const OptimalityReport& report) {
    return json{{"n", report.n},
                {"k", report.k},
                {"d", report.d},
                {"q", report.q},
                {"r", report.locality},
                {"singleton_like_rhs", report.singleton_like_rhs},
                {"cm_rhs", report.cm_rhs},
                {"distance_optimal", report.distance_optimal},
                {"dimension_optimal", report.dimension_optimal}};
}

inline json nmds_report_to_json(const NmdsReport& report) {
    return json{{"n", report.n},
                {"k", report.k},
                {"d", report.min_distance},
                {"dual_distance", report.dual_distance},
                {"amds", report.amds},
                {"dual_amds", report.dual_amds},
                {"nmds", report.nmds}};
}

}  // namespace ovalcode
