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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ovalcode/errors.hpp"
#include "ovalcode/gf2m.hpp"
#include "ovalcode/linalg.hpp"
#include "ovalcode/nmds.hpp"

namespace ovalcode {

/// A linear single-erasure repair rule: coordinate `coordinate` of any
/// codeword equals sum_j coefficients[j] * c_{repair_set[j]}. Derived from a
/// dual codeword h supported on repair_set + {coordinate}; in characteristic
/// 2 the coefficients are h_j / h_i.
struct RepairPlan {
    std::size_t coordinate = 0;
    std::vector<std::size_t> repair_set;
    std::vector<Elem> coefficients;
};

/// A codeword carried with an explicit erasure mask. Zero is a legitimate
/// symbol, so erasures cannot be sentinel values.
struct ReceivedWord {
    std::vector<Elem> symbols;
    std::vector<bool> erased;
};

/// Evaluate a repair plan. Every repair-set coordinate must be present.
inline Elem repair(const Field& field, const RepairPlan& plan, const ReceivedWord& word) {
    if (word.symbols.size() != word.erased.size()) {
        throw std::domain_error("repair: symbol/mask length mismatch");
    }
    Elem acc = 0;
    for (std::size_t j = 0; j < plan.repair_set.size(); ++j) {
        const std::size_t idx = plan.repair_set[j];
        if (idx >= word.symbols.size()) throw std::domain_error("repair: repair set index out of range");
        if (word.erased[idx]) {
            throw insufficient_data_error("repair: coordinate " + std::to_string(idx) +
                                          " of the repair set is erased");
        }
        acc = field.add(acc, field.mul(plan.coefficients[j], word.symbols[idx]));
    }
    return acc;
}

namespace detail {

/// Plan for coordinate i from a dual codeword supported on `support`
/// (given by its kernel coefficients, aligned with the support).
inline RepairPlan plan_from_dual_support(const Field& field, std::size_t i,
                                         const std::vector<std::size_t>& support,
                                         const std::vector<Elem>& dual_coeffs) {
    RepairPlan plan;
    plan.coordinate = i;
    Elem hi = 0;
    for (std::size_t t = 0; t < support.size(); ++t) {
        if (support[t] == i) hi = dual_coeffs[t];
    }
    if (hi == 0) throw internal_consistency_error("repair plan: dual codeword vanishes at coordinate");
    for (std::size_t t = 0; t < support.size(); ++t) {
        if (support[t] == i) continue;
        plan.repair_set.push_back(support[t]);
        plan.coefficients.push_back(field.div(dual_coeffs[t], hi));
    }
    return plan;
}

}  // namespace detail

/// Locality-r repair plan for coordinate i from precomputed weight-3 dual
/// supports (as produced by dual_distance_and_weight3, in lexicographic
/// order): among all supports containing i the lexicographically smallest
/// is chosen, so plans are deterministic across runs.
inline RepairPlan repair_plan_from_supports(const LinearCode& code, std::size_t i,
                                            const std::vector<std::array<std::size_t, 3>>& supports) {
    if (i >= code.length()) throw std::domain_error("repair_plan: coordinate out of range");
    for (const auto& support : supports) {
        if (support[0] != i && support[1] != i && support[2] != i) continue;
        Matrix sub(3, 3);
        for (std::size_t c = 0; c < 3; ++c) {
            for (std::size_t r = 0; r < 3; ++r) sub(r, c) = code.generator(r, support[c]);
        }
        const auto basis = kernel_basis(code.field, sub);
        if (basis.size() != 1) throw internal_consistency_error("repair_plan: support kernel is not 1-dimensional");
        return detail::plan_from_dual_support(code.field, i,
                                              {support[0], support[1], support[2]}, basis[0]);
    }
    throw no_local_repair_error("repair_plan: no weight-3 dual support contains coordinate " +
                                std::to_string(i));
}

inline RepairPlan repair_plan(const LinearCode& code, std::size_t i) {
    return repair_plan_from_supports(code, i, dual_distance_and_weight3(code).supports);
}

inline std::vector<RepairPlan> all_repair_plans(const LinearCode& code) {
    const DualWeightThree dual = dual_distance_and_weight3(code);
    std::vector<RepairPlan> plans;
    plans.reserve(code.length());
    for (std::size_t i = 0; i < code.length(); ++i) {
        plans.push_back(repair_plan_from_supports(code, i, dual.supports));
    }
    return plans;
}

namespace detail {

/// Minimum-weight codewords keyed by support, sorted by support.
inline std::vector<std::pair<std::vector<std::size_t>, std::vector<Elem>>> min_weight_by_support(
    const LinearCode& code, int max_m) {
    const MinWeightCodewords min_words = minimum_weight_codewords(code, max_m);
    std::vector<std::pair<std::vector<std::size_t>, std::vector<Elem>>> by_support;
    by_support.reserve(min_words.representatives.size());
    for (const auto& word : min_words.representatives) {
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < word.size(); ++j) {
            if (word[j] != 0) support.push_back(j);
        }
        by_support.push_back({std::move(support), word});
    }
    std::sort(by_support.begin(), by_support.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return by_support;
}

inline RepairPlan dual_plan_from_min_words(
    const LinearCode& code, std::size_t i,
    const std::vector<std::pair<std::vector<std::size_t>, std::vector<Elem>>>& by_support) {
    if (i >= code.length()) throw std::domain_error("dual_repair_plan: coordinate out of range");
    for (const auto& [support, word] : by_support) {
        if (!std::binary_search(support.begin(), support.end(), i)) continue;
        std::vector<Elem> coeffs;
        coeffs.reserve(support.size());
        for (std::size_t idx : support) coeffs.push_back(word[idx]);
        return plan_from_dual_support(code.field, i, support, coeffs);
    }
    throw no_local_repair_error("dual_repair_plan: no minimum-weight codeword covers coordinate " +
                                std::to_string(i));
}

}  // namespace detail

/// Repair plan for coordinate i of the dual code: a minimum-weight codeword
/// of the primal code whose support contains i acts as a parity check on the
/// dual, giving a repair set of its other q+1 support positions. Ties break
/// to the lexicographically smallest support.
inline RepairPlan dual_repair_plan(const LinearCode& code, std::size_t i, int max_m = kDefaultMaxM) {
    return detail::dual_plan_from_min_words(code, i, detail::min_weight_by_support(code, max_m));
}

inline std::vector<RepairPlan> all_dual_repair_plans(const LinearCode& code, int max_m = kDefaultMaxM) {
    const auto by_support = detail::min_weight_by_support(code, max_m);
    std::vector<RepairPlan> plans;
    plans.reserve(code.length());
    for (std::size_t i = 0; i < code.length(); ++i) {
        plans.push_back(detail::dual_plan_from_min_words(code, i, by_support));
    }
    return plans;
}

struct LocalityReport {
    int primal_locality = 0;                 // d(dual) - 1 when supports cover, else d(dual)
    bool dual_supports_cover = false;        // union of weight-3 dual supports = [n]
    std::vector<std::size_t> uncovered;
    std::optional<int> dual_locality;        // d - 1 when the intersection is empty
    std::vector<std::size_t> support_intersection;
    int primal_distance = 0;
    int dual_distance = 0;
};

/// Minimum linear locality of the code from the cover criterion: when the
/// weight-3 dual supports cover every coordinate the locality is
/// d(dual) - 1 = 2; otherwise it is d(dual) = 3.
inline int minimum_locality_primal(const LinearCode& code) {
    const DualWeightThree dual = dual_distance_and_weight3(code);
    std::vector<bool> covered(code.length(), false);
    for (const auto& support : dual.supports) {
        for (std::size_t idx : support) covered[idx] = true;
    }
    const bool cover = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    return cover ? dual.dual_distance - 1 : dual.dual_distance;
}

/// Minimum linear locality of the dual code: equals d(code) - 1 = q+1 when
/// the weight-3 dual supports have empty intersection; otherwise the
/// criterion gives no verdict and nullopt is returned.
inline std::optional<int> minimum_locality_dual(const LinearCode& code, int max_m = kDefaultMaxM) {
    const DualWeightThree dual = dual_distance_and_weight3(code);
    if (dual.supports.empty()) return std::nullopt;
    std::set<std::size_t> inter(dual.supports[0].begin(), dual.supports[0].end());
    for (const auto& support : dual.supports) {
        std::set<std::size_t> next;
        for (std::size_t idx : support) {
            if (inter.count(idx)) next.insert(idx);
        }
        inter = std::move(next);
        if (inter.empty()) break;
    }
    if (!inter.empty()) return std::nullopt;
    const NmdsReport report = verify_nmds(code, max_m);
    return report.min_distance - 1;
}

inline LocalityReport locality_analysis(const LinearCode& code, int max_m = kDefaultMaxM) {
    LocalityReport report;
    const DualWeightThree dual = dual_distance_and_weight3(code);
    report.dual_distance = dual.dual_distance;

    std::vector<bool> covered(code.length(), false);
    for (const auto& support : dual.supports) {
        for (std::size_t idx : support) covered[idx] = true;
    }
    for (std::size_t i = 0; i < covered.size(); ++i) {
        if (!covered[i]) report.uncovered.push_back(i);
    }
    report.dual_supports_cover = report.uncovered.empty();
    report.primal_locality = report.dual_supports_cover ? dual.dual_distance - 1 : dual.dual_distance;

    if (!dual.supports.empty()) {
        std::set<std::size_t> inter(dual.supports[0].begin(), dual.supports[0].end());
        for (const auto& support : dual.supports) {
            std::set<std::size_t> next;
            for (std::size_t idx : support) {
                if (inter.count(idx)) next.insert(idx);
            }
            inter = std::move(next);
        }
        report.support_intersection.assign(inter.begin(), inter.end());
    }

    const NmdsReport nmds = verify_nmds(code, max_m);
    report.primal_distance = nmds.min_distance;
    if (report.support_intersection.empty() && !dual.supports.empty()) {
        report.dual_locality = nmds.min_distance - 1;
    }
    return report;
}

/// Right-hand side of the Singleton-like bound for an (n, k, d, q; r)-LRC:
/// d <= n - k - ceil(k/r) + 2.
inline int singleton_like_bound(std::size_t n, std::size_t k, std::size_t r) {
    if (k < 1 || n <= k || r < 1) throw std::domain_error("singleton_like_bound: requires n > k >= 1, r >= 1");
    const std::size_t ceil_kr = (k + r - 1) / r;
    return static_cast<int>(n - k - ceil_kr + 2);
}

/// Upper bound on the dimension of an (n, ., d, q; r)-LRC:
///   k <= min over t >= 1 of [ r t + k_opt(n - t(r+1), d) ],
/// with k_opt replaced by its Singleton upper bound n' - d + 1 and t
/// restricted so the tail length stays >= d. Replacing k_opt by an upper
/// bound keeps this a valid upper bound, so meeting it still certifies
/// dimension optimality.
inline int cm_bound_dimension(std::size_t n, std::size_t d, std::size_t r, std::uint32_t q) {
    if (d < 1 || n <= d || r < 1 || q < 2) {
        throw std::domain_error("cm_bound_dimension: requires n > d >= 1, r >= 1, q >= 2");
    }
    const std::size_t t_max = (n - d) / (r + 1);
    if (t_max < 1) return static_cast<int>(n - d + 1);
    std::size_t best = n;  // any achievable value is below n
    for (std::size_t t = 1; t <= t_max; ++t) {
        const std::size_t tail = n - t * (r + 1);
        const std::size_t value = r * t + (tail - d + 1);
        best = std::min(best, value);
    }
    return static_cast<int>(best);
}

struct OptimalityReport {
    std::size_t n = 0;
    std::size_t k = 0;
    int d = 0;
    std::uint32_t q = 0;
    int locality = 0;
    int singleton_like_rhs = 0;
    int cm_rhs = 0;
    bool distance_optimal = false;   // d meets the Singleton-like bound
    bool dimension_optimal = false;  // k meets the Cadambe-Mazumdar bound
};

/// Optimality certification for the code and its dual. The dual parameters
/// are (q+5, q+2, 3) with locality q+1.
inline std::pair<OptimalityReport, OptimalityReport> optimality_report(const LinearCode& code,
                                                                       int max_m = kDefaultMaxM) {
    const std::uint32_t q = code.field.order();
    const std::size_t n = code.length();
    const LocalityReport locality = locality_analysis(code, max_m);
    if (!locality.dual_locality.has_value()) {
        throw internal_consistency_error("optimality_report: dual locality is indeterminate");
    }

    OptimalityReport primal;
    primal.n = n;
    primal.k = LinearCode::dimension;
    primal.d = locality.primal_distance;
    primal.q = q;
    primal.locality = locality.primal_locality;
    primal.singleton_like_rhs = singleton_like_bound(n, primal.k, primal.locality);
    primal.cm_rhs = cm_bound_dimension(n, primal.d, primal.locality, q);
    primal.distance_optimal = primal.d == primal.singleton_like_rhs;
    primal.dimension_optimal = static_cast<int>(primal.k) == primal.cm_rhs;

    OptimalityReport dual;
    dual.n = n;
    dual.k = n - LinearCode::dimension;
    dual.d = locality.dual_distance;
    dual.q = q;
    dual.locality = *locality.dual_locality;
    dual.singleton_like_rhs = singleton_like_bound(n, dual.k, dual.locality);
    dual.cm_rhs = cm_bound_dimension(n, dual.d, dual.locality, q);
    dual.distance_optimal = dual.d == dual.singleton_like_rhs;
    dual.dimension_optimal = static_cast<int>(dual.k) == dual.cm_rhs;

    return {primal, dual};
}

}  // namespace ovalcode
