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

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ovalcode/errors.hpp"
#include "ovalcode/gf2m.hpp"
#include "ovalcode/linalg.hpp"
#include "ovalcode/ovalpoly.hpp"

namespace ovalcode {

/// Codeword and weight counts are kept in exact integer arithmetic; the
/// dual-side counts outgrow 64 bits quickly.
using Count = boost::multiprecision::cpp_int;

/// Default cap on the extension degree for codeword enumeration
/// (q^3 ~ 2.1M codewords of length 133 at m = 7). Overridable per call and,
/// in the CLI, via --max-m or the OVALCODE_MAX_M environment variable.
inline constexpr int kDefaultMaxM = 7;

/// Binomial coefficients built by Pascal's rule, exact.
class PascalTriangle {
public:
    explicit PascalTriangle(std::size_t max_n) : rows_(max_n + 1) {
        for (std::size_t n = 0; n <= max_n; ++n) {
            rows_[n].assign(n + 1, 1);
            for (std::size_t k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
        }
    }
    const Count& operator()(std::size_t n, std::size_t k) const {
        static const Count zero = 0;
        if (n >= rows_.size() || k > n) return zero;
        return rows_[n][k];
    }

private:
    std::vector<std::vector<Count>> rows_;
};

inline Count binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::vector<Count> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    }
    return row[k];
}

/// The [q+5, 3] code generated by the three rows
///   (1, ..., 1              | 0 0 1 0 1)
///   (a_0, ..., a_{q-1}      | 0 1 0 1 1)
///   (f(a_0), ..., f(a_{q-1})| 1 0 1 1 0)
/// where a_j runs over the field elements in enumeration order and f is an
/// oval polynomial. Coordinates are 0-based: column j < q corresponds to
/// a_j, columns q .. q+4 are the five fixed columns above.
struct LinearCode {
    Field field;
    OvalPoly oval;
    Matrix generator;

    static constexpr std::size_t dimension = 3;
    std::size_t length() const { return generator.cols(); }
};

/// The five fixed columns appended after the evaluation columns.
inline constexpr std::array<std::array<Elem, 3>, 5> kFixedColumns = {{
    {0, 0, 1},
    {0, 1, 0},
    {1, 0, 1},
    {0, 1, 1},
    {1, 1, 0},
}};

/// Build the generator matrix for an oval polynomial. Requires odd m >= 3
/// and a polynomial that actually passes the oval-definition check; both are
/// verified here because every structural result about the code depends on
/// them.
inline LinearCode build_generator(const Field& field, const OvalPoly& poly) {
    const int m = field.degree();
    if (m < 3 || m % 2 == 0) {
        throw unsupported_parameter_error("build_generator: requires odd extension degree m >= 3");
    }
    for (const OvalTerm& t : poly.terms) {
        if (t.exponent >= field.order() - 1 || t.coefficient >= field.order()) {
            throw unsupported_parameter_error("build_generator: polynomial does not fit this field");
        }
    }
    if (!check_oval_definition(field, poly)) {
        throw precondition_error("build_generator: polynomial fails the oval-definition check: " +
                                 describe(poly));
    }

    const std::uint32_t q = field.order();
    Matrix g(3, q + 5);
    for (std::uint32_t j = 0; j < q; ++j) {
        g(0, j) = 1;
        g(1, j) = static_cast<Elem>(j);
        g(2, j) = evaluate(field, poly, static_cast<Elem>(j));
    }
    for (std::size_t j = 0; j < kFixedColumns.size(); ++j) {
        for (std::size_t r = 0; r < 3; ++r) g(r, q + j) = kFixedColumns[j][r];
    }
    return LinearCode{field, poly, std::move(g)};
}

/// msg * G for a length-3 message vector.
inline std::vector<Elem> encode(const LinearCode& code, const std::vector<Elem>& msg) {
    if (msg.size() != 3) throw std::domain_error("encode: message must have length 3");
    return left_mul(code.field, msg, code.generator);
}

struct WeightDistribution {
    std::size_t length = 0;
    std::vector<Count> counts;  // counts[w] = number of codewords of weight w

    Count total() const {
        Count sum = 0;
        for (const Count& c : counts) sum += c;
        return sum;
    }
    bool operator==(const WeightDistribution&) const = default;
};

namespace detail {

inline void require_within_cap(const LinearCode& code, int max_m, const char* what) {
    if (code.field.degree() > max_m) {
        throw resource_limit_error(std::string(what) + ": extension degree " +
                                   std::to_string(code.field.degree()) + " exceeds the enumeration cap " +
                                   std::to_string(max_m) + " (raise with --max-m or OVALCODE_MAX_M)");
    }
}

template <typename Visit>
inline void for_each_projective_message(const Field& field, Visit&& visit) {
    const std::uint32_t q = field.order();
    std::vector<Elem> msg(3, 0);
    msg = {1, 0, 0};
    for (std::uint32_t b = 0; b < q; ++b) {
        for (std::uint32_t c = 0; c < q; ++c) {
            msg[1] = static_cast<Elem>(b);
            msg[2] = static_cast<Elem>(c);
            visit(msg);
        }
    }
    msg = {0, 1, 0};
    for (std::uint32_t c = 0; c < q; ++c) {
        msg[2] = static_cast<Elem>(c);
        visit(msg);
    }
    msg = {0, 0, 1};
    visit(msg);
}

inline int codeword_weight(const std::vector<Elem>& word) {
    int w = 0;
    for (Elem v : word) w += (v != 0);
    return w;
}

}  // namespace detail

/// Exact weight distribution by enumeration. With `projective` set (the
/// default) only the (q^3-1)/(q-1) messages whose first nonzero coordinate
/// is 1 are encoded, and nonzero counts scale by q-1, which is exact because
/// scalar multiples preserve weight.
inline WeightDistribution weight_distribution_bruteforce(const LinearCode& code, int max_m = kDefaultMaxM,
                                                         bool projective = true) {
    detail::require_within_cap(code, max_m, "weight_distribution_bruteforce");
    const Field& field = code.field;
    const std::uint32_t q = field.order();
    const std::size_t n = code.length();
    std::vector<std::uint64_t> histogram(n + 1, 0);

    if (projective) {
        detail::for_each_projective_message(field, [&](const std::vector<Elem>& msg) {
            ++histogram[detail::codeword_weight(encode(code, msg))];
        });
        WeightDistribution dist{n, std::vector<Count>(n + 1, 0)};
        dist.counts[0] = 1;
        for (std::size_t w = 1; w <= n; ++w) dist.counts[w] = Count(histogram[w]) * (q - 1);
        return dist;
    }

    std::vector<Elem> msg(3, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
            for (std::uint32_t c = 0; c < q; ++c) {
                msg[0] = static_cast<Elem>(a);
                msg[1] = static_cast<Elem>(b);
                msg[2] = static_cast<Elem>(c);
                ++histogram[detail::codeword_weight(encode(code, msg))];
            }
        }
    }
    WeightDistribution dist{n, std::vector<Count>(n + 1, 0)};
    for (std::size_t w = 0; w <= n; ++w) dist.counts[w] = histogram[w];
    return dist;
}

/// Closed-form weight distribution of the construction:
///   A_{q+2} = (q-1)(3q+8)/2          A_{q+3} = (q-2)(q-1)(q+2)/2
///   A_{q+4} = 3(q^2-3q+2)/2          A_{q+5} = (q-1)(q-2)^2/2
/// with A_0 = 1 and every other count zero.
inline WeightDistribution theoretical_weight_distribution(std::uint32_t q) {
    const int m = poly_degree(q);
    if (q < 8 || (std::uint32_t{1} << m) != q || m % 2 == 0) {
        throw std::domain_error("theoretical_weight_distribution: q must be 2^m with odd m >= 3");
    }
    const std::size_t n = q + 5;
    WeightDistribution dist{n, std::vector<Count>(n + 1, 0)};
    const Count Q = q;
    dist.counts[0] = 1;
    dist.counts[q + 2] = (Q - 1) * (3 * Q + 8) / 2;
    dist.counts[q + 3] = (Q - 2) * (Q - 1) * (Q + 2) / 2;
    dist.counts[q + 4] = 3 * (Q * Q - 3 * Q + 2) / 2;
    dist.counts[q + 5] = (Q - 1) * (Q - 2) * (Q - 2) / 2;
    return dist;
}

namespace detail {

/// Rank of the submatrix formed by the given generator columns, maintained
/// incrementally: `basis` holds up to three reduced columns, each normalized
/// to a unit pivot entry.
struct ColumnBasis {
    std::array<std::array<Elem, 3>, 3> vectors{};
    std::array<int, 3> pivots{};
    int rank = 0;

    /// Returns true when the column enlarged the span.
    bool insert(const Field& field, std::array<Elem, 3> v) {
        for (int b = 0; b < rank; ++b) {
            const Elem c = v[pivots[b]];
            if (c != 0) {
                for (int i = 0; i < 3; ++i) v[i] = field.add(v[i], field.mul(c, vectors[b][i]));
            }
        }
        int p = -1;
        for (int i = 0; i < 3; ++i) {
            if (v[i] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) return false;
        const Elem scale = field.inv(v[p]);
        for (int i = 0; i < 3; ++i) v[i] = field.mul(scale, v[i]);
        vectors[rank] = v;
        pivots[rank] = p;
        ++rank;
        return true;
    }
};

inline std::array<Elem, 3> generator_column(const Matrix& g, std::size_t j) {
    return {g(0, j), g(1, j), g(2, j)};
}

inline int column_rank(const Field& field, const Matrix& g, const std::size_t* idx, int k) {
    ColumnBasis basis;
    for (int t = 0; t < k; ++t) basis.insert(field, generator_column(g, idx[t]));
    return basis.rank;
}

}  // namespace detail

struct DualWeightThree {
    /// Smallest number of linearly dependent columns found among sizes <= 3;
    /// 4 means no dependency of size <= 3 exists (then d-dual = k+1 exactly,
    /// by the Singleton bound on the dual).
    int dual_distance = 0;
    /// Every 3-subset of columns of rank 2, as sorted triples in
    /// lexicographic order. Each carries exactly one projective class of
    /// weight-3 dual codewords, with all three dependency coefficients
    /// nonzero (no column pair is dependent).
    std::vector<std::array<std::size_t, 3>> supports;
    Count weight3_codewords = 0;
};

/// Dual distance by structural column analysis: no zero column, then no
/// dependent pair, then rank-2 triples. Enumerating the dual directly is
/// not an option; it has q^(q+2) codewords.
inline DualWeightThree dual_distance_and_weight3(const LinearCode& code) {
    const Field& field = code.field;
    const Matrix& g = code.generator;
    const std::size_t n = g.cols();
    DualWeightThree out;

    for (std::size_t j = 0; j < n; ++j) {
        if (g(0, j) == 0 && g(1, j) == 0 && g(2, j) == 0) {
            out.dual_distance = 1;
            return out;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t idx[2] = {i, j};
            if (detail::column_rank(field, g, idx, 2) < 2) {
                out.dual_distance = 2;
                return out;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const std::size_t idx[3] = {i, j, k};
                if (detail::column_rank(field, g, idx, 3) == 2) {
                    out.supports.push_back({i, j, k});
                }
            }
        }
    }
    out.dual_distance = out.supports.empty() ? 4 : 3;
    out.weight3_codewords = Count(out.supports.size()) * (field.order() - 1);
    return out;
}

/// One bucket of weight-3 dual supports, keyed by how many coordinates fall
/// among the first q evaluation columns and which of the five fixed columns
/// (offsets 0..4 relative to column q) are involved.
struct SupportBucket {
    int in_first_q = 0;
    std::vector<std::size_t> fixed_offsets;
    std::size_t support_count = 0;
    Count codeword_count = 0;
};

/// Bucket the weight-3 dual supports by shape. Buckets come out sorted by
/// (in_first_q, fixed_offsets), ascending.
inline std::vector<SupportBucket> classify_weight3_supports(
    const LinearCode& code, const std::vector<std::array<std::size_t, 3>>& supports) {
    const std::uint32_t q = code.field.order();
    const std::size_t n = code.length();
    std::map<std::pair<int, std::vector<std::size_t>>, std::size_t> buckets;
    for (const auto& support : supports) {
        int in_first_q = 0;
        std::vector<std::size_t> offsets;
        for (std::size_t idx : support) {
            if (idx >= n) throw internal_consistency_error("support index out of range");
            if (idx < q) {
                ++in_first_q;
            } else {
                offsets.push_back(idx - q);
            }
        }
        ++buckets[{in_first_q, std::move(offsets)}];
    }
    std::vector<SupportBucket> out;
    for (const auto& [key, count] : buckets) {
        out.push_back({key.first, key.second, count, Count(count) * (q - 1)});
    }
    return out;
}

/// Dual-side weight distribution of an [n, k] NMDS code from the seed
/// A_k-dual, via the recurrence
///   A_{k+s}^ = C(n, k+s) * sum_{j=0}^{s-1} (-1)^j C(k+s, j) (q^{s-j} - 1)
///              + (-1)^s C(n-k, s) * A_k^
/// for s = 1 .. n-k. A negative intermediate count means the seed is not
/// realizable by any NMDS code and raises an inconsistent-seed error.
inline WeightDistribution nmds_recurrence_dual(std::size_t n, std::size_t k, std::uint32_t q,
                                               const Count& a_k_dual) {
    if (k < 1 || k >= n || q < 2) throw std::domain_error("nmds_recurrence_dual: invalid parameters");
    if (a_k_dual < 0) throw std::domain_error("nmds_recurrence_dual: seed must be non-negative");
    const PascalTriangle tri(n);
    std::vector<Count> qpow(n + 1);
    qpow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;

    WeightDistribution dist{n, std::vector<Count>(n + 1, 0)};
    dist.counts[0] = 1;
    dist.counts[k] = a_k_dual;
    for (std::size_t s = 1; s <= n - k; ++s) {
        Count inner = 0;
        for (std::size_t j = 0; j < s; ++j) {
            const Count term = tri(k + s, j) * (qpow[s - j] - 1);
            if (j % 2 == 0) {
                inner += term;
            } else {
                inner -= term;
            }
        }
        Count value = tri(n, k + s) * inner;
        const Count seed_term = tri(n - k, s) * a_k_dual;
        if (s % 2 == 0) {
            value += seed_term;
        } else {
            value -= seed_term;
        }
        if (value < 0) {
            throw inconsistent_seed_error("nmds_recurrence_dual: negative count at weight " +
                                          std::to_string(k + s) + "; seed is not realizable");
        }
        dist.counts[k + s] = value;
    }
    return dist;
}

/// Primal-side analogue from the seed A_{n-k}:
///   A_{n-k+s} = C(n, k-s) * sum_{j=0}^{s-1} (-1)^j C(n-k+s, j) (q^{s-j} - 1)
///               + (-1)^s C(k, s) * A_{n-k}
/// for s = 1 .. k.
inline WeightDistribution nmds_recurrence_primal(std::size_t n, std::size_t k, std::uint32_t q,
                                                 const Count& a_n_minus_k) {
    if (k < 1 || k >= n || q < 2) throw std::domain_error("nmds_recurrence_primal: invalid parameters");
    if (a_n_minus_k < 0) throw std::domain_error("nmds_recurrence_primal: seed must be non-negative");
    const PascalTriangle tri(n);
    std::vector<Count> qpow(k + 1);
    qpow[0] = 1;
    for (std::size_t i = 1; i <= k; ++i) qpow[i] = qpow[i - 1] * q;

    WeightDistribution dist{n, std::vector<Count>(n + 1, 0)};
    dist.counts[0] = 1;
    dist.counts[n - k] = a_n_minus_k;
    for (std::size_t s = 1; s <= k; ++s) {
        Count inner = 0;
        for (std::size_t j = 0; j < s; ++j) {
            const Count term = tri(n - k + s, j) * (qpow[s - j] - 1);
            if (j % 2 == 0) {
                inner += term;
            } else {
                inner -= term;
            }
        }
        Count value = tri(n, k - s) * inner;
        const Count seed_term = tri(k, s) * a_n_minus_k;
        if (s % 2 == 0) {
            value += seed_term;
        } else {
            value -= seed_term;
        }
        if (value < 0) {
            throw inconsistent_seed_error("nmds_recurrence_primal: negative count at weight " +
                                          std::to_string(n - k + s) + "; seed is not realizable");
        }
        dist.counts[n - k + s] = value;
    }
    return dist;
}

/// MacWilliams transform in exact integer arithmetic:
///   A_j^ = q^{-k} * sum_i A_i K_j(i),
///   K_j(i) = sum_h (-1)^h C(i, h) C(n-i, j-h) (q-1)^{j-h}.
/// The input must sum to q^k and every output must divide exactly; anything
/// else raises an inconsistent-input error.
inline WeightDistribution macwilliams_dual(const WeightDistribution& dist, std::size_t k, std::uint32_t q) {
    const std::size_t n = dist.length;
    Count qk = 1;
    for (std::size_t i = 0; i < k; ++i) qk *= q;
    if (dist.total() != qk) {
        throw inconsistent_input_error("macwilliams_dual: counts do not sum to q^k");
    }
    const PascalTriangle tri(n);
    std::vector<Count> qm1pow(n + 1);
    qm1pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) qm1pow[i] = qm1pow[i - 1] * (q - 1);

    WeightDistribution out{n, std::vector<Count>(n + 1, 0)};
    for (std::size_t j = 0; j <= n; ++j) {
        Count sum = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (dist.counts[i] == 0) continue;
            Count kraw = 0;
            for (std::size_t h = 0; h <= j; ++h) {
                const Count term = tri(i, h) * tri(n - i, j - h) * qm1pow[j - h];
                if (h % 2 == 0) {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            sum += dist.counts[i] * kraw;
        }
        Count quotient;
        Count remainder;
        boost::multiprecision::divide_qr(sum, qk, quotient, remainder);
        if (remainder != 0 || quotient < 0) {
            throw inconsistent_input_error("macwilliams_dual: transform is not a weight distribution");
        }
        out.counts[j] = quotient;
    }
    return out;
}

/// A_0^ .. A_w^ of the dual by direct column-subset enumeration: for every
/// subset T of columns the kernel of the corresponding submatrix has
/// q^(|T| - rank T) vectors, and inclusion-exclusion over subset sizes turns
/// those totals into exact-support counts. Independent of both MacWilliams
/// and the recurrence. Cost grows as C(n, w); keep w small.
inline std::vector<Count> dual_weight_counts_direct(const LinearCode& code, std::size_t max_weight) {
    const std::size_t n = code.length();
    if (max_weight > 6) {
        throw resource_limit_error("dual_weight_counts_direct: supported up to weight 6");
    }
    const Field& field = code.field;
    const std::uint32_t q = field.order();

    // subset_sums[t] = sum over |T| = t of q^(t - rank T)
    std::vector<Count> subset_sums(max_weight + 1, 0);
    subset_sums[0] = 1;

    auto dfs = [&](auto&& self, std::size_t start, std::size_t depth, const detail::ColumnBasis& basis) -> void {
        for (std::size_t j = start; j < n; ++j) {
            detail::ColumnBasis next = basis;
            next.insert(field, detail::generator_column(code.generator, j));
            std::uint64_t kernel_size = 1;
            for (std::size_t i = 0; i < depth + 1 - static_cast<std::size_t>(next.rank); ++i) kernel_size *= q;
            subset_sums[depth + 1] += kernel_size;
            if (depth + 1 < max_weight) self(self, j + 1, depth + 1, next);
        }
    };
    if (max_weight >= 1) dfs(dfs, 0, 0, detail::ColumnBasis{});

    std::vector<Count> counts(max_weight + 1, 0);
    for (std::size_t w = 0; w <= max_weight; ++w) {
        Count a = 0;
        for (std::size_t t = 0; t <= w; ++t) {
            const Count term = binomial(n - t, w - t) * subset_sums[t];
            if ((w - t) % 2 == 0) {
                a += term;
            } else {
                a -= term;
            }
        }
        counts[w] = a;
    }
    return counts;
}

struct NmdsReport {
    std::size_t n = 0;
    std::size_t k = 0;
    int min_distance = 0;
    int dual_distance = 0;
    bool amds = false;       // d = n - k
    bool dual_amds = false;  // d(dual) = k
    bool nmds = false;
    WeightDistribution distribution;
};

/// Minimum distance by brute force, dual distance by column analysis, and
/// the AMDS / NMDS verdicts.
inline NmdsReport verify_nmds(const LinearCode& code, int max_m = kDefaultMaxM) {
    NmdsReport report;
    report.n = code.length();
    report.k = LinearCode::dimension;
    report.distribution = weight_distribution_bruteforce(code, max_m);
    for (std::size_t w = 1; w <= report.n; ++w) {
        if (report.distribution.counts[w] != 0) {
            report.min_distance = static_cast<int>(w);
            break;
        }
    }
    report.dual_distance = dual_distance_and_weight3(code).dual_distance;
    report.amds = report.min_distance == static_cast<int>(report.n - report.k);
    report.dual_amds = report.dual_distance == static_cast<int>(report.k);
    report.nmds = report.amds && report.dual_amds;
    return report;
}

struct PairingReport {
    int min_weight = 0;
    Count primal_min_weight_codewords = 0;
    Count dual_min_weight_codewords = 0;
    std::size_t primal_support_classes = 0;
    std::size_t dual_support_classes = 0;
    /// Every minimum-weight codeword of the code pairs with exactly one
    /// projective class of weight-3 dual codewords on disjoint support.
    bool every_pairing_unique = false;
    bool counts_match = false;
    /// Primal support classes whose complement is not a weight-3 dual
    /// support (diagnostics; empty when the pairing holds).
    std::vector<std::vector<std::size_t>> violations;
};

/// Minimum-weight codewords of the code, one representative per projective
/// class, together with the minimum weight.
struct MinWeightCodewords {
    int weight = 0;
    std::vector<std::vector<Elem>> representatives;
};

inline MinWeightCodewords minimum_weight_codewords(const LinearCode& code, int max_m = kDefaultMaxM) {
    detail::require_within_cap(code, max_m, "minimum_weight_codewords");
    MinWeightCodewords out;
    out.weight = static_cast<int>(code.length()) + 1;
    detail::for_each_projective_message(code.field, [&](const std::vector<Elem>& msg) {
        std::vector<Elem> word = encode(code, msg);
        const int w = detail::codeword_weight(word);
        if (w == 0) return;
        if (w < out.weight) {
            out.weight = w;
            out.representatives.clear();
        }
        if (w == out.weight) out.representatives.push_back(std::move(word));
    });
    return out;
}

/// Check the support-pairing property of NMDS codes: each minimum-weight
/// codeword has, up to scalar multiples, a unique weight-3 dual codeword
/// with disjoint support, and both codes have the same number of
/// minimum-weight codewords. At the parameters here (weights q+2 and 3 in
/// length q+5) disjointness forces the dual support to be the exact
/// complement.
inline PairingReport min_weight_support_pairing(const LinearCode& code, int max_m = kDefaultMaxM) {
    const std::uint32_t q = code.field.order();
    const std::size_t n = code.length();
    const MinWeightCodewords min_words = minimum_weight_codewords(code, max_m);
    const DualWeightThree dual = dual_distance_and_weight3(code);

    std::set<std::array<std::size_t, 3>> dual_supports(dual.supports.begin(), dual.supports.end());

    PairingReport report;
    report.min_weight = min_words.weight;
    report.primal_support_classes = min_words.representatives.size();
    report.dual_support_classes = dual.supports.size();
    report.primal_min_weight_codewords = Count(min_words.representatives.size()) * (q - 1);
    report.dual_min_weight_codewords = dual.weight3_codewords;
    report.counts_match = report.primal_min_weight_codewords == report.dual_min_weight_codewords;

    bool all_paired = true;
    for (const std::vector<Elem>& word : min_words.representatives) {
        std::vector<std::size_t> zeros;
        for (std::size_t i = 0; i < n; ++i) {
            if (word[i] == 0) zeros.push_back(i);
        }
        const bool paired = zeros.size() == 3 && dual_supports.count({zeros[0], zeros[1], zeros[2]}) == 1;
        if (!paired) {
            all_paired = false;
            report.violations.push_back(zeros);
        }
    }
    report.every_pairing_unique = all_paired;
    return report;
}

}  // namespace ovalcode
