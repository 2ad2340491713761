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
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ovalcode/errors.hpp"
#include "ovalcode/gf2m.hpp"

namespace ovalcode {

/// The named oval-polynomial families. Glynn comes in three shapes: the
/// first is valid for every odd m, the other two depend on m mod 4.
enum class OvalFamily {
    translation,
    segre,
    glynn_a,
    glynn_b34,  // m = 3 (mod 4)
    glynn_b14,  // m = 1 (mod 4)
    cherowitzo,
    payne,
    custom,
};

inline std::string to_string(OvalFamily f) {
    switch (f) {
        case OvalFamily::translation: return "translation";
        case OvalFamily::segre: return "segre";
        case OvalFamily::glynn_a: return "glynn-a";
        case OvalFamily::glynn_b34: return "glynn-b34";
        case OvalFamily::glynn_b14: return "glynn-b14";
        case OvalFamily::cherowitzo: return "cherowitzo";
        case OvalFamily::payne: return "payne";
        case OvalFamily::custom: return "custom";
    }
    throw internal_consistency_error("unknown oval family");
}

inline OvalFamily family_from_string(std::string_view name) {
    if (name == "translation") return OvalFamily::translation;
    if (name == "segre") return OvalFamily::segre;
    if (name == "glynn-a") return OvalFamily::glynn_a;
    if (name == "glynn-b34") return OvalFamily::glynn_b34;
    if (name == "glynn-b14") return OvalFamily::glynn_b14;
    if (name == "cherowitzo") return OvalFamily::cherowitzo;
    if (name == "payne") return OvalFamily::payne;
    if (name == "custom") return OvalFamily::custom;
    throw unsupported_parameter_error("unknown oval family: " + std::string(name));
}

struct OvalTerm {
    std::uint32_t exponent;
    Elem coefficient;
    bool operator==(const OvalTerm&) const = default;
};

/// A candidate oval polynomial: a sparse polynomial over GF(2^m) with no
/// constant term (so f(0) = 0 always holds) and exponents in [1, q-2].
/// Construction does not require f to actually be an oval polynomial; the
/// check_* functions decide that.
struct OvalPoly {
    OvalFamily family = OvalFamily::custom;
    int shift = 0;  // translation parameter h; 0 elsewhere
    std::vector<OvalTerm> terms;
};

namespace detail {

/// Sort by exponent, merge duplicates in the field, drop zero coefficients.
/// Catalog families may carry exponents at or above q-1; those reduce mod
/// q-1, which preserves the polynomial as a function on the field (x^(q-1+r)
/// and x^r agree everywhere for r >= 1). Custom input must already be in
/// range.
inline std::vector<OvalTerm> canonicalize_terms(const Field& field,
                                                const std::vector<std::pair<std::uint64_t, Elem>>& raw,
                                                bool reduce_exponents) {
    const std::uint32_t q = field.order();
    std::map<std::uint32_t, Elem> merged;
    for (const auto& [exponent, coefficient] : raw) {
        field.check(coefficient);
        std::uint64_t e = exponent;
        if (e >= q - 1) {
            if (!reduce_exponents) {
                throw unsupported_parameter_error("term exponent " + std::to_string(e) +
                                                  " outside [1, " + std::to_string(q - 1) + ")");
            }
            e %= (q - 1);
        }
        if (e == 0) {
            throw unsupported_parameter_error("term exponents must be at least 1 (f(0) = 0 is required)");
        }
        const auto key = static_cast<std::uint32_t>(e);
        merged[key] = field.add(merged.count(key) ? merged[key] : 0, coefficient);
    }
    std::vector<OvalTerm> terms;
    for (const auto& [e, c] : merged) {
        if (c != 0) terms.push_back({e, c});
    }
    if (terms.empty()) {
        throw unsupported_parameter_error("polynomial has no nonzero terms");
    }
    return terms;
}

}  // namespace detail

/// Build one of the catalog families over the given field. Exponents follow
/// the published formulas per family; a family whose printed exponent is not
/// an integer for this m (Payne) is rejected rather than rounded.
inline OvalPoly make_family(const Field& field, OvalFamily family, int h = 0) {
    const int m = field.degree();
    const bool odd_m = (m % 2 == 1) && m >= 3;
    std::vector<std::pair<std::uint64_t, Elem>> raw;

    switch (family) {
        case OvalFamily::translation: {
            if (h < 1 || h > 62) {
                throw unsupported_parameter_error("translation family requires a shift h >= 1");
            }
            if (std::gcd(h, m) != 1) {
                throw unsupported_parameter_error("translation family requires gcd(h, m) = 1");
            }
            raw.push_back({std::uint64_t{1} << h, 1});
            break;
        }
        case OvalFamily::segre: {
            if (!odd_m) throw unsupported_parameter_error("segre family requires odd m >= 3");
            raw.push_back({6, 1});
            break;
        }
        case OvalFamily::glynn_a: {
            if (!odd_m) throw unsupported_parameter_error("glynn-a family requires odd m >= 3");
            raw.push_back({3 * (std::uint64_t{1} << ((m + 1) / 2)) + 4, 1});
            break;
        }
        case OvalFamily::glynn_b34: {
            if (!odd_m || m % 4 != 3) {
                throw unsupported_parameter_error("glynn-b34 family requires m = 3 (mod 4)");
            }
            raw.push_back({(std::uint64_t{1} << ((m + 1) / 2)) + (std::uint64_t{1} << ((m + 1) / 4)), 1});
            break;
        }
        case OvalFamily::glynn_b14: {
            if (!odd_m || m % 4 != 1) {
                throw unsupported_parameter_error("glynn-b14 family requires m = 1 (mod 4), m >= 5");
            }
            raw.push_back({(std::uint64_t{1} << ((m + 1) / 2)) + (std::uint64_t{1} << ((3 * m + 1) / 4)), 1});
            break;
        }
        case OvalFamily::cherowitzo: {
            if (!odd_m) throw unsupported_parameter_error("cherowitzo family requires odd m >= 3");
            const std::uint64_t s = std::uint64_t{1} << ((m + 1) / 2);
            raw.push_back({s, 1});
            raw.push_back({s + 2, 1});
            raw.push_back({3 * s + 4, 1});
            break;
        }
        case OvalFamily::payne: {
            if (!odd_m) throw unsupported_parameter_error("payne family requires odd m >= 3");
            const std::uint64_t half = std::uint64_t{1} << (m - 1);
            const std::uint64_t e1_num = half + 2;
            const std::uint64_t e3_num = 3 * half - 2;
            if (e1_num % 3 != 0 || e3_num % 3 != 0) {
                throw malformed_family_error(
                    "payne family: printed exponent (3*2^(m-1)-2)/3 is not an integer for m = " +
                    std::to_string(m) + "; refusing to round");
            }
            raw.push_back({e1_num / 3, 1});
            raw.push_back({half, 1});
            raw.push_back({e3_num / 3, 1});
            break;
        }
        case OvalFamily::custom:
            throw unsupported_parameter_error("custom polynomials are built with make_custom");
    }

    OvalPoly poly;
    poly.family = family;
    poly.shift = (family == OvalFamily::translation) ? h : 0;
    poly.terms = detail::canonicalize_terms(field, raw, /*reduce_exponents=*/true);
    return poly;
}

/// Build a custom polynomial from explicit (exponent, coefficient) pairs.
/// Exponents must already lie in [1, q-1); no reduction is applied.
inline OvalPoly make_custom(const Field& field, const std::vector<OvalTerm>& terms) {
    std::vector<std::pair<std::uint64_t, Elem>> raw;
    raw.reserve(terms.size());
    for (const OvalTerm& t : terms) raw.push_back({t.exponent, t.coefficient});
    OvalPoly poly;
    poly.family = OvalFamily::custom;
    poly.terms = detail::canonicalize_terms(field, raw, /*reduce_exponents=*/false);
    return poly;
}

/// Parse the textual term list "4:1,2:1" (exponent:coefficient pairs).
inline std::vector<OvalTerm> parse_terms(const std::string& text) {
    std::vector<OvalTerm> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string piece = text.substr(pos, comma - pos);
        const std::size_t colon = piece.find(':');
        try {
            if (colon == std::string::npos) {
                out.push_back({static_cast<std::uint32_t>(std::stoul(piece)), 1});
            } else {
                out.push_back({static_cast<std::uint32_t>(std::stoul(piece.substr(0, colon))),
                               static_cast<Elem>(std::stoul(piece.substr(colon + 1)))});
            }
        } catch (const std::exception&) {
            throw unsupported_parameter_error("cannot parse term list: " + text);
        }
        pos = comma + 1;
    }
    if (out.empty()) throw unsupported_parameter_error("empty term list");
    return out;
}

/// CLI-facing description, e.g. "family=translation h=2" or
/// "family=custom terms=2:1,4:1".
inline std::string describe(const OvalPoly& poly) {
    std::string s = "family=" + to_string(poly.family);
    if (poly.family == OvalFamily::translation) {
        s += " h=" + std::to_string(poly.shift);
    } else if (poly.family == OvalFamily::custom) {
        s += " terms=";
        for (std::size_t i = 0; i < poly.terms.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(poly.terms[i].exponent) + ":" + std::to_string(poly.terms[i].coefficient);
        }
    }
    return s;
}

inline Elem evaluate(const Field& field, const OvalPoly& poly, Elem x) {
    field.check(x);
    Elem acc = 0;
    for (const OvalTerm& t : poly.terms) {
        acc = field.add(acc, field.mul(t.coefficient, field.pow(x, t.exponent)));
    }
    return acc;
}

/// f(x) for every x in enumeration order; the workhorse behind the
/// exhaustive checks.
inline std::vector<Elem> value_table(const Field& field, const OvalPoly& poly) {
    std::vector<Elem> table(field.order());
    for (std::uint32_t x = 0; x < field.order(); ++x) {
        table[x] = evaluate(field, poly, static_cast<Elem>(x));
    }
    return table;
}

namespace detail {

inline bool table_is_permutation(const std::vector<Elem>& table) {
    std::vector<bool> seen(table.size(), false);
    for (Elem v : table) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace detail

/// Exhaustive image check: does f take q distinct values?
inline bool is_permutation(const Field& field, const OvalPoly& poly) {
    return detail::table_is_permutation(value_table(field, poly));
}

/// Is x -> f(x) + u x 2-to-1 (every image value has 0 or 2 preimages)?
/// Requires u != 0; the criterion quantifies over nonzero u only.
inline bool is_two_to_one_shifted(const Field& field, const OvalPoly& poly, Elem u) {
    field.check(u);
    if (u == 0) throw std::domain_error("is_two_to_one_shifted: u must be nonzero");
    const std::vector<Elem> table = value_table(field, poly);
    std::vector<std::uint32_t> hits(field.order(), 0);
    for (std::uint32_t x = 0; x < field.order(); ++x) {
        ++hits[field.add(table[x], field.mul(u, static_cast<Elem>(x)))];
    }
    for (std::uint32_t count : hits) {
        if (count != 0 && count != 2) return false;
    }
    return true;
}

/// Aggregate of is_two_to_one_shifted over all u in F_q^*.
inline bool all_shifts_two_to_one(const Field& field, const OvalPoly& poly) {
    const std::vector<Elem> table = value_table(field, poly);
    std::vector<std::uint32_t> hits(field.order());
    for (std::uint32_t u = 1; u < field.order(); ++u) {
        std::fill(hits.begin(), hits.end(), 0);
        for (std::uint32_t x = 0; x < field.order(); ++x) {
            ++hits[field.add(table[x], field.mul(static_cast<Elem>(u), static_cast<Elem>(x)))];
        }
        for (std::uint32_t count : hits) {
            if (count != 0 && count != 2) return false;
        }
    }
    return true;
}

/// The defining property: f is a permutation with f(0) = 0, f(1) = 1, and
/// for every a the map g_a(x) = (f(x+a) + f(a)) x^(q-2) is a permutation.
/// x^(q-2) is computed as the inverse extended by 0 -> 0, which takes the
/// same values.
inline bool check_oval_definition(const Field& field, const OvalPoly& poly) {
    const std::uint32_t q = field.order();
    const std::vector<Elem> table = value_table(field, poly);
    if (table[0] != 0 || table[1] != 1) return false;
    if (!detail::table_is_permutation(table)) return false;

    std::vector<bool> seen(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        const Elem fa = table[a];
        for (std::uint32_t x = 0; x < q; ++x) {
            const Elem numerator = field.add(table[x ^ a], fa);
            const Elem value = field.mul(numerator, field.inv_or_zero(static_cast<Elem>(x)));
            if (seen[value]) return false;
            seen[value] = true;
        }
    }
    return true;
}

/// Secant-slope criterion: for all pairwise distinct x, y, z the slopes
/// (f(x)+f(y))/(x+y) and (f(x)+f(z))/(x+z) differ. Swept exhaustively as,
/// for each x, injectivity of y -> slope(x, y) on F_q \ {x}. Only defined
/// for permutation polynomials.
inline bool check_slope_condition(const Field& field, const OvalPoly& poly) {
    const std::uint32_t q = field.order();
    const std::vector<Elem> table = value_table(field, poly);
    if (!detail::table_is_permutation(table)) {
        throw precondition_error("check_slope_condition: polynomial is not a permutation of F_q");
    }
    std::vector<bool> seen(q);
    for (std::uint32_t x = 0; x < q; ++x) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t y = 0; y < q; ++y) {
            if (y == x) continue;
            const Elem slope = field.div(field.add(table[x], table[y]),
                                         field.add(static_cast<Elem>(x), static_cast<Elem>(y)));
            if (seen[slope]) return false;
            seen[slope] = true;
        }
    }
    return true;
}

/// Does f(x) + x + 1 = 0 have no solution in F_q? Stated for polynomials
/// with coefficients in the two-element subfield and odd m >= 3.
inline bool check_affine_nonvanishing(const Field& field, const OvalPoly& poly) {
    if (field.degree() % 2 == 0 || field.degree() < 3) {
        throw precondition_error("check_affine_nonvanishing: requires odd extension degree m >= 3");
    }
    for (const OvalTerm& t : poly.terms) {
        if (t.coefficient > 1) {
            throw precondition_error("check_affine_nonvanishing: coefficients must lie in GF(2)");
        }
    }
    const std::vector<Elem> table = value_table(field, poly);
    for (std::uint32_t x = 0; x < field.order(); ++x) {
        if (field.add(field.add(table[x], static_cast<Elem>(x)), 1) == 0) return false;
    }
    return true;
}

}  // namespace ovalcode
