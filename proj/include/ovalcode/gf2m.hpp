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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ovalcode/errors.hpp"

namespace ovalcode {

/// A field element in polynomial-basis representation: bit i of the integer
/// is the coefficient of x^i. Valid values lie in [0, q).
using Elem = std::uint32_t;

/// Degree of a bit-packed polynomial over GF(2); -1 for the zero polynomial.
inline int poly_degree(std::uint64_t p) {
    return static_cast<int>(std::bit_width(p)) - 1;
}

/// Remainder of a modulo m in GF(2)[x].
inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
        a ^= m << (da - dm);
    }
    return a;
}

/// Irreducibility over GF(2) by trial division against every polynomial of
/// degree 1 .. deg/2.
inline bool poly_irreducible(std::uint64_t p) {
    const int deg = poly_degree(p);
    if (deg < 1) return false;
    for (int d = 1; d <= deg / 2; ++d) {
        for (std::uint64_t div = std::uint64_t{1} << d; div < std::uint64_t{1} << (d + 1); ++div) {
            if (poly_mod(p, div) == 0) return false;
        }
    }
    return true;
}

/// The irreducible degree-m polynomial with the smallest integer encoding.
/// Integer order coincides with lexicographic order on the coefficient
/// string read from x^m down to x^0.
inline std::uint64_t smallest_irreducible(int degree) {
    if (degree < 1 || degree > 62) {
        throw invalid_degree_error("smallest_irreducible: degree must be in [1, 62]");
    }
    for (std::uint64_t p = std::uint64_t{1} << degree; p < std::uint64_t{1} << (degree + 1); ++p) {
        if (poly_irreducible(p)) return p;
    }
    throw internal_consistency_error("no irreducible polynomial found");  // unreachable
}

/// GF(2^m) with a fixed irreducible modulus. Elements are enumerated by the
/// integer value of their coordinate vector, so element 0 is the field zero
/// and element 1 the field one. Immutable after construction and safe to
/// share across threads; every operation is a pure function of its inputs.
class Field {
public:
    /// Degrees up to this bound get log/antilog multiplication tables.
    static constexpr int kTableMaxDegree = 16;

    /// Field with the lexicographically smallest irreducible modulus.
    explicit Field(int m) : Field(m, smallest_irreducible(check_degree(m))) {}

    /// Field with an explicit modulus (must be irreducible of degree m).
    Field(int m, std::uint64_t modulus) : m_(check_degree(m)), mod_(modulus) {
        if (poly_degree(modulus) != m || !poly_irreducible(modulus)) {
            throw unsupported_parameter_error("Field: modulus is not an irreducible polynomial of degree m");
        }
        if (m > 30) throw invalid_degree_error("Field: degree above 30 is not supported");
        q_ = std::uint32_t{1} << m;
        if (m <= kTableMaxDegree) build_tables();
    }

    int degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    std::uint64_t modulus() const { return mod_; }

    void check(Elem a) const {
        if (a >= q_) {
            throw std::domain_error("field element " + std::to_string(a) + " out of range [0, " +
                                    std::to_string(q_) + ")");
        }
    }

    /// Coefficient-wise sum; the field has characteristic 2, so a + a = 0.
    Elem add(Elem a, Elem b) const {
        check(a);
        check(b);
        return a ^ b;
    }

    Elem mul(Elem a, Elem b) const {
        check(a);
        check(b);
        if (a == 0 || b == 0) return 0;
        if (!alog_.empty()) {
            return alog_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
        }
        return mul_direct(a, b);
    }

    /// Multiplicative inverse; a = 0 raises a division-by-zero domain error.
    Elem inv(Elem a) const {
        check(a);
        if (a == 0) throw std::domain_error("division by zero in GF(2^m)");
        if (!alog_.empty()) {
            return alog_[(q_ - 1 - log_[a]) % (q_ - 1)];
        }
        return pow(a, q_ - 2);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// a^e with pow(a, 0) = 1 for every a, including a = 0.
    Elem pow(Elem a, std::uint64_t e) const {
        check(a);
        if (e == 0) return 1;
        if (a == 0) return 0;
        if (!alog_.empty()) {
            return alog_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
        }
        Elem result = 1;
        Elem base = a;
        while (e > 0) {
            if (e & 1) result = mul_direct(result, base);
            base = mul_direct(base, base);
            e >>= 1;
        }
        return result;
    }

    /// The x^(q-2) map: the inverse extended by 0 -> 0.
    Elem inv_or_zero(Elem a) const { return a == 0 ? 0 : inv(a); }

    /// All q elements ordered by integer value: 0, 1, 2, ..., q-1.
    std::vector<Elem> elements() const {
        std::vector<Elem> out(q_);
        for (std::uint32_t i = 0; i < q_; ++i) out[i] = i;
        return out;
    }

    bool operator==(const Field& other) const { return m_ == other.m_ && mod_ == other.mod_; }

private:
    static int check_degree(int m) {
        if (m < 2) throw invalid_degree_error("Field: extension degree must be at least 2");
        return m;
    }

    Elem mul_direct(Elem a, Elem b) const {
        std::uint64_t acc = 0;
        std::uint64_t x = a;
        for (std::uint64_t y = b; y != 0; y >>= 1) {
            if (y & 1) acc ^= x;
            x <<= 1;
            if ((x >> m_) & 1) x ^= mod_;
        }
        return static_cast<Elem>(acc);
    }

    void build_tables() {
        // Pick the smallest element of multiplicative order q - 1.
        for (Elem g = 2; g < q_; ++g) {
            std::uint32_t order = 1;
            Elem cur = g;
            while (cur != 1) {
                cur = mul_direct(cur, g);
                ++order;
            }
            if (order != q_ - 1) continue;
            alog_.assign(q_ - 1, 0);
            log_.assign(q_, 0);
            cur = 1;
            for (std::uint32_t i = 0; i < q_ - 1; ++i) {
                alog_[i] = cur;
                log_[cur] = static_cast<std::int32_t>(i);
                cur = mul_direct(cur, g);
            }
            return;
        }
        throw internal_consistency_error("no generator found for GF(2^m)");  // unreachable
    }

    int m_;
    std::uint32_t q_ = 0;
    std::uint64_t mod_;
    std::vector<Elem> alog_;
    std::vector<std::int32_t> log_;
};

}  // namespace ovalcode
