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

#include <cstddef>
#include <vector>

#include "ovalcode/errors.hpp"
#include "ovalcode/gf2m.hpp"

namespace ovalcode {

/// Dense row-major matrix of field elements. The matrix does not hold a
/// reference to its field; operations take the field explicitly.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Elem> column(std::size_t c) const {
        std::vector<Elem> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
    }
    return t;
}

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivoting picks the first nonzero entry in
/// column order (a finite field has no magnitude), so the result and every
/// kernel basis derived from it are reproducible.
inline RrefResult rref(const Field& field, Matrix a) {
    if (a.empty()) throw std::domain_error("rref: empty matrix");
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < a.rows() && a(pivot_row, col) == 0) ++pivot_row;
        if (pivot_row == a.rows()) continue;
        if (pivot_row != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(pivot_row, c));
        }
        const Elem scale = field.inv(a(row, col));
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = field.mul(scale, a(row, c));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Elem factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                a(r, c) = field.add(a(r, c), field.mul(factor, a(row, c)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const Field& field, const Matrix& a) {
    if (a.empty()) throw std::domain_error("rank: empty matrix");
    return rref(field, a).pivot_cols.size();
}

/// Basis of the right null space, one vector per free column, ordered by
/// free column index. Empty when the matrix has full column rank.
inline std::vector<std::vector<Elem>> kernel_basis(const Field& field, const Matrix& a) {
    if (a.empty()) throw std::domain_error("kernel_basis: empty matrix");
    const RrefResult rr = rref(field, a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : rr.pivot_cols) is_pivot[p] = true;

    std::vector<std::vector<Elem>> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Elem> v(a.cols(), 0);
        v[free_col] = 1;
        // In characteristic 2 the pivot entries read off directly.
        for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) {
            v[rr.pivot_cols[r]] = rr.reduced(r, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve A x = b for the unique x. Requires full column rank (otherwise a
/// no-unique-solution error) and a consistent right-hand side (otherwise an
/// inconsistent-system error); rank deficiency is reported first.
inline std::vector<Elem> solve_unique(const Field& field, const Matrix& a, const std::vector<Elem>& b) {
    if (a.empty()) throw std::domain_error("solve_unique: empty matrix");
    if (b.size() != a.rows()) throw std::domain_error("solve_unique: right-hand side has wrong length");

    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const RrefResult rr = rref(field, std::move(aug));

    std::size_t rank_a = 0;
    bool inconsistent = false;
    for (std::size_t p : rr.pivot_cols) {
        if (p < a.cols()) {
            ++rank_a;
        } else {
            inconsistent = true;
        }
    }
    if (rank_a < a.cols()) {
        throw no_unique_solution_error("solve_unique: coefficient matrix is rank-deficient");
    }
    if (inconsistent) {
        throw inconsistent_system_error("solve_unique: system has no solution");
    }
    std::vector<Elem> x(a.cols(), 0);
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) {
        x[rr.pivot_cols[r]] = rr.reduced(r, a.cols());
    }
    return x;
}

/// Row vector times matrix; the length of `row` must equal a.rows().
inline std::vector<Elem> left_mul(const Field& field, const std::vector<Elem>& row, const Matrix& a) {
    if (row.size() != a.rows()) throw std::domain_error("left_mul: vector length does not match row count");
    std::vector<Elem> out(a.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (row[r] == 0) continue;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out[c] = field.add(out[c], field.mul(row[r], a(r, c)));
        }
    }
    return out;
}

}  // namespace ovalcode
