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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ovalcode/gf2m.hpp"
#include "ovalcode/linalg.hpp"
#include "ovalcode/ovalpoly.hpp"

using namespace ovalcode;

namespace {

Matrix from_rows(const std::vector<std::vector<Elem>>& rows) {
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Elem>(rng() % f.order());
    }
    return m;
}

}  // namespace

TEST_CASE("rank examples") {
    const Field f(3);
    REQUIRE(rank(f, Matrix::identity(3)) == 3);
    // columns (0,0,1), (0,1,0), (0,1,1): a rank-2 triple of fixed columns
    const Matrix m117 = from_rows({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}});
    REQUIRE(rank(f, m117) == 2);
    REQUIRE(rank(f, Matrix(3, 3)) == 0);
    REQUIRE_THROWS_AS(rank(f, Matrix()), std::domain_error);
}

TEST_CASE("solve_unique examples") {
    const Field f(3);
    SECTION("identity system") {
        const std::vector<Elem> b{3, 1, 4};
        REQUIRE(solve_unique(f, Matrix::identity(3), b) == b);
    }
    SECTION("zero column means no unique solution") {
        Matrix a = Matrix::identity(3);
        a(0, 1) = 0;
        a(1, 1) = 0;
        a(2, 1) = 0;
        REQUIRE_THROWS_AS(solve_unique(f, a, {1, 2, 3}), no_unique_solution_error);
    }
    SECTION("rank deficiency is reported before inconsistency") {
        // zero matrix with a nonzero right-hand side is both
        REQUIRE_THROWS_AS(solve_unique(f, Matrix(2, 2), {1, 0}), no_unique_solution_error);
    }
    SECTION("inconsistent overdetermined system") {
        Matrix a(3, 1);
        a(0, 0) = 1;
        a(1, 0) = 1;
        a(2, 0) = 0;
        REQUIRE_THROWS_AS(solve_unique(f, a, {1, 2, 0}), inconsistent_system_error);
    }
    SECTION("oval-polynomial interpolation matrix has full rank") {
        // rows (1,1,1), (x,y,z), (f(x),f(y),f(z)) with f = x^4 and distinct points
        const OvalPoly poly = make_family(f, OvalFamily::translation, 2);
        const Elem x = 2, y = 5, z = 7;
        const Matrix a = from_rows({{1, 1, 1},
                                    {x, y, z},
                                    {evaluate(f, poly, x), evaluate(f, poly, y), evaluate(f, poly, z)}});
        REQUIRE(rank(f, a) == 3);
        REQUIRE(solve_unique(f, a, {0, 0, 0}) == std::vector<Elem>{0, 0, 0});
    }
}

TEST_CASE("kernel basis examples") {
    const Field f(3);
    REQUIRE(kernel_basis(f, Matrix::identity(3)).empty());

    const Matrix m117 = from_rows({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}});
    const auto basis = kernel_basis(f, m117);
    REQUIRE(basis.size() == 1);
    for (Elem v : basis[0]) REQUIRE(v != 0);

    REQUIRE(kernel_basis(f, Matrix(1, 2)).size() == 2);
}

TEST_CASE("kernel vectors are annihilated exactly") {
    std::mt19937_64 rng(42);
    for (int m : {2, 3, 4}) {
        const Field f(m);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t rows = 1 + rng() % 4;
            const std::size_t cols = 1 + rng() % 6;
            const Matrix a = random_matrix(f, rows, cols, rng);
            for (const auto& v : kernel_basis(f, a)) {
                for (std::size_t r = 0; r < rows; ++r) {
                    Elem acc = 0;
                    for (std::size_t c = 0; c < cols; ++c) acc = f.add(acc, f.mul(a(r, c), v[c]));
                    REQUIRE(acc == 0);
                }
            }
            // rank-nullity while we are here
            REQUIRE(rank(f, a) + kernel_basis(f, a).size() == cols);
        }
    }
}

TEST_CASE("rank equals rank of the transpose") {
    std::mt19937_64 rng(43);
    for (int m : {2, 3, 5}) {
        const Field f(m);
        for (int trial = 0; trial < 60; ++trial) {
            const Matrix a = random_matrix(f, 1 + rng() % 5, 1 + rng() % 5, rng);
            REQUIRE(rank(f, a) == rank(f, transpose(a)));
        }
    }
}

TEST_CASE("solve_unique inverts multiplication by a full-column-rank matrix") {
    std::mt19937_64 rng(44);
    for (int m : {2, 3, 4}) {
        const Field f(m);
        int done = 0;
        while (done < 30) {
            const std::size_t cols = 1 + rng() % 4;
            const std::size_t rows = cols + rng() % 3;
            const Matrix a = random_matrix(f, rows, cols, rng);
            if (rank(f, a) != cols) continue;
            std::vector<Elem> x(cols);
            for (auto& v : x) v = static_cast<Elem>(rng() % f.order());
            std::vector<Elem> b(rows, 0);
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) b[r] = f.add(b[r], f.mul(a(r, c), x[c]));
            }
            REQUIRE(solve_unique(f, a, b) == x);
            ++done;
        }
    }
}

TEST_CASE("left_mul computes a row-vector product") {
    const Field f(3);
    Matrix a(3, 4);
    for (std::size_t c = 0; c < 4; ++c) {
        a(0, c) = 1;
        a(1, c) = static_cast<Elem>(c);
        a(2, c) = static_cast<Elem>(c + 1);
    }
    const auto row = left_mul(f, {1, 0, 0}, a);
    REQUIRE(row == std::vector<Elem>{1, 1, 1, 1});
    REQUIRE_THROWS_AS(left_mul(f, {1, 0}, a), std::domain_error);
}
