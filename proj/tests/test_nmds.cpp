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

#include <array>
#include <set>

#include "ovalcode/nmds.hpp"

using namespace ovalcode;

namespace {

LinearCode m3_code() {
    const Field f(3);
    return build_generator(f, make_family(f, OvalFamily::translation, 2));
}

// the sixteen weight-3 dual supports of the m=3, f=x^4 code, frozen from an
// exhaustive triple sweep
const std::set<std::array<std::size_t, 3>> kM3Supports = {
    {0, 1, 11}, {0, 8, 10}, {0, 9, 12}, {1, 8, 12}, {1, 9, 10}, {2, 3, 11},
    {2, 5, 12}, {2, 7, 10}, {3, 4, 10}, {3, 6, 12}, {4, 5, 11}, {4, 7, 12},
    {5, 6, 10}, {6, 7, 11}, {8, 9, 11}, {10, 11, 12},
};

}  // namespace

TEST_CASE("generator matrix layout") {
    const LinearCode code = m3_code();
    REQUIRE(code.length() == 13);
    REQUIRE(code.generator.rows() == 3);
    // column for alpha_2 = 2 is (1, 2, f(2)) = (1, 2, 6)
    REQUIRE(code.generator.column(2) == std::vector<Elem>{1, 2, 6});
    // third fixed column (0-based index q+2) is (1, 0, 1)
    REQUIRE(code.generator.column(10) == std::vector<Elem>{1, 0, 1});
    for (std::size_t j = 0; j < 8; ++j) {
        REQUIRE(code.generator(0, j) == 1);
        REQUIRE(code.generator(1, j) == j);
    }
}

TEST_CASE("build_generator rejects bad inputs") {
    const Field f4(4);
    REQUIRE_THROWS_AS(build_generator(f4, make_custom(f4, {{2, 1}})), unsupported_parameter_error);
    const Field f3(3);
    // x is a permutation but not an oval polynomial
    REQUIRE_THROWS_AS(build_generator(f3, make_custom(f3, {{1, 1}})), precondition_error);
}

TEST_CASE("encode") {
    const LinearCode code = m3_code();
    REQUIRE(encode(code, {0, 0, 0}) == std::vector<Elem>(13, 0));
    REQUIRE(encode(code, {1, 0, 0}) ==
            std::vector<Elem>{1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1, 0, 1});
    REQUIRE(encode(code, {0, 1, 0}) ==
            std::vector<Elem>{0, 1, 2, 3, 4, 5, 6, 7, 0, 1, 0, 1, 1});
    REQUIRE_THROWS_AS(encode(code, {1, 0}), std::domain_error);
}

TEST_CASE("brute-force weight distribution reproduces the m=3 enumerator") {
    const LinearCode code = m3_code();
    const WeightDistribution dist = weight_distribution_bruteforce(code);
    REQUIRE(dist.counts[0] == 1);
    REQUIRE(dist.counts[10] == 112);
    REQUIRE(dist.counts[11] == 210);
    REQUIRE(dist.counts[12] == 63);
    REQUIRE(dist.counts[13] == 126);
    for (std::size_t w = 1; w <= 9; ++w) REQUIRE(dist.counts[w] == 0);
    REQUIRE(dist.total() == 512);
}

TEST_CASE("projective and full enumeration agree") {
    const LinearCode code = m3_code();
    REQUIRE(weight_distribution_bruteforce(code, kDefaultMaxM, true) ==
            weight_distribution_bruteforce(code, kDefaultMaxM, false));
}

TEST_CASE("theoretical weight distribution") {
    const WeightDistribution t8 = theoretical_weight_distribution(8);
    REQUIRE(t8.counts[10] == 112);
    REQUIRE(t8.counts[11] == 210);
    REQUIRE(t8.counts[12] == 63);
    REQUIRE(t8.counts[13] == 126);
    REQUIRE(t8.total() == 512);
    const WeightDistribution t32 = theoretical_weight_distribution(32);
    REQUIRE(t32.counts[34] == 1612);  // 31 * 104 / 2
    REQUIRE(t32.total() == Count(32) * 32 * 32);
    REQUIRE_THROWS_AS(theoretical_weight_distribution(16), std::domain_error);  // even m
    REQUIRE_THROWS_AS(theoretical_weight_distribution(9), std::domain_error);
}

TEST_CASE("brute force equals closed form at m=5 and m=7") {
    const Field f5(5);
    const LinearCode c5 = build_generator(f5, make_family(f5, OvalFamily::segre));
    REQUIRE(weight_distribution_bruteforce(c5) == theoretical_weight_distribution(32));
    const Field f7(7);
    const LinearCode c7 = build_generator(f7, make_family(f7, OvalFamily::segre));
    REQUIRE(weight_distribution_bruteforce(c7) == theoretical_weight_distribution(128));
}

TEST_CASE("enumeration cap") {
    const Field f(9);
    const LinearCode code = build_generator(f, make_family(f, OvalFamily::segre));
    REQUIRE_THROWS_AS(weight_distribution_bruteforce(code), resource_limit_error);
    REQUIRE_THROWS_AS(verify_nmds(code), resource_limit_error);
}

TEST_CASE("dual distance and weight-3 supports at m=3") {
    const LinearCode code = m3_code();
    const DualWeightThree dual = dual_distance_and_weight3(code);
    REQUIRE(dual.dual_distance == 3);
    REQUIRE(dual.supports.size() == 16);
    REQUIRE(dual.weight3_codewords == 112);
    REQUIRE(std::set<std::array<std::size_t, 3>>(dual.supports.begin(), dual.supports.end()) ==
            kM3Supports);
    // the triple of fixed columns (0,0,1), (0,1,0), (0,1,1)
    REQUIRE(kM3Supports.count({8, 9, 11}) == 1);
}

TEST_CASE("weight-3 support buckets match the per-case closed forms") {
    const LinearCode code = m3_code();
    const auto buckets = classify_weight3_supports(code, dual_distance_and_weight3(code).supports);
    std::map<std::pair<int, std::vector<std::size_t>>, Count> by_key;
    for (const auto& b : buckets) by_key[{b.in_first_q, b.fixed_offsets}] = b.codeword_count;

    const Count q = 8;
    std::map<std::pair<int, std::vector<std::size_t>>, Count> expected;
    expected[{2, {2}}] = (q - 2) * (q - 1) / 2;  // 21
    expected[{2, {3}}] = q * (q - 1) / 2;        // 28
    expected[{2, {4}}] = (q - 2) * (q - 1) / 2;  // 21
    expected[{1, {0, 2}}] = q - 1;
    expected[{1, {0, 4}}] = q - 1;
    expected[{1, {1, 2}}] = q - 1;
    expected[{1, {1, 4}}] = q - 1;
    expected[{0, {0, 1, 3}}] = q - 1;
    expected[{0, {2, 3, 4}}] = q - 1;
    REQUIRE(by_key == expected);
    REQUIRE(by_key[{2, {2}}] == 21);
    REQUIRE(by_key[{2, {3}}] == 28);

    Count total = 0;
    for (const auto& [key, count] : by_key) total += count;
    REQUIRE(total == 112);
}

TEST_CASE("no support bucket with three evaluation columns") {
    const LinearCode code = m3_code();
    for (const auto& b : classify_weight3_supports(code, dual_distance_and_weight3(code).supports)) {
        REQUIRE(b.in_first_q != 3);
    }
}

TEST_CASE("primal recurrence reproduces the enumerator from its seed") {
    const WeightDistribution dist = nmds_recurrence_primal(13, 3, 8, 112);
    REQUIRE(dist.counts[10] == 112);
    REQUIRE(dist.counts[11] == 210);
    REQUIRE(dist.counts[12] == 63);
    REQUIRE(dist.counts[13] == 126);
    REQUIRE(dist.total() == 512);
}

TEST_CASE("dual recurrence seeded with A3 sums to q^(n-k)") {
    const WeightDistribution dist = nmds_recurrence_dual(13, 3, 8, 112);
    REQUIRE(dist.counts[3] == 112);
    REQUIRE(dist.counts[4] == 3885);
    REQUIRE(dist.counts[5] == 41076);
    REQUIRE(dist.counts[6] == 394968);
    Count expected_total = 1;
    for (int i = 0; i < 10; ++i) expected_total *= 8;
    REQUIRE(dist.total() == expected_total);
}

TEST_CASE("recurrence with zero seed keeps only the binomial terms") {
    const WeightDistribution dist = nmds_recurrence_dual(13, 3, 8, 0);
    // s = 1: C(13,4) * (8 - 1)
    REQUIRE(dist.counts[4] == Count(715) * 7);
    for (std::size_t w = 0; w <= 13; ++w) REQUIRE(dist.counts[w] >= 0);
}

TEST_CASE("unrealizable seed raises an inconsistent-seed error") {
    // seed 0 on the primal side forces a negative count at weight 12
    REQUIRE_THROWS_AS(nmds_recurrence_primal(13, 3, 8, 0), inconsistent_seed_error);
    REQUIRE_THROWS_AS(nmds_recurrence_dual(3, 3, 8, 1), std::domain_error);
    REQUIRE_THROWS_AS(nmds_recurrence_dual(13, 3, 8, -1), std::domain_error);
}

TEST_CASE("MacWilliams transform of the m=3 distribution") {
    const LinearCode code = m3_code();
    const WeightDistribution brute = weight_distribution_bruteforce(code);
    const WeightDistribution dual = macwilliams_dual(brute, 3, 8);
    REQUIRE(dual.counts[0] == 1);
    REQUIRE(dual.counts[1] == 0);
    REQUIRE(dual.counts[2] == 0);
    REQUIRE(dual.counts[3] == 112);
    REQUIRE(dual == nmds_recurrence_dual(13, 3, 8, 112));
    REQUIRE(dual.counts[3] == dual_distance_and_weight3(code).weight3_codewords);
}

TEST_CASE("MacWilliams is an involution and handles the full space") {
    const LinearCode code = m3_code();
    const WeightDistribution brute = weight_distribution_bruteforce(code);
    const WeightDistribution twice = macwilliams_dual(macwilliams_dual(brute, 3, 8), 10, 8);
    REQUIRE(twice == brute);

    // the full space F_8^4: A_i = C(4, i) * 7^i; its dual is the zero code
    WeightDistribution full{4, std::vector<Count>(5, 0)};
    Count power = 1;
    for (std::size_t i = 0; i <= 4; ++i) {
        full.counts[i] = binomial(4, i) * power;
        power *= 7;
    }
    const WeightDistribution dual = macwilliams_dual(full, 4, 8);
    REQUIRE(dual.counts[0] == 1);
    for (std::size_t w = 1; w <= 4; ++w) REQUIRE(dual.counts[w] == 0);

    WeightDistribution bad{13, std::vector<Count>(14, 0)};
    bad.counts[0] = 3;
    REQUIRE_THROWS_AS(macwilliams_dual(bad, 3, 8), inconsistent_input_error);
}

TEST_CASE("direct subset enumeration of low dual weights") {
    const LinearCode code = m3_code();
    const std::vector<Count> direct = dual_weight_counts_direct(code, 5);
    const WeightDistribution mw = macwilliams_dual(weight_distribution_bruteforce(code), 3, 8);
    for (std::size_t w = 0; w <= 5; ++w) {
        CAPTURE(w);
        REQUIRE(direct[w] == mw.counts[w]);
    }
    REQUIRE(direct[3] == 112);
    REQUIRE(direct[4] == 3885);
}

TEST_CASE("verify_nmds at m=3 and m=5") {
    const NmdsReport r3 = verify_nmds(m3_code());
    REQUIRE(r3.min_distance == 10);
    REQUIRE(r3.dual_distance == 3);
    REQUIRE(r3.amds);
    REQUIRE(r3.dual_amds);
    REQUIRE(r3.nmds);
    REQUIRE(r3.min_distance != 11);  // q+3 would make the code MDS, contradicting the AMDS dual

    const Field f5(5);
    const NmdsReport r5 = verify_nmds(build_generator(f5, make_family(f5, OvalFamily::glynn_a)));
    REQUIRE(r5.min_distance == 34);
    REQUIRE(r5.dual_distance == 3);
    REQUIRE(r5.nmds);
}

TEST_CASE("no codeword weight falls in [1, q+1]") {
    for (int m : {3, 5}) {
        const Field f(m);
        const LinearCode code = build_generator(f, make_family(f, OvalFamily::segre));
        const WeightDistribution dist = weight_distribution_bruteforce(code);
        for (std::uint32_t w = 1; w <= f.order() + 1; ++w) REQUIRE(dist.counts[w] == 0);
    }
}

TEST_CASE("minimum-weight support pairing at m=3") {
    const PairingReport report = min_weight_support_pairing(m3_code());
    REQUIRE(report.min_weight == 10);
    REQUIRE(report.primal_min_weight_codewords == 112);
    REQUIRE(report.dual_min_weight_codewords == 112);
    REQUIRE(report.primal_support_classes == 16);
    REQUIRE(report.dual_support_classes == 16);
    REQUIRE(report.counts_match);
    REQUIRE(report.every_pairing_unique);
    REQUIRE(report.violations.empty());
}
