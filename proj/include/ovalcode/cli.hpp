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

#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ovalcode/errors.hpp"
#include "ovalcode/lrc.hpp"
#include "ovalcode/nmds.hpp"
#include "ovalcode/ovalpoly.hpp"
#include "ovalcode/serialize.hpp"

namespace ovalcode {

// Exit-code contract: 0 success, 1 mathematical check failed,
// 2 usage/parameter error, 3 resource limit.

struct RunConfig {
    int m = 0;
    std::string family;
    int shift = 0;        // --h
    std::string terms;    // --terms for custom polynomials
    std::string format;   // json | csv | text; per-command default when empty
    std::string out;      // output file; stdout when empty
    int max_m = 0;        // 0 = take OVALCODE_MAX_M or the built-in default
    std::uint64_t seed = 20260810ULL;
    bool theoretical = false;  // weights: closed form instead of enumeration

    std::string codeword_file;
    std::int64_t erased = -1;

    // bounds: explicit parameter mode
    std::int64_t bound_n = -1;
    std::int64_t bound_k = -1;
    std::int64_t bound_d = -1;
    std::int64_t bound_r = -1;
    std::int64_t bound_q = -1;
};

/// Enumeration cap: --max-m wins, then OVALCODE_MAX_M, then the default.
inline int resolve_cap(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("OVALCODE_MAX_M")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return kDefaultMaxM;
}

namespace cli_detail {

inline OvalPoly oval_from_config(const Field& field, const RunConfig& cfg) {
    if (cfg.family.empty()) throw unsupported_parameter_error("--family is required");
    const OvalFamily family = family_from_string(cfg.family);
    if (family == OvalFamily::custom) {
        if (cfg.terms.empty()) throw unsupported_parameter_error("custom family requires --terms");
        return make_custom(field, parse_terms(cfg.terms));
    }
    if (family == OvalFamily::translation && cfg.shift == 0) {
        throw unsupported_parameter_error("translation family requires --h");
    }
    return make_family(field, family, cfg.shift);
}

inline std::string resolve_format(const RunConfig& cfg, const std::string& default_format,
                                  std::initializer_list<const char*> allowed) {
    const std::string fmt = cfg.format.empty() ? default_format : cfg.format;
    for (const char* a : allowed) {
        if (fmt == a) return fmt;
    }
    throw unsupported_parameter_error("unsupported --format for this command: " + fmt);
}

template <typename WriteFn>
inline void emit(const RunConfig& cfg, std::ostream& fallback, WriteFn&& write) {
    if (cfg.out.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) throw unsupported_parameter_error("cannot open output file: " + cfg.out);
    write(file);
}

/// Codeword file format: whitespace-separated integers in [0, q) on one
/// line; an erased symbol is written as `?`.
inline ReceivedWord parse_codeword_file(const Field& field, const std::string& path) {
    std::ifstream file(path);
    if (!file) throw unsupported_parameter_error("cannot open codeword file: " + path);
    ReceivedWord word;
    std::string token;
    while (file >> token) {
        if (token == "?") {
            word.symbols.push_back(0);
            word.erased.push_back(true);
            continue;
        }
        char* end = nullptr;
        const unsigned long v = std::strtoul(token.c_str(), &end, 10);
        if (end == token.c_str() || *end != '\0' || v >= field.order()) {
            throw unsupported_parameter_error("bad symbol '" + token + "' in codeword file");
        }
        word.symbols.push_back(static_cast<Elem>(v));
        word.erased.push_back(false);
    }
    return word;
}

/// Message vector reproducing the non-erased coordinates of a word, or
/// nothing when the word is not consistent with any codeword.
inline std::optional<std::vector<Elem>> solve_message(const LinearCode& code, const ReceivedWord& word) {
    std::vector<std::size_t> available;
    for (std::size_t i = 0; i < word.symbols.size(); ++i) {
        if (!word.erased[i]) available.push_back(i);
    }
    Matrix a(available.size(), 3);
    std::vector<Elem> b(available.size());
    for (std::size_t r = 0; r < available.size(); ++r) {
        for (std::size_t c = 0; c < 3; ++c) a(r, c) = code.generator(c, available[r]);
        b[r] = word.symbols[available[r]];
    }
    try {
        return solve_unique(code.field, a, b);
    } catch (const inconsistent_system_error&) {
        return std::nullopt;
    } catch (const no_unique_solution_error&) {
        return std::nullopt;  // too few known coordinates to pin the message down
    }
}

}  // namespace cli_detail

inline int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    const std::string fmt = cli_detail::resolve_format(cfg, "json", {"json"});
    const Field field(cfg.m);
    const OvalPoly poly = cli_detail::oval_from_config(field, cfg);
    const LinearCode code = build_generator(field, poly);
    cli_detail::emit(cfg, out, [&](std::ostream& os) { os << matrix_to_json(code).dump(2) << "\n"; });
    return 0;
}

inline int cmd_check_oval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    const Field field(cfg.m);
    const OvalPoly poly = cli_detail::oval_from_config(field, cfg);

    const bool permutation = is_permutation(field, poly);
    const bool two_to_one = all_shifts_two_to_one(field, poly);
    const bool oval = check_oval_definition(field, poly);
    std::optional<bool> slope;
    if (permutation) slope = check_slope_condition(field, poly);
    std::optional<bool> affine;
    bool gf2_coeffs = true;
    for (const OvalTerm& t : poly.terms) gf2_coeffs = gf2_coeffs && t.coefficient <= 1;
    if (gf2_coeffs && cfg.m >= 3 && cfg.m % 2 == 1) affine = check_affine_nonvanishing(field, poly);

    const std::string fmt = cli_detail::resolve_format(cfg, "text", {"text", "json"});
    cli_detail::emit(cfg, out, [&](std::ostream& os) {
        if (fmt == "json") {
            json report{{"m", cfg.m},
                        {"modulus", field.modulus()},
                        {"oval", oval_to_json(poly)},
                        {"is_permutation", permutation},
                        {"all_shifts_two_to_one", two_to_one},
                        {"oval_definition", oval},
                        {"slope_condition", slope.has_value() ? json(*slope) : json(nullptr)},
                        {"affine_nonvanishing", affine.has_value() ? json(*affine) : json(nullptr)}};
            os << report.dump(2) << "\n";
            return;
        }
        os << describe(poly) << " over GF(2^" << cfg.m << ")\n";
        os << "is_permutation:          " << (permutation ? "yes" : "no") << "\n";
        os << "all_shifts_two_to_one:   " << (two_to_one ? "yes" : "no") << "\n";
        os << "oval_definition:         " << (oval ? "yes" : "no") << "\n";
        os << "slope_condition:         " << (slope ? (*slope ? "yes" : "no") : "skipped (not a permutation)")
           << "\n";
        os << "affine_nonvanishing:     "
           << (affine ? (*affine ? "yes" : "no") : "skipped (needs GF(2) coefficients and odd m >= 3)") << "\n";
    });
    return oval ? 0 : 1;
}

inline int cmd_weights(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    const std::string fmt = cli_detail::resolve_format(cfg, "csv", {"csv", "json", "text"});
    const Field field(cfg.m);
    const OvalPoly poly = cli_detail::oval_from_config(field, cfg);
    const LinearCode code = build_generator(field, poly);
    const WeightDistribution dist = cfg.theoretical
                                        ? theoretical_weight_distribution(field.order())
                                        : weight_distribution_bruteforce(code, resolve_cap(cfg.max_m));
    cli_detail::emit(cfg, out, [&](std::ostream& os) {
        if (fmt == "csv") {
            os << weights_to_csv(dist);
        } else if (fmt == "json") {
            os << weights_to_json(dist).dump(2) << "\n";
        } else {
            for (std::size_t w = 0; w <= dist.length; ++w) {
                if (dist.counts[w] != 0) os << "A_" << w << " = " << dist.counts[w].str() << "\n";
            }
        }
    });
    return 0;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    cli_detail::resolve_format(cfg, "text", {"text"});
    const Field field(cfg.m);
    const OvalPoly poly = cli_detail::oval_from_config(field, cfg);
    const LinearCode code = build_generator(field, poly);
    const int cap = resolve_cap(cfg.max_m);
    const std::uint32_t q = field.order();
    const std::size_t n = code.length();
    const Count Q = q;

    bool all_ok = true;
    std::string first_fail;
    const auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        out << (ok ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) out << ": " << detail;
        out << "\n";
        if (!ok && all_ok) {
            all_ok = false;
            first_fail = name;
        }
    };

    check("oval-definition", check_oval_definition(field, poly), describe(poly));
    bool shape_ok = n == static_cast<std::size_t>(q) + 5;
    for (std::size_t j = 0; j < kFixedColumns.size() && shape_ok; ++j) {
        for (std::size_t r = 0; r < 3; ++r) shape_ok = shape_ok && code.generator(r, q + j) == kFixedColumns[j][r];
    }
    check("generator-shape", shape_ok, "3 x " + std::to_string(n));

    const WeightDistribution brute = weight_distribution_bruteforce(code, cap);
    const WeightDistribution theory = theoretical_weight_distribution(q);
    int d = 0;
    for (std::size_t w = 1; w <= n; ++w) {
        if (brute.counts[w] != 0) {
            d = static_cast<int>(w);
            break;
        }
    }
    check("weights-brute-vs-theory", brute == theory,
          "d=" + std::to_string(d) + ", A_" + std::to_string(q + 2) + "=" + brute.counts[q + 2].str());

    bool no_gap = true;
    for (std::uint32_t w = 1; w <= q + 1; ++w) no_gap = no_gap && brute.counts[w] == 0;
    check("no-weights-below-q+2", no_gap, "");

    const DualWeightThree dual = dual_distance_and_weight3(code);
    check("dual-distance", dual.dual_distance == 3, "d_dual=" + std::to_string(dual.dual_distance));
    const Count expected_a3 = (Q - 1) * (3 * Q + 8) / 2;
    check("dual-weight3-count", dual.weight3_codewords == expected_a3,
          "A3_dual=" + dual.weight3_codewords.str() + " expected=" + expected_a3.str());

    // Per-case bucket totals from the structure of the generator matrix.
    std::map<std::pair<int, std::vector<std::size_t>>, Count> expected_buckets;
    expected_buckets[{2, {2}}] = (Q - 2) * (Q - 1) / 2;
    expected_buckets[{2, {3}}] = Q * (Q - 1) / 2;
    expected_buckets[{2, {4}}] = (Q - 2) * (Q - 1) / 2;
    expected_buckets[{1, {0, 2}}] = Q - 1;
    expected_buckets[{1, {0, 4}}] = Q - 1;
    expected_buckets[{1, {1, 2}}] = Q - 1;
    expected_buckets[{1, {1, 4}}] = Q - 1;
    expected_buckets[{0, {0, 1, 3}}] = Q - 1;
    expected_buckets[{0, {2, 3, 4}}] = Q - 1;
    std::map<std::pair<int, std::vector<std::size_t>>, Count> actual_buckets;
    for (const SupportBucket& b : classify_weight3_supports(code, dual.supports)) {
        actual_buckets[{b.in_first_q, b.fixed_offsets}] = b.codeword_count;
    }
    check("weight3-buckets", actual_buckets == expected_buckets,
          std::to_string(actual_buckets.size()) + " nonzero buckets");

    const WeightDistribution mw = macwilliams_dual(brute, 3, q);
    const WeightDistribution recurrence = nmds_recurrence_dual(n, 3, q, dual.weight3_codewords);
    check("macwilliams-vs-recurrence", mw == recurrence, "dual distribution, all weights");
    check("primal-recurrence", nmds_recurrence_primal(n, 3, q, brute.counts[q + 2]) == brute,
          "seeded with A_" + std::to_string(q + 2));

    if (cfg.m <= 5) {
        const std::vector<Count> direct = dual_weight_counts_direct(code, 5);
        bool direct_ok = true;
        for (std::size_t w = 0; w <= 5; ++w) direct_ok = direct_ok && direct[w] == mw.counts[w];
        check("direct-dual-counts", direct_ok, "A_0..A_5 of the dual by subset enumeration");
    }

    check("nmds-verdict",
          d == static_cast<int>(n) - 3 && dual.dual_distance == 3 && d != static_cast<int>(q) + 3,
          "[" + std::to_string(n) + ",3," + std::to_string(d) + "], dual distance " +
              std::to_string(dual.dual_distance));

    const PairingReport pairing = min_weight_support_pairing(code, cap);
    check("support-pairing", pairing.every_pairing_unique && pairing.counts_match,
          pairing.primal_min_weight_codewords.str() + " minimum-weight codewords on each side");

    const LocalityReport locality = locality_analysis(code, cap);
    check("locality-primal", locality.primal_locality == 2 && locality.dual_supports_cover,
          "r=" + std::to_string(locality.primal_locality));
    check("locality-dual",
          locality.dual_locality.has_value() && *locality.dual_locality == static_cast<int>(q) + 1 &&
              locality.support_intersection.empty(),
          locality.dual_locality ? "r=" + std::to_string(*locality.dual_locality) : "indeterminate");

    const auto [primal_opt, dual_opt] = optimality_report(code, cap);
    check("optimal-primal", primal_opt.distance_optimal && primal_opt.dimension_optimal,
          "singleton_like=" + std::to_string(primal_opt.singleton_like_rhs) +
              ", cm=" + std::to_string(primal_opt.cm_rhs));
    check("optimal-dual", dual_opt.distance_optimal && dual_opt.dimension_optimal,
          "singleton_like=" + std::to_string(dual_opt.singleton_like_rhs) +
              ", cm=" + std::to_string(dual_opt.cm_rhs));

    // Sampled repair soundness, seeded for reproducibility.
    std::mt19937_64 rng(cfg.seed);
    const auto random_elem = [&]() { return static_cast<Elem>(rng() % q); };
    const std::vector<RepairPlan> plans = all_repair_plans(code);
    bool repair_ok = true;
    for (int trial = 0; trial < 50 && repair_ok; ++trial) {
        const std::vector<Elem> msg = {random_elem(), random_elem(), random_elem()};
        const std::vector<Elem> word = encode(code, msg);
        for (std::size_t i = 0; i < n && repair_ok; ++i) {
            ReceivedWord received{word, std::vector<bool>(n, false)};
            received.erased[i] = true;
            received.symbols[i] = 0;
            repair_ok = repair(field, plans[i], received) == word[i];
        }
    }
    const std::vector<std::vector<Elem>> dual_basis = kernel_basis(field, code.generator);
    const std::vector<RepairPlan> dual_plans = all_dual_repair_plans(code, cap);
    for (int trial = 0; trial < 20 && repair_ok; ++trial) {
        std::vector<Elem> dual_word(n, 0);
        for (const auto& basis_vec : dual_basis) {
            const Elem c = random_elem();
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                dual_word[j] = field.add(dual_word[j], field.mul(c, basis_vec[j]));
            }
        }
        for (std::size_t i = 0; i < n && repair_ok; ++i) {
            ReceivedWord received{dual_word, std::vector<bool>(n, false)};
            received.erased[i] = true;
            received.symbols[i] = 0;
            repair_ok = repair(field, dual_plans[i], received) == dual_word[i];
        }
    }
    check("repair-sample", repair_ok, "seed=" + std::to_string(cfg.seed));

    if (!all_ok) {
        err << "first failing check: " << first_fail << "\n";
        return 1;
    }
    out << "all checks passed\n";
    return 0;
}

inline int cmd_locality(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    const std::string fmt = cli_detail::resolve_format(cfg, "text", {"text", "json"});
    const Field field(cfg.m);
    const OvalPoly poly = cli_detail::oval_from_config(field, cfg);
    const LinearCode code = build_generator(field, poly);
    const LocalityReport report = locality_analysis(code, resolve_cap(cfg.max_m));
    cli_detail::emit(cfg, out, [&](std::ostream& os) {
        if (fmt == "json") {
            os << locality_to_json(report).dump(2) << "\n";
            return;
        }
        os << "primal locality:     " << report.primal_locality << "\n";
        os << "supports cover [n]:  " << (report.dual_supports_cover ? "yes" : "no") << "\n";
        os << "dual locality:       "
           << (report.dual_locality ? std::to_string(*report.dual_locality) : "indeterminate") << "\n";
        os << "support intersection " << (report.support_intersection.empty() ? "empty" : "nonempty") << "\n";
        os << "d(code) = " << report.primal_distance << ", d(dual) = " << report.dual_distance << "\n";
    });
    return 0;
}

inline int cmd_repair(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string fmt = cli_detail::resolve_format(cfg, "text", {"text", "json"});
    const Field field(cfg.m);
    const OvalPoly poly = cli_detail::oval_from_config(field, cfg);
    const LinearCode code = build_generator(field, poly);
    const std::size_t n = code.length();

    ReceivedWord word = cli_detail::parse_codeword_file(field, cfg.codeword_file);
    if (word.symbols.size() != n) {
        throw unsupported_parameter_error("codeword has length " + std::to_string(word.symbols.size()) +
                                          ", expected " + std::to_string(n));
    }
    if (cfg.erased < -1) throw std::domain_error("--erased index out of range");
    if (cfg.erased >= 0) {
        if (cfg.erased >= static_cast<std::int64_t>(n)) {
            throw std::domain_error("--erased index out of range");
        }
        word.erased[static_cast<std::size_t>(cfg.erased)] = true;
        word.symbols[static_cast<std::size_t>(cfg.erased)] = 0;
    }

    std::vector<std::size_t> erasures;
    for (std::size_t i = 0; i < n; ++i) {
        if (word.erased[i]) erasures.push_back(i);
    }
    if (erasures.empty()) throw unsupported_parameter_error("nothing to repair: no erasure given");
    std::size_t target;
    if (cfg.erased >= 0) {
        target = static_cast<std::size_t>(cfg.erased);
    } else if (erasures.size() == 1) {
        target = erasures[0];
    } else {
        throw unsupported_parameter_error("multiple erasures present; pick one with --erased");
    }

    const RepairPlan plan = repair_plan(code, target);
    const Elem value = repair(field, plan, word);  // insufficient data -> exit 1 via dispatcher
    word.symbols[target] = value;
    word.erased[target] = false;

    const auto message = cli_detail::solve_message(code, word);
    const bool is_codeword = message.has_value();

    cli_detail::emit(cfg, out, [&](std::ostream& os) {
        if (fmt == "json") {
            json report{{"m", cfg.m},
                        {"modulus", field.modulus()},
                        {"plan", repair_plan_to_json(plan)},
                        {"value", value},
                        {"codeword_ok", is_codeword}};
            os << report.dump(2) << "\n";
            return;
        }
        os << "repair set for " << target << ":";
        for (std::size_t idx : plan.repair_set) os << " " << idx;
        os << "\ncoefficients:";
        for (Elem c : plan.coefficients) os << " " << c;
        os << "\nrepaired value: " << value << "\n";
        os << "codeword check: " << (is_codeword ? "ok" : "FAILED") << "\n";
    });
    if (!is_codeword) {
        err << "write-back could not be verified as a codeword\n";
        return 1;
    }
    return 0;
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    const std::string fmt = cli_detail::resolve_format(cfg, "text", {"text", "json"});

    if (cfg.bound_n >= 0 || cfg.bound_k >= 0 || cfg.bound_d >= 0 || cfg.bound_r >= 0) {
        if (cfg.bound_n < 0 || cfg.bound_k < 0 || cfg.bound_d < 0 || cfg.bound_r < 0) {
            throw unsupported_parameter_error("explicit bounds mode needs all of --n --k --d --r");
        }
        const auto n = static_cast<std::size_t>(cfg.bound_n);
        const auto k = static_cast<std::size_t>(cfg.bound_k);
        const auto d = static_cast<std::size_t>(cfg.bound_d);
        const auto r = static_cast<std::size_t>(cfg.bound_r);
        const auto q = cfg.bound_q > 0 ? static_cast<std::uint32_t>(cfg.bound_q) : 2U;
        const int slb = singleton_like_bound(n, k, r);
        const int cm = cm_bound_dimension(n, d, r, q);
        cli_detail::emit(cfg, out, [&](std::ostream& os) {
            if (fmt == "json") {
                json report{{"n", n},
                            {"k", k},
                            {"d", d},
                            {"r", r},
                            {"q", q},
                            {"singleton_like_rhs", slb},
                            {"cm_rhs", cm},
                            {"distance_optimal", static_cast<int>(d) == slb},
                            {"dimension_optimal", static_cast<int>(k) == cm}};
                os << report.dump(2) << "\n";
                return;
            }
            os << "singleton_like_rhs = " << slb << (static_cast<int>(d) == slb ? " (met)" : "") << "\n";
            os << "cm_rhs = " << cm << (static_cast<int>(k) == cm ? " (met)" : "") << "\n";
        });
        return 0;
    }

    const Field field(cfg.m);
    const OvalPoly poly = cli_detail::oval_from_config(field, cfg);
    const LinearCode code = build_generator(field, poly);
    const auto [primal, dual] = optimality_report(code, resolve_cap(cfg.max_m));
    cli_detail::emit(cfg, out, [&](std::ostream& os) {
        if (fmt == "json") {
            json report{{"primal", optimality_to_json(primal)}, {"dual", optimality_to_json(dual)}};
            os << report.dump(2) << "\n";
            return;
        }
        for (const auto* rep : {&primal, &dual}) {
            os << (rep == &primal ? "code" : "dual") << " (" << rep->n << "," << rep->k << "," << rep->d
               << "," << rep->q << ";" << rep->locality << "): singleton_like=" << rep->singleton_like_rhs
               << (rep->distance_optimal ? " met" : " not met") << ", cm=" << rep->cm_rhs
               << (rep->dimension_optimal ? " met" : " not met") << "\n";
        }
    });
    return 0;
}

inline int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    const std::string fmt = cli_detail::resolve_format(cfg, "json", {"json"});
    (void)fmt;
    const Field field(cfg.m);
    const OvalPoly poly = cli_detail::oval_from_config(field, cfg);
    const LinearCode code = build_generator(field, poly);
    const int cap = resolve_cap(cfg.max_m);

    const WeightDistribution brute = weight_distribution_bruteforce(code, cap);
    const DualWeightThree dual = dual_distance_and_weight3(code);
    const LocalityReport locality = locality_analysis(code, cap);
    const auto [primal_opt, dual_opt] = optimality_report(code, cap);

    json bundle;
    bundle["matrix"] = matrix_to_json(code);
    bundle["nmds"] = nmds_report_to_json(verify_nmds(code, cap));
    bundle["weights"] = {{"bruteforce", weights_to_json(brute)},
                         {"theoretical", weights_to_json(theoretical_weight_distribution(field.order()))}};
    bundle["dual_weight3"] = supports_to_json(dual);
    bundle["weight3_buckets"] = buckets_to_json(classify_weight3_supports(code, dual.supports));
    bundle["locality"] = locality_to_json(locality);
    bundle["optimality"] = {{"primal", optimality_to_json(primal_opt)}, {"dual", optimality_to_json(dual_opt)}};
    json plans = json::array();
    for (const RepairPlan& plan : all_repair_plans(code)) plans.push_back(repair_plan_to_json(plan));
    bundle["repair_plans"] = plans;
    json dual_plans = json::array();
    for (const RepairPlan& plan : all_dual_repair_plans(code, cap)) {
        dual_plans.push_back(repair_plan_to_json(plan));
    }
    bundle["dual_repair_plans"] = dual_plans;

    cli_detail::emit(cfg, out, [&](std::ostream& os) { os << bundle.dump(2) << "\n"; });
    return 0;
}

/// Parse and dispatch. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"near-MDS codes from oval polynomials over GF(2^m)"};
    app.name("ovalcode");
    app.set_help_flag("--help", "print help");  // -h is taken by the translation shift
    RunConfig cfg;

    const auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--m", cfg.m, "extension degree of GF(2^m)")->required();
        sub->add_option("--family", cfg.family,
                        "oval family: translation|segre|glynn-a|glynn-b34|glynn-b14|cherowitzo|payne|custom");
        sub->add_option("--h", cfg.shift, "shift parameter of the translation family");
        sub->add_option("--terms", cfg.terms, "custom terms, exponent:coefficient pairs: 4:1,2:1");
        sub->add_option("--format", cfg.format, "output format: json|csv|text");
        sub->add_option("--out", cfg.out, "write output to a file instead of stdout");
        sub->add_option("--max-m", cfg.max_m, "enumeration cap override (env: OVALCODE_MAX_M)");
        sub->add_option("--seed", cfg.seed, "seed for randomized checks");
    };

    CLI::App* construct = app.add_subcommand("construct", "build and export the generator matrix");
    add_common(construct);
    CLI::App* check_oval = app.add_subcommand("check-oval", "run the oval-polynomial criteria");
    add_common(check_oval);
    CLI::App* weights = app.add_subcommand("weights", "weight distribution of the code");
    add_common(weights);
    weights->add_flag("--theoretical", cfg.theoretical, "emit the closed-form distribution");
    CLI::App* verify = app.add_subcommand("verify", "verify structure, counts, locality, and optimality");
    add_common(verify);
    CLI::App* locality = app.add_subcommand("locality", "locality of the code and its dual");
    add_common(locality);
    CLI::App* repair = app.add_subcommand("repair", "repair one erased coordinate of a codeword");
    add_common(repair);
    repair->add_option("--codeword", cfg.codeword_file, "codeword file (symbols or ? separated by spaces)")
        ->required();
    repair->add_option("--erased", cfg.erased, "coordinate to repair");
    CLI::App* bounds = app.add_subcommand("bounds", "Singleton-like and Cadambe-Mazumdar bounds");
    bounds->set_help_flag("--help", "print help");
    bounds->add_option("--m", cfg.m, "extension degree of GF(2^m)");
    bounds->add_option("--family", cfg.family, "oval family");
    bounds->add_option("--h", cfg.shift, "translation shift");
    bounds->add_option("--terms", cfg.terms, "custom terms");
    bounds->add_option("--format", cfg.format, "output format: json|text");
    bounds->add_option("--out", cfg.out, "output file");
    bounds->add_option("--max-m", cfg.max_m, "enumeration cap override");
    bounds->add_option("--n", cfg.bound_n, "explicit code length");
    bounds->add_option("--k", cfg.bound_k, "explicit dimension");
    bounds->add_option("--d", cfg.bound_d, "explicit minimum distance");
    bounds->add_option("--r", cfg.bound_r, "explicit locality");
    bounds->add_option("--q", cfg.bound_q, "explicit field size");
    CLI::App* do_export = app.add_subcommand("export", "export matrix, counts, reports, and repair plans");
    add_common(do_export);

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("ovalcode");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(cfg, out, err);
        if (check_oval->parsed()) return cmd_check_oval(cfg, out, err);
        if (weights->parsed()) return cmd_weights(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (locality->parsed()) return cmd_locality(cfg, out, err);
        if (repair->parsed()) return cmd_repair(cfg, out, err);
        if (bounds->parsed()) return cmd_bounds(cfg, out, err);
        if (do_export->parsed()) return cmd_export(cfg, out, err);
        err << "error: no command given\n";
        return 2;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ovalcode
