#include "permgrid/verify.hpp"

#include "permgrid/enumerate.hpp"
#include "permgrid/gridclass.hpp"
#include "permgrid/inflation.hpp"
#include "permgrid/lang.hpp"
#include "permgrid/mvgf.hpp"
#include "permgrid/perm.hpp"
#include "permgrid/series.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace permgrid {

namespace {

using Clock = std::chrono::steady_clock;
using ordered_json = nlohmann::ordered_json;

// Expected values that are pinned rather than recomputed.
const std::vector<std::uint64_t> kClassCounts = {1,    2,    6,     22,    88,
                                                 363,  1507, 6241,  25721, 105485};
const std::vector<std::uint64_t> kSumDecomposable = {1, 3, 10, 37, 146, 595, 2456, 10167};  // n=2..9
const std::vector<std::uint64_t> kSkewDecomposable = {1, 3, 10, 35, 129, 494, 1935, 7670};  // n=2..9
const std::map<int, std::string> kTypeAPerms = {
    {5, "25314"}, {7, "2475316"}, {9, "246975318"}};

const char* kPublished = "published series expansion";
const char* kFormula = "published closed form";
const char* kBrute = "independent brute force";
const char* kCross = "cross-check of two in-repo routes";
const char* kWorked = "published worked example";

struct Runner {
    VerificationReport report;

    template <typename Fn>
    void check(int criterion, const std::string& name, const std::string& provenance, Fn&& fn) {
        CheckResult result;
        result.criterion = criterion;
        result.name = name;
        result.provenance = provenance;
        auto start = Clock::now();
        try {
            auto [expected, actual] = fn();
            result.expected = expected;
            result.actual = actual;
            result.pass = expected == actual;
        } catch (const std::exception& ex) {
            result.expected = "(no exception)";
            result.actual = std::string("exception: ") + ex.what();
            result.pass = false;
        }
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        report.checks.push_back(std::move(result));
    }
};

std::string join_counts(const std::vector<std::uint64_t>& counts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) os << ',';
        os << counts[i];
    }
    return os.str();
}

std::string join_bigints(const std::vector<BigInt>& values, int from, int to) {
    std::ostringstream os;
    for (int d = from; d <= to; ++d) {
        if (d > from) os << ',';
        os << values[d].str();
    }
    return os.str();
}

std::vector<Permutation> sorted_unique(std::vector<Permutation> perms) {
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    return perms;
}

GfName class_gf_of(GridName grid) {
    switch (grid) {
        case GridName::g1: return GfName::G1_class;
        case GridName::g2: return GfName::G2_class;
        case GridName::g3: return GfName::G3_class;
    }
    throw std::invalid_argument("unknown grid");
}

GfName simple_gf_of(GridName grid) {
    switch (grid) {
        case GridName::g1: return GfName::M1;
        case GridName::g2: return GfName::M2;
        case GridName::g3: return GfName::M3;
    }
    throw std::invalid_argument("unknown grid");
}

LangName class_lang_of(GridName grid) {
    switch (grid) {
        case GridName::g1: return LangName::L1;
        case GridName::g2: return LangName::L2;
        case GridName::g3: return LangName::L3;
    }
    throw std::invalid_argument("unknown grid");
}

LangName simple_lang_of(GridName grid) {
    switch (grid) {
        case GridName::g1: return LangName::S1;
        case GridName::g2: return LangName::S2;
        case GridName::g3: return LangName::S3;
    }
    throw std::invalid_argument("unknown grid");
}

}  // namespace

bool VerificationReport::overall() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

VerificationReport run_verification(VerifyLevel level, const VerifyOptions& options) {
    const bool full = level == VerifyLevel::full;
    const int brute_n = full ? 10 : 8;
    const int order = full ? 20 : 12;
    const int census_n = 8;
    const int simple_n = full ? 9 : 8;
    const int roundtrip_n = full ? 9 : 8;

    Runner runner;
    runner.report.level = full ? "full" : "quick";

    const std::vector<Permutation> basis = {Permutation::parse("3124"),
                                            Permutation::parse("4312")};
    ClassListing listing = enumerate_class(basis, brute_n, {.jobs = options.jobs});

    // 1. brute-force class counts.
    runner.check(1, "class counts, n=1.." + std::to_string(brute_n), kPublished, [&] {
        std::vector<std::uint64_t> expected(kClassCounts.begin(), kClassCounts.begin() + brute_n);
        return std::pair(join_counts(expected), join_counts(listing.counts()));
    });

    // 2. closed form vs bootstrap vs oracle, with a two-degree margin.
    runner.check(2, "closed form = bootstrap, degrees 1.." + std::to_string(order), kCross, [&] {
        auto closed = named_gf(GfName::f_closed, order + 2).integer_coefficients();
        auto boot = solve_class_gf(order + 2).integer_coefficients();
        return std::pair(join_bigints(closed, 1, order + 2), join_bigints(boot, 1, order + 2));
    });
    runner.check(2, "closed form = oracle counts, n=1.." + std::to_string(brute_n), kBrute, [&] {
        auto closed = named_gf(GfName::f_closed, brute_n).integer_coefficients();
        return std::pair(join_bigints(closed, 1, brute_n), join_counts(listing.counts()));
    });

    // Shared grid-class censuses.
    std::map<GridName, std::vector<std::vector<Permutation>>> census;  // [grid][n-1]
    for (GridName grid : {GridName::g1, GridName::g2, GridName::g3}) {
        auto spec = builtin_spec(grid);
        auto& sets = census[grid];
        for (int n = 1; n <= census_n; ++n)
            sets.push_back(class_by_decode(spec, n, 2'000'000, options.jobs));
    }

    // 3. simple permutations: oracle vs formula vs decoded union.
    runner.check(3, "simples(Av) = simples(G1 ∪ G2), n=4.." + std::to_string(simple_n),
                 kBrute, [&] {
                     std::string expected, actual;
                     auto s_coeffs = named_gf(GfName::S, simple_n).integer_coefficients();
                     for (int n = 4; n <= simple_n; ++n) {
                         auto oracle = simples_of(listing, n);
                         std::vector<Permutation> decoded;
                         for (GridName grid : {GridName::g1, GridName::g2}) {
                             auto spec = builtin_spec(grid);
                             auto words = enumerate_words(builtin_dfa(simple_lang_of(grid)), n);
                             for (const auto& word : words[n]) decoded.push_back(decode(spec, word));
                         }
                         decoded = sorted_unique(std::move(decoded));
                         expected += (n > 4 ? ";" : "") + std::to_string(n) + ":" +
                                     s_coeffs[n].str() + ":match";
                         actual += (n > 4 ? ";" : "") + std::to_string(n) + ":" +
                                   std::to_string(oracle.size()) + ":" +
                                   (oracle == decoded ? "match" : "differ");
                     }
                     return std::pair(expected, actual);
                 });
    runner.check(3, "simple count at n=4", kPublished, [&] {
        return std::pair(std::string("2"), std::to_string(simples_of(listing, 4).size()));
    });

    // 4. censuses against the class generating functions and languages.
    for (GridName grid : {GridName::g1, GridName::g2, GridName::g3}) {
        std::string gname = grid_name_to_string(grid);
        runner.check(4, gname + " census = rational gf = language count, n=1.." +
                            std::to_string(census_n),
                     kFormula, [&] {
                         auto gf = named_gf(class_gf_of(grid), census_n).integer_coefficients();
                         auto lang_counts =
                             count_by_length(builtin_dfa(class_lang_of(grid)), census_n);
                         std::string expected, actual;
                         for (int n = 1; n <= census_n; ++n) {
                             expected += (n > 1 ? "," : "") + gf[n].str() + ":" + gf[n].str();
                             actual += (n > 1 ? "," : "") +
                                       std::to_string(census[grid][n - 1].size()) + ":" +
                                       lang_counts[n].str();
                         }
                         return std::pair(expected, actual);
                     });
        runner.check(4, gname + " decode bijective on language words, n=1.." +
                            std::to_string(census_n),
                     kCross, [&] {
                         auto spec = builtin_spec(grid);
                         auto words = enumerate_words(builtin_dfa(class_lang_of(grid)), census_n);
                         bool ok = true;
                         for (int n = 1; n <= census_n && ok; ++n) {
                             std::vector<Permutation> decoded;
                             for (const auto& word : words[n]) decoded.push_back(decode(spec, word));
                             auto unique = sorted_unique(decoded);
                             ok = unique.size() == decoded.size() && unique == census[grid][n - 1];
                         }
                         return std::pair(std::string("bijective"),
                                          std::string(ok ? "bijective" : "not bijective"));
                     });
    }

    // 5. the third grid class is the intersection of the first two.
    for (int n = 1; n <= census_n; ++n) {
        runner.check(5, "G3 = G1 ∩ G2 at n=" + std::to_string(n), kCross, [&] {
            std::vector<Permutation> inter;
            std::set_intersection(census[GridName::g1][n - 1].begin(),
                                  census[GridName::g1][n - 1].end(),
                                  census[GridName::g2][n - 1].begin(),
                                  census[GridName::g2][n - 1].end(), std::back_inserter(inter));
            bool ok = inter == census[GridName::g3][n - 1];
            return std::pair(std::string("equal"), std::string(ok ? "equal" : "different"));
        });
    }

    // 6. simple-language words decode bijectively onto the simple
    //    permutations of their grid.
    for (GridName grid : {GridName::g1, GridName::g2, GridName::g3}) {
        std::string gname = grid_name_to_string(grid);
        runner.check(6, gname + " simple-language bijection, n=4.." + std::to_string(simple_n),
                     kCross, [&] {
                         auto spec = builtin_spec(grid);
                         auto m_coeffs =
                             named_gf(simple_gf_of(grid), simple_n).integer_coefficients();
                         auto words = enumerate_words(builtin_dfa(simple_lang_of(grid)), simple_n);
                         std::string expected, actual;
                         for (int n = 4; n <= simple_n; ++n) {
                             std::vector<Permutation> level =
                                 (n <= census_n) ? census[grid][n - 1]
                                                 : class_by_decode(spec, n, 12'000'000,
                                                                   options.jobs);
                             std::vector<Permutation> simples;
                             for (const auto& p : level)
                                 if (is_simple(p)) simples.push_back(p);
                             std::vector<Permutation> decoded;
                             for (const auto& word : words[n]) decoded.push_back(decode(spec, word));
                             auto unique = sorted_unique(decoded);
                             bool bijective =
                                 unique.size() == decoded.size() && unique == simples;
                             expected += (n > 4 ? ";" : "") + std::to_string(n) + ":" +
                                         m_coeffs[n].str() + ":bijective";
                             actual += (n > 4 ? ";" : "") + std::to_string(n) + ":" +
                                       std::to_string(decoded.size()) + ":" +
                                       (bijective ? "bijective" : "not bijective");
                         }
                         return std::pair(expected, actual);
                     });
    }

    // 7. the worked decoding example.
    runner.check(7, "decode(G1, bacddb)", kWorked, [&] {
        return std::pair(std::string("234165"),
                         decode(builtin_spec(GridName::g1), "bacddb").to_string());
    });

    // 8. type A census at odd lengths.
    runner.check(8, "type A census, lengths 4..9", kPublished, [&] {
        auto words = enumerate_words(builtin_dfa(LangName::S1), 9);
        auto spec = builtin_spec(GridName::g1);
        std::string expected, actual;
        for (int n = 4; n <= 9; ++n) {
            std::vector<std::string> type_a;
            for (const auto& word : words[n])
                if (classify(GridName::g1, word).type_a) type_a.push_back(word);
            if (n > 4) {
                expected += ";";
                actual += ";";
            }
            if (n % 2 == 0) {
                expected += "none";
                actual += type_a.empty() ? "none" : "unexpected";
            } else {
                expected += kTypeAPerms.at(n);
                if (type_a.size() == 1)
                    actual += decode(spec, type_a.front()).to_string();
                else
                    actual += "count=" + std::to_string(type_a.size());
            }
        }
        return std::pair(expected, actual);
    });

    // 9. decomposable counts.
    runner.check(9, "sum/skew decomposable series, degrees 2..9", kPublished, [&] {
        auto fsum = named_gf(GfName::f_sum, 9).integer_coefficients();
        auto fskew = named_gf(GfName::f_skew, 9).integer_coefficients();
        std::string expected = join_counts(kSumDecomposable) + "|" + join_counts(kSkewDecomposable);
        std::string actual = join_bigints(fsum, 2, 9) + "|" + join_bigints(fskew, 2, 9);
        return std::pair(expected, actual);
    });
    runner.check(9, "decomposable counts vs oracle, n=2..8", kBrute, [&] {
        std::string expected, actual;
        for (int n = 2; n <= 8; ++n) {
            auto [sum, skew] = decomposable_counts(listing, n);
            if (n > 2) {
                expected += ";";
                actual += ";";
            }
            expected += std::to_string(kSumDecomposable[n - 2]) + "+" +
                        std::to_string(kSkewDecomposable[n - 2]);
            actual += std::to_string(sum) + "+" + std::to_string(skew);
        }
        return std::pair(expected, actual);
    });

    // 10. the class equation holds for the closed form.
    runner.check(10, "equation rhs(f) = f to order " + std::to_string(order), kFormula, [&] {
        auto f = named_gf(GfName::f_closed, order + 2);
        auto rhs = equation_rhs(f, order);
        bool ok = rhs.equals_to_order(f, order);
        return std::pair(std::string("fixed point"),
                         std::string(ok ? "fixed point" : "residual nonzero"));
    });

    // 11. letter-weighted generating functions against word tallies.
    {
        struct SpotCheck {
            MvGfName gf;
            LangName lang;
            const char* label;
        };
        const SpotCheck spots[] = {
            {MvGfName::S1, LangName::S1, "S1 letter-weighted"},
            {MvGfName::S11, LangName::S1, "S1 type A letter-weighted"},
            {MvGfName::S2, LangName::S2, "S2 letter-weighted"},
            {MvGfName::S3, LangName::S3, "S3 letter-weighted"},
        };
        const int degree = 10;
        for (const auto& spot : spots) {
            runner.check(11, std::string(spot.label) + " vs word tally, degree 10", kFormula, [&] {
                auto gf = displayed_multivariate(spot.gf);
                auto words = enumerate_words(builtin_dfa(spot.lang), degree);
                int vars = static_cast<int>(gf.variables.size());
                std::vector<std::vector<int>> substitutions = {
                    std::vector<int>(vars, 1), std::vector<int>(vars, 1)};
                substitutions[0][0] = 2;                    // first letter doubled
                for (int i = 0; i < vars; ++i) substitutions[1][i] = 1 + (i % 3);
                bool ok = true;
                for (const auto& powers : substitutions) {
                    TruncatedSeries expected = gf.expand_under(powers, degree);
                    TruncatedSeries tally(degree);
                    for (std::size_t n = 1; n < words.size(); ++n) {
                        for (const auto& word : words[n]) {
                            ClassifiedWord cw = classify(
                                spot.gf == MvGfName::S2
                                    ? GridName::g2
                                    : (spot.gf == MvGfName::S3 ? GridName::g3 : GridName::g1),
                                word);
                            if (spot.gf == MvGfName::S11 && !cw.type_a) continue;
                            int weight = 0;
                            if (spot.gf == MvGfName::S11) {
                                // Refined variables a, b, c1, c2, d.
                                const RefinedClass order_of[] = {RefinedClass::a, RefinedClass::b,
                                                                 RefinedClass::c1, RefinedClass::c2,
                                                                 RefinedClass::d};
                                for (int i = 0; i < vars; ++i)
                                    weight += powers[i] * cw.count_of(order_of[i]);
                            } else {
                                for (int i = 0; i < vars; ++i)
                                    weight += powers[i] *
                                              static_cast<int>(std::count(word.begin(), word.end(),
                                                                          gf.variables[i][0]));
                            }
                            if (weight <= degree)
                                tally.set_coeff(weight, tally.coeff(weight) + 1);
                        }
                    }
                    if (!expected.equals_to_order(tally, degree)) ok = false;
                }
                return std::pair(std::string("tallies match"),
                                 std::string(ok ? "tallies match" : "tallies differ"));
            });
        }
    }

    // 12. identity suite.
    runner.check(12, "decomposition round trip, lengths 2.." + std::to_string(roundtrip_n),
                 kCross, [&] {
                     bool ok = true;
                     for (int n = 2; n <= roundtrip_n && ok; ++n) {
                         for (const auto& p : listing.level(n)) {
                             auto decomposition = substitution_decompose(p);
                             if (!is_simple(decomposition.skeleton) ||
                                 !(inflate(decomposition.skeleton, decomposition.blocks) == p)) {
                                 ok = false;
                                 break;
                             }
                         }
                     }
                     return std::pair(std::string("round trips"),
                                      std::string(ok ? "round trips" : "broken"));
                 });
    runner.check(12, "catalan identity c = x(1+c)^2, order 24", kCross, [&] {
        auto c = catalan_c(24);
        auto x = TruncatedSeries::monomial(1, 1, 24);
        auto one = TruncatedSeries::monomial(0, 1, 24);
        bool ok = (x * (one + c) * (one + c)).equals_to_order(c, 24);
        return std::pair(std::string("holds"), std::string(ok ? "holds" : "fails"));
    });
    runner.check(12, "square root invariant, order 24", kCross, [&] {
        auto root = sqrt_one_minus_4x(24);
        auto target = TruncatedSeries::from_polynomial({Rational(1), Rational(-4)}, 24);
        bool ok = (root * root).equals_to_order(target, 24);
        return std::pair(std::string("holds"), std::string(ok ? "holds" : "fails"));
    });
    runner.check(12, "S = x + 2x^2 + M1 + M2 - M3, order 24", kFormula, [&] {
        auto s = named_gf(GfName::S, 24);
        auto sum = TruncatedSeries::monomial(1, 1, 24) +
                   TruncatedSeries::monomial(2, 2, 24) + named_gf(GfName::M1, 24) +
                   named_gf(GfName::M2, 24) - named_gf(GfName::M3, 24);
        bool ok = s.equals_to_order(sum, 24);
        return std::pair(std::string("holds"), std::string(ok ? "holds" : "fails"));
    });

    return runner.report;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "verification level: " << report.level << '\n';
    for (const auto& check : report.checks) {
        os << (check.pass ? "PASS" : "FAIL") << "  [" << check.criterion << "] " << check.name
           << "  (" << check.provenance << ", "
           << static_cast<long>(check.seconds * 1000.0) << " ms)\n";
        if (!check.pass) {
            os << "      expected: " << check.expected << '\n';
            os << "      actual:   " << check.actual << '\n';
        }
    }
    os << (report.overall() ? "all checks passed" : "some checks FAILED") << '\n';
    return os.str();
}

std::string report_to_json(const VerificationReport& report) {
    ordered_json root;
    root["level"] = report.level;
    root["overall"] = report.overall() ? "pass" : "fail";
    root["checks"] = ordered_json::array();
    for (const auto& check : report.checks) {
        ordered_json entry;
        entry["criterion"] = check.criterion;
        entry["name"] = check.name;
        entry["expected"] = check.expected;
        entry["actual"] = check.actual;
        entry["provenance"] = check.provenance;
        entry["status"] = check.pass ? "pass" : "fail";
        entry["seconds"] = check.seconds;
        root["checks"].push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
    auto root = ordered_json::parse(text);
    VerificationReport report;
    report.level = root.at("level").get<std::string>();
    for (const auto& entry : root.at("checks")) {
        CheckResult check;
        check.criterion = entry.at("criterion").get<int>();
        check.name = entry.at("name").get<std::string>();
        check.expected = entry.at("expected").get<std::string>();
        check.actual = entry.at("actual").get<std::string>();
        check.provenance = entry.at("provenance").get<std::string>();
        check.pass = entry.at("status").get<std::string>() == "pass";
        check.seconds = entry.at("seconds").get<double>();
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace permgrid
