#include "permgrid/inflation.hpp"

#include "permgrid/errors.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace permgrid {

namespace {

LangName simple_language_of(GridName grid) {
    switch (grid) {
        case GridName::g1: return LangName::S1;
        case GridName::g2: return LangName::S2;
        case GridName::g3: return LangName::S3;
    }
    throw std::invalid_argument("unknown grid");
}

// Every branch product is c^i * m^j, optionally times one factor of (f-m):
// the refined letter that receives (f-m) occurs at most once per word.
struct BranchExponents {
    int c_power;
    int m_power;
    bool uses_fm;
};

std::vector<BranchExponents> word_branches(const ClassifiedWord& cw) {
    using RC = RefinedClass;
    std::vector<BranchExponents> branches;
    switch (cw.grid) {
        case GridName::g1: {
            int na = cw.count_of(RC::a), nb = cw.count_of(RC::b);
            int nc1 = cw.count_of(RC::c1), nc2 = cw.count_of(RC::c2), nd = cw.count_of(RC::d);
            if (cw.type_a) {
                if (nb < 1) throw classification_error("type A word without a b");
                if (nc2 > 0) throw classification_error("type A word with a c2");
                branches.push_back({na + 1 + nd, (nb - 1) + nc1, false});
            } else {
                if (nd < 1) throw classification_error("type B word without a d");
                branches.push_back({na + 1, nb + nc1 + nc2 + (nd - 1), false});
                if (nc2 > 0) branches.push_back({na, nb + nc1 + nd, true});
            }
            break;
        }
        case GridName::g2: {
            int base_c = cw.count_of(RC::a) + cw.count_of(RC::b) + cw.count_of(RC::c2);
            int base_m = cw.count_of(RC::c1) + cw.count_of(RC::e) + cw.count_of(RC::d1);
            int nf = cw.count_of(RC::f), nd2 = cw.count_of(RC::d2);
            if (nd2 == 0) {
                branches.push_back({base_c + nf, base_m, false});
            } else {
                branches.push_back({base_c + nf, base_m + 1, false});
                branches.push_back({base_c, base_m + nf, true});
            }
            break;
        }
        case GridName::g3: {
            int base_c = cw.count_of(RC::a) + cw.count_of(RC::b2);
            int base_m = cw.count_of(RC::b1) + cw.count_of(RC::c1);
            int nd = cw.count_of(RC::d), nc2 = cw.count_of(RC::c2);
            if (nc2 == 0) {
                branches.push_back({base_c + nd, base_m, false});
            } else {
                branches.push_back({base_c + nd, base_m + 1, false});
                branches.push_back({base_c, base_m + nd, true});
            }
            break;
        }
    }
    return branches;
}

// Exponent histogram of all simple-language words of one grid, split by
// whether the branch carries the (f-m) factor. Independent of f.
struct InflationTables {
    std::map<std::pair<int, int>, long> plain;
    std::map<std::pair<int, int>, long> with_fm;
};

// The simple languages grow like 2^n, so a couple of degrees beyond the
// default order still fits comfortably here.
constexpr std::uint64_t kInflationWordBudget = 4'000'000;

InflationTables build_tables(GridName grid, int order) {
    InflationTables tables;
    auto groups =
        enumerate_words(builtin_dfa(simple_language_of(grid)), order, kInflationWordBudget);
    for (const auto& group : groups) {
        for (const auto& word : group) {
            ClassifiedWord cw = classify(grid, word);
            if (!refinement_multiplicity_ok(cw))
                throw classification_error("refined letter multiplicity violated in " + word);
            for (const auto& br : word_branches(cw)) {
                // A branch with valuation beyond the order contributes nothing.
                int valuation = br.c_power + br.m_power + (br.uses_fm ? 2 : 0);
                if (valuation > order) continue;
                auto& table = br.uses_fm ? tables.with_fm : tables.plain;
                ++table[{br.c_power, br.m_power}];
            }
        }
    }
    return tables;
}

// Sum of count * c^i * m^j over a table.
TruncatedSeries sum_table(const std::map<std::pair<int, int>, long>& table,
                          const TruncatedSeries& c, const TruncatedSeries& m, int order) {
    int max_c = 0, max_m = 0;
    for (const auto& [key, count] : table) {
        max_c = std::max(max_c, key.first);
        max_m = std::max(max_m, key.second);
    }
    std::vector<TruncatedSeries> c_pows, m_pows;
    c_pows.reserve(max_c + 1);
    m_pows.reserve(max_m + 1);
    c_pows.push_back(TruncatedSeries::monomial(0, 1, order));
    m_pows.push_back(TruncatedSeries::monomial(0, 1, order));
    for (int i = 1; i <= max_c; ++i) c_pows.push_back(c_pows.back() * c);
    for (int j = 1; j <= max_m; ++j) m_pows.push_back(m_pows.back() * m);

    TruncatedSeries acc(order);
    for (const auto& [key, count] : table)
        acc = acc + (c_pows[key.first] * m_pows[key.second]) * Rational(count);
    return acc;
}

// The inflation series of one grid, split into its f-independent part and
// the cofactor of (f-m); at most one refined letter per word takes (f-m), so
// the dependence on f is linear.
struct InflationParts {
    TruncatedSeries plain;
    TruncatedSeries fm_cofactor;

    TruncatedSeries eval(const TruncatedSeries& f, const TruncatedSeries& m, int order) const {
        return plain + fm_cofactor * (f.truncated(order) - m);
    }
};

InflationParts sum_tables(const InflationTables& tables, const TruncatedSeries& c,
                          const TruncatedSeries& m, int order) {
    return {sum_table(tables.plain, c, m, order), sum_table(tables.with_fm, c, m, order)};
}

}  // namespace

TruncatedSeries word_contribution(const ClassifiedWord& word, const TruncatedSeries& f,
                                  int order) {
    if (f.order() < order) throw std::invalid_argument("f must carry at least the target order");
    if (word.classes.size() != word.letters.size())
        throw std::invalid_argument("word is not classified");
    if (!refinement_multiplicity_ok(word))
        throw classification_error("refined letter multiplicity violated in " + word.letters);

    TruncatedSeries c = catalan_c(order), m = m_series(order);
    TruncatedSeries fm = f.truncated(order) - m;
    TruncatedSeries total(order);
    for (const auto& br : word_branches(word)) {
        TruncatedSeries prod = TruncatedSeries::monomial(0, 1, order);
        prod = prod * c.pow(br.c_power) * m.pow(br.m_power);
        if (br.uses_fm) prod = prod * fm;
        total = total + prod;
    }
    return total;
}

TruncatedSeries compute_inflation_series(GridName grid, const TruncatedSeries& f, int order) {
    if (f.order() < order) throw std::invalid_argument("f must carry at least the target order");
    TruncatedSeries c = catalan_c(order), m = m_series(order);
    return sum_tables(build_tables(grid, order), c, m, order).eval(f, m, order);
}

TruncatedSeries monotone_inflation_floor(GridName grid, int order) {
    auto groups =
        enumerate_words(builtin_dfa(simple_language_of(grid)), order, kInflationWordBudget);
    TruncatedSeries m = m_series(order);
    std::vector<TruncatedSeries> m_pows{TruncatedSeries::monomial(0, 1, order)};
    for (int j = 1; j <= order; ++j) m_pows.push_back(m_pows.back() * m);
    TruncatedSeries acc(order);
    for (std::size_t len = 1; len < groups.size(); ++len)
        if (!groups[len].empty())
            acc = acc + m_pows[len] * Rational(static_cast<long>(groups[len].size()));
    return acc;
}

TruncatedSeries equation_rhs(const TruncatedSeries& f, int order) {
    if (f.order() < order) throw std::invalid_argument("f must carry at least the target order");
    TruncatedSeries c = catalan_c(order), m = m_series(order);
    TruncatedSeries x = TruncatedSeries::monomial(1, 1, order);
    TruncatedSeries one = TruncatedSeries::monomial(0, 1, order);
    TruncatedSeries ft = f.truncated(order);
    TruncatedSeries inflations = compute_inflation_series(GridName::g1, ft, order) +
                                 compute_inflation_series(GridName::g2, ft, order) -
                                 compute_inflation_series(GridName::g3, ft, order);
    return x + (x * c + x) * ft + m * (ft + c - m) / (one + m) + inflations;
}

TruncatedSeries solve_class_gf(int order) {
    // Every occurrence of f on the right-hand side is multiplied by a series
    // of valuation >= 1, so coefficient n of the right-hand side only needs
    // coefficients below n: build the solution degree by degree.
    TruncatedSeries c = catalan_c(order), m = m_series(order);
    TruncatedSeries x = TruncatedSeries::monomial(1, 1, order);
    TruncatedSeries one = TruncatedSeries::monomial(0, 1, order);
    InflationParts parts = sum_tables(build_tables(GridName::g1, order), c, m, order);
    {
        InflationParts g2 = sum_tables(build_tables(GridName::g2, order), c, m, order);
        InflationParts g3 = sum_tables(build_tables(GridName::g3, order), c, m, order);
        parts.plain = parts.plain + g2.plain - g3.plain;
        parts.fm_cofactor = parts.fm_cofactor + g2.fm_cofactor - g3.fm_cofactor;
    }
    TruncatedSeries skew_prefactor = m / (one + m);
    TruncatedSeries f(order);
    for (int n = 1; n <= order; ++n) {
        TruncatedSeries rhs = x + (x * c + x) * f + skew_prefactor * (f + c - m) +
                              parts.eval(f, m, order);
        f.set_coeff(n, rhs.coeff(n));
    }
    return f;
}

}  // namespace permgrid
