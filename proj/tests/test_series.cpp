#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permgrid/series.hpp"

#include <random>

using namespace permgrid;

namespace {

TruncatedSeries random_poly(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    TruncatedSeries p(order);
    for (int d = 0; d <= order; ++d) p.set_coeff(d, coeff(rng));
    return p;
}

std::vector<long> ints(const TruncatedSeries& s, int from, int to) {
    std::vector<long> out;
    for (int d = from; d <= to; ++d)
        out.push_back(static_cast<long>(numerator(s.coeff(d))));
    return out;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    auto m = m_series(10);
    CHECK(ints(m, 0, 4) == std::vector<long>{0, 1, 1, 1, 1});

    // x/(1-x) by division reproduces m.
    auto x = TruncatedSeries::monomial(1, 1, 10);
    auto one_minus_x = TruncatedSeries::from_polynomial({Rational(1), Rational(-1)}, 10);
    CHECK((x / one_minus_x).equals_to_order(m, 9));

    CHECK((m * m).coeff(2) == 1);

    // m/(1+m) = x.
    auto one = TruncatedSeries::monomial(0, 1, 10);
    auto quotient = m / (one + m);
    CHECK(quotient.coeff(1) == 1);
    for (int d = 2; d <= 10; ++d) CHECK(quotient.coeff(d) == 0);
}

TEST_CASE("series ops take the minimum order") {
    TruncatedSeries a(10), b(6);
    CHECK((a + b).order() == 6);
    CHECK((a * b).order() == 6);
}

TEST_CASE("division round-trips multiplication on random polynomials") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_poly(rng, 12);
        auto q = random_poly(rng, 12);
        if (q.is_zero()) continue;
        // Make q invertible-after-cancellation by construction.
        auto product = p * q;
        if (q.coeff(0) == 0 && p.valuation() + q.valuation() > 12) continue;
        auto back = product / q;
        CHECK(back.equals_to_order(p, 12 - q.valuation()));
    }
}

TEST_CASE("division diagnostics") {
    TruncatedSeries x = TruncatedSeries::monomial(1, 1, 8);
    TruncatedSeries one = TruncatedSeries::monomial(0, 1, 8);
    CHECK_THROWS_AS(one / x, std::domain_error);           // not divisible by x
    CHECK_THROWS_AS(one / TruncatedSeries(8), std::domain_error);  // zero divisor
}

TEST_CASE("square root of 1-4x") {
    auto root = sqrt_one_minus_4x(12);
    CHECK(ints(root, 0, 4) == std::vector<long>{1, -2, -2, -4, -10});
    auto square = root * root;
    CHECK(square.coeff(0) == 1);
    CHECK(square.coeff(1) == -4);
    for (int d = 2; d <= 12; ++d) CHECK(square.coeff(d) == 0);
}

TEST_CASE("catalan series") {
    auto c = catalan_c(12);
    CHECK(c.coeff(0) == 0);
    CHECK(ints(c, 1, 5) == std::vector<long>{1, 2, 5, 14, 42});
    auto x = TruncatedSeries::monomial(1, 1, 12);
    auto one = TruncatedSeries::monomial(0, 1, 12);
    CHECK((x * (one + c) * (one + c)).equals_to_order(c, 12));
}

TEST_CASE("rational expansions") {
    // G1 census gf.
    auto g1 = named_gf(GfName::G1_class, 8);
    CHECK(ints(g1, 1, 5) == std::vector<long>{1, 2, 6, 20, 66});

    auto m1 = named_gf(GfName::M1, 8);
    CHECK(ints(m1, 0, 7) == std::vector<long>{0, 0, 0, 0, 2, 4, 8, 16});

    auto m = expand_rational({Rational(0), Rational(1)}, {Rational(1), Rational(-1)}, 8);
    CHECK(m.equals_to_order(m_series(8), 8));

    CHECK_THROWS_AS(expand_rational({Rational(1)}, {Rational(0), Rational(1)}, 4),
                    std::domain_error);
}

TEST_CASE("named generating functions match the published expansions") {
    auto f = named_gf(GfName::f_closed, 12);
    CHECK(ints(f, 1, 10) ==
          std::vector<long>{1, 2, 6, 22, 88, 363, 1507, 6241, 25721, 105485});

    auto fsum = named_gf(GfName::f_sum, 10);
    CHECK(ints(fsum, 2, 9) == std::vector<long>{1, 3, 10, 37, 146, 595, 2456, 10167});

    auto fskew = named_gf(GfName::f_skew, 10);
    CHECK(ints(fskew, 2, 9) == std::vector<long>{1, 3, 10, 35, 129, 494, 1935, 7670});

    auto s = named_gf(GfName::S, 9);
    CHECK(ints(s, 1, 9) == std::vector<long>{1, 2, 0, 2, 4, 10, 21, 44, 89});
}

TEST_CASE("simple gf identity S = x + 2x^2 + M1 + M2 - M3") {
    int n = 20;
    auto s = named_gf(GfName::S, n);
    auto sum = TruncatedSeries::monomial(1, 1, n) + TruncatedSeries::monomial(2, 2, n) +
               named_gf(GfName::M1, n) + named_gf(GfName::M2, n) - named_gf(GfName::M3, n);
    CHECK(s.equals_to_order(sum, n));
}

TEST_CASE("skew gf satisfies its defining equation") {
    int n = 16;
    auto fskew = named_gf(GfName::f_skew, n);
    auto f = named_gf(GfName::f_closed, n);
    auto c = catalan_c(n);
    auto m = m_series(n);
    auto one = TruncatedSeries::monomial(0, 1, n);
    CHECK((fskew * (one + m)).equals_to_order(m * (f + c - m), n));
}

TEST_CASE("closed form has nonnegative integer coefficients to order 30") {
    auto f = named_gf(GfName::f_closed, 30);
    REQUIRE(f.has_integer_coefficients());
    for (const auto& coeff : f.integer_coefficients()) CHECK(coeff >= 0);
}

TEST_CASE("gf names parse") {
    CHECK(gf_name_from_string("f") == GfName::f_closed);
    CHECK(gf_name_from_string("M1") == GfName::M1);
    CHECK_THROWS_AS(gf_name_from_string("bogus"), std::invalid_argument);
}
