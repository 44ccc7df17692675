#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace permgrid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formal power series with exact rational coefficients, truncated at a fixed
/// order. Coefficients for degrees 0..order() are stored; arithmetic results
/// carry the minimum order of their operands.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(std::vector<Rational> coeffs, int order);

    static TruncatedSeries zero(int order);
    static TruncatedSeries monomial(int degree, const Rational& coeff, int order);
    /// Treats a polynomial (coefficient list, degree 0 first) as a series.
    static TruncatedSeries from_polynomial(const std::vector<Rational>& poly, int order);

    int order() const { return order_; }
    const Rational& coeff(int degree) const;
    void set_coeff(int degree, const Rational& value);

    /// Smallest degree with a nonzero coefficient, or order()+1 if all zero.
    int valuation() const;
    bool is_zero() const;

    TruncatedSeries truncated(int new_order) const;

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    /// Division; if the divisor's constant term is zero, both sides must be
    /// divisible by the same power of x, which is cancelled first. The result
    /// order shrinks by the cancelled power.
    TruncatedSeries operator/(const TruncatedSeries& rhs) const;

    TruncatedSeries operator*(const Rational& scalar) const;
    TruncatedSeries pow(int exponent) const;

    bool operator==(const TruncatedSeries& rhs) const;
    /// Coefficientwise equality through min(order, rhs.order, through_degree).
    bool equals_to_order(const TruncatedSeries& rhs, int through_degree) const;

    bool has_integer_coefficients() const;
    /// Coefficients as integers; throws std::domain_error on a non-integer.
    std::vector<BigInt> integer_coefficients() const;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;  // size order_+1
    int order_;
};

/// sqrt(1-4x): the unique series with constant term 1 whose square is 1-4x.
TruncatedSeries sqrt_one_minus_4x(int order);

/// Generating function of nonempty 312-avoiders (Catalan numbers), computed
/// both from the closed form (1-2x-sqrt(1-4x))/(2x) and from the quadratic
/// identity c = x(1+c)^2; the two routes are asserted equal.
TruncatedSeries catalan_c(int order);

/// x/(1-x): nonempty monotone permutations.
TruncatedSeries m_series(int order);

/// Exact quotient of two polynomials as a series; the denominator must have a
/// nonzero constant term.
TruncatedSeries expand_rational(const std::vector<Rational>& numerator,
                                const std::vector<Rational>& denominator, int order);

enum class GfName {
    f_closed,   // algebraic class generating function
    S,          // simple permutations
    G1_class,
    G2_class,
    G3_class,
    M1,
    M2,
    M3,
    f_sum,      // sum decomposable members, (xc+x)f
    f_skew,     // skew decomposable members, m(f+c-m)/(1+m)
};

GfName gf_name_from_string(const std::string& name);
std::string gf_name_to_string(GfName name);

/// Exact expansion of a named generating function.
TruncatedSeries named_gf(GfName name, int order);

}  // namespace permgrid
