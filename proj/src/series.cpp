#include "permgrid/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace permgrid {

namespace {

const Rational kZero = Rational(0);

std::vector<Rational> poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (long c : coeffs) out.emplace_back(c);
    return out;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Rational> poly_mul(std::initializer_list<std::vector<Rational>> factors) {
    std::vector<Rational> out = poly({1});
    for (const auto& f : factors) out = poly_mul(out, f);
    return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : coeffs_(order + 1, Rational(0)), order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs)), order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.resize(order + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::zero(int order) { return TruncatedSeries(order); }

TruncatedSeries TruncatedSeries::monomial(int degree, const Rational& coeff, int order) {
    TruncatedSeries s(order);
    if (degree <= order) s.coeffs_[degree] = coeff;
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const std::vector<Rational>& poly, int order) {
    TruncatedSeries s(order);
    for (std::size_t d = 0; d < poly.size() && d <= static_cast<std::size_t>(order); ++d)
        s.coeffs_[d] = poly[d];
    return s;
}

const Rational& TruncatedSeries::coeff(int degree) const {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (degree > order_) return kZero;
    return coeffs_[degree];
}

void TruncatedSeries::set_coeff(int degree, const Rational& value) {
    if (degree < 0 || degree > order_) throw std::invalid_argument("degree out of range");
    coeffs_[degree] = value;
}

int TruncatedSeries::valuation() const {
    for (int d = 0; d <= order_; ++d)
        if (coeffs_[d] != 0) return d;
    return order_ + 1;
}

bool TruncatedSeries::is_zero() const { return valuation() > order_; }

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    TruncatedSeries s(new_order);
    for (int d = 0; d <= std::min(new_order, order_); ++d) s.coeffs_[d] = coeffs_[d];
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    int n = std::min(order_, rhs.order_);
    TruncatedSeries s(n);
    for (int d = 0; d <= n; ++d) s.coeffs_[d] = coeffs_[d] + rhs.coeffs_[d];
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    int n = std::min(order_, rhs.order_);
    TruncatedSeries s(n);
    for (int d = 0; d <= n; ++d) s.coeffs_[d] = coeffs_[d] - rhs.coeffs_[d];
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    int n = std::min(order_, rhs.order_);
    TruncatedSeries s(n);
    int lv = valuation(), rv = rhs.valuation();
    for (int i = lv; i <= n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = rv; i + j <= n; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            s.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& rhs) const {
    int n = std::min(order_, rhs.order_);
    int shift = rhs.valuation();
    if (shift > rhs.order_) throw std::domain_error("division by zero series");
    if (shift > 0 && valuation() < shift)
        throw std::domain_error("series division: numerator not divisible by x^" +
                                std::to_string(shift));
    int m = n - shift;
    if (m < 0) throw std::domain_error("series division: no coefficients survive cancellation");
    // Cancel the common power of x, then run ordinary long division.
    std::vector<Rational> a(m + 1), b(m + 1);
    for (int d = 0; d <= m; ++d) {
        a[d] = (d + shift <= order_) ? coeffs_[d + shift] : Rational(0);
        b[d] = (d + shift <= rhs.order_) ? rhs.coeffs_[d + shift] : Rational(0);
    }
    TruncatedSeries q(m);
    for (int d = 0; d <= m; ++d) {
        Rational acc = a[d];
        for (int j = 1; j <= d; ++j) acc -= b[j] * q.coeffs_[d - j];
        q.coeffs_[d] = acc / b[0];
    }
    return q;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& scalar) const {
    TruncatedSeries s(order_);
    for (int d = 0; d <= order_; ++d) s.coeffs_[d] = coeffs_[d] * scalar;
    return s;
}

TruncatedSeries TruncatedSeries::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative series exponent");
    TruncatedSeries acc = monomial(0, 1, order_);
    for (int i = 0; i < exponent; ++i) acc = acc * *this;
    return acc;
}

bool TruncatedSeries::operator==(const TruncatedSeries& rhs) const {
    return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
}

bool TruncatedSeries::equals_to_order(const TruncatedSeries& rhs, int through_degree) const {
    int n = std::min({order_, rhs.order_, through_degree});
    for (int d = 0; d <= n; ++d)
        if (coeffs_[d] != rhs.coeffs_[d]) return false;
    return true;
}

bool TruncatedSeries::has_integer_coefficients() const {
    for (const auto& c : coeffs_)
        if (denominator(c) != 1) return false;
    return true;
}

std::vector<BigInt> TruncatedSeries::integer_coefficients() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (denominator(c) != 1) throw std::domain_error("series has a non-integer coefficient");
        out.push_back(numerator(c));
    }
    return out;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    for (int d = 0; d <= order_; ++d) {
        if (d) os << ' ';
        os << coeffs_[d].str();
    }
    return os.str();
}

TruncatedSeries sqrt_one_minus_4x(int order) {
    // Newton step on s^2 = 1-4x, expanded degree by degree:
    // coefficient n satisfies 2*s0*sn = -[n==1]*4 - sum_{j=1..n-1} sj*s(n-j).
    TruncatedSeries s(order);
    s.set_coeff(0, 1);
    for (int n = 1; n <= order; ++n) {
        Rational acc = (n == 1) ? Rational(-4) : Rational(0);
        for (int j = 1; j < n; ++j) acc -= s.coeff(j) * s.coeff(n - j);
        s.set_coeff(n, acc / 2);
    }
    return s;
}

TruncatedSeries catalan_c(int order) {
    // Closed-form route.
    TruncatedSeries root = sqrt_one_minus_4x(order + 1);
    TruncatedSeries numer = TruncatedSeries::from_polynomial(poly({1, -2}), order + 1) - root;
    TruncatedSeries closed = numer / TruncatedSeries::from_polynomial(poly({0, 2}), order + 1);
    // Quadratic-identity route: c = x(1+c)^2, solved degree by degree.
    TruncatedSeries boot(order);
    for (int n = 1; n <= order; ++n) {
        // [x^n] x(1+c)^2 = [x^(n-1)] (1 + 2c + c^2) uses only coefficients < n.
        Rational acc = (n == 1) ? Rational(1) : 2 * boot.coeff(n - 1);
        for (int j = 1; j <= n - 2; ++j) acc += boot.coeff(j) * boot.coeff(n - 1 - j);
        boot.set_coeff(n, acc);
    }
    if (!(closed == boot)) throw std::logic_error("catalan series routes disagree");
    return closed;
}

TruncatedSeries m_series(int order) {
    TruncatedSeries s(order);
    for (int d = 1; d <= order; ++d) s.set_coeff(d, 1);
    return s;
}

TruncatedSeries expand_rational(const std::vector<Rational>& numerator,
                                const std::vector<Rational>& denominator, int order) {
    if (denominator.empty() || denominator[0] == 0)
        throw std::domain_error("rational expansion needs a unit denominator constant term");
    return TruncatedSeries::from_polynomial(numerator, order) /
           TruncatedSeries::from_polynomial(denominator, order);
}

GfName gf_name_from_string(const std::string& name) {
    static const std::map<std::string, GfName> table = {
        {"f", GfName::f_closed},       {"f_closed", GfName::f_closed},
        {"s", GfName::S},              {"g1", GfName::G1_class},
        {"g1_class", GfName::G1_class},{"g2", GfName::G2_class},
        {"g2_class", GfName::G2_class},{"g3", GfName::G3_class},
        {"g3_class", GfName::G3_class},{"m1", GfName::M1},
        {"m2", GfName::M2},            {"m3", GfName::M3},
        {"f_sum", GfName::f_sum},      {"f_skew", GfName::f_skew},
    };
    std::string key;
    for (char ch : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    auto it = table.find(key);
    if (it == table.end()) throw std::invalid_argument("unknown generating function: " + name);
    return it->second;
}

std::string gf_name_to_string(GfName name) {
    switch (name) {
        case GfName::f_closed: return "f_closed";
        case GfName::S: return "S";
        case GfName::G1_class: return "G1_class";
        case GfName::G2_class: return "G2_class";
        case GfName::G3_class: return "G3_class";
        case GfName::M1: return "M1";
        case GfName::M2: return "M2";
        case GfName::M3: return "M3";
        case GfName::f_sum: return "f_sum";
        case GfName::f_skew: return "f_skew";
    }
    throw std::invalid_argument("unknown generating function");
}

namespace {

// The one table of transcribed numerators/denominators. Coefficient lists are
// degree-0 first; denominators are kept factored where the source is.
TruncatedSeries closed_class_gf(int order) {
    // ((8x^5-16x^4+28x^3-26x^2+9x-1) + sqrt(1-4x)(2x^4-8x^3+14x^2-7x+1))
    //   / (2x^2 (1-6x+9x^2-4x^3))
    const auto rational_part = poly({-1, 9, -26, 28, -16, 8});
    const auto root_factor = poly({1, -7, 14, -8, 2});
    TruncatedSeries numer =
        TruncatedSeries::from_polynomial(rational_part, order + 2) +
        sqrt_one_minus_4x(order + 2) * TruncatedSeries::from_polynomial(root_factor, order + 2);
    // The numerator must vanish to order 2 so the x^2 below cancels exactly;
    // anything else means a transcription bug.
    if (numer.coeff(0) != 0 || numer.coeff(1) != 0)
        throw std::logic_error("class gf numerator does not vanish to order 2");
    const auto denom = poly_mul({poly({0, 0, 2}), poly({1, -6, 9, -4})});
    return numer / TruncatedSeries::from_polynomial(denom, order + 2);
}

}  // namespace

TruncatedSeries named_gf(GfName name, int order) {
    switch (name) {
        case GfName::f_closed:
            return closed_class_gf(order);
        case GfName::S:
            return expand_rational(poly({0, 1, -2, -5, 12, 1, -8, -3}),
                                   poly_mul({poly({1, -2}), poly({1, -1, -1}), poly({1, -1, -1})}),
                                   order);
        case GfName::G1_class:
            return expand_rational(poly({0, 1, -4, 5}),
                                   poly_mul({poly({1, -1}), poly({1, -2}), poly({1, -3})}), order);
        case GfName::G2_class:
            return expand_rational(poly({0, 1, -7, 19, -22, 9, -1}),
                                   poly_mul({poly({1, -1}), poly({1, -2}), poly({1, -3, 1}),
                                             poly({1, -3, 1})}),
                                   order);
        case GfName::G3_class:
            return expand_rational(poly({0, 1, -5, 10, -8, 0, 1}),
                                   poly_mul({poly({1, -1}), poly({1, -1}), poly({1, -2}),
                                             poly({1, -3, 1})}),
                                   order);
        case GfName::M1:
            return expand_rational(poly({0, 0, 0, 0, 2}), poly({1, -2}), order);
        case GfName::M2:
            return expand_rational(poly_mul({poly({0, 0, 0, 0, 1}), poly({1, -1}), poly({2, 1})}),
                                   poly_mul({poly({1, -1, -1}), poly({1, -1, -1})}), order);
        case GfName::M3:
            return expand_rational(poly({0, 0, 0, 0, 2, 1}), poly({1, -1, -1}), order);
        case GfName::f_sum: {
            TruncatedSeries f = closed_class_gf(order);
            TruncatedSeries c = catalan_c(order);
            TruncatedSeries x = TruncatedSeries::monomial(1, 1, order);
            return (x * c + x) * f;
        }
        case GfName::f_skew: {
            TruncatedSeries f = closed_class_gf(order);
            TruncatedSeries c = catalan_c(order);
            TruncatedSeries m = m_series(order);
            TruncatedSeries one = TruncatedSeries::monomial(0, 1, order);
            return m * (f + c - m) / (one + m);
        }
    }
    throw std::invalid_argument("unknown generating function");
}

}  // namespace permgrid
