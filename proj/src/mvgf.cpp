#include "permgrid/mvgf.hpp"

#include <map>
#include <stdexcept>

namespace permgrid {

MvPoly MvPoly::constant(int vars, long value) {
    MvPoly p;
    p.vars = vars;
    if (value != 0) p.terms.push_back({value, std::vector<int>(vars, 0)});
    return p;
}

MvPoly MvPoly::var(int vars, int index) {
    MvPoly p;
    p.vars = vars;
    std::vector<int> powers(vars, 0);
    powers[index] = 1;
    p.terms.push_back({1, std::move(powers)});
    return p;
}

namespace {

MvPoly normalized(MvPoly p) {
    std::map<std::vector<int>, long> acc;
    for (auto& t : p.terms) acc[t.powers] += t.coeff;
    MvPoly out;
    out.vars = p.vars;
    for (auto& [powers, coeff] : acc)
        if (coeff != 0) out.terms.push_back({coeff, powers});
    return out;
}

}  // namespace

MvPoly MvPoly::operator+(const MvPoly& rhs) const {
    if (vars != rhs.vars) throw std::invalid_argument("variable count mismatch");
    MvPoly out = *this;
    out.terms.insert(out.terms.end(), rhs.terms.begin(), rhs.terms.end());
    return normalized(std::move(out));
}

MvPoly MvPoly::operator-(const MvPoly& rhs) const {
    if (vars != rhs.vars) throw std::invalid_argument("variable count mismatch");
    MvPoly out = *this;
    for (const auto& t : rhs.terms) {
        auto copy = t;
        copy.coeff = -copy.coeff;
        out.terms.push_back(std::move(copy));
    }
    return normalized(std::move(out));
}

MvPoly MvPoly::operator*(const MvPoly& rhs) const {
    if (vars != rhs.vars) throw std::invalid_argument("variable count mismatch");
    MvPoly out;
    out.vars = vars;
    for (const auto& lt : terms) {
        for (const auto& rt : rhs.terms) {
            MvPoly::Term t;
            t.coeff = lt.coeff * rt.coeff;
            t.powers.resize(vars);
            for (int i = 0; i < vars; ++i) t.powers[i] = lt.powers[i] + rt.powers[i];
            out.terms.push_back(std::move(t));
        }
    }
    return normalized(std::move(out));
}

std::vector<Rational> MvPoly::substitute_powers(const std::vector<int>& powers) const {
    if (static_cast<int>(powers.size()) != vars)
        throw std::invalid_argument("substitution power count mismatch");
    std::vector<Rational> out;
    for (const auto& t : terms) {
        int degree = 0;
        for (int i = 0; i < vars; ++i) degree += t.powers[i] * powers[i];
        if (degree >= static_cast<int>(out.size())) out.resize(degree + 1, Rational(0));
        out[degree] += t.coeff;
    }
    if (out.empty()) out.emplace_back(0);
    return out;
}

TruncatedSeries MultivariateGf::expand_under(const std::vector<int>& powers, int order) const {
    return expand_rational(numerator.substitute_powers(powers),
                           denominator.substitute_powers(powers), order);
}

namespace {

struct VarPack {
    int n;
    std::vector<std::string> names;
    MvPoly operator[](int i) const { return MvPoly::var(n, i); }
    MvPoly one() const { return MvPoly::constant(n, 1); }
};

}  // namespace

MultivariateGf displayed_multivariate(MvGfName name) {
    MultivariateGf gf;
    switch (name) {
        case MvGfName::L1: {
            VarPack v{4, {"a", "b", "c", "d"}};
            auto [a, b, c, d] = std::tuple{v[0], v[1], v[2], v[3]};
            auto one = v.one();
            gf.name = "L1";
            gf.variables = v.names;
            // Setting every variable to x recovers (1-x)(x-4x^2+5x^3) over
            // (1-x)^2(1-2x)(1-3x), the univariate census.
            gf.numerator = a * (one - a) * (one - c - d) * (one - c - d) +
                           b * c * d * (one - d);
            gf.denominator = (one - a) * (one - c - d) *
                             (one - a - b - c - d + a * c + a * d + b * d);
            break;
        }
        case MvGfName::S1: {
            VarPack v{4, {"a", "b", "c", "d"}};
            auto [a, b, c, d] = std::tuple{v[0], v[1], v[2], v[3]};
            auto one = v.one();
            gf.name = "S1";
            gf.variables = v.names;
            gf.numerator = b * c * d * (one + b) * (a + c + a * c + c * d);
            gf.denominator = one - a * b - b * c - c * d - a * b * c - b * c * d;
            break;
        }
        case MvGfName::S11: {
            VarPack v{5, {"a", "b", "c1", "c2", "d"}};
            auto [a, b, c1, d] = std::tuple{v[0], v[1], v[2], v[4]};
            auto one = v.one();
            gf.name = "S11";
            gf.variables = v.names;
            gf.numerator = a * b * b * c1 * d;
            gf.denominator = one - a * b;
            break;
        }
        case MvGfName::S2: {
            VarPack v{6, {"a", "b", "c", "d", "e", "f"}};
            auto [a, b, c, d, e, f] = std::tuple{v[0], v[1], v[2], v[3], v[4], v[5]};
            auto one = v.one();
            gf.name = "S2";
            gf.variables = v.names;
            gf.numerator = d * f * (one + c) *
                           (a * e + c * d + b * c * d - a * b * c * e - a * c * d * e -
                            a * b * c * d * e);
            gf.denominator = (one - b * c - c * d - b * c * d) * (one - a * e - e * f - a * e * f);
            break;
        }
        case MvGfName::S3: {
            VarPack v{4, {"a", "b", "c", "d"}};
            auto [a, b, c, d] = std::tuple{v[0], v[1], v[2], v[3]};
            auto one = v.one();
            gf.name = "S3";
            gf.variables = v.names;
            gf.numerator = b * c * d * (one + b) * (a + c + a * c);
            gf.denominator = one - a * b - b * c - a * b * c;
            break;
        }
    }
    return gf;
}

}  // namespace permgrid
