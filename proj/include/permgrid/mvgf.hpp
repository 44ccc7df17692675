#pragma once

#include "permgrid/series.hpp"

#include <string>
#include <vector>

namespace permgrid {

/// Sparse multivariate polynomial over a small fixed variable list; just
/// enough algebra to transcribe the displayed letter-weighted generating
/// functions and evaluate them under power substitutions.
struct MvPoly {
    int vars = 0;
    struct Term {
        long coeff;
        std::vector<int> powers;  // size == vars
    };
    std::vector<Term> terms;

    static MvPoly constant(int vars, long value);
    static MvPoly var(int vars, int index);

    MvPoly operator+(const MvPoly& rhs) const;
    MvPoly operator-(const MvPoly& rhs) const;
    MvPoly operator*(const MvPoly& rhs) const;

    /// Substitutes variable i -> x^powers[i] and returns the resulting
    /// univariate polynomial coefficients (degree 0 first).
    std::vector<Rational> substitute_powers(const std::vector<int>& powers) const;
};

/// A letter-weighted generating function as displayed: a rational function in
/// one variable per (possibly refined) letter.
struct MultivariateGf {
    std::string name;
    std::vector<std::string> variables;  // e.g. {"a","b","c1","c2","d"}
    MvPoly numerator;
    MvPoly denominator;

    /// Series expansion after substituting variable i -> x^powers[i].
    TruncatedSeries expand_under(const std::vector<int>& powers, int order) const;
};

enum class MvGfName { L1, S1, S11, S2, S3 };

/// The displayed letter-weighted generating functions. S11 counts only the
/// type-A words of the first grid, in refined variables.
MultivariateGf displayed_multivariate(MvGfName name);

}  // namespace permgrid
