#pragma once

#include "permgrid/lang.hpp"
#include "permgrid/series.hpp"

namespace permgrid {

/// Generating function for the inflations of the single classified word that
/// stay inside the class. Sums the applicable case branches, each the product
/// over letters of that branch's substitution series:
///
///   grid 1, type A        : a->c, first b->c, other b->m, c1->m, d->c
///   grid 1, type B        : a->c, b->m, c1->m, c2->m, first d->c, other d->m
///   grid 1, type B with c2: a->c, b->m, c1->m, c2->(f-m), d->m
///   grid 2, no d2         : a,b,c2->c, c1,e->m, d1->m, f->c
///   grid 2, d2 present    : previous plus d2->m, f->c
///   grid 2, d2 present    : a,b,c2->c, c1,e->m, d1->m, d2->(f-m), f->m
///   grid 3, no c2         : a,b2->c, b1->m, c1->m, d->c
///   grid 3, c2 present    : previous plus c2->m, d->c
///   grid 3, c2 present    : a,b2->c, b1->m, c1->m, c2->(f-m), d->m
///
/// where c counts nonempty 312-avoiders, m nonempty monotone permutations and
/// f is the class generating function in play.
TruncatedSeries word_contribution(const ClassifiedWord& word, const TruncatedSeries& f, int order);

/// Sum of word_contribution over every simple-language word of the grid with
/// length <= order.
TruncatedSeries compute_inflation_series(GridName grid, const TruncatedSeries& f, int order);

/// Variant of compute_inflation_series with every substituted series replaced
/// by m and each word counted once: the census of purely monotone inflations,
/// a coefficientwise lower bound for the real series.
TruncatedSeries monotone_inflation_floor(GridName grid, int order);

/// Right-hand side of the class equation
///   f = x + (xc+x) f + m (f+c-m)/(1+m) + (I1 + I2 - I3).
TruncatedSeries equation_rhs(const TruncatedSeries& f, int order);

/// Solves the class equation for f by building coefficients in increasing
/// degree; the result is a fixed point of equation_rhs to the given order.
TruncatedSeries solve_class_gf(int order);

}  // namespace permgrid
