"""Exact enumeration of the permutation class avoiding 3124 and 4312.

Thin wrapper around the C++ core: permutations travel as strings in one-line
notation, generating-function coefficients come back as exact python ints.
"""

from . import _core

contains = _core.contains
avoids_all = _core.avoids_all
is_simple = _core.is_simple
inflate = _core.inflate
substitution_decompose = _core.substitution_decompose
simples = _core.simples
decode = _core.decode
grid_class = _core.grid_class
language_words = _core.language_words
verify = _core.verify


def enumerate_counts(basis, max_len, jobs=1):
    """Number of avoiders of each length 1..max_len."""
    return list(_core.enumerate_counts(basis, max_len, jobs))


def language_counts(name, max_n):
    """Accepted word counts by length, index 0..max_n."""
    return [int(c) for c in _core.language_counts(name, max_n)]


def gf_coefficients(name, terms):
    """Coefficients of a named generating function, degree 0..terms."""
    return [int(c) for c in _core.gf_coefficients(name, terms)]


def solve_coefficients(terms):
    """Coefficients of the bootstrapped class generating function."""
    return [int(c) for c in _core.solve_coefficients(terms)]


def inflation_coefficients(grid, terms):
    """Coefficients of the inflation series of one grid, degree 0..terms."""
    return [int(c) for c in _core.inflation_coefficients(grid, terms)]


__all__ = [
    "contains",
    "avoids_all",
    "is_simple",
    "inflate",
    "substitution_decompose",
    "enumerate_counts",
    "simples",
    "decode",
    "grid_class",
    "language_counts",
    "language_words",
    "gf_coefficients",
    "solve_coefficients",
    "inflation_coefficients",
    "verify",
]
