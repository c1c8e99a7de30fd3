"""Slow, independent reference computations used to cross-check the package.

Everything here works with explicit polynomials in finitely many variables
(via sympy) or with brute-force enumeration, and imports nothing from
``plethysm``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from math import factorial

import sympy


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions(n, max_length=None):
    return [la for la in _partitions(n) if max_length is None or len(la) <= max_length]


@lru_cache(maxsize=None)
def syt_count(shape):
    """Standard tableaux of ``shape``, by removing the box holding the largest entry."""
    shape = tuple(x for x in shape if x)
    if not shape:
        return 1
    total = 0
    for i in range(len(shape)):
        if i + 1 == len(shape) or shape[i + 1] < shape[i]:
            total += syt_count(shape[:i] + (shape[i] - 1,) + shape[i + 1:])
    return total


def cycle_type(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        n, i = 0, s
        while i not in seen:
            seen.add(i)
            i = perm[i]
            n += 1
        out.append(n)
    return tuple(sorted(out, reverse=True))


def class_sizes(n):
    return Counter(cycle_type(s) for s in itertools.permutations(range(n)))


def _vars(n):
    return sympy.symbols(f"x1:{n + 1}")


def _alternant_coefficients(f, xs):
    """Schur coefficients of a symmetric polynomial ``f`` in the variables ``xs``."""
    n = len(xs)
    vandermonde = sympy.Mul(*[xs[i] - xs[j] for i in range(n) for j in range(i + 1, n)])
    poly = sympy.Poly(sympy.expand(f * vandermonde), *xs)
    out = {}
    for exps, c in poly.terms():
        lam = tuple(e - (n - 1 - i) for i, e in enumerate(exps))
        if all(lam[i] >= lam[i + 1] for i in range(n - 1)) and lam[-1] >= 0:
            key = tuple(x for x in lam if x)
            out[key] = int(c)
    return {k: v for k, v in out.items() if v}


def frobenius_character(la, rho):
    """chi_la(rho) as the coefficient of x^{la+delta} in a_delta * p_rho."""
    n = max(len(la), 1)
    xs = _vars(n)
    p = sympy.Mul(*[sum(x**r for x in xs) for r in rho])
    return _alternant_coefficients(p, xs).get(tuple(la), 0)


def _complete(m, ys):
    if m < 0:
        return sympy.Integer(0)
    return sum((sympy.Mul(*c) for c in itertools.combinations_with_replacement(ys, m)), sympy.Integer(0))


def _elementary(m, ys):
    if m < 0:
        return sympy.Integer(0)
    return sum((sympy.Mul(*c) for c in itertools.combinations(ys, m)), sympy.Integer(0))


def schur_in(mu, ys):
    """s_mu(ys) by the Jacobi-Trudi determinant."""
    n = len(mu)
    if n == 0:
        return sympy.Integer(1)
    matrix = sympy.Matrix(n, n, lambda i, j: _complete(mu[i] - i + j, ys))
    return sympy.expand(matrix.det())


def plethysm_schur(outer_kind, outer, k, nvars):
    """Schur expansion of ``outer[h_k]`` in ``nvars`` variables, by substituting monomials.

    ``outer_kind`` is ``"s"`` (outer = partition), ``"h"`` or ``"e"`` (outer = degree).
    Only partitions with at most ``nvars`` parts are seen.
    """
    xs = _vars(nvars)
    ys = [sympy.Mul(*c) for c in itertools.combinations_with_replacement(xs, k)]
    if outer_kind == "h":
        f = _complete(outer, ys)
    elif outer_kind == "e":
        f = _elementary(outer, ys)
    else:
        f = schur_in(outer, ys)
    return _alternant_coefficients(sympy.expand(f), xs)


def schur_monomial_coefficient(la, alpha):
    """Kostka number K_{la, alpha}: coefficient of x^alpha in s_la(x_1..x_len(alpha))."""
    xs = _vars(len(alpha))
    n = len(xs)
    la = tuple(la) + (0,) * (n - len(la))
    num = sympy.Matrix(n, n, lambda i, j: xs[j] ** (la[i] + n - 1 - i)).det()
    den = sympy.Mul(*[xs[i] - xs[j] for i in range(n) for j in range(i + 1, n)])
    s = sympy.Poly(sympy.cancel(num / den), *xs)
    return int(s.coeff_monomial(sympy.Mul(*[x**a for x, a in zip(xs, alpha)])))


def brute_centralizer(rho):
    n = sum(rho)
    return factorial(n) // class_sizes(n)[tuple(rho)]
