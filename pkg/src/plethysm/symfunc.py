"""Exact symmetric functions in the power-sum basis, plethysm and Schur coefficients.

Two independent routes to plethysm coefficients live here:

* the *slow* route expands ``s_mu[s_la]`` completely in power sums
  (:class:`PowerSum`, :func:`plethysm_compose`) and pairs with characters;
* the *fast* route for ``s_mu[h_k]`` writes
  ``s_mu[h_k] = sum_rho chi_mu(rho)/z_rho * prod_j p_{rho_j}[h_k]`` and reads off
  ``<prod_j p_{rho_j}[h_k], s_pi>`` as a signed sum of monomial coefficients
  of ``a_delta * prod_j h_k(x^{rho_j})`` in ``len(pi)`` variables.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import prod
from typing import Iterable, Literal, Mapping, Optional, Union

import numpy as np

from .characters import character_value
from .errors import ConsistencyError, InvalidInputError
from .partitions import (
    Partition,
    as_partition,
    centralizer_order,
    conjugate,
    cycle_type_sign,
    partitions_of,
)

Rational = Union[int, Fraction]
SchurExpansion = dict[Partition, int]


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


class PowerSum:
    """Homogeneous symmetric function ``sum_rho c_rho p_rho`` with rational coefficients.

    Zero coefficients are never stored. ``degree`` is the common size of the
    keys; the zero element still carries a degree so sums stay homogeneous.
    """

    __slots__ = ("terms", "degree")

    def __init__(self, terms: Mapping[Partition, Rational] = (), degree: Optional[int] = None):
        clean = {as_partition(rho): Fraction(c) for rho, c in dict(terms).items()}
        clean = {rho: c for rho, c in clean.items() if c}
        sizes = {sum(rho) for rho in clean}
        if len(sizes) > 1:
            raise InvalidInputError(f"inhomogeneous power-sum element, degrees {sorted(sizes)}")
        if sizes:
            (size,) = sizes
            if degree is not None and degree != size:
                raise InvalidInputError(f"declared degree {degree} but terms have degree {size}")
            degree = size
        self.terms = clean
        self.degree = 0 if degree is None else degree

    @classmethod
    def p(cls, rho: Iterable[int]) -> "PowerSum":
        rho = tuple(sorted((int(r) for r in rho if r), reverse=True))
        return cls({rho: 1})

    @classmethod
    def constant(cls, c: Rational) -> "PowerSum":
        return cls({(): c}, degree=0)

    def __repr__(self) -> str:
        if not self.terms:
            return f"PowerSum(0, degree={self.degree})"
        body = " + ".join(f"{c}*p{list(rho)}" for rho, c in sorted(self.terms.items(), reverse=True))
        return f"PowerSum({body})"

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerSum):
            return self.terms == other.terms and (self.degree == other.degree or not self.terms)
        if isinstance(other, (int, Fraction)):
            return self == PowerSum.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerce(self, other) -> "PowerSum":
        if isinstance(other, PowerSum):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSum.constant(other)
        raise TypeError(f"cannot combine PowerSum with {type(other).__name__}")

    def __add__(self, other) -> "PowerSum":
        other = self._coerce(other)
        if self.terms and other.terms and self.degree != other.degree:
            raise InvalidInputError("cannot add elements of different degree")
        terms = dict(self.terms)
        for rho, c in other.terms.items():
            terms[rho] = terms.get(rho, 0) + c
        return PowerSum(terms, degree=self.degree if self.terms else other.degree)

    __radd__ = __add__

    def __neg__(self) -> "PowerSum":
        return PowerSum({rho: -c for rho, c in self.terms.items()}, degree=self.degree)

    def __sub__(self, other) -> "PowerSum":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PowerSum":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PowerSum":
        if isinstance(other, (int, Fraction)):
            return PowerSum({rho: c * other for rho, c in self.terms.items()}, degree=self.degree)
        other = self._coerce(other)
        terms: dict[Partition, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = _merge(a, b)
                terms[key] = terms.get(key, 0) + ca * cb
        return PowerSum(terms, degree=self.degree + other.degree)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PowerSum":
        out = PowerSum.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def omega(self) -> "PowerSum":
        return omega(self)

    def plethysm(self, inner: "PowerSum") -> "PowerSum":
        return plethysm_compose(self, inner)


@lru_cache(maxsize=None)
def _h(n: int) -> PowerSum:
    return PowerSum({rho: Fraction(1, centralizer_order(rho)) for rho in partitions_of(n)}, degree=n)


@lru_cache(maxsize=None)
def _e(n: int) -> PowerSum:
    return PowerSum(
        {rho: Fraction(cycle_type_sign(rho), centralizer_order(rho)) for rho in partitions_of(n)},
        degree=n,
    )


@lru_cache(maxsize=None)
def _s(la: Partition) -> PowerSum:
    n = sum(la)
    return PowerSum(
        {rho: Fraction(character_value(la, rho), centralizer_order(rho)) for rho in partitions_of(n)},
        degree=n,
    )


def base_to_power(kind: Literal["h", "e", "s"], index: Union[int, Iterable[int]]) -> PowerSum:
    """Expand ``h``, ``e`` or ``s`` indexed by an integer or a partition in power sums.

    For ``h`` and ``e`` a partition index means the product ``h_la = prod h_{la_i}``;
    for ``s`` an integer ``n`` means ``s_(n) = h_n``.
    """
    if kind not in ("h", "e", "s"):
        raise InvalidInputError(f"unknown basis {kind!r}")
    if isinstance(index, int):
        if index < 0:
            raise InvalidInputError("negative degree")
        if kind == "s":
            return _s((index,) if index else ())
        return _h(index) if kind == "h" else _e(index)
    la = as_partition(index)
    if kind == "s":
        return _s(la)
    single = _h if kind == "h" else _e
    out = PowerSum.constant(1)
    for part in la:
        out = out * single(part)
    return out


def omega(f: PowerSum) -> PowerSum:
    """The involution sending ``p_r`` to ``(-1)^(r-1) p_r``."""
    return PowerSum({rho: cycle_type_sign(rho) * c for rho, c in f.terms.items()}, degree=f.degree)


def _scale_keys(g: PowerSum, r: int) -> PowerSum:
    return PowerSum({tuple(r * x for x in rho): c for rho, c in g.terms.items()}, degree=r * g.degree)


def plethysm_compose(f: PowerSum, g: PowerSum) -> PowerSum:
    """``f[g]``, determined by ``p_r[g] = g`` with every key part multiplied by ``r``."""
    if g.degree < 1:
        raise InvalidInputError("inner plethysm argument must have degree >= 1")
    scaled: dict[int, PowerSum] = {}
    products: dict[Partition, PowerSum] = {(): PowerSum.constant(1)}

    def prod_for(rho: Partition) -> PowerSum:
        # rho is decreasing, so rho[1:] is memoized independently of rho[0]
        if rho not in products:
            r = rho[0]
            if r not in scaled:
                scaled[r] = _scale_keys(g, r)
            products[rho] = scaled[r] * prod_for(rho[1:])
        return products[rho]

    out = PowerSum(degree=f.degree * g.degree)
    for rho, c in f.terms.items():
        out = out + prod_for(rho) * c
    return out


def _integral(value: Fraction, context: str) -> int:
    if value.denominator != 1:
        raise ConsistencyError(f"non-integral coefficient {value} for {context}")
    return int(value)


def schur_expand(
    f: PowerSum,
    targets: Optional[Iterable[Iterable[int]]] = None,
    max_length: Optional[int] = None,
) -> SchurExpansion:
    """Schur coefficients of ``f``: ``<f, s_la> = sum_rho c_rho chi_la(rho)``.

    ``targets`` restricts to the listed partitions, ``max_length`` to partitions
    with at most that many parts. Zero coefficients are dropped unless the
    target was requested explicitly.
    """
    if targets is None:
        shapes = partitions_of(f.degree, max_length)
        keep_zero = False
    else:
        shapes = [as_partition(t) for t in targets]
        keep_zero = True
    out: SchurExpansion = {}
    for la in shapes:
        if sum(la) != f.degree:
            raise InvalidInputError(f"target {la} has the wrong size for degree {f.degree}")
        total = sum((c * character_value(la, rho) for rho, c in f.terms.items()), Fraction(0))
        value = _integral(total, f"s{list(la)}")
        if value or keep_zero:
            out[la] = value
    return out


@lru_cache(maxsize=256)
def _schur_plethysm(mu: Partition, la: Partition) -> PowerSum:
    return plethysm_compose(base_to_power("s", mu), base_to_power("s", la))


def plethysm_coefficient(mu: Iterable[int], la: Iterable[int], pi: Iterable[int]) -> int:
    """``a^pi_{mu,la}``: coefficient of ``s_pi`` in ``s_mu[s_la]`` by full expansion."""
    mu, la, pi = as_partition(mu), as_partition(la), as_partition(pi)
    if sum(pi) != sum(mu) * sum(la):
        raise InvalidInputError(f"|pi| = {sum(pi)} but |mu|*|la| = {sum(mu) * sum(la)}")
    if not la:
        # s_mu[1] = s_mu(1, 0, 0, ...)
        return 1 if len(mu) <= 1 else 0
    value = schur_expand(_schur_plethysm(mu, la), targets=[pi])[pi]
    if value < 0:
        raise ConsistencyError(f"negative plethysm coefficient {value} for {mu}[{la}] at {pi}")
    return value


# -- fast path ---------------------------------------------------------------

_INT64_SAFE = 2**62


def _perm_sign(w: tuple[int, ...]) -> int:
    inv = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=4096)
def _h_pairing(rho: Partition, k: int, pi: Partition) -> int:
    """``<prod_j p_{rho_j}[h_k], s_pi>`` via the alternant ``a_delta``.

    Works in ``n = len(pi)`` variables. The monomial coefficients of
    ``prod_j h_k(x^{rho_j})`` are tabulated in a box indexed by the exponents
    of ``x_2..x_n`` (the exponent of ``x_1`` is fixed by degree), truncated
    at ``pi + delta``, which dominates every exponent the alternant reads.
    """
    n = len(pi)
    if n == 0:
        return 1
    delta = tuple(range(n - 1, -1, -1))
    top = tuple(pi[i] + delta[i] for i in range(n))
    dims = tuple(t + 1 for t in top[1:])

    kernels = []
    bound = 1
    for r in rho:
        shifts = []
        ranges = [range(0, min(k, top[i] // r) + 1) for i in range(1, n)]
        for beta in product(*ranges):
            if sum(beta) <= k:
                shifts.append(tuple(r * b for b in beta))
        kernels.append(shifts)
        bound *= max(1, len(shifts))
    dtype = np.int64 if bound < _INT64_SAFE else object

    table = np.zeros(dims, dtype=dtype)
    table[(0,) * (n - 1)] = 1
    for shifts in kernels:
        new = np.zeros(dims, dtype=dtype)
        for s in shifts:
            dst = tuple(slice(si, None) for si in s)
            src = tuple(slice(0, dims[i] - s[i]) for i in range(n - 1))
            new[dst] += table[src]
        table = new

    total = 0
    for w in permutations(range(n)):
        target = tuple(pi[i] + delta[i] - delta[w[i]] for i in range(1, n))
        if min(target, default=0) < 0:
            continue
        total += _perm_sign(w) * int(table[target])
    return total


def power_pairing(
    rho: Iterable[int], k: int, pi: Iterable[int], inner: Literal["h", "e"] = "h"
) -> int:
    """``<prod_j p_{rho_j}[g], s_pi>`` for ``g = h_k`` or ``e_k``.

    This is the trace of a permutation of cycle type ``rho`` on the
    highest-weight space of weight ``pi`` in ``(S^k V)^{(x)p}`` (or the
    exterior analogue). The ``e`` case uses ``omega(p_r[e_k]) = (-1)^((r+1)k) p_r[h_k]``.
    """
    rho = tuple(sorted((int(r) for r in rho if r), reverse=True))
    pi = as_partition(pi)
    if sum(pi) != sum(rho) * k:
        raise InvalidInputError(f"|pi| = {sum(pi)} but |rho|*k = {sum(rho) * k}")
    if inner == "h":
        if len(pi) > sum(rho) and k > 0:
            return 0
        return _h_pairing(rho, k, pi)
    if inner == "e":
        sign = prod(-1 if ((r + 1) * k) % 2 else 1 for r in rho)
        pit = conjugate(pi)
        if len(pit) > sum(rho) and k > 0:
            return 0
        return sign * _h_pairing(rho, k, pit)
    raise InvalidInputError(f"inner must be 'h' or 'e', got {inner!r}")


def plethysm_coefficient_fast(
    mu: Iterable[int], k: int, pi: Iterable[int], inner: Literal["h", "e"] = "h"
) -> int:
    """Coefficient of ``s_pi`` in ``s_mu[h_k]`` (or ``s_mu[e_k]`` with ``inner="e"``)."""
    mu, pi = as_partition(mu), as_partition(pi)
    p = sum(mu)
    if k < 0:
        raise InvalidInputError("k must be nonnegative")
    if sum(pi) != p * k:
        raise InvalidInputError(f"|pi| = {sum(pi)} but |mu|*k = {p * k}")
    total = Fraction(0)
    for rho in partitions_of(p):
        chi = character_value(mu, rho)
        if chi:
            total += Fraction(chi, centralizer_order(rho)) * power_pairing(rho, k, pi, inner)
    value = _integral(total, f"s{list(mu)}[{inner}_{k}] at {pi}")
    if value < 0:
        raise ConsistencyError(f"negative plethysm coefficient {value}")
    return value


def tensor_multiplicity(la: Iterable[int], p: int, k: int) -> int:
    """``c^la_{p,k}``: coefficient of ``s_la`` in ``h_k^p``."""
    la = as_partition(la)
    if p < 0 or k < 0 or sum(la) != p * k:
        raise InvalidInputError(f"|la| = {sum(la)} but p*k = {p * k}")
    return power_pairing((1,) * p, k, la)


def reduce_by_strip(
    la: Iterable[int], mu: Iterable[int], k: int
) -> tuple[Partition, int, Partition]:
    """Strip the full-width bottom rectangle from ``la`` (when ``len(la) == |mu|``).

    Returns ``(la', k', mu')`` with ``a^la_{mu,(k)} = a^la'_{mu',(k')}`` and
    ``c^la_{p,k} = c^la'_{p,k'}``; ``mu`` is transposed when the removed
    height ``la_p`` is odd. Any other input is returned unchanged.
    """
    la, mu = as_partition(la), as_partition(mu)
    p = sum(mu)
    if p == 0 or len(la) != p:
        return la, k, mu
    strip = la[-1]
    reduced = as_partition(x - strip for x in la[:-1])
    return reduced, k - strip, (conjugate(mu) if strip % 2 else mu)
