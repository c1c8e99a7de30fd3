"""Highest weight vectors ``h_T`` in ``(S^k V)^{⊗p}`` and the ``S_p`` action on their span.

Vectors are sparse maps from keys to ``Fraction``; a key is a ``p``-tuple of
exponent vectors of length ``n``, one monomial per tensor factor. Permutations
are tuples of 0-based images, ``sigma[i] = sigma(i)``, and act on the right:
factor ``i`` of ``v·sigma`` is factor ``sigma(i)`` of ``v``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Iterator, Literal, Optional, Sequence

from .characters import character_value
from .errors import ConsistencyError, InvalidInputError, ResourceLimitError
from .partitions import Partition, as_partition, centralizer_order, conjugate, partitions_of
from .pieri import SSYT, chain_count, enumerate_ssyt

FilledTableau = SSYT
Key = tuple[tuple[int, ...], ...]
Permutation = tuple[int, ...]

DEFAULT_TERM_BUDGET = 10**7


@dataclass
class TensorVector:
    """Sparse element of ``(Sym V)^{⊗p}`` with ``dim V = n``; zero coefficients are never stored."""

    n: int
    p: int
    terms: dict

    def __post_init__(self):
        self.terms = {key: Fraction(c) for key, c in self.terms.items() if c}
        for key in self.terms:
            if len(key) != self.p or any(len(f) != self.n for f in key):
                raise InvalidInputError(f"key {key} does not fit n={self.n}, p={self.p}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return (self.n, self.p, self.terms) == (other.n, other.p, other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "TensorVector") -> "TensorVector":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return TensorVector(self.n, self.p, out)

    def __neg__(self) -> "TensorVector":
        return TensorVector(self.n, self.p, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def __rmul__(self, scalar) -> "TensorVector":
        return TensorVector(self.n, self.p, {key: scalar * c for key, c in self.terms.items()})

    def weights(self) -> set[tuple[int, ...]]:
        """Total exponent of each variable, over all keys; one element iff weight-homogeneous."""
        return {tuple(sum(col) for col in zip(*key)) for key in self.terms}

    def dump(self) -> str:
        """One ``±num/den : (a,b | c,d | ...)`` line per term, sorted by key."""
        lines = []
        for key in sorted(self.terms):
            c = self.terms[key]
            sign = "-" if c < 0 else "+"
            factors = " | ".join(",".join(map(str, f)) for f in key)
            lines.append(f"{sign}{abs(c.numerator)}/{c.denominator} : ({factors})")
        return "\n".join(lines)

    @classmethod
    def parse(cls, text: str) -> "TensorVector":
        terms, shape = {}, None
        for line in text.splitlines():
            if not line.strip():
                continue
            coeff, _, key_text = line.partition(":")
            key = tuple(tuple(int(x) for x in f.split(","))
                        for f in key_text.strip().strip("()").split("|"))
            shape = shape or (len(key[0]), len(key))
            terms[key] = Fraction(coeff.strip())
        if shape is None:
            raise InvalidInputError("cannot infer n and p from an empty dump")
        return cls(shape[0], shape[1], terms)


def reading_word(T: SSYT) -> tuple[int, ...]:
    """Entries read right to left within each row, rows taken bottom to top."""
    return tuple(x for row in reversed(T.rows) for x in reversed(row))


def permutation_sign(perm: Sequence[int]) -> int:
    seen, sign = set(), 1
    for start in range(len(perm)):
        length = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = perm[i]
            length += 1
        if length and length % 2 == 0:
            sign = -sign
    return sign


def _check_tableau(T: SSYT, n: Optional[int]) -> tuple[int, int]:
    if not T.is_semistandard():
        raise InvalidInputError(f"{T} is not semistandard")
    n = len(T.shape) if n is None else n
    if n < len(T.shape):
        raise InvalidInputError(f"need at least {len(T.shape)} variables, got {n}")
    return n, max(T.reading_key(), default=0)


def term_count(shape: Partition) -> int:
    """Number of signed terms in the defining sum of ``h_T`` (before cancellation)."""
    return prod(factorial(c) for c in conjugate(shape))


def build_hwv(T: SSYT, n: Optional[int] = None, p: Optional[int] = None,
              budget: int = DEFAULT_TERM_BUDGET) -> TensorVector:
    """The highest weight vector ``h_T``.

    Column ``b`` contributes a permutation ``sigma_b`` of its cells; the cell in
    row ``a`` with entry ``i`` puts ``x_{sigma_b(a)}`` into factor ``i``.
    Terms are accumulated column by column. ``p`` defaults to the largest entry.
    """
    n, top = _check_tableau(T, n)
    p = top if p is None else p
    if top > p:
        raise InvalidInputError(f"entries go up to {top} but p={p}")
    if term_count(T.shape) > budget:
        raise ResourceLimitError(f"h_T has {term_count(T.shape)} terms, budget is {budget}")
    width = p * n
    acc: dict[tuple[int, ...], int] = {(0,) * width: 1}
    cols = conjugate(T.shape)
    for b, height in enumerate(cols):
        entries = [T.rows[a][b] - 1 for a in range(height)]
        column_terms: dict[tuple[int, ...], int] = {}
        for perm in itertools.permutations(range(height)):
            delta = [0] * width
            for a, i in enumerate(entries):
                delta[i * n + perm[a]] += 1
            delta_t = tuple(delta)
            column_terms[delta_t] = column_terms.get(delta_t, 0) + permutation_sign(perm)
        nxt: dict[tuple[int, ...], int] = {}
        for key, c in acc.items():
            for delta, s in column_terms.items():
                if not s:
                    continue
                new = tuple(x + y for x, y in zip(key, delta))
                nxt[new] = nxt.get(new, 0) + c * s
        acc = {key: c for key, c in nxt.items() if c}
    terms = {tuple(key[i * n:(i + 1) * n] for i in range(p)): c for key, c in acc.items()}
    return TensorVector(n, p, terms)


def act_permutation(v: TensorVector, sigma: Sequence[int]) -> TensorVector:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(v.p)):
        raise InvalidInputError(f"{sigma} is not a permutation of 0..{v.p - 1}")
    return TensorVector(v.n, v.p, {tuple(key[sigma[i]] for i in range(v.p)): c
                                   for key, c in v.terms.items()})


def apply_raising(v: TensorVector, i: int) -> TensorVector:
    """``E_{i,i+1}``: the derivation ``x_i d/dx_{i+1}`` applied in each factor (``i`` 1-based)."""
    if not 1 <= i < v.n:
        raise InvalidInputError(f"raising index must be in 1..{v.n - 1}")
    lo, hi = i - 1, i
    out: dict = {}
    for key, c in v.terms.items():
        for f, mono in enumerate(key):
            e = mono[hi]
            if not e:
                continue
            new_mono = list(mono)
            new_mono[lo] += 1
            new_mono[hi] -= 1
            new_key = key[:f] + (tuple(new_mono),) + key[f + 1:]
            out[new_key] = out.get(new_key, 0) + c * e
    return TensorVector(v.n, v.p, out)


def canonical_key(T: SSYT, n: Optional[int] = None, p: Optional[int] = None) -> Key:
    """Factor ``i`` is the product of ``x_a`` over the cells of ``T`` in row ``a`` holding ``i``."""
    n = len(T.shape) if n is None else n
    p = max(T.reading_key(), default=0) if p is None else p
    return tuple(tuple(T.rows[a].count(i) if a < len(T.rows) else 0 for a in range(n))
                 for i in range(1, p + 1))


def leading_coefficient(T: SSYT, v: TensorVector) -> Fraction:
    return v.terms.get(canonical_key(T, v.n, v.p), Fraction(0))


# -- the space spanned by the h_T ------------------------------------------------


class _Echelon:
    """Incrementally reduced sparse basis that remembers how rows combine the inputs."""

    def __init__(self):
        self.rows: list[tuple[Key, dict, dict]] = []  # (pivot, row, combination of inputs)

    def reduce(self, vec: dict) -> tuple[dict, dict]:
        vec = dict(vec)
        combo: dict = {}
        for pivot, row, row_combo in self.rows:
            c = vec.get(pivot)
            if not c:
                continue
            for key, x in row.items():
                new = vec.get(key, 0) - c * x
                if new:
                    vec[key] = new
                else:
                    vec.pop(key, None)
            for j, x in row_combo.items():
                combo[j] = combo.get(j, 0) + c * x
        return vec, combo

    def add(self, vec: dict, index: int, preferred: Optional[Key] = None) -> bool:
        rest, combo = self.reduce(vec)
        if not rest:
            return False
        pivot = preferred if preferred in rest else min(rest)
        inv = 1 / Fraction(rest[pivot])
        row = {key: x * inv for key, x in rest.items()}
        row_combo = {j: -x * inv for j, x in combo.items()}
        row_combo[index] = row_combo.get(index, 0) + inv
        for idx, (piv, other, other_combo) in enumerate(self.rows):
            c = other.get(pivot)
            if not c:
                continue
            for key, x in row.items():
                new = other.get(key, 0) - c * x
                if new:
                    other[key] = new
                else:
                    other.pop(key, None)
            for j, x in row_combo.items():
                other_combo[j] = other_combo.get(j, 0) - c * x
        self.rows.append((pivot, row, row_combo))
        return True


@dataclass
class HwvSpace:
    shape: Partition
    p: int
    k: int
    n: int
    basis: list[tuple[SSYT, TensorVector]]

    def __post_init__(self):
        self._echelon = _Echelon()
        for j, (T, v) in enumerate(self.basis):
            if not self._echelon.add(v.terms, j, canonical_key(T, self.n, self.p)):
                raise ConsistencyError(f"h_T for T={T} is in the span of the previous ones")

    def __len__(self) -> int:
        return len(self.basis)

    def coordinates(self, v: TensorVector) -> list[Fraction]:
        """Exact coordinates of ``v`` in the ``h_T`` basis; raises if ``v`` is outside the span."""
        rest, combo = self._echelon.reduce(v.terms)
        if rest:
            raise ConsistencyError("vector is not in the span of the basis")
        return [Fraction(combo.get(j, 0)) for j in range(len(self.basis))]

    def action_matrix(self, sigma: Sequence[int]) -> list[list[Fraction]]:
        """Column ``j`` holds the coordinates of ``h_{T_j}·sigma``."""
        return [self.coordinates(act_permutation(v, sigma)) for _, v in self.basis]

    def trace(self, sigma: Sequence[int]) -> Fraction:
        return sum((col[j] for j, col in enumerate(self.action_matrix(sigma))), Fraction(0))


def hwv_basis(la: Iterable[int], p: int, k: int, n: Optional[int] = None,
              budget: int = DEFAULT_TERM_BUDGET) -> HwvSpace:
    """Basis ``{h_T}`` over all SSYT ``T`` of shape ``la`` and content ``(k^p)``."""
    la = as_partition(la)
    if sum(la) != p * k:
        raise InvalidInputError(f"|la| = {sum(la)} but p*k = {p * k}")
    n = len(la) if n is None else n
    if n < len(la):
        raise InvalidInputError(f"need at least {len(la)} variables")
    if term_count(la) > budget:
        raise ResourceLimitError(f"h_T has {term_count(la)} terms, budget is {budget}")
    tableaux = enumerate_ssyt(la, (k,) * p) if len(la) <= p else []
    space = HwvSpace(la, p, k, n, [(T, build_hwv(T, n, p, budget)) for T in tableaux])
    if len(space) != chain_count(la, p, k):
        raise ConsistencyError(f"{len(space)} vectors but c = {chain_count(la, p, k)}")
    return space


def class_representative(rho: Partition) -> Permutation:
    """A permutation of cycle type ``rho`` made of consecutive cycles."""
    perm, start = [], 0
    for r in rho:
        perm.extend(start + (i + 1) % r for i in range(r))
        start += r
    return tuple(perm)


def multiplicity_by_character(la: Iterable[int], p: int, k: int, mu: Iterable[int],
                              n: Optional[int] = None, space: Optional[HwvSpace] = None,
                              budget: int = DEFAULT_TERM_BUDGET) -> int:
    """Multiplicity of the Specht module ``V_mu`` in the span of the ``h_T``, by character projection."""
    mu = as_partition(mu)
    if sum(mu) != p:
        raise InvalidInputError(f"mu must be a partition of p={p}")
    space = space or hwv_basis(la, p, k, n, budget)
    total = Fraction(0)
    for rho in partitions_of(p):
        size = factorial(p) // centralizer_order(rho)
        total += size * space.trace(class_representative(rho)) * character_value(mu, rho)
    total /= factorial(p)
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(f"character projection gave {total}")
    return int(total)


def _cycle_type(perm: Sequence[int]) -> Partition:
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = perm[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def _restricted_permutations(p: int, restrict: Optional[str]) -> Iterator[Permutation]:
    identity = tuple(range(p))
    perms = [s for s in itertools.permutations(range(p)) if s != identity]
    if restrict == "even":
        perms = [s for s in perms if permutation_sign(s) == 1]
        # 3-cycles first, then the rest by cycle type
        perms.sort(key=lambda s: (_cycle_type(s) != (3,) + (1,) * (p - 3), _cycle_type(s), s))
    elif restrict == "klein":
        if p != 4:
            raise InvalidInputError("the Klein four-group restriction needs p = 4")
        perms = [(1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
    elif restrict is not None:
        raise InvalidInputError(f"unknown restriction {restrict!r}")
    yield from perms


def find_asymmetry_witness(la: Iterable[int], p: int, k: int, n: Optional[int] = None,
                           restrict: Optional[Literal["even", "klein"]] = "even"
                           ) -> Optional[tuple[SSYT, Permutation]]:
    """First ``(T, sigma)`` with ``h_T·sigma != h_T``, or ``None`` when every ``h_T`` is fixed."""
    la = as_partition(la)
    if sum(la) != p * k:
        raise InvalidInputError(f"|la| = {sum(la)} but p*k = {p * k}")
    n = len(la) if n is None else n
    perms = list(_restricted_permutations(p, restrict))
    for T in (enumerate_ssyt(la, (k,) * p) if len(la) <= p else []):
        v = build_hwv(T, n, p)
        for sigma in perms:
            if act_permutation(v, sigma) != v:
                return T, sigma
    return None
