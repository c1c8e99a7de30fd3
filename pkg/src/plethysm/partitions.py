"""Partition arithmetic, symmetric-group numerology and exceptional shapes.

A partition is a plain ``tuple`` of positive integers in weakly decreasing
order, stored without trailing zeros, so that tuple equality is partition
equality. ``()`` is the unique partition of 0.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Optional

from .errors import InvalidInputError

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical partition tuple.

    Trailing zeros are dropped; anything else out of order raises
    :class:`InvalidInputError`.
    """
    out = [int(x) for x in parts]
    while out and out[-1] == 0:
        out.pop()
    for i, x in enumerate(out):
        if x < 1:
            raise InvalidInputError(f"partition parts must be positive: {tuple(out)}")
        if i and x > out[i - 1]:
            raise InvalidInputError(f"partition parts must be weakly decreasing: {tuple(out)}")
    return tuple(out)


def parse_partition(text: str) -> Partition:
    """Parse the comma separated text form, e.g. ``"3,2,1"``; ``""`` is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse partition {text!r}") from exc
    return as_partition(parts)


def format_partition(la: Partition) -> str:
    return ",".join(str(x) for x in la)


def padded(la: Partition, length: int) -> tuple[int, ...]:
    if len(la) > length:
        raise InvalidInputError(f"{la} has more than {length} parts")
    return tuple(la) + (0,) * (length - len(la))


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for x in la if x > j) for j in range(la[0]))


def scale(la: Partition, d: int) -> Partition:
    if d < 0:
        raise InvalidInputError("dilation must be nonnegative")
    if d == 0:
        return ()
    return tuple(d * x for x in la)


def hook_lengths(la: Partition) -> list[list[int]]:
    lat = conjugate(la)
    return [[la[i] - j + lat[j] - i - 1 for j in range(la[i])] for i in range(len(la))]


@lru_cache(maxsize=None)
def hook_dimension(mu: Partition) -> int:
    """Dimension of the Specht module ``V_mu`` by the hook length formula.

    The empty partition gives 1, the trivial module of ``S_0``.
    """
    mu = as_partition(mu)
    denom = prod(h for row in hook_lengths(mu) for h in row)
    return factorial(sum(mu)) // denom


def centralizer_order(rho: Partition) -> int:
    """``z_rho``: order of the centralizer of a permutation of cycle type ``rho``."""
    return prod(i**m * factorial(m) for i, m in Counter(rho).items())


def cycle_type_sign(rho: Partition) -> int:
    return -1 if (sum(rho) - len(rho)) % 2 else 1


def _partitions(n: int, largest: int, max_length: Optional[int]) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    rest = None if max_length is None else max_length - 1
    for first in range(min(n, largest), 0, -1):
        for tail in _partitions(n - first, first, rest):
            yield (first,) + tail


@lru_cache(maxsize=None)
def partitions_of(n: int, max_length: Optional[int] = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order, e.g. (4),(3,1),(2,2),(2,1,1),(1,1,1,1).

    ``max_length`` keeps only partitions with at most that many parts.
    """
    if n < 0:
        return ()
    return tuple(_partitions(n, n, max_length))


def dominates(la: Partition, mu: Partition) -> bool:
    s = t = 0
    for i in range(max(len(la), len(mu))):
        s += la[i] if i < len(la) else 0
        t += mu[i] if i < len(mu) else 0
        if s < t:
            return False
    return True


class ExceptionalTag(str, enum.Enum):
    FULL_ROW = "FullRow"
    RECTANGLE = "Rectangle"
    NEAR_RECTANGLE_EQUAL = "NearRectangleEqual"
    ROW_OVER_RECTANGLE = "RowOverRectangle"
    RECTANGLE_OVER_ROW = "RectangleOverRow"
    NON_EXCEPTIONAL = "NonExceptional"


@dataclass(frozen=True)
class ExceptionalClass:
    """Result of :func:`classify_exceptional`.

    ``params`` holds ``(a,)`` for ``(a^(p-1))`` and ``(b, c)`` for the two
    row-plus-rectangle forms; empty otherwise.
    """

    tag: ExceptionalTag
    params: tuple[int, ...] = ()

    @property
    def exceptional(self) -> bool:
        return self.tag is not ExceptionalTag.NON_EXCEPTIONAL


def classify_exceptional(la: Partition, p: int, k: int) -> ExceptionalClass:
    """Tag ``la`` (a partition of ``p*k`` with at most ``p`` parts) by exceptional form.

    The forms are tried in the order (pk), (k^p), (a^(p-1)), (b, c^(p-1)),
    (b^(p-1), c), with ``b > c >= 1`` and ``a >= 1``; the first match wins.
    """
    la = as_partition(la)
    if p < 1 or k < 1:
        raise InvalidInputError("p and k must be positive")
    if sum(la) != p * k or len(la) > p:
        raise InvalidInputError(f"{la} is not a partition of {p * k} with at most {p} parts")
    T = ExceptionalTag
    if la == (p * k,):
        return ExceptionalClass(T.FULL_ROW)
    if la == (k,) * p:
        return ExceptionalClass(T.RECTANGLE)
    if p >= 2 and len(la) == p - 1 and len(set(la)) == 1:
        return ExceptionalClass(T.NEAR_RECTANGLE_EQUAL, (la[0],))
    if len(la) == p and p >= 2:
        b, c = la[0], la[-1]
        if b > c and all(x == c for x in la[1:]):
            return ExceptionalClass(T.ROW_OVER_RECTANGLE, (b, c))
        if b > c and all(x == b for x in la[:-1]):
            return ExceptionalClass(T.RECTANGLE_OVER_ROW, (b, c))
    return ExceptionalClass(T.NON_EXCEPTIONAL)
