"""Irreducible characters of the symmetric group.

Values come from the Murnaghan-Nakayama rule, evaluated on beta-sets:
removing a border strip of length ``r`` is moving a bead from position ``b``
to the free position ``b - r``, with sign ``(-1)^(beads jumped over)``.
Results are memoized on ``(shape, remaining cycle type)``.
"""
from __future__ import annotations

import json
import os
import tempfile
from functools import lru_cache
from math import factorial
from pathlib import Path
from typing import Optional

from .errors import InvalidInputError
from .partitions import Partition, as_partition, centralizer_order, partitions_of

TABLE_FORMAT_VERSION = 1


def _beta_set(mu: Partition) -> tuple[int, ...]:
    n = len(mu)
    return tuple(mu[i] + n - 1 - i for i in range(n))


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return tuple(x for x in (beta[i] - (n - 1 - i) for i in range(n)) if x > 0)


def strip_removals(mu: Partition, r: int) -> list[tuple[Partition, int]]:
    """All ``(shape, sign)`` obtained from ``mu`` by removing one border strip of size ``r``."""
    beta = _beta_set(mu)
    occupied = set(beta)
    out = []
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        rest = [c for c in beta if c != b] + [target]
        out.append((_from_beta(rest), -1 if jumped % 2 else 1))
    return out


@lru_cache(maxsize=None)
def _mn(mu: Partition, rho: Partition) -> int:
    if not rho:
        return 1 if not mu else 0
    total = 0
    for nu, sign in strip_removals(mu, rho[0]):
        total += sign * _mn(nu, rho[1:])
    return total


def character_value(mu: Partition, rho: Partition) -> int:
    """chi_mu evaluated on the class of cycle type ``rho``."""
    mu = as_partition(mu)
    rho = tuple(sorted((int(x) for x in rho if x), reverse=True))
    if sum(mu) != sum(rho):
        raise InvalidInputError(f"|{mu}| != |{rho}|")
    return _mn(mu, rho)


def clear_memo() -> None:
    _mn.cache_clear()


class CharacterTable:
    """Full character table of ``S_p``; rows and columns in reverse-lex order."""

    def __init__(self, p: int, values: Optional[dict] = None):
        self.p = p
        self.partitions = partitions_of(p)
        if values is None:
            values = {(mu, rho): _mn(mu, rho) for mu in self.partitions for rho in self.partitions}
        self.values = values

    def __call__(self, mu: Partition, rho: Partition) -> int:
        return self.values[(as_partition(mu), as_partition(rho))]

    def class_size(self, rho: Partition) -> int:
        return factorial(self.p) // centralizer_order(rho)

    def to_json(self) -> dict:
        idx = self.partitions
        return {
            "format": "plethysm-character-table",
            "version": TABLE_FORMAT_VERSION,
            "p": self.p,
            "partitions": [list(mu) for mu in idx],
            "table": [[self.values[(mu, rho)] for rho in idx] for mu in idx],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CharacterTable":
        if data.get("version") != TABLE_FORMAT_VERSION:
            raise InvalidInputError(f"unsupported character table version {data.get('version')}")
        idx = [tuple(mu) for mu in data["partitions"]]
        values = {
            (mu, rho): int(v)
            for mu, row in zip(idx, data["table"])
            for rho, v in zip(idx, row)
        }
        table = cls(int(data["p"]), values)
        if list(table.partitions) != idx:
            raise InvalidInputError("character table partition order does not match")
        return table

    def save(self, path: os.PathLike) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(self.to_json(), fh)
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: os.PathLike) -> "CharacterTable":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def character_table(p: int, cache_dir: Optional[os.PathLike] = None) -> CharacterTable:
    """Character table of ``S_p``, read from / written to ``cache_dir`` when given.

    On-disk layout: ``<cache_dir>/characters/S<p>.json`` (see ``CharacterTable.to_json``).
    """
    if cache_dir is None:
        return CharacterTable(p)
    path = Path(cache_dir) / "characters" / f"S{p}.json"
    if path.exists():
        return CharacterTable.load(path)
    table = CharacterTable(p)
    table.save(path)
    return table
