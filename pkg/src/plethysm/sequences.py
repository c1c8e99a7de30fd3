"""The sequences ``d -> c^{d la}_{p,dk}`` and ``d -> a^{d la}_{mu,(dk)}``, computed and cached."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

from .cache import ValueCache
from .errors import InvalidInputError
from .partitions import Partition, as_partition, partitions_of, scale
from .pieri import chain_count
from .symfunc import plethysm_coefficient_fast, reduce_by_strip


def check_instance(la: Iterable[int], p: int, k: int) -> Partition:
    la = as_partition(la)
    if p < 1 or k < 1:
        raise InvalidInputError("p and k must be positive")
    if sum(la) != p * k:
        raise InvalidInputError(f"|lambda| = {sum(la)} but p*k = {p * k}")
    return la


def c_value(la: Partition, p: int, k: int, d: int) -> int:
    """``c^{d la}_{p, dk}`` by the Pieri chain count (1 at ``d = 0``)."""
    if d == 0:
        return 1
    big = scale(la, d)
    if len(big) > p:
        return 0
    if len(big) == p:
        big, kk, _ = reduce_by_strip(big, (1,) * p, d * k)
    else:
        kk = d * k
    return chain_count(big, p, kk) if kk else int(big == ())


def a_value(la: Partition, p: int, k: int, mu: Partition, d: int) -> int:
    """``a^{d la}_{mu,(dk)}``: coefficient of ``s_{d la}`` in ``s_mu[h_{dk}]``."""
    if d == 0:
        return int(mu == (p,))
    big, kk, nu = reduce_by_strip(scale(la, d), mu, d * k)
    if kk == 0:
        return int(big == () and nu == (p,))
    return plethysm_coefficient_fast(nu, kk, big)


def _compute(task: tuple) -> int:
    kind, la, p, k, mu, d = task
    return c_value(la, p, k, d) if kind == "c" else a_value(la, p, k, mu, d)


class SequenceTable:
    """Sampler for one instance ``(la, p, k)`` with an optional cache and worker pool."""

    def __init__(self, la, p: int, k: int, cache: Optional[ValueCache] = None, jobs: int = 1):
        self.la = check_instance(la, p, k)
        self.p, self.k = p, k
        self.cache = cache
        self.jobs = max(1, jobs)

    def mus(self) -> tuple[Partition, ...]:
        return partitions_of(self.p)

    def fetch(self, requests: list[tuple[str, Optional[Partition]]], dmax: int) -> dict:
        """Values for every ``(kind, mu)`` in ``requests`` at ``d = 0..dmax``.

        Returns ``{(kind, mu): [v_0, ..., v_dmax]}``. Cached values are reused;
        missing ones are computed (in parallel when ``jobs > 1``) and stored.
        """
        known = {}
        tasks = []
        for kind, mu in requests:
            if kind == "a" and (mu is None or sum(mu) != self.p):
                raise InvalidInputError(f"mu must be a partition of p={self.p}")
            have = self.cache.load(kind, self.la, self.p, self.k, mu) if self.cache else {}
            known[(kind, mu)] = have
            tasks += [(kind, self.la, self.p, self.k, mu, d) for d in range(dmax + 1) if d not in have]
        if self.jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                results = list(pool.map(_compute, tasks, chunksize=1))
        else:
            results = [_compute(t) for t in tasks]
        fresh: dict = {}
        for (kind, _la, _p, _k, mu, d), value in zip(tasks, results):
            fresh.setdefault((kind, mu), {})[d] = value
        if self.cache is not None:
            for (kind, mu), values in sorted(fresh.items(), key=lambda kv: (kv[0][0], kv[0][1] or ())):
                self.cache.store(kind, self.la, self.p, self.k, mu, values)
        out = {}
        for key, have in known.items():
            merged = {**have, **fresh.get(key, {})}
            out[key] = [merged[d] for d in range(dmax + 1)]
        return out

    def c(self, dmax: int) -> list[int]:
        return self.fetch([("c", None)], dmax)[("c", None)]

    def a(self, mu, dmax: int) -> list[int]:
        mu = as_partition(mu)
        return self.fetch([("a", mu)], dmax)[("a", mu)]
