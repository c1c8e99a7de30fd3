"""Three independent ways to count ``c^la_{p,k}`` plus the greedy witness tableau.

* ``brute``: fill the diagram cell by cell with backtracking;
* ``chain_dp``: count chains of horizontal strips of size ``k`` (Pieri's rule);
* ``polytope``: count integer points of the Pieri polytope, given as a plain
  constraint system, with a generic bounded enumerator.

Tableaux are ordered lexicographically by their row reading word (rows top to
bottom, each left to right).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Literal, Optional, Sequence

from .errors import InvalidInputError
from .partitions import Partition, as_partition, conjugate, padded, partitions_of


@dataclass(frozen=True)
class SSYT:
    """Semistandard Young tableau; ``rows[i][j]`` is the entry in row ``i``, column ``j``."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        as_partition(len(r) for r in rows)

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def content(self, p: Optional[int] = None) -> tuple[int, ...]:
        top = max((x for r in self.rows for x in r), default=0)
        p = top if p is None else p
        counts = [0] * p
        for r in self.rows:
            for x in r:
                counts[x - 1] += 1
        return tuple(counts)

    def is_semistandard(self) -> bool:
        for i, r in enumerate(self.rows):
            if any(x < 1 for x in r):
                return False
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                return False
            if i and any(self.rows[i - 1][j] >= r[j] for j in range(len(r))):
                return False
        return True

    def reading_key(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def __str__(self) -> str:
        return "/".join("".join(str(x) for x in r) if max(r) < 10 else ",".join(map(str, r))
                        for r in self.rows)

    @classmethod
    def parse(cls, text: str) -> "SSYT":
        """Parse ``"1123/23"`` (single digits) or ``"1,1,12/2,13"`` (comma separated rows)."""
        rows = []
        for chunk in text.split("/"):
            chunk = chunk.strip()
            rows.append([int(x) for x in (chunk.split(",") if "," in chunk else chunk)])
        return cls(tuple(tuple(r) for r in rows))


def _check_content(shape: Partition, content: Sequence[int]) -> None:
    if any(c < 0 for c in content):
        raise InvalidInputError("content entries must be nonnegative")
    if sum(content) != sum(shape):
        raise InvalidInputError(f"content {tuple(content)} does not fill shape {shape}")


def enumerate_ssyt(shape: Iterable[int], content: Sequence[int]) -> list[SSYT]:
    """All SSYT of ``shape`` whose entry ``v`` occurs ``content[v-1]`` times.

    Plain backtracking over cells in row-major order, which yields tableaux
    already sorted by reading word.
    """
    shape = as_partition(shape)
    content = tuple(int(c) for c in content)
    _check_content(shape, content)
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    grid = [[0] * row for row in shape]
    remaining = list(content)
    out: list[SSYT] = []

    def place(pos: int) -> None:
        if pos == len(cells):
            out.append(SSYT(tuple(tuple(r) for r in grid)))
            return
        i, j = cells[pos]
        low = max(grid[i][j - 1] if j else 1, grid[i - 1][j] + 1 if i else 1)
        for v in range(low, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            # entries in row i are at least i+1; v must leave room below it
            grid[i][j] = v
            remaining[v - 1] -= 1
            place(pos + 1)
            remaining[v - 1] += 1
        grid[i][j] = 0

    place(0)
    return out


def _horizontal_strips(inner: Partition, size: int, outer: Partition, max_rows: int) -> Iterator[Partition]:
    """Shapes ``nu`` with ``nu/inner`` a horizontal strip of ``size`` boxes, ``nu`` inside ``outer``."""
    rows = min(max_rows, len(outer))
    base = padded(inner, rows) if len(inner) <= rows else None
    if base is None:
        return
    out_p = padded(outer[:rows], rows)

    def rec(i: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if i == rows:
            if left == 0:
                yield as_partition(acc)
            return
        cap = out_p[i] if i == 0 else min(out_p[i], base[i - 1])
        for new in range(min(cap, base[i] + left), base[i] - 1, -1):
            acc.append(new)
            yield from rec(i + 1, left - (new - base[i]), acc)
            acc.pop()

    yield from rec(0, size, [])


def _is_horizontal_strip(inner: Partition, outer: Partition) -> bool:
    n = len(outer)
    if len(inner) > n:
        return False
    a = padded(inner, n)
    return all(a[i] <= outer[i] and (i == 0 or outer[i] <= a[i - 1]) for i in range(n))


def chain_count(la: Partition, p: int, k: int) -> int:
    """Number of Pieri chains ``() = nu_0 < nu_1 < ... < nu_p = la`` with strips of size ``k``."""
    la = as_partition(la)
    if sum(la) != p * k or len(la) > p:
        return 0
    if p == 0:
        return 1
    layer = {(): 1}
    for step in range(1, p):
        nxt: dict[Partition, int] = {}
        for nu, ways in layer.items():
            for new in _horizontal_strips(nu, k, la, step):
                nxt[new] = nxt.get(new, 0) + ways
        layer = nxt
    return sum(ways for nu, ways in layer.items() if _is_horizontal_strip(nu, la))


# -- the Pieri polytope --------------------------------------------------------


@dataclass(frozen=True)
class PieriPoint:
    """Integer point of the Pieri polytope.

    ``steps[j-1]`` holds ``(x_1^j, ..., x_{j+1}^j)``: how many entries ``j+1``
    sit in rows ``1..j+1``. Step 0 (``k`` ones in row 1) is implicit.
    """

    steps: tuple[tuple[int, ...], ...]

    def flat(self) -> tuple[int, ...]:
        return tuple(x for s in self.steps for x in s)


@dataclass
class ConstraintSystem:
    """Integer linear system ``ineq: a.x <= b`` and ``eq: a.x == b`` over ``x >= 0``.

    ``names`` label the variables; rows are dense integer lists.
    """

    names: list[str]
    ineq: list[tuple[list[int], int]] = field(default_factory=list)
    eq: list[tuple[list[int], int]] = field(default_factory=list)

    @property
    def n_vars(self) -> int:
        return len(self.names)

    def to_text(self) -> str:
        """Plain-text H-representation.

        One row per line: ``ineq c_1 ... c_N <= b`` or ``eq c_1 ... c_N = b``.
        Nonnegativity of every variable is written out as ``ineq`` rows too.
        Lines starting with ``#`` are comments; ``vars`` lists the names.
        """
        lines = ["# Pieri polytope H-representation", "vars " + " ".join(self.names)]
        n = self.n_vars
        for i in range(n):
            row = [0] * n
            row[i] = -1
            lines.append("ineq " + " ".join(map(str, row)) + " <= 0")
        for row, b in self.ineq:
            lines.append("ineq " + " ".join(map(str, row)) + f" <= {b}")
        for row, b in self.eq:
            lines.append("eq " + " ".join(map(str, row)) + f" = {b}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ConstraintSystem":
        system = None
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            kind, *rest = line.split()
            if kind == "vars":
                system = cls(rest)
                continue
            if system is None:
                raise InvalidInputError("'vars' line must come first")
            *coeffs, _op, rhs = rest
            row = [int(c) for c in coeffs]
            if kind == "ineq":
                if all(c <= 0 for c in row) and sum(1 for c in row if c) == 1 and int(rhs) == 0:
                    continue  # nonnegativity, implicit
                system.ineq.append((row, int(rhs)))
            elif kind == "eq":
                system.eq.append((row, int(rhs)))
            else:
                raise InvalidInputError(f"unknown row kind {kind!r}")
        if system is None:
            raise InvalidInputError("empty constraint system")
        return system

    def contains(self, x: Sequence[int]) -> bool:
        if any(v < 0 for v in x):
            return False
        dot = lambda row: sum(a * v for a, v in zip(row, x))  # noqa: E731
        return all(dot(r) <= b for r, b in self.ineq) and all(dot(r) == b for r, b in self.eq)


def _var_index(p: int) -> dict[tuple[int, int], int]:
    """Map ``(i, j)`` (row ``i``, step ``j``, both 1-based) to the flat coordinate index."""
    idx = {}
    for j in range(1, p):
        for i in range(1, j + 2):
            idx[(i, j)] = len(idx)
    return idx


def pieri_constraints(la: Iterable[int], p: int, k: int, d: int = 1) -> ConstraintSystem:
    """Constraint system of the Pieri polytope for shape ``la``, dilated by ``d``.

    Variables ``x_i^j`` for ``1 <= j <= p-1`` and ``1 <= i <= j+1``; the step-0
    values ``x_1^0 = k``, ``x_i^0 = 0`` are folded into right-hand sides. Every
    right-hand side is linear in ``(k, la)``, so dilation multiplies it by ``d``.
    """
    la = as_partition(la)
    if p < 1 or len(la) > p:
        raise InvalidInputError(f"{la} has more than p={p} parts")
    if sum(la) != p * k:
        raise InvalidInputError(f"|la| = {sum(la)} but p*k = {p * k}")
    lam = padded(la, p)
    idx = _var_index(p)
    system = ConstraintSystem([f"x{i}^{j}" for (i, j) in idx])
    n = len(idx)
    # horizontal strips: row i+1 after step j is no longer than row i before step j
    for j in range(1, p):
        for i in range(1, j + 1):
            row = [0] * n
            for l in range(i, j + 1):
                row[idx[(i + 1, l)]] += 1
            for l in range(1, j):
                if (i, l) in idx:
                    row[idx[(i, l)]] -= 1
            system.ineq.append((row, d * k if i == 1 else 0))
    for j in range(1, p):
        row = [0] * n
        for i in range(1, j + 2):
            row[idx[(i, j)]] = 1
        system.eq.append((row, d * k))
    for i in range(1, p + 1):
        row = [0] * n
        for j in range(max(1, i - 1), p):
            row[idx[(i, j)]] = 1
        system.eq.append((row, d * (lam[i - 1] - (k if i == 1 else 0))))
    return system


def count_lattice_points(system: ConstraintSystem) -> int:
    """Number of nonnegative integer points of a bounded system.

    Variables are fixed in order; each one ranges over the interval allowed by
    every row given the assigned prefix and the ``[0, ub]`` boxes of the
    unassigned suffix. Subproblems are memoized on the residual right-hand
    sides of rows that still involve unassigned variables.
    """
    n = system.n_vars
    rows: list[tuple[list[int], int, bool]] = [(r, b, False) for r, b in system.ineq]
    rows += [(r, b, True) for r, b in system.eq]
    ub = _variable_bounds(system)
    last = [max((v for v in range(n) if r[v]), default=-1) for r, _, _ in rows]
    # residual min/max contribution of variables v..n-1 for each row
    suffix_min = [[0] * (n + 1) for _ in rows]
    suffix_max = [[0] * (n + 1) for _ in rows]
    for ri, (r, _, _) in enumerate(rows):
        for v in range(n - 1, -1, -1):
            lo, hi = sorted((0, r[v] * ub[v]))
            suffix_min[ri][v] = suffix_min[ri][v + 1] + lo
            suffix_max[ri][v] = suffix_max[ri][v + 1] + hi

    for ri, (r, b, is_eq) in enumerate(rows):
        if last[ri] == -1 and (b < 0 or (is_eq and b != 0)):
            return 0
    memo: dict = {}

    def rec(v: int, resid: tuple[int, ...]) -> int:
        if v == n:
            return 1
        key = (v, tuple(resid[ri] for ri in range(len(rows)) if last[ri] >= v))
        if key in memo:
            return memo[key]
        lo, hi = 0, ub[v]
        for ri, (r, _, is_eq) in enumerate(rows):
            a = r[v]
            if not a:
                continue
            room_hi = resid[ri] - suffix_min[ri][v + 1]  # a*x <= room_hi
            room_lo = resid[ri] - suffix_max[ri][v + 1]  # a*x >= room_lo (equality rows)
            if a > 0:
                hi = min(hi, room_hi // a)
                if is_eq:
                    lo = max(lo, -(-room_lo // a))
            else:
                lo = max(lo, -(room_hi // -a))
                if is_eq:
                    hi = min(hi, (-room_lo) // -a)
        total = 0
        for x in range(lo, hi + 1):
            new = list(resid)
            ok = True
            for ri, (r, _, is_eq) in enumerate(rows):
                if r[v]:
                    new[ri] -= r[v] * x
                    if last[ri] == v and (new[ri] < 0 or (is_eq and new[ri] != 0)):
                        ok = False
                        break
            if ok:
                total += rec(v + 1, tuple(new))
        memo[key] = total
        return total

    return rec(0, tuple(b for _, b, _ in rows))


def _variable_bounds(system: ConstraintSystem) -> list[int]:
    """Upper bound per variable from rows whose coefficients are all nonnegative."""
    n = system.n_vars
    ub: list[Optional[int]] = [None] * n
    for r, b in system.ineq + system.eq:
        if any(c < 0 for c in r):
            continue
        for v in range(n):
            if r[v] > 0:
                cap = max(b, 0) // r[v]
                ub[v] = cap if ub[v] is None else min(ub[v], cap)
    if any(u is None for u in ub):
        raise InvalidInputError("constraint system is not visibly bounded")
    return ub  # type: ignore[return-value]


def polytope_count(la: Iterable[int], p: int, k: int, d: int = 1) -> int:
    """Integer points of the ``d``-th dilate of the Pieri polytope, i.e. ``c^{d la}_{p, dk}``."""
    la = as_partition(la)
    if d < 0:
        raise InvalidInputError("dilation must be nonnegative")
    if sum(la) != p * k:
        raise InvalidInputError(f"|la| = {sum(la)} but p*k = {p * k}")
    if len(la) > p:
        return 0
    if d == 0:
        return 1
    return count_lattice_points(pieri_constraints(la, p, k, d))


def polytope_dimension_bound(la: Iterable[int], p: int, k: int) -> int:
    """``N - rank(equalities)``: an upper bound on the polytope's dimension."""
    from .linalg import rank

    system = pieri_constraints(la, p, k)
    if not system.eq:
        return system.n_vars
    return system.n_vars - rank([r for r, _ in system.eq])


def kostka_count(la: Iterable[int], p: int, k: int,
                 mode: Literal["brute", "chain_dp", "polytope"] = "chain_dp") -> int:
    """``c^la_{p,k}``: number of SSYT of shape ``la`` with content ``(k^p)``."""
    la = as_partition(la)
    if p < 0 or k < 0 or sum(la) != p * k:
        raise InvalidInputError(f"|la| = {sum(la)} but p*k = {p * k}")
    if mode == "brute":
        return len(enumerate_ssyt(la, (k,) * p))
    if mode == "chain_dp":
        return chain_count(la, p, k)
    if mode == "polytope":
        return polytope_count(la, p, k, 1) if p else int(la == ())
    raise InvalidInputError(f"unknown mode {mode!r}")


# -- bijection and witness ------------------------------------------------------


def ssyt_to_point(T: SSYT, p: int, k: int) -> PieriPoint:
    if not T.is_semistandard():
        raise InvalidInputError(f"{T} is not semistandard")
    if T.content(p) != (k,) * p or len(T.rows) > p:
        raise InvalidInputError(f"{T} does not have content ({k}^{p})")
    steps = []
    for j in range(1, p):
        steps.append(tuple(T.rows[i - 1].count(j + 1) if i <= len(T.rows) else 0
                           for i in range(1, j + 2)))
    return PieriPoint(tuple(steps))


def point_to_ssyt(x: PieriPoint, p: int, k: int) -> SSYT:
    if len(x.steps) != p - 1 or any(len(s) != j + 2 for j, s in enumerate(x.steps)):
        raise InvalidInputError("point does not match the variable layout for this p")
    rows: list[list[int]] = [[1] * k] + [[] for _ in range(p - 1)]
    for j, s in enumerate(x.steps, start=1):
        for i, count in enumerate(s):
            if count < 0:
                raise InvalidInputError("negative coordinate")
            rows[i].extend([j + 1] * count)
    T = SSYT(tuple(tuple(r) for r in rows))
    if not T.is_semistandard() or T.content(p) != (k,) * p:
        raise InvalidInputError("point violates the polytope constraints")
    return T


def ssyt_polytope_bijection(obj, p: int, k: int):
    """Map an :class:`SSYT` to its :class:`PieriPoint` or back, depending on the input type."""
    if isinstance(obj, SSYT):
        return ssyt_to_point(obj, p, k)
    if isinstance(obj, PieriPoint):
        return point_to_ssyt(obj, p, k)
    raise InvalidInputError(f"expected SSYT or PieriPoint, got {type(obj).__name__}")


def witness_ssyt(la: Iterable[int], p: int, k: int) -> SSYT:
    """Some SSYT of shape ``la`` and content ``(k^p)``, built greedily without search.

    The boxes to hold ``p`` are the rightmost ``la_j - la_{j+1}`` of every row
    below row ``i0`` plus the rightmost ``k - la_{i0+1}`` of row ``i0``, where
    ``la_{i0+1} < k <= la_{i0}``; the rest is filled recursively with ``1..p-1``.
    """
    la = as_partition(la)
    if p < 1 or k < 1 or sum(la) != p * k or len(la) > p:
        raise InvalidInputError(f"need a partition of {p * k} with at most {p} parts, got {la}")
    rows = _witness_rows(padded(la, p), p, k)
    return SSYT(tuple(tuple(r) for r in rows))


def _witness_rows(lam: tuple[int, ...], p: int, k: int) -> list[list[int]]:
    if p == 1:
        return [[1] * lam[0]]
    ext = list(lam) + [0]
    i0 = next(i for i in range(p) if ext[i + 1] < k <= ext[i])
    cut = [0] * p
    for j in range(i0 + 1, p):
        cut[j] = ext[j] - ext[j + 1]
    cut[i0] = k - ext[i0 + 1]
    smaller = tuple(lam[i] - cut[i] for i in range(p))
    inner = _witness_rows(smaller[: p - 1], p - 1, k) if any(smaller) else []
    if smaller[p - 1]:
        raise AssertionError("greedy step left boxes in the last row")
    rows = [list(inner[i]) if i < len(inner) else [] for i in range(p)]
    for i in range(p):
        rows[i].extend([p] * cut[i])
    return [r for r in rows if r]
