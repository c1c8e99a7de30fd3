"""Check the asymptotic behaviour of ``a^{d la}_{mu,(dk)}`` against ``c^{d la}_{p,dk}``.

Instances fall into three cases:

* ``i``: ``la`` is exceptional, so every ``c`` is 1 and the one-dimensional
  space is trivial for all ``d`` or alternates between trivial and sign;
* ``ii``: ``p = 4`` and ``la = (b, b, c, c)``; after removing the bottom
  rectangle this is ``e*(2, 2)`` with explicit floor-function formulas;
* ``iii``: everything else; each ``a``-sequence is a quasi-polynomial with
  constant leading term ``dim(V_mu)/p!`` times that of the ``c``-sequence.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from .errors import FitError
from .partitions import (Partition, classify_exceptional, conjugate, format_partition,
                         hook_dimension, partitions_of)
from .pieri import polytope_dimension_bound
from .quasipoly import (DEFAULT_MAX_PERIOD, fit_with_report, leading_term_report,
                        samples_needed)
from .sequences import SequenceTable, check_instance

DEFAULT_DMAX_EXCEPTIONAL = 9


def rectangle_formula(mu: Partition, e: int) -> Fraction:
    """``a^{e(2,2)}_{mu,(e)}`` in closed form, for ``mu`` a partition of 4."""
    third = (2 * e) // 3
    if mu == (4,):
        return third - Fraction(e, 2) + (1 if e % 2 == 0 else Fraction(1, 2))
    if mu == (1, 1, 1, 1):
        return third - Fraction(e, 2) + (0 if e % 2 == 0 else Fraction(1, 2))
    if mu == (2, 2):
        return Fraction(e - third)
    if mu in ((3, 1), (2, 1, 1)):
        return Fraction(0)
    raise ValueError(f"{mu} is not a partition of 4")


def two_row_square_params(la: Partition, p: int) -> Optional[tuple[int, int]]:
    """``(b, c)`` when ``p = 4`` and ``la = (b, b, c, c)`` with ``b > c >= 0``, else None."""
    if p != 4 or not 2 <= len(la) <= 4:
        return None
    padded_la = tuple(la) + (0,) * (4 - len(la))
    b, b2, c, c2 = padded_la
    if b == b2 and c == c2 and b > c:
        return b, c
    return None


def route(la: Partition, p: int, k: int) -> str:
    if classify_exceptional(la, p, k).exceptional:
        return "i"
    if two_row_square_params(la, p) is not None:
        return "ii"
    return "iii"


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    la: Partition
    p: int
    k: int
    case: str
    dmax: int
    mus: tuple[Partition, ...]
    sequences: dict = field(default_factory=dict)
    fits: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: Optional[float] = None

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def diff(self) -> list[dict]:
        return [c.to_json() for c in self.checks if not c.passed]

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "instance": {"lambda": list(self.la), "p": self.p, "k": self.k,
                         "mu": [list(mu) for mu in self.mus]},
            "case": self.case,
            "dmax": self.dmax,
            "sequences": self.sequences,
            "fits": self.fits,
            "checks": [c.to_json() for c in self.checks],
            "notes": self.notes,
            "passed": self.passed,
            "diff": self.diff(),
        }
        if timing and self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out

    def summary(self) -> str:
        lines = [f"lambda=({format_partition(self.la)}) p={self.p} k={self.k} case {self.case} "
                 f"d=0..{self.dmax}: {'PASS' if self.passed else 'FAIL'}"]
        lines += [f"  [{'ok' if c.passed else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else "")
                  for c in self.checks]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def _mu_key(mu: Partition) -> str:
    return format_partition(mu)


def _verify_exceptional(report: VerificationReport, table: SequenceTable) -> None:
    p, dmax = report.p, report.dmax
    mus = report.mus
    data = table.fetch([("c", None)] + [("a", mu) for mu in mus], dmax)
    report.sequences = {"c": data[("c", None)],
                        "a": {_mu_key(mu): data[("a", mu)] for mu in mus}}
    report.checks.append(Check("c constant 1", all(v == 1 for v in data[("c", None)])))
    trivial, sign = (p,), conjugate((p,))

    def constant(mu, d):
        return int(mu == trivial)

    def alternating(mu, d):
        return int(mu == (trivial if d % 2 == 0 else sign))

    matched = []
    for name, pattern in (("constant", constant), ("alternating", alternating)):
        if all(data[("a", mu)][d] == pattern(mu, d) for mu in mus for d in range(dmax + 1)):
            matched.append(name)
    detail = ", ".join(matched) if matched else "neither constant nor alternating"
    report.checks.append(Check("a follows a one-dimensional pattern", bool(matched), detail))


def _verify_square(report: VerificationReport, table: SequenceTable) -> None:
    b, c = two_row_square_params(report.la, report.p)
    half = (b - c) // 2  # d*la minus its bottom rectangle is (d*half)*(2, 2)
    data = table.fetch([("a", mu) for mu in report.mus], report.dmax)
    report.sequences = {"a": {_mu_key(mu): data[("a", mu)] for mu in report.mus}}
    if (b, c) != (2, 0):
        note = f"compared against the (2,2) formulas at e = {half}*d"
        if c % 2:
            note += ", with mu transposed for odd d"
        report.notes.append(note)
    for mu in report.mus:
        bad = []
        for d in range(report.dmax + 1):
            nu = conjugate(mu) if (c * d) % 2 else mu
            expected = rectangle_formula(nu, half * d)
            got = data[("a", mu)][d]
            if got != expected:
                bad.append(f"d={d}: got {got}, formula {expected}")
        report.checks.append(Check(f"mu=({_mu_key(mu)}) closed form", not bad, "; ".join(bad)))


def _verify_generic(report: VerificationReport, table: SequenceTable,
                    max_degree: int, max_period: int) -> None:
    mus, dmax = report.mus, report.dmax
    data = table.fetch([("c", None)] + [("a", mu) for mu in mus], dmax)
    report.sequences = {"c": data[("c", None)],
                        "a": {_mu_key(mu): data[("a", mu)] for mu in mus}}
    try:
        c_fit = fit_with_report(enumerate(data[("c", None)]), max_degree, max_period)
    except FitError as exc:
        report.checks.append(Check("c fit", False, str(exc)))
        return
    report.fits["c"] = c_fit.to_json()
    c_lead = leading_term_report(c_fit.q)
    report.checks.append(Check("c constant leading term", c_lead.constant,
                               f"degree {c_lead.degree}, leading {[str(x) for x in c_lead.coefficients]}"))
    report.fits["a"] = {}
    p_fact = factorial(report.p)
    for mu in mus:
        key = _mu_key(mu)
        try:
            a_fit = fit_with_report(enumerate(data[("a", mu)]), max_degree, max_period)
        except FitError as exc:
            report.checks.append(Check(f"mu=({key}) fit", False, str(exc)))
            continue
        report.fits["a"][key] = a_fit.to_json()
        lead = leading_term_report(a_fit.q)
        if not (lead.constant and c_lead.constant):
            report.checks.append(Check(f"mu=({key}) constant leading term", False,
                                       f"leading {[str(x) for x in lead.coefficients]}"))
            continue
        ratio = Fraction(hook_dimension(mu), p_fact)
        expected = ratio * c_lead.coefficients[0]
        ok = lead.degree == c_lead.degree and lead.coefficients[0] == expected
        report.checks.append(Check(
            f"mu=({key}) leading ratio {ratio}", ok,
            f"degree {lead.degree} vs {c_lead.degree}, leading {lead.coefficients[0]} vs {expected}"))


def default_generic_bounds(la: Partition, p: int, k: int, max_degree: Optional[int],
                           max_period: Optional[int]) -> tuple[int, int]:
    if max_degree is None:
        max_degree = polytope_dimension_bound(la, p, k) if len(la) <= p else 0
    return max_degree, (DEFAULT_MAX_PERIOD if max_period is None else max_period)


def verify_instance(la, p: int, k: int, dmax: Optional[int] = None, *,
                    max_degree: Optional[int] = None, max_period: Optional[int] = None,
                    cache=None, jobs: int = 1) -> VerificationReport:
    start = time.perf_counter()
    la = check_instance(la, p, k)
    case = route(la, p, k) if len(la) <= p else "iii"
    table = SequenceTable(la, p, k, cache=cache, jobs=jobs)
    if case == "iii":
        max_degree, max_period = default_generic_bounds(la, p, k, max_degree, max_period)
        if dmax is None:
            dmax = samples_needed(max_degree, max_period) - 1
    elif dmax is None:
        dmax = DEFAULT_DMAX_EXCEPTIONAL
    report = VerificationReport(la, p, k, case, dmax, partitions_of(p))
    if len(la) > p:
        report.checks.append(Check("lambda has at most p parts", False,
                                   "c and every a vanish identically"))
    elif case == "i":
        _verify_exceptional(report, table)
    elif case == "ii":
        _verify_square(report, table)
    else:
        _verify_generic(report, table, max_degree, max_period)
    report.seconds = time.perf_counter() - start
    return report
