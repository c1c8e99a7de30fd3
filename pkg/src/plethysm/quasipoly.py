"""Quasi-polynomials in one integer variable: exact fitting, evaluation, leading terms.

A quasi-polynomial of period ``P`` is stored as ``P`` ordinary polynomials in
``d`` (coefficient lists, constant term first); residue ``r`` is used when
``d % P == r``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, factorial
from typing import Iterable, Optional, Sequence

from .errors import InsufficientSamplesError, InvalidInputError, NoFitError
from .linalg import solve
from .partitions import as_partition, hook_dimension

DEFAULT_MAX_PERIOD = 12
HOLDOUT_FRACTION = Fraction(1, 5)


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out) if out else (Fraction(0),)


def _poly_eval(coeffs: Sequence[Fraction], d) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * d + c
    return acc


@dataclass(frozen=True)
class QuasiPolynomial:
    period: int
    residues: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.period < 1 or len(self.residues) != self.period:
            raise InvalidInputError("need exactly one coefficient list per residue class")
        object.__setattr__(self, "residues", tuple(_trim(r) for r in self.residues))

    @property
    def degree(self) -> int:
        """Top degree over residues; the zero quasi-polynomial has degree 0 here."""
        return max(_degree(r) for r in self.residues)

    def __call__(self, d: int) -> Fraction:
        return evaluate(self, d)

    def to_json(self) -> dict:
        return {"period": self.period, "residues": [[str(c) for c in r] for r in self.residues]}

    @classmethod
    def from_json(cls, data: dict) -> "QuasiPolynomial":
        return cls(int(data["period"]), tuple(tuple(Fraction(c) for c in r) for r in data["residues"]))

    def __str__(self) -> str:
        parts = []
        for r, coeffs in enumerate(self.residues):
            terms = [f"{c}*d^{i}" if i else str(c) for i, c in enumerate(coeffs) if c or len(coeffs) == 1]
            parts.append(f"d%{self.period}=={r}: " + " + ".join(terms))
        return "; ".join(parts)


def _degree(coeffs: Sequence[Fraction]) -> int:
    return max((i for i, c in enumerate(coeffs) if c), default=0)


def evaluate(q: QuasiPolynomial, d: int) -> Fraction:
    if d < 0:
        raise InvalidInputError("quasi-polynomials are evaluated at d >= 0")
    return _poly_eval(q.residues[d % q.period], d)


def _interpolate(points: Sequence[tuple[int, Fraction]], degree: int) -> Optional[tuple[Fraction, ...]]:
    """Polynomial of degree <= ``degree`` through every point, or None."""
    head = points[: degree + 1]
    columns = [[Fraction(d) ** i for d, _ in head] for i in range(degree + 1)]
    coeffs = solve(columns, [Fraction(v) for _, v in head])
    if coeffs is None:
        return None
    if all(_poly_eval(coeffs, d) == v for d, v in points[degree + 1:]):
        return tuple(coeffs)
    return None


def _holdout_size(n: int) -> int:
    return max(1, ceil(n * HOLDOUT_FRACTION))


@dataclass(frozen=True)
class FitReport:
    """A validated fit plus the held-out residuals it was checked against (all zero)."""

    q: QuasiPolynomial
    held_out: tuple[tuple[int, Fraction], ...]

    def residuals(self) -> list[tuple[int, Fraction]]:
        return [(d, v - evaluate(self.q, d)) for d, v in self.held_out]

    def to_json(self) -> dict:
        out = self.q.to_json()
        out["validation"] = {
            "held_out": [d for d, _ in self.held_out],
            "residuals": [str(r) for _, r in self.residuals()],
        }
        return out


def fit_with_report(samples: Iterable[tuple[int, object]], max_degree: int,
                    max_period: int = DEFAULT_MAX_PERIOD, drop_prefix: int = 0) -> FitReport:
    """Smallest ``(period, degree)`` quasi-polynomial that fits and predicts the samples.

    Candidates are tried period first, then degree. In each residue class the
    last ``ceil(n/5)`` samples (at least one) are held out: the remaining ones
    must be interpolated exactly and the held-out ones predicted exactly.
    """
    pts = sorted((int(d), Fraction(v)) for d, v in samples)
    pts = pts[drop_prefix:]
    if not pts:
        raise InsufficientSamplesError("no samples", tried=None)
    ds = [d for d, _ in pts]
    if ds != list(range(ds[0], ds[0] + len(ds))):
        raise InvalidInputError("samples must be at consecutive d")
    if max_degree < 0 or max_period < 1:
        raise InvalidInputError("max_degree must be >= 0 and max_period >= 1")

    starved = None  # tightest (period, degree) we could not test for lack of samples
    tested = None
    for period in range(1, max_period + 1):
        classes = [[pt for pt in pts if pt[0] % period == r] for r in range(period)]
        for degree in range(max_degree + 1):
            if any(len(c) < degree + 2 for c in classes):
                starved = starved or (period, degree)
                break
            tested = (period, degree)
            residues, held = [], []
            for c in classes:
                h = _holdout_size(len(c))
                if len(c) - h < degree + 1:
                    h = len(c) - degree - 1
                coeffs = _interpolate(c[: len(c) - h], degree)
                if coeffs is None or any(_poly_eval(coeffs, d) != v for d, v in c[len(c) - h:]):
                    break
                residues.append(coeffs)
                held.extend(c[len(c) - h:])
            else:
                return FitReport(QuasiPolynomial(period, tuple(residues)), tuple(sorted(held)))
    if starved is not None:
        raise InsufficientSamplesError(
            f"not enough samples to test period {starved[0]}, degree {starved[1]} "
            f"(need {starved[1] + 2} per residue class); last candidate tested: {tested}",
            tried=starved)
    raise NoFitError(f"no quasi-polynomial with period <= {max_period} and degree <= {max_degree}",
                     tried=(max_period, max_degree))


def fit_quasipolynomial(samples: Iterable[tuple[int, object]], max_degree: int,
                        max_period: int = DEFAULT_MAX_PERIOD, drop_prefix: int = 0) -> QuasiPolynomial:
    return fit_with_report(samples, max_degree, max_period, drop_prefix).q


def samples_needed(max_degree: int, max_period: int) -> int:
    """Consecutive samples from d=0 that let every candidate up to the bounds be tested."""
    return max_period * (max_degree + 2)


@dataclass(frozen=True)
class LeadingTerm:
    degree: int
    coefficients: tuple[Fraction, ...]
    constant: bool


def leading_term_report(q: QuasiPolynomial) -> LeadingTerm:
    """Per-residue degree and top coefficient; ``constant`` if all residues agree on both."""
    degs = [_degree(r) for r in q.residues]
    tops = tuple(r[deg] for r, deg in zip(q.residues, degs))
    constant = len(set(degs)) == 1 and len(set(tops)) == 1
    return LeadingTerm(max(degs), tops, constant)


def check_leading_ratio(a_fit: QuasiPolynomial, c_fit: QuasiPolynomial, mu) -> bool:
    """Whether ``lead(a) == dim(V_mu)/p! * lead(c)`` with equal degrees."""
    mu = as_partition(mu)
    a_lead, c_lead = leading_term_report(a_fit), leading_term_report(c_fit)
    if not (a_lead.constant and c_lead.constant):
        raise InvalidInputError("leading ratio needs constant leading terms on both sides")
    ratio = Fraction(hook_dimension(mu), factorial(sum(mu)))
    return a_lead.degree == c_lead.degree and a_lead.coefficients[0] == ratio * c_lead.coefficients[0]


# -- sequence files -------------------------------------------------------------


def write_csv(rows: Iterable[tuple[int, object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["d", "value"])
    for d, v in rows:
        writer.writerow([d, str(v)])
    return buf.getvalue()


def read_csv(text: str) -> list[tuple[int, Fraction]]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["d", "value"]:
        raise InvalidInputError("sequence CSV must have header 'd,value'")
    return [(int(row["d"]), Fraction(row["value"].strip())) for row in reader]


def dumps(q: QuasiPolynomial) -> str:
    return json.dumps(q.to_json())


def loads(text: str) -> QuasiPolynomial:
    return QuasiPolynomial.from_json(json.loads(text))


# -- estimator-style wrapper ----------------------------------------------------


def check_samples(X, y=None) -> tuple[list[int], Optional[list[Fraction]]]:
    """Validate estimator input: ``X`` is a sequence of nonnegative ints (or 1-column rows)."""
    ds = []
    for row in X:
        if isinstance(row, (list, tuple)):
            if len(row) != 1:
                raise InvalidInputError("X must have exactly one column (d)")
            row = row[0]
        if isinstance(row, bool) or int(row) != row or row < 0:
            raise InvalidInputError(f"d must be a nonnegative integer, got {row!r}")
        ds.append(int(row))
    if y is None:
        return ds, None
    ys = [Fraction(v) for v in y]
    if len(ys) != len(ds):
        raise InvalidInputError(f"X has {len(ds)} rows but y has {len(ys)}")
    return ds, ys


class QuasiPolynomialRegressor:
    """Fit/predict wrapper around :func:`fit_with_report` with estimator-style params.

    ``predict`` returns exact ``Fraction`` values.
    """

    def __init__(self, max_degree: int = 6, max_period: int = DEFAULT_MAX_PERIOD, drop_prefix: int = 0):
        self.max_degree = max_degree
        self.max_period = max_period
        self.drop_prefix = drop_prefix

    def get_params(self, deep: bool = True) -> dict:
        return {"max_degree": self.max_degree, "max_period": self.max_period,
                "drop_prefix": self.drop_prefix}

    def set_params(self, **params) -> "QuasiPolynomialRegressor":
        for key, value in params.items():
            if key not in self.get_params():
                raise InvalidInputError(f"unknown parameter {key!r}")
            setattr(self, key, value)
        return self

    def fit(self, X, y) -> "QuasiPolynomialRegressor":
        ds, ys = check_samples(X, y)
        self.report_ = fit_with_report(zip(ds, ys), self.max_degree, self.max_period, self.drop_prefix)
        self.quasipolynomial_ = self.report_.q
        return self

    def predict(self, X) -> list[Fraction]:
        if not hasattr(self, "quasipolynomial_"):
            raise InvalidInputError("call fit before predict")
        ds, _ = check_samples(X)
        return [evaluate(self.quasipolynomial_, d) for d in ds]
