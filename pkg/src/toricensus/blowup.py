"""Blowup vectors: reduction, derived parameters, nonexistence, upper bound.

A vector (lambda; delta_1, ..., delta_k) encodes the cohomology class of
a blowup form on the k-fold blowup of the projective plane.  It is
reduced when delta_1 >= ... >= delta_k and delta_1+delta_2+delta_3 <=
lambda; every blowup class contains a unique reduced vector, reached by
Cremona moves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lattice import format_rational


class NotBlowupClassError(ValueError):
    """Reduction produced a non-positive entry: no blowup form in this class."""


@dataclass(frozen=True)
class BlowupVector:
    lam: Fraction
    deltas: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.deltas) < 3:
            raise ValueError(f"need k >= 3 blowup sizes, got {len(self.deltas)}")
        if self.lam <= 0:
            raise ValueError(f"lambda must be positive, got {format_rational(self.lam)}")
        for i, d in enumerate(self.deltas, start=1):
            if d <= 0:
                raise ValueError(f"delta_{i} must be positive, got {format_rational(d)}")

    @property
    def k(self) -> int:
        return len(self.deltas)


@dataclass(frozen=True)
class DerivedParams:
    """delta = lam - d1 - d2, a = lam - d2, b = lam - d1 (reduced vectors only)."""

    delta: Fraction
    a: Fraction
    b: Fraction


@dataclass(frozen=True)
class NonexistenceReport:
    verdict: str  # "none-exist" | "inconclusive"
    reason: str | None

    @property
    def none_exist(self) -> bool:
        return self.verdict == "none-exist"


@dataclass(frozen=True)
class BoundReport:
    bound: int
    conditions: tuple[bool, bool, bool, bool]
    attained: bool


def format_vector(v: BlowupVector) -> str:
    """Render in the input syntax: "lam; d1, d2, ..."."""
    return f"{format_rational(v.lam)}; " + ", ".join(format_rational(d) for d in v.deltas)


def is_reduced(v: BlowupVector) -> bool:
    """delta_1 >= ... >= delta_k and delta_1 + delta_2 + delta_3 <= lambda."""
    d = v.deltas
    return all(d[i] >= d[i + 1] for i in range(len(d) - 1)) and d[0] + d[1] + d[2] <= v.lam


def _require_reduced(v: BlowupVector) -> None:
    if not is_reduced(v):
        raise ValueError(f"vector ({format_vector(v)}) is not reduced")


def reduce(v: BlowupVector) -> BlowupVector:
    """The unique reduced vector in the Cremona orbit of v.

    Repeatedly sorts the deltas and applies the move
    (lam; d1, d2, d3, ...) -> (2 lam - d1 - d2 - d3; lam - d2 - d3,
    lam - d1 - d3, lam - d1 - d2, d4, ...).  Each move strictly decreases
    lambda on a fixed denominator lattice, so the loop terminates; if any
    entry ever drops to <= 0 the input encodes no blowup form.
    """
    lam = v.lam
    deltas = sorted(v.deltas, reverse=True)
    while deltas[0] + deltas[1] + deltas[2] > lam:
        d1, d2, d3 = deltas[0], deltas[1], deltas[2]
        lam, deltas[0], deltas[1], deltas[2] = (
            2 * lam - d1 - d2 - d3,
            lam - d2 - d3,
            lam - d1 - d3,
            lam - d1 - d2,
        )
        if lam <= 0 or any(d <= 0 for d in deltas[:3]):
            raise NotBlowupClassError(
                f"not a blowup class: ({format_vector(v)}) reduces to a non-positive entry"
            )
        deltas.sort(reverse=True)
    return BlowupVector(lam, tuple(deltas))


def derived_params(v: BlowupVector) -> DerivedParams:
    """The seed parameters (delta, a, b) of a reduced vector."""
    _require_reduced(v)
    d = DerivedParams(
        delta=v.lam - v.deltas[0] - v.deltas[1],
        a=v.lam - v.deltas[1],
        b=v.lam - v.deltas[0],
    )
    assert d.delta > 0 and 0 < d.b <= d.a, "reducedness bounds the derived parameters"
    return d


def nonexistence_check(v: BlowupVector) -> NonexistenceReport:
    """Definitive nonexistence criteria; not triggering is inconclusive.

    (a) lam - d1 - d2 = d3 = d4 = d5 = d6 (needs k >= 6);
    (b) d_i = d_{i+1} = ... = d_{i+(i+2)} for some i >= 1 with i+(i+2) <= k.
    """
    _require_reduced(v)
    d = v.deltas
    k = v.k
    if k >= 6:
        delta = v.lam - d[0] - d[1]
        if delta == d[2] == d[3] == d[4] == d[5]:
            return NonexistenceReport(
                "none-exist",
                "criterion (a): lambda - delta_1 - delta_2 = delta_3 = delta_4 = delta_5 = delta_6"
                f" = {format_rational(delta)}",
            )
    for i in range(1, k + 1):  # 1-based start of a run of i+3 equal sizes
        last = i + (i + 2)
        if last > k:
            break
        if all(d[j - 1] == d[i - 1] for j in range(i + 1, last + 1)):
            return NonexistenceReport(
                "none-exist",
                f"criterion (b) with i = {i}: delta_{i} = ... = delta_{last}"
                f" = {format_rational(d[i - 1])}",
            )
    return NonexistenceReport("inconclusive", None)


def bound_report(v: BlowupVector) -> BoundReport:
    """Upper bound (ceil(a/b) + ceil((d1-d2)/b)) * (k+2)!/24 and its conditions.

    attained is the conjunction of (i)-(iv).  Note the bound is not tight
    when delta_1 = delta_2: the square seed has twice the symmetries of a
    generic rectangle, so the census can fall strictly below the bound
    even with all four conditions true.
    """
    _require_reduced(v)
    d = v.deltas
    k = v.k
    a, b = v.lam - d[1], v.lam - d[0]
    c1 = math.ceil(a / b)
    c2 = math.ceil((d[0] - d[1]) / b)
    bound = (c1 + c2) * math.factorial(k + 2) // 24
    tail = sum(d[2:])
    cond_i = c1 * b < v.lam
    cond_ii = all(sum(d[j:]) < d[j - 1] for j in range(3, k))
    cond_iii = tail < v.lam - d[0] - d[1]
    cond_iv = tail < v.lam - c1 * b
    conditions = (cond_i, cond_ii, cond_iii, cond_iv)
    return BoundReport(bound=bound, conditions=conditions, attained=all(conditions))
