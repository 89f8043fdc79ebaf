"""Exact-rational assembly of the bound constants: the generic image density
mu_d, the leading sqrt(q) coefficient from the representation/L-degree data,
the coarse error constants, the sharp quartic additive ledger, and the
pass/fail verdict for the quartic inequality |N_f - 5q/8| <= sqrt(q)/2 + 15/4.

All verdict comparisons are exact integer arithmetic (squared), never
floating point, so boundary decisions are platform-independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .artin import LDegreeTable
from .errors import BadFieldError, IndexMismatchError, InvalidDegreeError
from .symrep import Partition, ReprTable

MAX_MU_DEGREE = 12


def mu(d: int) -> Fraction:
    """Density of the image of a generic degree-d map:
    sum_{r=1}^d (-1)^(r-1) / r!  (-> 1 - 1/e)."""
    if not 1 <= d <= MAX_MU_DEGREE:
        raise InvalidDegreeError(f"mu supported for 1 <= d <= {MAX_MU_DEGREE}")
    return sum(
        (Fraction((-1) ** (r - 1), math.factorial(r)) for r in range(1, d + 1)),
        Fraction(0),
    )


@dataclass(frozen=True)
class BoundReport:
    """Leading coefficient of the sqrt(q) term with its per-module breakdown,
    plus the additive error term used by the pipeline (the sharp 15/4 ledger
    for quartics, the coarse theorem constant otherwise)."""

    d: int
    mu_d: Fraction
    leading: Fraction
    additive: Fraction | float
    per_rho: tuple[tuple[Partition, Fraction, int, Fraction], ...]

    def render(self) -> str:
        lines = ["partition alt_sum degL contribution"]
        for mu_, alt, deg, contrib in self.per_rho:
            lines.append(f"({','.join(map(str, mu_))}) {alt} {deg} {contrib}")
        lines.append(f"leading = {self.leading}, additive = {self.additive}")
        return "\n".join(lines)


def theorem_constant(table: ReprTable, degs: LDegreeTable) -> BoundReport:
    """Leading coefficient sum over irreducibles of
    |sum_r (-1)^r m_{rho,r} / r!| * deg L(rho, s), exact."""
    if table.d != degs.d:
        raise IndexMismatchError("representation table and degree table disagree on d")
    if set(table.parts) != set(degs.degrees):
        raise IndexMismatchError("partition indexing mismatch")
    d = table.d
    per_rho = []
    leading = Fraction(0)
    for mu_ in table.parts:
        alt = sum(
            (
                Fraction((-1) ** r * table.multiplicity(mu_, r), math.factorial(r))
                for r in range(2, d + 1)
            ),
            Fraction(0),
        )
        deg = degs.degrees[mu_]
        contrib = abs(alt) * deg
        leading += contrib
        per_rho.append((mu_, alt, deg, contrib))
    additive = quartic_ledger().total if d == 4 else c_of_d(d, "theorem")
    return BoundReport(
        d=d,
        mu_d=mu(d),
        leading=leading,
        additive=additive,
        per_rho=tuple(per_rho),
    )


def c_of_d(d: int, variant: str) -> float:
    """Coarse error constants: the hyperplane-intersection term
    d/2 (e^d - d - 1), the singular-model term d (e^d - d - 1), and their
    combination 3/2 d (e^d - d - 1)."""
    if not 1 <= d <= MAX_MU_DEGREE:
        raise InvalidDegreeError(f"c_of_d supported for 1 <= d <= {MAX_MU_DEGREE}")
    core = d * (math.exp(d) - d - 1)
    if variant == "hyperplane":
        return core / 2
    if variant == "singular":
        return core
    if variant == "theorem":
        return 1.5 * core
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class QuarticLedger:
    """Sharp additive error for the quartic pipeline: the alternating sum of
    closure points at infinity plus the worst-case hyperplane intersections."""

    infinity_part: Fraction
    hyperplane_part: Fraction

    @property
    def total(self) -> Fraction:
        return self.infinity_part + self.hyperplane_part


def quartic_ledger() -> QuarticLedger:
    """3/2! - 6/3! + 6/4! = 3/4 from points at infinity (3 on the pair curve
    over the closure, 6 on each of the triple and quadruple curves), plus the
    hyperplane ledger |a1/2 - a2/6 + a3/24| <= 3 with a1 <= 3, a2 <= 18,
    a3 <= 36."""
    infinity_part = Fraction(3, 2) - Fraction(6, 6) + Fraction(6, 24)
    hyperplane_part = max(
        Fraction(3, 2) + Fraction(36, 24),  # positive terms at their caps
        Fraction(18, 6),  # negative term at its cap
    )
    return QuarticLedger(infinity_part=infinity_part, hyperplane_part=hyperplane_part)


@dataclass(frozen=True)
class QuarticVerdict:
    passed: bool
    margin: float  # slack (in units of N_f) before the bound would fail


def quartic_verdict(q: int, n_f: int) -> QuarticVerdict:
    """Exact test of |N_f - 5q/8| <= sqrt(q)/2 + 15/4.

    Scaled by 8 this is L := |8 N_f - 5q| <= 4 sqrt(q) + 30, decided by the
    integer comparison (L - 30)^2 <= 16 q when L > 30.
    """
    if q < 5 or q % 2 == 0 or q % 3 == 0:
        raise BadFieldError("quartic verdict needs q >= 5 with char != 2, 3")
    left = abs(8 * n_f - 5 * q)
    passed = left <= 30 or (left - 30) ** 2 <= 16 * q
    margin = (4.0 * math.sqrt(q) + 30.0 - left) / 8.0
    return QuarticVerdict(passed=passed, margin=margin)
