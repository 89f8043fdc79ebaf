"""Exact image-set statistics of a polynomial over a finite field: the
preimage spectrum, distinct-tuple counts, the alternating-sum identity
linking them to q - N_f, classical bounds, additive character sums, and the
factorization-shape census used as a statistical genericity test.

Prime fields run on vectorized numpy kernels; extensions fall back to exact
element loops.  The quartic census has a dedicated O(q) fast path: the fiber
size of y gives the number of linear factors of f - y, and the quadratic
class of disc(f - y) separates the two root-free shapes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import ffield, symrep
from .errors import (
    DegenerateCharacterError,
    DomainError,
    InternalInconsistencyError,
    TooLargeError,
    UnsupportedDegreeError,
)
from .ffield import FieldCtx, poly_deg, poly_deriv, poly_eval, poly_gcd, poly_sub, poly_trim

MAX_SPECTRUM_Q = 2**31
MAX_CENSUS_Q = 10**6
MAX_SPECTRUM_DEGREE = 12


@dataclass(frozen=True)
class PreimageSpectrum:
    """m[i-1] counts the y with exactly i distinct preimages under f."""

    q: int
    d: int
    m: tuple[int, ...]
    n_f: int

    def render(self) -> str:
        """Stable text form: `q d m_1 ... m_d N_f`."""
        return f"{self.q} {self.d} " + " ".join(map(str, self.m)) + f" {self.n_f}"


@dataclass(frozen=True)
class BoundsCheck:
    wan_ok: bool
    trivial_ok: bool
    is_permutation: bool


@dataclass(frozen=True)
class CycleCensus:
    """Counts of squarefree factorization shapes of f - y over all y, plus
    the number of critical values (f - y not squarefree)."""

    d: int
    q: int
    counts: dict[tuple[int, ...], int]
    special: int


@dataclass(frozen=True)
class GenericityVerdict:
    verdict: str  # generic-consistent | non-generic | inconclusive
    deviations: dict[tuple[int, ...], float]
    tolerance: float


def _as_int_coeffs(ctx: FieldCtx, f) -> list[int]:
    if ctx.base is not None:
        raise DomainError("prime-field path called with an extension context")
    return [c % ctx.p for c in f]


def preimage_spectrum(ctx: FieldCtx, f) -> PreimageSpectrum:
    """Exact spectrum by evaluating f on every field element and bucketing
    fiber sizes.  N_f = sum of the m_i."""
    f = poly_trim(ctx, list(f))
    d = poly_deg(f)
    if not 1 <= d <= MAX_SPECTRUM_DEGREE:
        raise UnsupportedDegreeError(f"need 1 <= deg f <= {MAX_SPECTRUM_DEGREE}")
    if ctx.q > MAX_SPECTRUM_Q:
        raise TooLargeError("field too large for the dense accumulator")
    if ctx.base is None:
        fiber_sizes = _prime_fiber_sizes(ctx.p, _as_int_coeffs(ctx, f), d)
    else:
        buckets: dict = {}
        for x in ctx.elements():
            y = poly_eval(ctx, f, x)
            buckets[y] = buckets.get(y, 0) + 1
        fiber_sizes = [0] * (d + 1)
        for c in buckets.values():
            fiber_sizes[c] += 1
    m = tuple(fiber_sizes[1 : d + 1])
    spec = PreimageSpectrum(q=ctx.q, d=d, m=m, n_f=sum(m))
    if sum(i * mi for i, mi in enumerate(m, start=1)) != ctx.q:
        raise InternalInconsistencyError("fibers do not partition the field")
    return spec


def _prime_fiber_sizes(p: int, coeffs: list[int], d: int) -> list[int]:
    xs = np.arange(p, dtype=np.int64)
    vals = np.full(p, coeffs[-1], dtype=np.int64)
    for c in reversed(coeffs[:-1]):
        vals = (vals * xs + c) % p
    counts = np.bincount(vals, minlength=p)
    hist = np.bincount(counts, minlength=d + 1)
    return [int(hist[i]) if i < len(hist) else 0 for i in range(d + 1)]


def tuple_counts(s: PreimageSpectrum) -> tuple[int, ...]:
    """n_r' for r = 2..d: ordered r-tuples of distinct elements sharing their
    value, n_r' = sum_{j>=r} j!/(j-r)! * m_j."""
    out = []
    for r in range(2, s.d + 1):
        total = 0
        for j in range(r, s.d + 1):
            total += math.factorial(j) // math.factorial(j - r) * s.m[j - 1]
        out.append(total)
    return tuple(out)


def bsd_identity_check(s: PreimageSpectrum) -> bool:
    """Exact check of sum_{r=2}^d (-1)^r n_r'/r! = q - N_f."""
    n_rp = tuple_counts(s)
    total = Fraction(0)
    for r in range(2, s.d + 1):
        total += Fraction((-1) ** r * n_rp[r - 2], math.factorial(r))
    return total == s.q - s.n_f


def classical_bounds(s: PreimageSpectrum) -> BoundsCheck:
    """Wan's upper bound (non-permutations) and the trivial lower bound,
    both compared in exact rationals."""
    is_perm = s.n_f == s.q
    wan_ok = True if is_perm else Fraction(s.n_f) <= Fraction(s.q) - Fraction(s.q - 1, s.d)
    trivial_ok = Fraction(s.n_f) >= Fraction(s.q, s.d)
    return BoundsCheck(wan_ok=bool(wan_ok), trivial_ok=bool(trivial_ok), is_permutation=is_perm)


def weil_character_sum(ctx: FieldCtx, f, psi_index: int) -> float:
    """|sum_x psi(f(x))| for the additive character picked by psi_index,
    psi(x) = exp(2 pi i Tr(c x) / p).  Double-precision accumulation."""
    if psi_index % ctx.p == 0:
        raise DegenerateCharacterError("psi_index must be nonzero mod p")
    f = poly_trim(ctx, list(f))
    if poly_deg(f) < 1:
        raise UnsupportedDegreeError("need deg f >= 1")
    high_degrees = [i for i in range(2, len(f)) if not ctx.is_zero(f[i])]
    if high_degrees and all(i % ctx.p == 0 for i in high_degrees):
        raise DegenerateCharacterError(
            "f is a polynomial in x^p plus a linear part; the sum degenerates"
        )
    if ctx.base is None:
        p = ctx.p
        coeffs = [c * psi_index % p for c in _as_int_coeffs(ctx, f)]
        xs = np.arange(p, dtype=np.int64)
        vals = np.full(p, coeffs[-1], dtype=np.int64)
        for c in reversed(coeffs[:-1]):
            vals = (vals * xs + c) % p
        angles = vals * (2.0 * np.pi / p)
        return float(abs(np.exp(1j * angles).sum()))
    if ctx.q > MAX_CENSUS_Q:
        raise TooLargeError("extension character sum limited to q <= 1e6")
    c_elem = ctx.embed(psi_index)
    acc = 0j
    for x in ctx.elements():
        tr = ctx.trace(ctx.mul(c_elem, poly_eval(ctx, f, x)))
        acc += cmath.exp(2j * cmath.pi * tr / ctx.p)
    return abs(acc)


# ---------------------------------------------------------------------------
# cycle-type census and the statistical genericity test
# ---------------------------------------------------------------------------


def _shape_to_partition(shape) -> tuple[int, ...]:
    parts: list[int] = []
    for degree, count in shape:
        parts.extend([degree] * count)
    return tuple(sorted(parts, reverse=True))


def cycle_type_census(ctx: FieldCtx, f) -> CycleCensus:
    """For every y: critical values (f - y not squarefree) go to `special`,
    all other y record the factorization shape of f - y as a partition of d."""
    f = poly_trim(ctx, list(f))
    d = poly_deg(f)
    if not 2 <= d <= 8:
        raise UnsupportedDegreeError("census supports 2 <= d <= 8")
    if ctx.q > MAX_CENSUS_Q:
        raise TooLargeError("census limited to q <= 1e6")
    df = poly_deriv(ctx, f)
    if not df:
        raise DomainError("census requires separable f (f' != 0)")

    if ctx.base is None and d == 4 and ctx.p > 3 and f[4] == 1 and f[3] == 0:
        scan = quartic_prime_scan(ctx.p, f[2] % ctx.p, f[1] % ctx.p, coeffs=_as_int_coeffs(ctx, f))
        return CycleCensus(d=4, q=ctx.q, counts=scan.shape_counts, special=scan.special)

    counts: dict[tuple[int, ...], int] = {}
    special = 0
    for y in ctx.elements():
        g = poly_sub(ctx, f, [y])
        if poly_deg(poly_gcd(ctx, g, df)) > 0:
            special += 1
            continue
        part = _shape_to_partition(ffield.factor_shape(ctx, g))
        counts[part] = counts.get(part, 0) + 1
    census = CycleCensus(d=d, q=ctx.q, counts=counts, special=special)
    if sum(counts.values()) + special != ctx.q:
        raise InternalInconsistencyError("census does not cover the field")
    return census


@dataclass(frozen=True)
class QuarticScan:
    """One O(q) pass over a prime field for f = x^4 + a x^2 + b x + (lower):
    spectrum, shape census and critical-value count together."""

    p: int
    m: tuple[int, int, int, int]
    n_f: int
    shape_counts: dict[tuple[int, ...], int]
    special: int


def quartic_disc_coeffs(a: int, b: int, p: int) -> tuple[int, int, int, int]:
    """disc_x(x^4 + a x^2 + b x - t) as a cubic in t, coefficients low-to-high
    mod p: -256 t^3 - 128 a^2 t^2 - (16 a^4 + 144 a b^2) t - (4 a^3 b^2 + 27 b^4)."""
    c0 = -(4 * a**3 * b**2 + 27 * b**4) % p
    c1 = -(16 * a**4 + 144 * a * b**2) % p
    c2 = -128 * a * a % p
    c3 = -256 % p
    return c0, c1, c2, c3


def quartic_prime_scan(p: int, a: int, b: int, coeffs=None) -> QuarticScan:
    """Vectorized spectrum + census for a quartic over F_p (p > 3).

    Shape classification per non-critical y: the fiber size equals the number
    of linear factors (4 -> 1+1+1+1, 2 -> 2+1+1, 1 -> 3+1) and for root-free
    y the shape is 2+2 or 4 according to whether disc(f - y) is a square.
    """
    if p <= 3:
        raise DomainError("quartic scan needs p > 3")
    a %= p
    b %= p
    if coeffs is None:
        coeffs = [0, b, a, 0, 1]
    xs = np.arange(p, dtype=np.int64)
    vals = np.full(p, coeffs[-1] % p, dtype=np.int64)
    for c in reversed(coeffs[:-1]):
        vals = (vals * xs + c % p) % p
    fiber = np.bincount(vals, minlength=p)
    hist = np.bincount(fiber, minlength=5)
    m = tuple(int(hist[i]) for i in range(1, 5))
    n_f = int(np.count_nonzero(fiber))

    # disc(f - y) must be evaluated at y shifted by the constant term of f
    shift = coeffs[0] % p
    c0, c1, c2, c3 = quartic_disc_coeffs(a, b, p)
    ys = (xs - shift) % p if shift else xs
    disc = ((c3 * ys + c2) % p * ys + c1) % p
    disc = (disc * ys + c0) % p

    squares = np.zeros(p, dtype=bool)
    squares[(xs * xs) % p] = True

    critical = disc == 0
    special = int(critical.sum())
    ns = ~critical
    if int((ns & (fiber == 3)).sum()):
        raise InternalInconsistencyError("non-critical fiber of size 3")
    root_free = ns & (fiber == 0)
    counts = {
        (1, 1, 1, 1): int((ns & (fiber == 4)).sum()),
        (2, 1, 1): int((ns & (fiber == 2)).sum()),
        (3, 1): int((ns & (fiber == 1)).sum()),
        (2, 2): int((root_free & squares[disc]).sum()),
        (4,): int((root_free & ~squares[disc]).sum()),
    }
    counts = {shape: n for shape, n in counts.items() if n}
    if sum(counts.values()) + special != p:
        raise InternalInconsistencyError("quartic scan does not cover the field")
    return QuarticScan(p=p, m=m, n_f=n_f, shape_counts=counts, special=special)


def chebotarev_proportions(d: int) -> dict[tuple[int, ...], Fraction]:
    """Expected shape frequencies for the full symmetric group: conjugacy
    class sizes over d!."""
    total = math.factorial(d)
    return {
        sigma: Fraction(symrep.conjugacy_class_size(sigma), total)
        for sigma in symrep.partitions(d)
    }


def genericity_tolerance(q: int) -> float:
    return max(0.02, 5.0 / math.sqrt(q))


def genericity_test(census: CycleCensus, q: int) -> GenericityVerdict:
    """Compare observed shape frequencies with the symmetric-group class
    proportions.  Verdicts: generic-consistent when every deviation is within
    tau(q), non-generic when some deviation exceeds 3*tau(q), else
    inconclusive."""
    if census.d != 4:
        raise UnsupportedDegreeError("genericity predictions built for d = 4")
    predictions = chebotarev_proportions(4)
    tau = genericity_tolerance(q)
    deviations = {
        sigma: abs(census.counts.get(sigma, 0) / q - float(pred))
        for sigma, pred in predictions.items()
    }
    if all(dev <= tau for dev in deviations.values()):
        verdict = "generic-consistent"
    elif any(dev > 3 * tau for dev in deviations.values()):
        verdict = "non-generic"
    else:
        verdict = "inconclusive"
    return GenericityVerdict(verdict=verdict, deviations=deviations, tolerance=tau)


def normalized_deviation(s: PreimageSpectrum) -> tuple[Fraction, float]:
    """(N_f - 5q/8 exactly, the same normalized by sqrt(q) as a float)."""
    if s.d != 4:
        raise UnsupportedDegreeError("normalized deviation defined for quartics")
    excess = Fraction(8 * s.n_f - 5 * s.q, 8)
    return excess, float(excess) / math.sqrt(s.q)
