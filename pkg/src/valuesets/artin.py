"""Ramification of f(x) - t over the rational function field and tame Artin
L-function degrees.

For the depressed families (x^4 + ax^2 + bx, x^3 + ax + b, x^2 + bx) the
discriminant of f(x) - t is an explicit polynomial D(t) of degree d - 1.  Its
irreducible factors are the finite ramified places; the inertia cycle type at
a place is read off from the root multiplicities of f(x) - t0 over the
place's residue field, which we build directly as ctx[t]/(factor) so no root
search in large fields is ever needed.  The place at infinity is totally
ramified with inertia type (d).

Degrees use the full Euler-characteristic form for the rational base:
deg L(rho, s) = -2 dim rho + sum over all ramified places (infinity included)
of deg P * (dim rho - dim of the inertia-fixed subspace).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ffield
from .errors import (
    CrossCheckFailedError,
    IndexMismatchError,
    InternalInconsistencyError,
    InvalidDegreeError,
    WildRamificationError,
    ZeroBError,
)
from .ffield import (
    FieldCtx,
    distinct_degree_pieces,
    equal_degree_factors,
    poly_deg,
    poly_deriv,
    poly_divmod,
    poly_gcd,
    poly_monic,
    poly_trim,
)
from .symrep import (
    Partition,
    check_partition,
    fixed_dim,
    hook_dimension,
    partitions,
    repr_table,
)

SUPPORTED_FAMILIES = (2, 3, 4)


@dataclass(frozen=True)
class RamificationProfile:
    """Finite ramified places as (place degree, inertia cycle type), plus the
    totally ramified place at infinity."""

    d: int
    finite_places: tuple[tuple[int, Partition], ...]
    infinity: Partition
    disc_degree: int
    simple_branching: bool


def family_poly(ctx: FieldCtx, a, b, d: int = 4) -> list:
    """The depressed family member: x^4+ax^2+bx, x^3+ax+b or x^2+bx."""
    if d == 4:
        return poly_trim(ctx, [ctx.zero(), b, a, ctx.zero(), ctx.one()])
    if d == 3:
        return poly_trim(ctx, [b, a, ctx.zero(), ctx.one()])
    if d == 2:
        return poly_trim(ctx, [ctx.zero(), b, ctx.one()])
    raise InvalidDegreeError(f"no family of degree {d}")


def discriminant_in_t(ctx: FieldCtx, a, b, d: int = 4) -> list:
    """disc_x(f(x) - t) as a polynomial in t, coefficients low-to-high."""
    mul, add, neg, emb = ctx.mul, ctx.add, ctx.neg, ctx.embed
    if d == 4:
        a2 = mul(a, a)
        a3 = mul(a2, a)
        b2 = mul(b, b)
        c0 = neg(add(mul(emb(4), mul(a3, b2)), mul(emb(27), mul(b2, b2))))
        c1 = neg(add(mul(emb(16), mul(a2, a2)), mul(emb(144), mul(a, b2))))
        c2 = mul(emb(-128), a2)
        c3 = emb(-256)
        return poly_trim(ctx, [c0, c1, c2, c3])
    if d == 3:
        a3 = mul(mul(a, a), a)
        b2 = mul(b, b)
        c0 = neg(add(mul(emb(4), a3), mul(emb(27), b2)))
        c1 = mul(emb(54), b)
        c2 = emb(-27)
        return poly_trim(ctx, [c0, c1, c2])
    if d == 2:
        return poly_trim(ctx, [mul(b, b), emb(4)])
    raise InvalidDegreeError(f"no family of degree {d}")


def _lift(ctx: FieldCtx, residue: FieldCtx, c):
    """Embed a ctx element as a constant of the residue extension."""
    if residue is ctx:
        return c
    k = len(residue.modulus) - 1
    return (c,) + (ctx.zero(),) * (k - 1)


def _inertia_type(ctx: FieldCtx, f, factor, k: int, d: int) -> Partition:
    """Cycle type of an inertia generator at the place cut out by `factor`:
    multiplicity e with total factor-degree w contributes w cycles of
    length e."""
    if k == 1:
        residue = ctx
        t0 = ctx.neg(factor[0])
        g = list(f)
        g[0] = ctx.sub(g[0], t0)
    else:
        residue = ffield.extension_of(ctx, factor)
        t0 = residue.gen()
        g = [_lift(ctx, residue, c) for c in f]
        g[0] = residue.sub(g[0], t0)
    parts: list[int] = []
    for mult, width in ffield.multiplicity_profile(residue, g):
        parts.extend([mult] * width)
    parts.sort(reverse=True)
    if sum(parts) != d:
        raise InternalInconsistencyError("inertia type does not partition d")
    return tuple(parts)


def ramification_profile(ctx: FieldCtx, a, b, d: int = 4) -> RamificationProfile:
    """Ramification data of f(x) - t for one member of the depressed family.

    Requires tame characteristic (p > d); the quartic family also requires
    b != 0.  Degenerate members (repeated critical values) are returned with
    simple_branching = False rather than rejected.
    """
    if d not in SUPPORTED_FAMILIES:
        raise InvalidDegreeError(f"supported family degrees: {SUPPORTED_FAMILIES}")
    if ctx.p <= d:
        raise WildRamificationError(f"need p > {d} for tame ramification")
    a = ctx.embed(a) if isinstance(a, int) else a
    b = ctx.embed(b) if isinstance(b, int) else b
    if d == 4 and ctx.is_zero(b):
        raise ZeroBError("quartic family needs b != 0")

    disc = discriminant_in_t(ctx, a, b, d)
    if poly_deg(disc) != d - 1:
        raise InternalInconsistencyError("disc_t must have degree d - 1")
    d_disc = poly_deriv(ctx, disc)
    common = poly_gcd(ctx, disc, d_disc)
    simple = poly_deg(common) == 0
    radical = poly_monic(ctx, poly_divmod(ctx, disc, common)[0])

    f = family_poly(ctx, a, b, d)
    places: list[tuple[int, Partition]] = []
    for k, piece in distinct_degree_pieces(ctx, radical):
        if poly_deg(piece) == k:
            factors = [piece]
        else:
            factors = equal_degree_factors(ctx, piece, k)
        for factor in factors:
            places.append((k, _inertia_type(ctx, f, factor, k, d)))
    places.sort()

    # tame Riemann-Hurwitz for the x-line over the t-line
    total = sum(deg * (d - len(sigma)) for deg, sigma in places) + (d - 1)
    if total != 2 * d - 2:
        raise InternalInconsistencyError(
            f"Riemann-Hurwitz mismatch: {total} != {2 * d - 2}"
        )
    return RamificationProfile(
        d=d,
        finite_places=tuple(places),
        infinity=(d,),
        disc_degree=poly_deg(disc),
        simple_branching=simple,
    )


def tame_l_degree(mu, prof: RamificationProfile) -> int:
    """Degree of the Artin L-polynomial of the irreducible module `mu` for a
    tame cover of the projective line, infinity included.  The trivial module
    has L = 1."""
    mu = check_partition(mu)
    if sum(mu) != prof.d:
        raise IndexMismatchError("partition and profile disagree on d")
    if mu == (prof.d,):
        return 0
    dim = hook_dimension(mu)
    conductor = sum(
        deg * (dim - fixed_dim(mu, sigma)) for deg, sigma in prof.finite_places
    )
    conductor += dim - fixed_dim(mu, prof.infinity)
    degree = -2 * dim + conductor
    if degree < 0:
        raise InternalInconsistencyError(
            f"negative L-degree {degree} for {mu}: conductor bookkeeping bug"
        )
    return degree


@dataclass(frozen=True)
class LDegreeTable:
    d: int
    degrees: dict[Partition, int]

    def render(self) -> str:
        lines = ["partition dim degL"]
        for mu, deg in self.degrees.items():
            lines.append(
                f"({','.join(map(str, mu))}) {hook_dimension(mu)} {deg}"
            )
        return "\n".join(lines)


def l_degree_table(ctx: FieldCtx, a, b, d: int = 4) -> LDegreeTable:
    """L-degrees for every irreducible module of S_d on one family member.

    For the quartic the two zeta cross-sums pin the table: the pair curve has
    a degree-2 L-polynomial and the triple curve a degree-8 one; profiles
    that fail those sums (degenerate members) raise CrossCheckFailedError.
    """
    prof = ramification_profile(ctx, a, b, d)
    degrees = {mu: tame_l_degree(mu, prof) for mu in partitions(d)}
    if d == 4:
        table = repr_table(4)
        s2 = sum(
            table.multiplicity(mu, 2) * degrees[mu]
            for mu in partitions(4)
            if mu != (4,)
        )
        s3 = sum(
            table.multiplicity(mu, 3) * degrees[mu]
            for mu in partitions(4)
            if mu != (4,)
        )
        if s2 != 2 or s3 != 8:
            raise CrossCheckFailedError(
                f"degenerate member: cross-sums ({s2}, {s3}) != (2, 8)"
            )
    return LDegreeTable(d=d, degrees=degrees)
