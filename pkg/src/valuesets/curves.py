"""Point counts on the fiber-product curves attached to a depressed quartic
f = x^4 + a x^2 + b x, and zeta data for the genus-1 pair curve.

The pair curve is (x^2 + y^2 + a)(x + y) = -b; its affine points are counted
by fibering over s = x + y: for fixed nonzero s the pair {x, y} is determined
by one product value, so the number of ordered pairs is 1 + chi(-s^4 - 2as^2
- 2bs) with chi the quadratic character (chi(0) = 0).  The triple curve adds
x^2 + y^2 + z^2 + xy + yz + zx = -a, a quadratic in z solved per pair; the
quadruple curve appends the linear relation x + y + z + w = 0 and has the
same affine count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    HasseViolationError,
    NotSmoothError,
    TooLargeError,
    ZeroBError,
)
from .ffield import FieldCtx, make_prime_field, poly_eval

MAX_T2_PRIME_Q = 10**7
MAX_T2_EXT_Q = 10**6
MAX_T34_PRIME_Q = 10**4
MAX_T34_EXT_Q = 600
MAX_ZETA_P = 3000


@dataclass(frozen=True)
class CurveCounts:
    """Affine points, affine points on some hyperplane x_i = x_j, and
    rational points at infinity of the projective closure."""

    r: int
    q: int
    affine: int
    diagonal: int
    infinity: int

    def render(self) -> str:
        return f"{self.r} {self.q} {self.affine} {self.diagonal} {self.infinity}"


@dataclass(frozen=True)
class LPolynomial:
    """Numerator 1 + c_1 u + ... + c_2g u^2g of the zeta function."""

    genus: int
    coeffs: tuple[int, ...]
    q: int

    def render(self) -> str:
        return f"{self.q} " + " ".join(str(c) for c in self.coeffs)


def sqrt_minus_one(ctx: FieldCtx):
    """A square root of -1, or None when -1 is not a square (q = 3 mod 4)."""
    if ctx.q % 4 != 1:
        return None
    if ctx.base is None:
        p = ctx.p
        n = 2
        while pow(n, (p - 1) // 2, p) != p - 1:
            n += 1
        return pow(n, (p - 1) // 4, p)
    e_target = (ctx.q - 1) // 2
    for k in range(1, ctx.q):
        e = ctx.from_index(k)
        if ctx.pow(e, e_target) != ctx.one():
            return ctx.pow(e, (ctx.q - 1) // 4)
    raise ArithmeticError("no nonsquare found")  # unreachable for q > 1


def t2_points_at_infinity(ctx: FieldCtx) -> int:
    """Rational points at infinity of the projective pair curve: solve the
    degree form (x^2 + y^2)(x + y) = 0 at z = 0."""
    pts = [(ctx.one(), ctx.neg(ctx.one()))]
    i = sqrt_minus_one(ctx)
    if i is not None:
        pts += [(ctx.one(), i), (ctx.one(), ctx.neg(i))]
    count = 0
    for x, y in pts:
        form = ctx.mul(
            ctx.add(ctx.mul(x, x), ctx.mul(y, y)), ctx.add(x, y)
        )
        if ctx.is_zero(form):
            count += 1
    if count != len(pts):
        raise ArithmeticError("candidate infinity point failed verification")
    return count


def _t34_infinity_points(ctx: FieldCtx):
    """Solutions at infinity of the triple-curve system; all six closure
    points involve a square root of -1."""
    i = sqrt_minus_one(ctx)
    if i is None:
        return []
    one = ctx.one()
    neg = ctx.neg
    return [
        (one, neg(one), i),
        (one, neg(one), neg(i)),
        (one, i, neg(one)),
        (one, i, neg(i)),
        (one, neg(i), neg(one)),
        (one, neg(i), i),
    ]


def t3_points_at_infinity(ctx: FieldCtx) -> int:
    count = 0
    for x, y, z in _t34_infinity_points(ctx):
        cubic = ctx.mul(ctx.add(ctx.mul(x, x), ctx.mul(y, y)), ctx.add(x, y))
        quad = ctx.zero()
        for u, v in ((x, x), (y, y), (z, z), (x, y), (y, z), (z, x)):
            quad = ctx.add(quad, ctx.mul(u, v))
        if ctx.is_zero(cubic) and ctx.is_zero(quad):
            count += 1
    return count


T34_INFINITY_CLOSURE = 6  # closure count, independent of the field


def count_t2(ctx: FieldCtx, a, b) -> CurveCounts:
    """Points on (x^2 + y^2 + a)(x + y) = -b: affine count, diagonal (x = y)
    count, and rational points at infinity."""
    a, b = ctx.embed(a) if isinstance(a, int) else a, ctx.embed(b) if isinstance(b, int) else b
    if ctx.is_zero(b):
        raise ZeroBError("pair curve needs b != 0")
    if ctx.base is None:
        if ctx.q > MAX_T2_PRIME_Q:
            raise TooLargeError("pair-curve count limited to q <= 1e7")
        affine, diagonal = _t2_prime(ctx.p, a, b)
    else:
        if ctx.q > MAX_T2_EXT_Q:
            raise TooLargeError("extension pair-curve count limited to q <= 1e6")
        if ctx.base.base is None and ctx.q > 4096:
            affine, diagonal = _t2_ext_vectorized(ctx, a, b)
        else:
            affine, diagonal = _t2_generic(ctx, a, b)
    return CurveCounts(
        r=2, q=ctx.q, affine=affine, diagonal=diagonal,
        infinity=t2_points_at_infinity(ctx),
    )


def _t2_prime(p: int, a: int, b: int) -> tuple[int, int]:
    xs = np.arange(p, dtype=np.int64)
    squares = np.zeros(p, dtype=bool)
    squares[(xs * xs) % p] = True
    # diagonal: roots of (2x^2 + a)(2x) = -b, i.e. 4x^3 + 2ax + b = 0
    t = (4 * xs * xs) % p
    t = (t * xs + 2 * a * xs + b) % p
    diagonal = int((t == 0).sum())
    s = xs[1:]
    s2 = (s * s) % p
    u = (-((s2 * s2) % p + 2 * a * s2 + 2 * b * s)) % p
    nonzero = u != 0
    plus = int((nonzero & squares[u]).sum())
    minus = int((nonzero & ~squares[u]).sum())
    affine = (p - 1) + plus - minus
    return affine, diagonal


def _t2_ext_vectorized(ctx: FieldCtx, a, b) -> tuple[int, int]:
    """Columnwise F_{p^k} arithmetic over index arrays: every element is its
    base-p digit vector, products are convolutions reduced by the modulus."""
    p, k, q = ctx.p, ctx._k, ctx.q
    red = ctx._reduction

    def emul(A, B):
        conv = [0] * (2 * k - 1)
        for i in range(k):
            for j in range(k):
                conv[i + j] = (conv[i + j] + A[i] * B[j]) % p
        out = conv[:k]
        for i in range(k - 1):
            top = conv[k + i]
            row = red[i]
            for j in range(k):
                out[j] = (out[j] + top * int(row[j])) % p
        return out

    idx = np.arange(q, dtype=np.int64)
    cols = [(idx // p**j) % p for j in range(k)]
    s2 = emul(cols, cols)
    squares = np.zeros(q, dtype=bool)
    squares[sum(s2[j] * p**j for j in range(k))] = True
    s4 = emul(s2, s2)
    two_a = [int(c) for c in ctx.mul(ctx.embed(2), a)]
    two_b = [int(c) for c in ctx.mul(ctx.embed(2), b)]
    ta = emul(two_a, s2)
    tb = emul(two_b, cols)
    u_cols = [(-(s4[j] + ta[j] + tb[j])) % p for j in range(k)]
    u_idx = sum(u_cols[j] * p**j for j in range(k))
    u_zero = u_idx == 0
    live = idx != 0
    affine = int((live & u_zero).sum()) + 2 * int((live & ~u_zero & squares[u_idx]).sum())
    # diagonal: 4x^3 + 2ax + b = 0 over all x
    s3 = emul(s2, cols)
    tax = emul(two_a, cols)
    b_cols = [int(c) for c in b]
    v_cols = [(4 * s3[j] + tax[j] + b_cols[j]) % p for j in range(k)]
    v_idx = sum(v_cols[j] * p**j for j in range(k))
    diagonal = int((v_idx == 0).sum())
    return affine, diagonal


def _t2_generic(ctx: FieldCtx, a, b) -> tuple[int, int]:
    squares = set()
    for e in ctx.elements():
        squares.add(ctx.mul(e, e))
    two = ctx.embed(2)
    affine = diagonal = 0
    zero = ctx.zero()
    neg_b = ctx.neg(b)
    for s in ctx.elements():
        if s == zero:
            continue
        s2 = ctx.mul(s, s)
        u = ctx.neg(
            ctx.add(
                ctx.mul(s2, s2),
                ctx.mul(two, ctx.add(ctx.mul(a, s2), ctx.mul(b, s))),
            )
        )
        if u == zero:
            affine += 1
        elif u in squares:
            affine += 2
    for x in ctx.elements():
        x2 = ctx.mul(x, x)
        lhs = ctx.mul(ctx.add(ctx.mul(two, x2), a), ctx.mul(two, x))
        if lhs == neg_b:
            diagonal += 1
    return affine, diagonal


def count_t2_brute(ctx: FieldCtx, a, b) -> CurveCounts:
    """Reference O(q^2) pair scan; kept as the independent oracle for the
    fibered fast path."""
    a, b = ctx.embed(a) if isinstance(a, int) else a, ctx.embed(b) if isinstance(b, int) else b
    if ctx.is_zero(b):
        raise ZeroBError("pair curve needs b != 0")
    if ctx.q > 2000:
        raise TooLargeError("brute pair scan limited to q <= 2000")
    neg_b = ctx.neg(b)
    affine = diagonal = 0
    elems = list(ctx.elements())
    for x in elems:
        x2 = ctx.mul(x, x)
        for y in elems:
            lhs = ctx.mul(ctx.add(ctx.add(x2, ctx.mul(y, y)), a), ctx.add(x, y))
            if lhs == neg_b:
                affine += 1
                if x == y:
                    diagonal += 1
    return CurveCounts(
        r=2, q=ctx.q, affine=affine, diagonal=diagonal,
        infinity=t2_points_at_infinity(ctx),
    )


# ---------------------------------------------------------------------------
# triple and quadruple curves
# ---------------------------------------------------------------------------


def _t34_counts(ctx: FieldCtx, a, b) -> tuple[int, int, int]:
    """(affine, diagonal_t3, diagonal_t4) for the triple curve and its
    isomorphic quadruple curve (w = -(x+y+z) appended)."""
    if ctx.base is None:
        if ctx.q > MAX_T34_PRIME_Q:
            raise TooLargeError("triple-curve count limited to q <= 1e4")
        return _t34_prime(ctx.p, a, b)
    if ctx.q > MAX_T34_EXT_Q:
        raise TooLargeError("extension triple-curve count limited to small q")
    return _t34_generic(ctx, a, b)


def _t34_prime(p: int, a: int, b: int) -> tuple[int, int, int]:
    inv2 = pow(2, p - 2, p)
    ys = np.arange(p, dtype=np.int64)
    y2 = (ys * ys) % p
    sqrt_table = np.full(p, -1, dtype=np.int64)
    sqrt_table[(ys * ys) % p] = ys
    neg_b = (-b) % p
    affine = diag3 = diag4 = 0
    for x in range(p):
        lhs = (((x * x + y2 + a) % p) * ((x + ys) % p)) % p
        on = lhs == neg_b
        if not on.any():
            continue
        yy = ys[on]
        yy2 = y2[on]
        # z^2 + (x+y) z + (x^2 + y^2 + xy + a) = 0
        disc = (-3 * x * x - 3 * yy2 - 2 * x * yy - 4 * a) % p
        t = sqrt_table[disc]
        has = t >= 0
        double = has & (t != 0)
        z1 = ((-(x + yy) + t) * inv2) % p
        z2 = ((-(x + yy) - t) * inv2) % p
        nz = np.where(has, np.where(t == 0, 1, 2), 0)
        affine += int(nz.sum())
        xeqy = yy == x
        diag3 += int(np.where(xeqy, nz, 0).sum())
        z1_in = has & ~xeqy & ((z1 == x) | (z1 == yy))
        z2_in = double & ~xeqy & ((z2 == x) | (z2 == yy))
        diag3 += int(z1_in.sum()) + int(z2_in.sum())
        w1 = (-(x + yy + z1)) % p
        w2 = (-(x + yy + z2)) % p
        z1_d4 = has & (xeqy | (z1 == x) | (z1 == yy) | (w1 == x) | (w1 == yy) | (w1 == z1))
        z2_d4 = double & (xeqy | (z2 == x) | (z2 == yy) | (w2 == x) | (w2 == yy) | (w2 == z2))
        diag4 += int(z1_d4.sum()) + int(z2_d4.sum())
    return affine, diag3, diag4


def _t34_generic(ctx: FieldCtx, a, b) -> tuple[int, int, int]:
    sqrt_of = {}
    for e in ctx.elements():
        sqrt_of[ctx.mul(e, e)] = e
    inv2 = ctx.inv(ctx.embed(2))
    neg_b = ctx.neg(b)
    zero = ctx.zero()
    elems = list(ctx.elements())
    affine = diag3 = diag4 = 0
    four_a = ctx.mul(ctx.embed(4), a)
    for x in elems:
        x2 = ctx.mul(x, x)
        for y in elems:
            y2 = ctx.mul(y, y)
            lhs = ctx.mul(ctx.add(ctx.add(x2, y2), a), ctx.add(x, y))
            if lhs != neg_b:
                continue
            xy = ctx.mul(x, y)
            disc = ctx.neg(
                ctx.add(
                    ctx.add(ctx.mul(ctx.embed(3), ctx.add(x2, y2)), ctx.mul(ctx.embed(2), xy)),
                    four_a,
                )
            )
            if disc not in sqrt_of:
                continue
            t = sqrt_of[disc]
            roots = [ctx.mul(ctx.add(ctx.neg(ctx.add(x, y)), t), inv2)]
            if t != zero:
                roots.append(ctx.mul(ctx.sub(ctx.neg(ctx.add(x, y)), t), inv2))
            affine += len(roots)
            for z in roots:
                w = ctx.neg(ctx.add(ctx.add(x, y), z))
                if x == y or z == x or z == y:
                    diag3 += 1
                if x == y or z == x or z == y or w == x or w == y or w == z:
                    diag4 += 1
    return affine, diag3, diag4


def count_t3(ctx: FieldCtx, a, b) -> CurveCounts:
    """Points on the triple curve: pair-curve equation plus
    x^2+y^2+z^2+xy+yz+zx = -a."""
    a, b = ctx.embed(a) if isinstance(a, int) else a, ctx.embed(b) if isinstance(b, int) else b
    if ctx.is_zero(b):
        raise ZeroBError("triple curve needs b != 0")
    affine, diag3, _ = _t34_counts(ctx, a, b)
    return CurveCounts(
        r=3, q=ctx.q, affine=affine, diagonal=diag3,
        infinity=t3_points_at_infinity(ctx),
    )


def count_t4(ctx: FieldCtx, a, b) -> CurveCounts:
    """The quadruple curve: same equations plus x+y+z+w = 0; isomorphic to
    the triple curve, so the affine counts agree while the diagonal spans
    all six coordinate-pair hyperplanes."""
    a, b = ctx.embed(a) if isinstance(a, int) else a, ctx.embed(b) if isinstance(b, int) else b
    if ctx.is_zero(b):
        raise ZeroBError("quadruple curve needs b != 0")
    affine, _, diag4 = _t34_counts(ctx, a, b)
    return CurveCounts(
        r=4, q=ctx.q, affine=affine, diagonal=diag4,
        infinity=t3_points_at_infinity(ctx),
    )


# ---------------------------------------------------------------------------
# zeta data for the pair curve
# ---------------------------------------------------------------------------


def is_smooth_pair_curve(p: int, a: int, b: int) -> bool:
    """The projective pair curve is smooth iff b != 0 and 8a^3 + 27b^2 != 0.

    (Singular points solve x = y, 6x^2 + a = 0, x = -3b/4a, which forces
    27b^2 = -8a^3; the same locus makes disc_x(f - t) lose a root: its
    t-discriminant is -2^16 b^2 (8a^3 + 27b^2)^3.)
    """
    return b % p != 0 and (8 * a**3 + 27 * b * b) % p != 0


def _t2_affine_fp2(p: int, a: int, b: int) -> int:
    """Affine pair-curve count over F_{p^2} modeled as F_p[w]/(w^2 - c) with
    c the least quadratic nonresidue; vectorized over v for each u."""
    c = 2
    while pow(c, (p - 1) // 2, p) != p - 1:
        c += 1
    vs = np.arange(p, dtype=np.int64)
    # squares table over F_{p^2}, indexed by u*p + v
    squares = np.zeros(p * p, dtype=bool)
    for u in range(p):
        s0 = (u * u + c * vs * vs) % p
        s1 = (2 * u * vs) % p
        squares[s0 * p + s1] = True
    affine = 0
    for u in range(p):
        # s = u + v w; s2 = s^2, s4 = s2^2 componentwise
        s2_0 = (u * u + c * vs * vs) % p
        s2_1 = (2 * u * vs) % p
        s4_0 = (s2_0 * s2_0 + c * s2_1 * s2_1) % p
        s4_1 = (2 * s2_0 * s2_1) % p
        d0 = (-(s4_0 + 2 * a * s2_0 + 2 * b * u)) % p
        d1 = (-(s4_1 + 2 * a * s2_1 + 2 * b * vs)) % p
        live = np.ones(p, dtype=bool)
        if u == 0:
            live[0] = False  # skip s = 0
        dzero = (d0 == 0) & (d1 == 0)
        issq = squares[d0 * p + d1]
        affine += int((live & dzero).sum())
        affine += 2 * int((live & ~dzero & issq).sum())
    return affine


def t2_l_polynomial(p: int, a: int, b: int) -> LPolynomial:
    """Extract 1 + c1 u + c2 u^2 from exact counts over F_p and F_{p^2};
    the functional equation forces c2 = q and the Weil bound c1^2 <= 4q,
    both verified before returning."""
    if p > MAX_ZETA_P:
        raise TooLargeError(f"zeta extraction limited to p <= {MAX_ZETA_P}")
    ctx = make_prime_field(p)
    a %= p
    b %= p
    if b == 0:
        raise ZeroBError("pair curve needs b != 0")
    if not is_smooth_pair_curve(p, a, b):
        raise NotSmoothError("8a^3 + 27b^2 = 0: the pair curve is singular")
    n1 = count_t2(ctx, a, b)
    n1_total = n1.affine + n1.infinity
    q2 = p * p
    # p odd, so q2 = 1 mod 4 and all three infinity points are rational
    n2_total = _t2_affine_fp2(p, a, b) + 3
    c1 = n1_total - p - 1
    num = n2_total - q2 - 1 + c1 * c1
    if num % 2 != 0:
        raise HasseViolationError("inconsistent counts over F_p and F_{p^2}")
    c2 = num // 2
    if c2 != p or c1 * c1 > 4 * p:
        raise HasseViolationError(
            f"extracted (c1, c2) = ({c1}, {c2}) violates the Weil constraints"
        )
    return LPolynomial(genus=1, coeffs=(c1, c2), q=p)


def u_of(P: LPolynomial, n: int) -> int:
    """n-th power sum of the inverse roots of P, by Newton's identities in
    exact integers."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = len(P.coeffs)
    if k == 0:
        return 0
    e = [0] * (k + 1)
    for i in range(1, k + 1):
        e[i] = (-1) ** i * P.coeffs[i - 1]
    ps: list[int] = []
    for m in range(1, n + 1):
        upper = min(m - 1, k)
        val = sum((-1) ** (i - 1) * e[i] * ps[m - i - 1] for i in range(1, upper + 1))
        if m <= k:
            val += (-1) ** (m - 1) * m * e[m]
        ps.append(val)
    return ps[-1]


def predicted_count(P: LPolynomial, n: int) -> int:
    """#X(F_{q^n}) = q^n + 1 - U(P, n) for the smooth projective model."""
    return P.q**n + 1 - u_of(P, n)
