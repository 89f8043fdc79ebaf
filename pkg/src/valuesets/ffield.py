"""Exact arithmetic in F_p and its extensions, univariate polynomials over them,
and factorization-shape primitives (gcd, Frobenius powers, distinct-degree
shapes, multiplicity profiles).

Element representation: plain ints for prime fields, fixed-length tuples of
base-field elements for extensions (low-to-high coefficients of the residue
class modulo the context's modulus).  Polynomials are lists/tuples of context
elements, low-to-high, with no trailing zeros; the zero polynomial is ().

Everything here is a pure function of its arguments; FieldCtx is immutable
after construction and safe to share.
"""

from __future__ import annotations

import random
from itertools import product

from .errors import (
    InvalidDegreeError,
    NotPrimeError,
    NotSquarefreeError,
    TooLargeError,
)

MAX_FIELD_SIZE = 2**40

# Witnesses proving primality for every n < 3.3e24 (covers the 2^40 cap many
# times over).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the sizes this package accepts."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldCtx:
    """A finite field: the prime field F_p or an extension of another context.

    Attributes:
        p: characteristic.
        m: total extension degree over F_p.
        q: field size p**m.
        base: base context (None for prime fields).
        modulus: monic irreducible polynomial over `base` defining the
            extension (None for prime fields), coefficients low-to-high.
    """

    def __init__(self, p, base=None, modulus=None):
        self.p = p
        self.base = base
        if base is None:
            self.modulus = None
            self.m = 1
            self.q = p
        else:
            self.modulus = tuple(modulus)
            k = len(modulus) - 1
            self.m = base.m * k
            self.q = base.q**k
            self._k = k
            # x^(k+i) mod modulus for i in 0..k-2, precomputed for reduction
            red = []
            cur = [base.neg(c) for c in modulus[:-1]]
            red.append(list(cur))
            for _ in range(k - 2):
                top = cur[-1]
                cur = [base.zero()] + cur[:-1]
                for j in range(k):
                    cur[j] = base.add(cur[j], base.mul(top, red[0][j]))
                red.append(list(cur))
            self._reduction = [tuple(r) for r in red]

    # -- element constructors -------------------------------------------------

    def zero(self):
        return 0 if self.base is None else (self.base.zero(),) * self._k

    def one(self):
        if self.base is None:
            return 1
        return (self.base.one(),) + (self.base.zero(),) * (self._k - 1)

    def embed(self, n: int):
        """Embed an integer (via F_p) as a field element."""
        if self.base is None:
            return n % self.p
        return (self.base.embed(n),) + (self.base.zero(),) * (self._k - 1)

    def gen(self):
        """The residue class of x modulo the modulus (extension fields only)."""
        if self.base is None:
            raise InvalidDegreeError("prime field has no extension generator")
        e = [self.base.zero()] * self._k
        e[1] = self.base.one()
        return tuple(e)

    # -- arithmetic ------------------------------------------------------------

    def add(self, a, b):
        if self.base is None:
            return (a + b) % self.p
        return tuple(map(self.base.add, a, b))

    def sub(self, a, b):
        if self.base is None:
            return (a - b) % self.p
        return tuple(map(self.base.sub, a, b))

    def neg(self, a):
        if self.base is None:
            return -a % self.p
        return tuple(map(self.base.neg, a))

    def mul(self, a, b):
        if self.base is None:
            return a * b % self.p
        k, base = self._k, self.base
        conv = [base.zero()] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai == base.zero():
                continue
            for j, bj in enumerate(b):
                conv[i + j] = base.add(conv[i + j], base.mul(ai, bj))
        out = conv[:k]
        for i in range(k - 1):
            top = conv[k + i]
            if top == base.zero():
                continue
            row = self._reduction[i]
            for j in range(k):
                out[j] = base.add(out[j], base.mul(top, row[j]))
        return tuple(out)

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def inv(self, a):
        if self.base is None:
            if a % self.p == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, self.p - 2, self.p)
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid between the element (as a base polynomial) and the
        # modulus, all over the base field
        base = self.base
        r1 = list(a)
        while r1 and r1[-1] == base.zero():
            r1.pop()
        r0 = list(self.modulus)
        s0, s1 = [], [base.one()]
        while r1:
            q, r = _poly_divmod(base, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(base, s0, _poly_mul(base, q, s1))
        lead_inv = base.inv(r0[-1])
        s0 = [base.mul(lead_inv, c) for c in s0]
        s0 += [base.zero()] * (self._k - len(s0))
        return tuple(s0)

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        if self.base is None:
            return pow(a, n, self.p)
        result, b = self.one(), a
        while n:
            if n & 1:
                result = self.mul(result, b)
            b = self.mul(b, b)
            n >>= 1
        return result

    def trace(self, a) -> int:
        """Absolute trace F_q -> F_p, returned as an int in [0, p)."""
        acc, cur = self.zero(), a
        for _ in range(self.m):
            acc = self.add(acc, cur)
            cur = self.pow(cur, self.p)
        n = self.to_index(acc)
        if n >= self.p:
            raise ArithmeticError("trace left the prime field")
        return n

    # -- enumeration and codecs -------------------------------------------------

    def elements(self):
        """Iterate all q elements (index order)."""
        if self.base is None:
            yield from range(self.p)
        else:
            for digits in product(list(self.base.elements()), repeat=self._k):
                yield digits

    def to_index(self, a) -> int:
        if self.base is None:
            return a
        n = 0
        for c in reversed(a):
            n = n * self.base.q + self.base.to_index(c)
        return n

    def from_index(self, n: int):
        if self.base is None:
            return n % self.p
        digits = []
        for _ in range(self._k):
            digits.append(self.base.from_index(n % self.base.q))
            n //= self.base.q
        return tuple(digits)

    def elem_to_text(self, a) -> str:
        """Comma-separated residues, low-to-high, e.g. "4,0,1" in F_{p^3}."""
        if self.base is None:
            return str(a)
        return ",".join(self.base.elem_to_text(c) for c in a)

    def elem_from_text(self, s: str):
        parts = [int(t) for t in s.split(",")]
        if self.base is None:
            if len(parts) != 1:
                raise ValueError("prime-field element is a single residue")
            return parts[0] % self.p
        if len(parts) != self.m or self.base.base is not None:
            raise ValueError(f"expected {self.m} residues for this field")
        return tuple(parts_i % self.p for parts_i in parts)

    def __repr__(self):
        if self.base is None:
            return f"FieldCtx(F_{self.p})"
        return f"FieldCtx(F_{self.p}^{self.m})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))


def make_prime_field(p: int) -> FieldCtx:
    """The prime field F_p.  Primality is certified before construction."""
    if p > MAX_FIELD_SIZE:
        raise TooLargeError(f"p = {p} exceeds the 2^40 field cap")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return FieldCtx(p)


def make_extension(p: int, m: int, seed: int = 0) -> FieldCtx:
    """F_{p^m} with a seeded-deterministic irreducible modulus over F_p.

    Monic degree-m polynomials are drawn in a pseudorandom order fixed by
    `seed`; the first irreducible one becomes the modulus.
    """
    if not 1 <= m <= 8:
        raise InvalidDegreeError("extension degree must be in 1..8")
    base = make_prime_field(p)
    if p**m > MAX_FIELD_SIZE:
        raise TooLargeError(f"p^m = {p**m} exceeds the 2^40 field cap")
    if m == 1:
        return base
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randrange(p) for _ in range(m)] + [1]
        if is_irreducible(base, coeffs):
            return extension_of(base, coeffs)


def extension_of(ctx: FieldCtx, modulus) -> FieldCtx:
    """Extension of an arbitrary context by a monic irreducible modulus.

    Used internally to build residue fields at places of higher degree;
    the modulus is re-verified irreducible.
    """
    modulus = list(modulus)
    if len(modulus) < 2 or modulus[-1] != ctx.one():
        raise InvalidDegreeError("modulus must be monic of degree >= 1")
    if len(modulus) == 2:
        # degree-1 residue field is the context itself
        raise InvalidDegreeError("degree-1 modulus defines no proper extension")
    if not is_irreducible(ctx, modulus):
        raise InvalidDegreeError("modulus is reducible")
    if ctx.q ** (len(modulus) - 1) > MAX_FIELD_SIZE:
        raise TooLargeError("extension exceeds the 2^40 field cap")
    return FieldCtx(ctx.p, base=ctx, modulus=modulus)


def field_arith(ctx: FieldCtx, op: str, a, b=None):
    """Dispatch a single arithmetic operation: add|sub|mul|inv|pow.

    For pow, `b` is an integer exponent; inv takes no second operand.
    """
    if op == "add":
        return ctx.add(a, b)
    if op == "sub":
        return ctx.sub(a, b)
    if op == "mul":
        return ctx.mul(a, b)
    if op == "inv":
        return ctx.inv(a)
    if op == "pow":
        return ctx.pow(a, b)
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# polynomials over a context: lists of elements, low-to-high, trimmed
# ---------------------------------------------------------------------------


def poly_trim(ctx: FieldCtx, coeffs) -> list:
    coeffs = list(coeffs)
    z = ctx.zero()
    while coeffs and coeffs[-1] == z:
        coeffs.pop()
    return coeffs


def poly_deg(g) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(g) - 1


def poly_from_ints(ctx: FieldCtx, ints) -> list:
    return poly_trim(ctx, [ctx.embed(c) for c in ints])


def poly_to_text(ctx: FieldCtx, g) -> str:
    """Low-to-high, comma-separated (prime fields), e.g. "4,0,1" for x^2+4."""
    return ",".join(ctx.elem_to_text(c) for c in g)


def poly_add(ctx: FieldCtx, A, B) -> list:
    n = max(len(A), len(B))
    z = ctx.zero()
    out = [
        ctx.add(A[i] if i < len(A) else z, B[i] if i < len(B) else z)
        for i in range(n)
    ]
    return poly_trim(ctx, out)


def poly_sub(ctx: FieldCtx, A, B) -> list:
    n = max(len(A), len(B))
    z = ctx.zero()
    out = [
        ctx.sub(A[i] if i < len(A) else z, B[i] if i < len(B) else z)
        for i in range(n)
    ]
    return poly_trim(ctx, out)


def poly_mul(ctx: FieldCtx, A, B) -> list:
    if not A or not B:
        return []
    z = ctx.zero()
    out = [z] * (len(A) + len(B) - 1)
    for i, ai in enumerate(A):
        if ai == z:
            continue
        for j, bj in enumerate(B):
            out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
    return poly_trim(ctx, out)


def poly_scale(ctx: FieldCtx, c, A) -> list:
    return poly_trim(ctx, [ctx.mul(c, ai) for ai in A])


def poly_divmod(ctx: FieldCtx, A, B):
    if not B:
        raise ZeroDivisionError("polynomial division by zero")
    return _poly_divmod(ctx, list(A), list(B))


def _poly_divmod(ctx, A, B):
    z = ctx.zero()
    lead_inv = ctx.inv(B[-1])
    rem = list(A)
    if len(rem) < len(B):
        return [], poly_trim(ctx, rem)
    quot = [z] * (len(rem) - len(B) + 1)
    for i in range(len(rem) - len(B), -1, -1):
        c = rem[i + len(B) - 1]
        if c == z:
            continue
        f = ctx.mul(c, lead_inv)
        quot[i] = f
        for j, bj in enumerate(B):
            rem[i + j] = ctx.sub(rem[i + j], ctx.mul(f, bj))
    return poly_trim(ctx, quot), poly_trim(ctx, rem)


def _poly_mul(ctx, A, B):
    return poly_mul(ctx, A, B)


def _poly_sub(ctx, A, B):
    return poly_sub(ctx, A, B)


def poly_mod(ctx: FieldCtx, A, B) -> list:
    return poly_divmod(ctx, A, B)[1]


def poly_monic(ctx: FieldCtx, A) -> list:
    if not A:
        return []
    if A[-1] == ctx.one():
        return list(A)
    return poly_scale(ctx, ctx.inv(A[-1]), A)


def poly_gcd(ctx: FieldCtx, A, B) -> list:
    """Monic gcd; gcd(A, 0) = monic(A).  Both zero is rejected."""
    A, B = poly_trim(ctx, A), poly_trim(ctx, B)
    if not A and not B:
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    while B:
        A, B = B, poly_mod(ctx, A, B)
    return poly_monic(ctx, A)


def poly_deriv(ctx: FieldCtx, A) -> list:
    out = []
    for i in range(1, len(A)):
        c = A[i]
        out.append(ctx.mul(ctx.embed(i), c))
    return poly_trim(ctx, out)


def poly_eval(ctx: FieldCtx, A, x):
    acc = ctx.zero()
    for c in reversed(A):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def poly_pow_mod(ctx: FieldCtx, A, n: int, M) -> list:
    """A^n mod M by square-and-multiply; n may be arbitrarily large."""
    result = [ctx.one()]
    A = poly_mod(ctx, A, M)
    while n:
        if n & 1:
            result = poly_mod(ctx, poly_mul(ctx, result, A), M)
        A = poly_mod(ctx, poly_mul(ctx, A, A), M)
        n >>= 1
    return result


def _x_poly(ctx) -> list:
    return [ctx.zero(), ctx.one()]


def frobenius_power(ctx: FieldCtx, k: int, g) -> list:
    """x^(q^k) mod g, by k rounds of q-th powering mod g."""
    g = poly_trim(ctx, g)
    if poly_deg(g) < 1:
        raise InvalidDegreeError("modulus must have degree >= 1")
    h = poly_mod(ctx, _x_poly(ctx), g)
    for _ in range(k):
        h = poly_pow_mod(ctx, h, ctx.q, g)
    return h


def is_irreducible(ctx: FieldCtx, g) -> bool:
    """Irreducibility over ctx via Frobenius fixed-point tests."""
    g = poly_monic(ctx, poly_trim(ctx, g))
    n = poly_deg(g)
    if n < 1:
        return False
    if n == 1:
        return True
    x = _x_poly(ctx)
    h = frobenius_power(ctx, n, g)
    if poly_sub(ctx, h, poly_mod(ctx, x, g)):
        return False
    for ell in _prime_divisors(n):
        h = frobenius_power(ctx, n // ell, g)
        if poly_deg(poly_gcd(ctx, poly_sub(ctx, h, x), g)) != 0:
            return False
    return True


def _prime_divisors(n: int):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# factorization shapes
# ---------------------------------------------------------------------------


def distinct_degree_pieces(ctx: FieldCtx, g):
    """Distinct-degree split of a squarefree monic g: list of (i, piece) where
    piece is the product of all irreducible factors of degree i."""
    v = poly_monic(ctx, g)
    x = _x_poly(ctx)
    h = poly_mod(ctx, x, v)
    pieces = []
    i = 0
    while poly_deg(v) >= 2 * (i + 1):
        i += 1
        h = poly_pow_mod(ctx, h, ctx.q, v)
        gi = poly_gcd(ctx, v, poly_sub(ctx, h, x))
        if poly_deg(gi) > 0:
            pieces.append((i, gi))
            v, _ = poly_divmod(ctx, v, gi)
            h = poly_mod(ctx, h, v)
    if poly_deg(v) > 0:
        pieces.append((poly_deg(v), v))
    return pieces


def factor_shape(ctx: FieldCtx, g):
    """Factorization shape of a squarefree g: sorted list of (degree, count).

    Raises NotSquarefreeError when g has a repeated factor; callers that may
    hold non-squarefree input should go through multiplicity_profile first.
    """
    g = poly_trim(ctx, g)
    if poly_deg(g) < 1:
        raise InvalidDegreeError("shape needs degree >= 1")
    dg = poly_deriv(ctx, g)
    if not dg or poly_deg(poly_gcd(ctx, g, dg)) != 0:
        raise NotSquarefreeError("input has a repeated factor")
    shape = [(i, poly_deg(piece) // i) for i, piece in distinct_degree_pieces(ctx, g)]
    shape.sort()
    return shape


def equal_degree_factors(ctx: FieldCtx, piece, k: int, seed: int = 0):
    """Split a product of distinct degree-k irreducibles into its factors
    (Cantor-Zassenhaus, odd q).  Seeded-deterministic; output sorted by
    coefficient index so the order never depends on the RNG path."""
    rng = random.Random((seed, ctx.q, k, poly_deg(piece)).__hash__())
    out = []
    _edf(ctx, poly_monic(ctx, piece), k, rng, out)
    out.sort(key=lambda f: tuple(ctx.to_index(c) for c in f))
    return out


def _edf(ctx, v, k, rng, out):
    if poly_deg(v) == k:
        out.append(v)
        return
    e = (ctx.q**k - 1) // 2
    while True:
        h = [ctx.from_index(rng.randrange(ctx.q)) for _ in range(poly_deg(v) - 1)]
        h.append(ctx.one())
        w = poly_pow_mod(ctx, h, e, v)
        w = poly_sub(ctx, w, [ctx.one()])
        d = poly_gcd(ctx, w, v)
        if 0 < poly_deg(d) < poly_deg(v):
            _edf(ctx, d, k, rng, out)
            _edf(ctx, poly_divmod(ctx, v, d)[0], k, rng, out)
            return


def _pth_root(ctx: FieldCtx, g) -> list:
    """p-th root of a polynomial with zero derivative (all exponents p|i)."""
    p = ctx.p
    root_exp = ctx.p ** (ctx.m - 1) if ctx.m > 1 else 1
    out = []
    for i in range(0, len(g), p):
        c = g[i]
        out.append(ctx.pow(c, root_exp) if root_exp > 1 else c)
    return poly_trim(ctx, out)


def multiplicity_profile(ctx: FieldCtx, g):
    """Squarefree decomposition g = prod u_i^i: sorted list of
    (multiplicity i, deg u_i) for the i that occur.  Multiplicities divisible
    by the characteristic are handled by p-th-root extraction."""
    g = poly_monic(ctx, poly_trim(ctx, g))
    if poly_deg(g) < 1:
        raise InvalidDegreeError("profile needs degree >= 1")
    profile: dict[int, int] = {}
    n = 1
    while poly_deg(g) > 0:
        dg = poly_deriv(ctx, g)
        if not dg:
            g = _pth_root(ctx, g)
            n *= ctx.p
            continue
        c = poly_gcd(ctx, g, dg)
        w = poly_divmod(ctx, g, c)[0]
        i = 1
        while poly_deg(w) > 0:
            y = poly_gcd(ctx, w, c)
            z = poly_divmod(ctx, w, y)[0]
            if poly_deg(z) > 0:
                profile[i * n] = profile.get(i * n, 0) + poly_deg(z)
            i += 1
            w = y
            c = poly_divmod(ctx, c, y)[0]
        if poly_deg(c) > 0:
            g = _pth_root(ctx, c)
            n *= ctx.p
        else:
            break
    return sorted(profile.items())
