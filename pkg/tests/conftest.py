import random

import pytest

from valuesets import ffield


@pytest.fixture
def rng():
    return random.Random(20260810)


def random_poly(rng, ctx, degree):
    """Random polynomial of exact degree over ctx (integer coefficients)."""
    coeffs = [rng.randrange(ctx.p) for _ in range(degree)]
    coeffs.append(rng.randrange(1, ctx.p))
    return ffield.poly_from_ints(ctx, coeffs)


def naive_fiber_sizes(ctx, f):
    """Independent spectrum oracle: dict-of-counts evaluation loop."""
    buckets = {}
    for x in ctx.elements():
        y = ffield.poly_eval(ctx, f, x)
        buckets[y] = buckets.get(y, 0) + 1
    d = ffield.poly_deg(f)
    m = [0] * d
    for count in buckets.values():
        m[count - 1] += 1
    return tuple(m)


def trial_division_shape(ctx, g):
    """Factor a squarefree monic g by trial division over all monic
    irreducibles of ascending degree (small fields only)."""
    from itertools import product

    g = ffield.poly_monic(ctx, g)
    shape = {}
    degree = 1
    while ffield.poly_deg(g) > 0:
        if 2 * degree > ffield.poly_deg(g):
            shape[ffield.poly_deg(g)] = shape.get(ffield.poly_deg(g), 0) + 1
            break
        for tail in product(list(ctx.elements()), repeat=degree):
            cand = list(tail) + [ctx.one()]
            if ffield.poly_deg(ffield.poly_gcd(ctx, g, cand)) != degree:
                continue
            if not ffield.is_irreducible(ctx, cand):
                continue
            shape[degree] = shape.get(degree, 0) + 1
            g = ffield.poly_divmod(ctx, g, cand)[0]
        degree += 1
    return sorted(shape.items())
