import random
from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from valuesets import ffield
from valuesets.errors import (
    InvalidDegreeError,
    NotPrimeError,
    NotSquarefreeError,
    TooLargeError,
)
from valuesets.ffield import (
    equal_degree_factors,
    factor_shape,
    field_arith,
    frobenius_power,
    is_irreducible,
    make_extension,
    make_prime_field,
    multiplicity_profile,
    poly_deg,
    poly_deriv,
    poly_divmod,
    poly_from_ints,
    poly_gcd,
    poly_mul,
    poly_sub,
    poly_to_text,
    poly_trim,
)

from conftest import random_poly, trial_division_shape


class TestMakeFields:
    def test_prime_field_basic(self):
        ctx = make_prime_field(5)
        assert (ctx.p, ctx.m, ctx.q) == (5, 1, 5)

    def test_not_prime(self):
        with pytest.raises(NotPrimeError):
            make_prime_field(4)

    def test_sweep_range_prime_accepted(self):
        assert make_prime_field(37813).q == 37813

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            make_prime_field(2**40 + 7)

    def test_extension_q25_modulus_irreducible_by_root_scan(self):
        ctx = make_extension(5, 2, 0)
        assert ctx.q == 25
        base = make_prime_field(5)
        # exhaustive root check: an irreducible quadratic has no roots
        assert all(
            ffield.poly_eval(base, list(ctx.modulus), x) != 0 for x in range(5)
        )

    def test_extension_m1_is_prime_field(self):
        assert make_extension(7, 1, 0) == make_prime_field(7)

    def test_extension_q125_no_small_factors(self):
        ctx = make_extension(5, 3, 0)
        assert ctx.q == 125
        base = make_prime_field(5)
        modulus = list(ctx.modulus)
        # no linear factor
        assert all(ffield.poly_eval(base, modulus, x) != 0 for x in range(5))
        # no quadratic factor: trial division by every monic quadratic
        for c0 in range(5):
            for c1 in range(5):
                _, rem = poly_divmod(base, modulus, poly_from_ints(base, [c0, c1, 1]))
                assert rem, (c0, c1)

    def test_extension_seed_determinism(self):
        assert make_extension(11, 3, 5).modulus == make_extension(11, 3, 5).modulus

    def test_extension_bad_degree(self):
        with pytest.raises(InvalidDegreeError):
            make_extension(5, 9, 0)

    def test_extension_too_large(self):
        with pytest.raises(TooLargeError):
            make_extension(10007, 8, 0)


class TestFieldArith:
    def test_inv_in_f5(self):
        ctx = make_prime_field(5)
        assert field_arith(ctx, "inv", 2) == 3

    def test_fermat_pow(self):
        ctx = make_prime_field(5)
        assert field_arith(ctx, "pow", 2, 4) == 1

    def test_all_nonzero_pow_order_f25(self):
        ctx = make_extension(5, 2, 0)
        for g in ctx.elements():
            if g != ctx.zero():
                assert ctx.pow(g, 24) == ctx.one()

    def test_inverse_of_zero(self):
        ctx = make_extension(5, 2, 0)
        with pytest.raises(ZeroDivisionError):
            ctx.inv(ctx.zero())

    @given(st.integers(min_value=1))
    @settings(max_examples=40, deadline=None)
    def test_inv_and_order_random(self, n):
        for ctx in (make_prime_field(101), make_extension(7, 2, 0), make_extension(3, 4, 0)):
            a = ctx.from_index(1 + n % (ctx.q - 1))
            assert ctx.mul(a, ctx.inv(a)) == ctx.one()
            assert ctx.pow(a, ctx.q - 1) == ctx.one()

    def test_tower_arithmetic(self):
        # residue field built on top of another context behaves like a field
        base = make_prime_field(7)
        quad = poly_from_ints(base, [1, 0, 1])  # x^2 + 1, irreducible mod 7
        assert is_irreducible(base, quad)
        mid = ffield.extension_of(base, quad)
        assert mid.q == 49
        for k in (1, 11, 30):
            a = mid.from_index(k)
            assert mid.mul(a, mid.inv(a)) == mid.one()

    def test_elem_text_codec(self):
        ctx = make_extension(5, 3, 0)
        e = ctx.from_index(42)
        assert ctx.elem_from_text(ctx.elem_to_text(e)) == e


class TestPolyOps:
    def test_gcd_example(self):
        ctx = make_prime_field(5)
        g = poly_gcd(ctx, poly_from_ints(ctx, [-1, 0, 1]), poly_from_ints(ctx, [-1, 1]))
        assert g == poly_from_ints(ctx, [-1, 1])

    def test_gcd_with_zero_is_monic(self):
        ctx = make_prime_field(5)
        a = poly_from_ints(ctx, [2, 4])
        assert poly_gcd(ctx, a, []) == poly_from_ints(ctx, [3, 1])

    def test_gcd_of_zero_zero_rejected(self):
        ctx = make_prime_field(5)
        with pytest.raises(ZeroDivisionError):
            poly_gcd(ctx, [], [])

    def test_quartic_family_member_squarefree_over_f5(self):
        ctx = make_prime_field(5)
        f = poly_from_ints(ctx, [0, -1, 1, 0, 1])
        assert poly_deg(poly_gcd(ctx, f, poly_deriv(ctx, f))) == 0

    def test_poly_text(self):
        ctx = make_prime_field(5)
        assert poly_to_text(ctx, poly_from_ints(ctx, [4, 0, 1])) == "4,0,1"

    @given(st.data())
    @settings(max_examples=50, deadline=None)
    def test_gcd_divides_both(self, data):
        rng = random.Random(data.draw(st.integers(0, 10**9)))
        ctx = make_prime_field(rng.choice([5, 7, 13]))
        a = random_poly(rng, ctx, rng.randrange(1, 6))
        b = random_poly(rng, ctx, rng.randrange(1, 6))
        g = poly_gcd(ctx, a, b)
        assert not poly_divmod(ctx, a, g)[1]
        assert not poly_divmod(ctx, b, g)[1]


class TestFrobenius:
    def test_hand_example(self):
        ctx = make_prime_field(5)
        g = poly_from_ints(ctx, [2, 0, 1])  # x^2 + 2
        assert frobenius_power(ctx, 1, g) == poly_from_ints(ctx, [0, 4])

    def test_k_zero(self):
        ctx = make_prime_field(5)
        g = poly_from_ints(ctx, [2, 0, 1])
        assert frobenius_power(ctx, 0, g) == poly_from_ints(ctx, [0, 1])

    @given(st.data())
    @settings(max_examples=25, deadline=None)
    def test_frobenius_cycle_for_squarefree(self, data):
        rng = random.Random(data.draw(st.integers(0, 10**9)))
        ctx = make_prime_field(rng.choice([5, 7]))
        while True:
            g = random_poly(rng, ctx, rng.randrange(2, 5))
            dg = poly_deriv(ctx, g)
            if dg and poly_deg(poly_gcd(ctx, g, dg)) == 0:
                break
        period = lcm(*(d for d, _ in factor_shape(ctx, g)))
        x = poly_from_ints(ctx, [0, 1])
        got = frobenius_power(ctx, period, g)
        assert got == poly_divmod(ctx, x, g)[1] or got == x

    def test_gcd_with_frobenius_counts_roots(self):
        # deg gcd(x^(q^i) - x, g) equals the number of roots of g in F_{q^i}
        ctx = make_prime_field(7)
        rng = random.Random(3)
        for _ in range(10):
            g = random_poly(rng, ctx, 4)
            dg = poly_deriv(ctx, g)
            if not dg or poly_deg(poly_gcd(ctx, g, dg)) != 0:
                continue
            for i in (1, 2):
                h = poly_sub(ctx, frobenius_power(ctx, i, g), poly_from_ints(ctx, [0, 1]))
                got = poly_deg(poly_gcd(ctx, h, g)) if h else poly_deg(g)
                ext = make_extension(7, i, 0) if i > 1 else ctx
                lifted = [ext.embed(c) if i > 1 else c for c in g]
                roots = sum(
                    1 for x in ext.elements() if ffield.poly_eval(ext, lifted, x) == ext.zero()
                )
                assert got == roots


class TestFactorShape:
    def test_x2_plus_1_splits_mod_5(self):
        ctx = make_prime_field(5)
        assert factor_shape(ctx, poly_from_ints(ctx, [1, 0, 1])) == [(1, 2)]

    def test_x2_plus_1_inert_mod_7(self):
        ctx = make_prime_field(7)
        assert factor_shape(ctx, poly_from_ints(ctx, [1, 0, 1])) == [(2, 1)]

    def test_constructed_product(self):
        ctx = make_prime_field(7)
        g = poly_mul(
            ctx,
            poly_mul(ctx, poly_from_ints(ctx, [-1, 1]), poly_from_ints(ctx, [-2, 1])),
            poly_from_ints(ctx, [1, 0, 1]),
        )
        assert factor_shape(ctx, g) == [(1, 2), (2, 1)]

    def test_rejects_repeated_factor(self):
        ctx = make_prime_field(7)
        g = poly_mul(ctx, poly_from_ints(ctx, [-1, 1]), poly_from_ints(ctx, [-1, 1]))
        with pytest.raises(NotSquarefreeError):
            factor_shape(ctx, g)

    @given(st.data())
    @settings(max_examples=30, deadline=None)
    def test_shape_matches_trial_division(self, data):
        rng = random.Random(data.draw(st.integers(0, 10**9)))
        ctx = make_prime_field(rng.choice([3, 5, 7]))
        while True:
            g = random_poly(rng, ctx, rng.randrange(2, 6))
            dg = poly_deriv(ctx, g)
            if dg and poly_deg(poly_gcd(ctx, g, dg)) == 0:
                break
        shape = factor_shape(ctx, g)
        assert sum(d * c for d, c in shape) == poly_deg(g)
        assert shape == trial_division_shape(ctx, g)

    def test_equal_degree_split_recovers_factors(self):
        ctx = make_prime_field(11)
        factors = [poly_from_ints(ctx, [c, 0, 1]) for c in (1, 3, 9)]
        factors = [f for f in factors if is_irreducible(ctx, f)]
        assert len(factors) >= 2
        piece = factors[0]
        for f in factors[1:]:
            piece = poly_mul(ctx, piece, f)
        got = equal_degree_factors(ctx, piece, 2)
        assert sorted(tuple(f) for f in got) == sorted(tuple(f) for f in factors)


class TestMultiplicityProfile:
    def test_constructed_square(self):
        ctx = make_prime_field(7)
        g = poly_mul(
            ctx,
            poly_mul(ctx, poly_from_ints(ctx, [-1, 1]), poly_from_ints(ctx, [-1, 1])),
            poly_from_ints(ctx, [-2, 1]),
        )
        assert multiplicity_profile(ctx, g) == [(1, 1), (2, 1)]

    def test_squarefree_input(self):
        ctx = make_prime_field(7)
        g = poly_from_ints(ctx, [1, 0, 1])
        assert multiplicity_profile(ctx, g) == [(1, 2)]

    def test_quartic_critical_value_profile(self):
        # f - f(x0) at a simple critical point has e-profile (2, 1, 1)
        ctx = make_prime_field(7)
        f = poly_from_ints(ctx, [0, -1, 1, 0, 1])  # x^4 + x^2 - x, f'(2) = 0 mod 7
        df = poly_deriv(ctx, f)
        assert ffield.poly_eval(ctx, df, 2) == 0
        t0 = ffield.poly_eval(ctx, f, 2)
        g = poly_sub(ctx, f, [t0])
        assert multiplicity_profile(ctx, g) == [(1, 2), (2, 1)]

    def test_char_p_multiplicity(self):
        ctx = make_prime_field(5)
        # (x - 1)^5 = x^5 - 1 in characteristic 5
        g5 = poly_from_ints(ctx, [-1, 0, 0, 0, 0, 1])
        assert multiplicity_profile(ctx, g5) == [(5, 1)]

    @given(st.data())
    @settings(max_examples=30, deadline=None)
    def test_profile_from_known_linear_factors(self, data):
        rng = random.Random(data.draw(st.integers(0, 10**9)))
        ctx = make_prime_field(11)
        roots = rng.sample(range(11), rng.randrange(1, 4))
        mults = [rng.randrange(1, 4) for _ in roots]
        g = [ctx.one()]
        for r, e in zip(roots, mults):
            for _ in range(e):
                g = poly_mul(ctx, g, poly_from_ints(ctx, [-r, 1]))
        expected = {}
        for e in mults:
            expected[e] = expected.get(e, 0) + 1
        assert multiplicity_profile(ctx, g) == sorted(expected.items())
        assert sum(i * w for i, w in multiplicity_profile(ctx, g)) == poly_deg(g)
