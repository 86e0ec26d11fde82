"""Exactness checks for the rational linear algebra layer."""

import random
from fractions import Fraction

import numpy as np

from yangian.linalg import (
    Poly,
    RatFunc,
    RatMatrix,
    int_matmul,
    nullspace,
    poly_gcd,
    poly_rational_roots,
)


def rand_frac(rng, span=9):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_poly(rng, max_deg=5):
    return Poly([rand_frac(rng) for _ in range(rng.randint(0, max_deg) + 1)])


def test_poly_ring_ops_match_evaluation():
    rng = random.Random(101)
    for _ in range(60):
        a, b = rand_poly(rng), rand_poly(rng)
        u = rand_frac(rng)
        assert (a + b)(u) == a(u) + b(u)
        assert (a - b)(u) == a(u) - b(u)
        assert (a * b)(u) == a(u) * b(u)


def test_poly_divmod_roundtrip():
    rng = random.Random(102)
    for _ in range(60):
        a = rand_poly(rng, 7)
        b = rand_poly(rng, 4)
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_poly_shift_matches_evaluation():
    rng = random.Random(103)
    for _ in range(40):
        p = rand_poly(rng)
        c, u = rand_frac(rng), rand_frac(rng)
        assert p.shift(c)(u) == p(u + c)


def test_poly_gcd_divides_and_is_monic():
    rng = random.Random(104)
    for _ in range(40):
        g = rand_poly(rng, 3)
        if g.is_zero():
            continue
        a = g * rand_poly(rng, 3)
        b = g * rand_poly(rng, 3)
        if a.is_zero() or b.is_zero():
            continue
        d = poly_gcd(a, b)
        assert d.lead() == 1
        assert (a % d).is_zero()
        assert (b % d).is_zero()
        # the common factor g divides the gcd
        assert (d % g.monic()).is_zero()


def test_rational_roots_recovered_with_multiplicity():
    rng = random.Random(105)
    for _ in range(30):
        roots = sorted(rand_frac(rng, 5) for _ in range(rng.randint(1, 4)))
        cofactor = Poly([1, 0, 1])  # no rational roots
        p = Poly.from_roots(roots) * cofactor * Fraction(rng.randint(1, 4), 3)
        got, residual = poly_rational_roots(p)
        assert got == roots
        assert residual.monic() == cofactor


def test_rational_roots_zero_root_and_repeats():
    p = Poly.from_roots([0, 0, Fraction(3, 2), Fraction(3, 2), -1])
    got, residual = poly_rational_roots(p)
    assert got == [Fraction(-1), 0, 0, Fraction(3, 2), Fraction(3, 2)]
    assert residual.degree == 0


def test_ratfunc_normal_form():
    u = Poly.x()
    f = RatFunc((u + 1) * (u - 2) * 6, (u - 2) * (u + 3) * 4)
    assert f.den.lead() == 1
    assert f.num == (u + 1) * Fraction(3, 2)
    assert f.den == u + 3
    assert poly_gcd(f.num, f.den).degree == 0


def test_ratfunc_field_ops_match_evaluation():
    rng = random.Random(106)
    for _ in range(40):
        f = RatFunc(rand_poly(rng, 3), Poly([1, 1]) * Poly([2, 1]))
        g = RatFunc(rand_poly(rng, 3), Poly([3, 1]))
        u = Fraction(rng.randint(4, 40), 1)
        assert (f + g)(u) == f(u) + g(u)
        assert (f * g)(u) == f(u) * g(u)
        if not g.is_zero():
            assert (f / g)(u) == f(u) / g(u)
        assert (f - g)(u) == f(u) - g(u)


def test_ratfunc_limit_at_infinity():
    u = Poly.x()
    assert RatFunc(u + 5, u).limit_at_infinity() == 1
    assert RatFunc(Poly([1]), u).limit_at_infinity() == 0
    assert RatFunc(u * u, u).limit_at_infinity() is None
    assert RatFunc(3 * u + 1, 2 * u + 7).limit_at_infinity() == Fraction(3, 2)


def rand_matrix(rng, r, c, span=6):
    return RatMatrix([[rand_frac(rng, span) for _ in range(c)] for _ in range(r)])


def test_inverse_roundtrip():
    rng = random.Random(107)
    done = 0
    while done < 15:
        a = rand_matrix(rng, 5, 5)
        try:
            inv = a.inverse()
        except ValueError:
            continue
        assert a * inv == RatMatrix.identity(5)
        assert inv * a == RatMatrix.identity(5)
        done += 1


def test_rank_and_nullspace_dimensions():
    rng = random.Random(108)
    for _ in range(20):
        r = rng.randint(2, 5)
        k = rng.randint(1, r)
        c = rng.randint(2, 6)
        # rank <= k by construction
        a = rand_matrix(rng, r, k) * rand_matrix(rng, k, c)
        rk = a.rank()
        assert rk <= min(k, c)
        ns = nullspace(a)
        assert len(ns) == c - rk
        for v in ns:
            assert all(x == 0 for x in a.apply(v))


def test_nullspace_is_deterministic_and_reduced():
    a = RatMatrix([[1, 2, 3, 4], [0, 0, 1, 1]])
    ns = nullspace(a)
    assert len(ns) == 2
    # identity block on the free columns (columns 1 and 3)
    assert ns[0][1] == 1 and ns[0][3] == 0
    assert ns[1][1] == 0 and ns[1][3] == 1
    assert ns == nullspace(a)


def test_solve_consistent_and_inconsistent():
    rng = random.Random(109)
    for _ in range(15):
        a = rand_matrix(rng, 4, 3)
        x = [rand_frac(rng) for _ in range(3)]
        b = a.apply(x)
        got = a.solve(b)
        assert got is not None
        assert a.apply(got) == b
    # inconsistent system
    a = RatMatrix([[1, 0], [1, 0]])
    assert a.solve([1, 2]) is None


def test_rref_shape_and_idempotence():
    rng = random.Random(110)
    for _ in range(10):
        a = rand_matrix(rng, 4, 6)
        red, pivots = a.rref()
        for r, c in enumerate(pivots):
            assert red[r, c] == 1
            for i in range(a.nrows):
                if i != r:
                    assert red[i, c] == 0
        again, pivots2 = red.rref()
        assert again == red and pivots2 == pivots


def test_kron_acts_on_tensor_vectors():
    rng = random.Random(111)
    a = rand_matrix(rng, 3, 2)
    b = rand_matrix(rng, 2, 4)
    x = [rand_frac(rng) for _ in range(2)]
    y = [rand_frac(rng) for _ in range(4)]
    xy = [xi * yj for xi in x for yj in y]
    lhs = a.kron(b).apply(xy)
    ax, by = a.apply(x), b.apply(y)
    rhs = [p * q for p in ax for q in by]
    assert lhs == rhs


def test_int_matmul_exact_across_fast_and_big_paths():
    rng = random.Random(112)
    for scale in (1, 10 ** 12):  # second case overflows int64 mid-product
        a = np.array([[rng.randint(-9, 9) * scale for _ in range(4)] for _ in range(3)],
                     dtype=object)
        b = np.array([[rng.randint(-9, 9) * scale for _ in range(5)] for _ in range(4)],
                     dtype=object)
        got = int_matmul(a, b)
        ref = a @ b
        assert (got == ref).all()
