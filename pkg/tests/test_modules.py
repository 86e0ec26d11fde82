"""Module constructors, tensor products, shifts, twists, pattern data."""

from fractions import Fraction

import pytest

from yangian.fock import PLAIN, PRIME, TILDE
from yangian.linalg import Poly, RatFunc
from yangian.modules import (
    ModuleParams,
    YangianModule,
    distinguished_vector,
    dual_evaluation_module,
    evaluation_module,
    fock_module,
    omega_module,
    omega_prime_module,
    pattern_module,
    pattern_space,
    permute_pattern,
    scalar_module,
    shift_module,
    source_pattern,
    tensor_all,
    tensor_module,
    trivial_module,
    twist_module,
)

THIRD = Fraction(1, 3)


def test_evaluation_module_is_degree_one_component():
    for n in (2, 3):
        v = evaluation_module(n, THIRD)
        f = fock_module(1, n, PLAIN, THIRD, 1)
        assert v.equal_entrywise(f)


def test_dual_evaluation_matches_antisymmetric_component():
    # for theta = -1 the degree-1 plain component acts by delta_ij + E_ij/(u - z)
    n = 3
    f = fock_module(-1, n, PLAIN, Fraction(5, 2), 1)
    v = evaluation_module(n, -Fraction(5, 2))
    assert f.equal_entrywise(v)
    # and the dual evaluation module is its own construction
    d = dual_evaluation_module(n, THIRD)
    assert d.entry_ratfunc(0, 1, 1, 0) == RatFunc(Poly([-1]), Poly([THIRD, 1]))


def test_tilde_equals_scalar_twist_of_prime():
    z = Fraction(7, 3)
    for theta, n, deg in ((1, 2, 2), (1, 3, 1), (-1, 3, 2), (-1, 2, 1)):
        tilde = fock_module(theta, n, TILDE, z, deg)
        prime = fock_module(theta, n, PRIME, z, deg)
        omega = omega_prime_module(n, z) if theta == 1 else omega_module(n, -z)
        assert tilde.equal_entrywise(tensor_module(omega, prime))
        assert tilde.equal_entrywise(tensor_module(prime, omega))


def test_one_dimensional_factors_are_cocentral():
    z = Fraction(4, 3)
    m = fock_module(1, 2, PLAIN, THIRD, 2)
    for scalar in (omega_module(2, z), omega_prime_module(2, z)):
        left = tensor_module(scalar, m)
        right = tensor_module(m, scalar)
        assert left.den == right.den
        for i in range(2):
            for j in range(2):
                assert left.entry(i, j) == right.entry(i, j)


def test_tensor_is_associative():
    a = evaluation_module(2, THIRD)
    b = dual_evaluation_module(2, Fraction(5, 7))
    c = omega_module(2, Fraction(2, 9))
    left = tensor_module(tensor_module(a, b), c)
    right = tensor_module(a, tensor_module(b, c))
    assert left.den == right.den
    for i in range(2):
        for j in range(2):
            assert left.entry(i, j) == right.entry(i, j)


def test_shift_module_translates_argument():
    m = evaluation_module(2, THIRD)
    w = Fraction(3, 5)
    s = shift_module(m, w)
    for i in range(2):
        for j in range(2):
            for r in range(2):
                for c in range(2):
                    u0 = Fraction(9)
                    assert s.entry_ratfunc(i, j, r, c)(u0) == \
                        m.entry_ratfunc(i, j, r, c)(u0 - w)


def test_twist_multiplies_entries_and_reduces():
    m = evaluation_module(2, THIRD)
    g = RatFunc(Poly([Fraction(1, 2), 1]), Poly([Fraction(-2, 3), 1]))
    t = twist_module(m, g)
    for i in range(2):
        for r in range(2):
            for c in range(2):
                assert t.entry_ratfunc(i, 0, r, c) == m.entry_ratfunc(i, 0, r, c) * g
    back = twist_module(t, 1 / g)
    assert back.den == m.den
    for i in range(2):
        for j in range(2):
            assert back.entry(i, j) == m.entry(i, j)


def test_twist_requires_limit_one():
    m = trivial_module(2)
    with pytest.raises(ValueError):
        twist_module(m, RatFunc(Poly([0, 2]), Poly([1, 1])))


def test_normal_form_is_enforced():
    with pytest.raises(ValueError):
        scalar_module(2, Poly([1, 2]), Poly([1, 1]))  # num not monic
    with pytest.raises(ValueError):
        YangianModule(1, Poly([0, 2]), [[fock_module(1, 1, PLAIN, 0, 1).entry(0, 0)]])


def test_module_params_derived_quantities():
    params = ModuleParams(1, 2, 1, 1, mu=(THIRD, Fraction(8, 5)), nu=(2, 1))
    assert params.rho == (0, -1)
    assert params.delta_prime == (1, -1)
    assert params.z == (THIRD, Fraction(3, 5))
    # lam* - mu* = delta' * (n/2 - nu) on every slot, for both theta
    for theta in (1, -1):
        pr = ModuleParams(theta, 2, 1, 1, mu=(THIRD, Fraction(8, 5)), nu=(2, 1))
        for b in range(2):
            assert pr.lam_star[b] - pr.mu_star[b] == \
                pr.delta_prime[b] * (Fraction(2, 2) - pr.nu[b])


def test_module_params_validation():
    with pytest.raises(ValueError):
        ModuleParams(1, 2, 1, 1, mu=(1, 2), nu=(1, 1))  # integer difference
    ModuleParams(1, 2, 1, 1, mu=(1, 2), nu=(1, 1), allow_resonant=True)
    with pytest.raises(ValueError):
        ModuleParams(-1, 2, 0, 1, mu=(THIRD,), nu=(3,))  # degree beyond n
    with pytest.raises(ValueError):
        ModuleParams(2, 2, 1, 0, mu=(THIRD,), nu=(1,))


def test_nu_prime_only_for_anticommuting():
    params = ModuleParams(-1, 3, 1, 1, mu=(THIRD, Fraction(8, 5)), nu=(2, 1))
    assert params.nu_prime == (1, 1)
    with pytest.raises(ValueError):
        _ = ModuleParams(1, 3, 1, 1, mu=(THIRD, Fraction(8, 5)), nu=(2, 1)).nu_prime


def test_source_pattern_and_permutation():
    params = ModuleParams(1, 2, 1, 2, mu=(THIRD, Fraction(8, 5), Fraction(12, 7)),
                          nu=(2, 1, 3))
    src = source_pattern(params)
    assert [f.kind for f in src] == [TILDE, PLAIN, PLAIN]
    assert [f.degree for f in src] == [2, 1, 3]
    assert [f.origin for f in src] == [0, 1, 2]
    # transpose slots 0 and 1
    tgt = permute_pattern(src, (1, 0, 2))
    assert [f.origin for f in tgt] == [1, 0, 2]
    assert [f.kind for f in tgt] == [PLAIN, TILDE, PLAIN]
    assert [f.degree for f in tgt] == [1, 2, 3]
    # applying the inverse permutation restores the source
    assert permute_pattern(tgt, (1, 0, 2)) == src


def test_pattern_module_dimension_and_space():
    params = ModuleParams(1, 2, 1, 1, mu=(THIRD, Fraction(8, 5)), nu=(2, 1))
    factors = source_pattern(params)
    mod = pattern_module(params, factors)
    space = pattern_space(params, factors)
    assert mod.dim == space.dim == 3 * 2  # C(3,2) monomials x 2 monomials
    assert mod.den == Poly([THIRD, 1]) * Poly([Fraction(3, 5), 1])


def test_distinguished_vector_positions_and_signs():
    # theta = +1: tilde slot at position 0 carries (-1)^degree
    params = ModuleParams(1, 2, 1, 1, mu=(THIRD, Fraction(8, 5)), nu=(2, 1))
    factors = source_pattern(params)
    space = pattern_space(params, factors)
    v = distinguished_vector(params, factors)
    idx = space.index[(0, 2, 1, 0)]  # x_{1,2}^2 * x_{2,1}
    assert v[idx] == 1  # (-1)^2
    assert sum(1 for x in v if x != 0) == 1

    params2 = ModuleParams(1, 2, 1, 1, mu=(THIRD, Fraction(8, 5)), nu=(1, 1))
    v2 = distinguished_vector(params2, source_pattern(params2))
    space2 = pattern_space(params2, source_pattern(params2))
    assert v2[space2.index[(0, 1, 1, 0)]] == -1  # (-1)^1

    # theta = -1 never carries signs; tilde slot uses the top variables
    params3 = ModuleParams(-1, 3, 1, 1, mu=(THIRD, Fraction(8, 5)), nu=(2, 1))
    v3 = distinguished_vector(params3, source_pattern(params3))
    space3 = pattern_space(params3, source_pattern(params3))
    assert v3[space3.index[(0, 1, 1, 1, 0, 0)]] == 1


def test_trivial_slots_are_transparent():
    params = ModuleParams(1, 2, 1, 1, mu=(THIRD, Fraction(8, 5)), nu=(0, 1))
    mod = pattern_module(params, source_pattern(params))
    single = fock_module(1, 2, PLAIN, Fraction(3, 5), 1)
    assert mod.den == single.den
    assert mod.dim == single.dim
    assert mod.equal_entrywise(single)


def test_tensor_all_empty_raises():
    with pytest.raises(ValueError):
        tensor_all([])
