from itertools import product

import numpy as np
import pytest

from dpcount.families import (BUILTIN_FAMILIES, CUBIC_P3, DP1_CHAR2, DP1_CHAR3,
                              DP1_CLASSIC, DP2_CHAR2, DP2_CLASSIC, Surface,
                              count_points, evaluate, monomial_key, parse_monomial_key,
                              partial_derivative, reduce_exponent, reduce_exponents,
                              reduced_family, restrict, solutions, surface_values,
                              weighted_degree)
from dpcount.gf import GF
from dpcount.wps import all_tuples, equivalent, scale

EXAMPLE_CUBIC = [(1, 0, 0, 2), (2, 0, 0, 1), (0, 3, 0, 0), (0, 1, 2, 0), (0, 0, 3, 0),
                 (3, 0, 0, 0), (1, 1, 1, 0), (2, 1, 0, 0), (2, 0, 1, 0)]


def naive_eval(s, t):
    f = s.field
    total = 0
    for m, c in s.terms():
        v = c
        for x, e in zip(t, m):
            for _ in range(e):
                v = f.mul(v, x)
        total = f.add(total, v)
    return total


def random_surface(fam, f, rng):
    return Surface(fam, f, tuple(int(v) for v in rng.integers(0, f.q, fam.n_slots)))


def test_slot_counts():
    assert DP1_CHAR2.n_slots == 18
    assert DP1_CHAR3.n_slots == 15
    assert DP1_CLASSIC.n_slots == 12
    assert DP2_CHAR2.n_slots == 6 + 15
    assert DP2_CLASSIC.n_slots == 15
    assert CUBIC_P3.n_slots == 20


@pytest.mark.parametrize("fam", list(BUILTIN_FAMILIES.values()))
def test_families_are_graded(fam):
    monos = [m for m, _ in fam.fixed] + list(fam.free)
    assert len(set(monos)) == len(monos)
    assert all(weighted_degree(m, fam.ambient) == fam.degree for m in monos)


def test_monomial_keys():
    assert monomial_key((1, 0, 2, 3)) == "1.0.2.3"
    assert parse_monomial_key("1.0.2.3") == (1, 0, 2, 3)
    with pytest.raises(ValueError):
        parse_monomial_key("1.a")


@pytest.mark.parametrize("fam", list(BUILTIN_FAMILIES.values()))
@pytest.mark.parametrize("q", [2, 3, 4])
def test_evaluate_matches_naive(fam, q):
    f = GF(q)
    rng = np.random.default_rng(q)
    tuples = all_tuples(len(fam.ambient), f, nonzero=False)
    for _ in range(20):
        s = random_surface(fam, f, rng)
        vals = surface_values(s, tuples)
        for t, v in zip(tuples[::7], vals[::7]):
            t = tuple(int(c) for c in t)
            assert v == naive_eval(s, t) == evaluate(s, t)


def test_example_cubic_evaluation():
    f = GF(2)
    s = Surface.from_terms(CUBIC_P3, f, {m: 1 for m in EXAMPLE_CUBIC})
    assert evaluate(s, (0, 1, 0, 0)) == 1
    assert count_points(s, "projective") == 1
    z = Surface(DP2_CLASSIC, GF(3), (0,) * 15)
    assert evaluate(z, (0, 0, 0, 1)) == 1


@pytest.mark.parametrize("fam", list(BUILTIN_FAMILIES.values()))
@pytest.mark.parametrize("q", [2, 3])
def test_graded_homogeneity_exhaustive(fam, q):
    f = GF(q)
    rng = np.random.default_rng(7)
    s = random_surface(fam, f, rng)
    for row in all_tuples(len(fam.ambient), f):
        t = tuple(int(c) for c in row)
        for lam in range(1, q):
            assert evaluate(s, scale(t, lam, fam.ambient, f)) == \
                f.mul(f.pow(lam, fam.degree), evaluate(s, t))


def test_reduce_exponent_rule():
    assert [reduce_exponent(e, 2) for e in range(5)] == [0, 1, 1, 1, 1]
    assert reduce_exponent(4, 3) == 2 and reduce_exponent(3, 3) == 1
    assert reduce_exponent(0, 3) == 0


def test_reduced_slot_counts():
    assert reduced_family(DP1_CHAR2, GF(2)).n_slots == 11
    assert reduced_family(DP1_CHAR3, GF(3)).n_slots == 11
    assert reduced_family(DP1_CLASSIC, GF(7)) == DP1_CLASSIC
    assert reduced_family(DP2_CLASSIC, GF(5)) == DP2_CLASSIC


def test_reduced_dp1_f2_monomials():
    fam = reduced_family(DP1_CHAR2, GF(2))
    want = {(1, 0, 1, 1), (0, 1, 1, 1), (1, 0, 0, 1), (1, 1, 0, 1), (0, 1, 0, 1),
            (1, 0, 1, 0), (1, 1, 1, 0), (0, 1, 1, 0), (1, 0, 0, 0), (1, 1, 0, 0), (0, 1, 0, 0)}
    assert set(fam.free) == want
    assert dict(fam.fixed) == {(0, 0, 0, 1): 1, (0, 0, 1, 0): 1}


@pytest.mark.parametrize("fam", list(BUILTIN_FAMILIES.values()))
@pytest.mark.parametrize("q", [2, 3, 4])
def test_reduction_preserves_solution_sets(fam, q):
    f = GF(q)
    rng = np.random.default_rng(100 + q)
    tuples = all_tuples(len(fam.ambient), f, nonzero=False)
    for _ in range(1000):
        s = random_surface(fam, f, rng)
        r = reduce_exponents(s)
        assert np.array_equal(surface_values(s, tuples), surface_values(r, tuples))


def test_restrict_examples():
    f3 = GF(3)
    fam = reduced_family(DP1_CHAR3, f3)
    c = {fam.slot((0, 2, 2, 0)): 1, fam.slot((0, 2, 1, 0)): 2, fam.slot((0, 2, 0, 0)): 1,
         fam.slot((2, 0, 0, 0)): 2}
    s = Surface(fam, f3, tuple(c.get(i, 0) for i in range(fam.n_slots)))
    r = restrict(s, {"x": 0, "y": 1})
    assert r.family.variables == ("z", "w")
    assert set(r.family.free) == {(2, 0), (1, 0), (0, 0)}
    assert dict(r.family.fixed) == {(0, 2): 1, (1, 0): 1}
    assert dict(zip(r.family.free, r.coefficients)) == {(2, 0): 1, (1, 0): 2, (0, 0): 1}
    for z, w in product(range(3), repeat=2):
        want = (w * w + z + z * z + 2 * z + 1) % 3
        assert evaluate(r, (z, w)) == want
    f5 = GF(5)
    e, sl = DP1_CLASSIC.slot((0, 4, 1, 0)), DP1_CLASSIC.slot((0, 6, 0, 0))
    s5 = Surface(DP1_CLASSIC, f5, tuple(3 if i == e else 4 if i == sl else 1
                                        for i in range(DP1_CLASSIC.n_slots)))
    r5 = restrict(s5, {"x": 0, "y": None})
    assert r5.family.variables == ("y", "z", "w")
    assert dict(r5.family.fixed) == {(0, 0, 2): 1, (0, 3, 0): 1}
    assert dict(zip(r5.family.free, r5.coefficients)) == {(4, 1, 0): 3, (6, 0, 0): 4}
    assert restrict(s5, {}) == s5


def test_restrict_preserves_values():
    f = GF(3)
    rng = np.random.default_rng(3)
    s = random_surface(DP1_CHAR3, f, rng)
    r = restrict(s, {"x": 2, "y": 1})
    for z, w in product(range(3), repeat=2):
        assert evaluate(r, (z, w)) == evaluate(s, (2, 1, z, w))


def test_partial_derivatives():
    f2 = GF(2)
    rng = np.random.default_rng(5)
    s = random_surface(DP2_CHAR2, f2, rng)
    d = partial_derivative(s, "w")
    g2 = {m[:3] + (0,): c for m, c in zip(DP2_CHAR2.free, s.coefficients) if m[3] == 1 and c}
    assert {m: c for m, c in d.terms() if c} == g2
    f3 = GF(3)
    s3 = Surface(DP1_CLASSIC, f3, tuple(int(v) for v in rng.integers(0, 3, 12)))
    dz = partial_derivative(s3, "z")
    g4 = {m[:2] + (0, 0): c for m, c in zip(DP1_CLASSIC.free, s3.coefficients) if m[2] == 1 and c}
    assert {m: c for m, c in dz.terms() if c} == g4
    cub = Surface.from_terms(CUBIC_P3, f3, {(0, 3, 0, 0): 1})
    assert partial_derivative(cub, "x").is_zero()


def test_partial_derivative_matches_difference_quotient():
    # over F_p with p > degree, d/dx of x^e is e x^(e-1): compare on monomials
    f7 = GF(7)
    rng = np.random.default_rng(11)
    s = random_surface(DP2_CLASSIC, f7, rng)
    d = partial_derivative(s, 0)
    for m, c in s.terms():
        if m[0]:
            lowered = (m[0] - 1,) + m[1:]
            assert dict(d.terms()).get(lowered) is not None


def test_count_points_examples():
    f3 = GF(3)
    fam = reduced_family(DP1_CHAR3, f3)
    assert set(solutions(restrict(Surface(fam, f3, (0,) * fam.n_slots), {"x": 0, "y": 0}),
                         "affine")) == {(2, 1), (2, 2)}
    zero = Surface(CUBIC_P3, GF(2), (0,) * 20)
    assert count_points(zero, "projective") == 15
    assert count_points(zero, "projective", early_exit=3) >= 4


def test_dp1_classic_f3_base_points():
    f3 = GF(3)
    rng = np.random.default_rng(9)
    for _ in range(50):
        s = random_surface(DP1_CLASSIC, f3, rng)
        assert evaluate(s, (0, 0, 2, 1)) == 0 and evaluate(s, (0, 0, 2, 2)) == 0


@pytest.mark.parametrize("fam", [DP1_CHAR3, DP2_CLASSIC, CUBIC_P3, DP2_CHAR2])
def test_projective_count_invariant_under_coefficient_scaling(fam):
    # scaling every coefficient (fixed terms included) keeps the zero set
    f = GF(3) if fam is not DP2_CHAR2 else GF(4)
    rng = np.random.default_rng(21)
    for _ in range(20):
        s = random_surface(fam, f, rng)
        base = count_points(s, "projective")
        if fam.fixed:
            continue
        for c in range(1, f.q):
            t = Surface(fam, f, tuple(f.mul(c, v) for v in s.coefficients))
            assert count_points(t, "projective") == base


@pytest.mark.parametrize("fam,q", [(DP1_CHAR3, 3), (DP2_CLASSIC, 3), (CUBIC_P3, 2), (DP1_CHAR2, 4)])
def test_projective_count_matches_class_partition(fam, q):
    f = GF(q)
    rng = np.random.default_rng(33)
    for _ in range(10):
        s = random_surface(fam, f, rng)
        zeros = [tuple(int(c) for c in t) for t in all_tuples(len(fam.ambient), f)
                 if naive_eval(s, tuple(int(c) for c in t)) == 0]
        classes = []
        for u in zeros:
            if not any(equivalent(u, v, fam.ambient, f) for v in classes):
                classes.append(u)
        assert count_points(s, "projective") == len(classes)
        assert count_points(s, "affine") == len(zeros)
