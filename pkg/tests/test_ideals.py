from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gtdegen.cone import from_display3, random_weighting, sigma
from gtdegen.config import GuardError
from gtdegen.ideals import (det_D, det_full, evaluate_polynomial, evaluate_z, exp_component,
                            exp_coordinate_poly, general_initial_component, grading_compatible,
                            graded_quotient_dims, ideal_component, initial_exp_component,
                            initial_ideal_component, initial_part, jrelation_component,
                            poly_mul, polynomial_to_str, r_lambda_monomials, r_lambda_size,
                            restrict_partial, toric_component, z_variable, zpoly_to_str)
from gtdegen.lie import weyl_dim
from gtdegen.rep import module

STRICT3 = from_display3((-1, -1, -1))


def strs(comp):
    return [polynomial_to_str(b) for b in comp.basis]


def test_pluecker_relation_sl3():
    assert strs(ideal_component((1, 1))) == ["X_1X_23 - X_2X_13 + X_3X_12"]


def test_initial_and_toric_sl3():
    assert strs(initial_ideal_component((1, 1), STRICT3)) == ["X_1X_23 - X_2X_13"]
    assert initial_ideal_component((1, 1), STRICT3) == toric_component((1, 1))
    assert exp_component((1, 1)) == ideal_component((1, 1))


def test_fundamental_components_are_zero():
    assert ideal_component((1, 0)).dim == 0
    assert toric_component((0, 1, 0)).dim == 0


def test_ring_sizes():
    assert r_lambda_size((1, 1)) == 9
    assert r_lambda_size((0, 2, 0)) == 21
    assert len(r_lambda_monomials((0, 2, 0))) == 21


def test_degree_020_has_one_relation():
    assert ideal_component((0, 2, 0)).dim == 1
    assert toric_component((0, 2, 0)).dim == 1


def test_exp_coordinates():
    assert zpoly_to_str(3, exp_coordinate_poly(3, (2, 3))) != "0"
    expected = poly_mul(z_variable(3, 2, 2),
                        {**poly_mul(z_variable(3, 1, 2), z_variable(3, 2, 3)),
                         **{k: -v for k, v in z_variable(3, 1, 3).items()}})
    assert exp_coordinate_poly(3, (2, 3)) == expected


def test_upper_triangular_minor_is_specialization():
    # det_D is the generic minor with the entries below the diagonal set to zero
    n = 3
    rng = random.Random(5)
    vals = {(i, j): Fraction(rng.randint(-9, 9)) for i in range(1, 4) for j in range(i, 4)}
    full = [Fraction(0)] * (n * n)
    for (i, j), x in vals.items():
        full[(i - 1) * n + j - 1] = x
    for idx in [(1,), (2,), (1, 3), (2, 3)]:
        total = Fraction(0)
        for e, c in det_full(n, idx).items():
            term = Fraction(c)
            for pos, x in enumerate(e):
                if x:
                    term *= full[pos] ** x
            total += term
        assert total == evaluate_z(n, det_D(n, idx), vals)


def test_initial_part_of_zero():
    with pytest.raises(ValueError):
        initial_part(3, {}, STRICT3)


def test_grading_check_outside_cone():
    a = from_display3((0, 0, -1))
    assert not grading_compatible(3, a)
    with pytest.raises(ValueError):
        initial_ideal_component((1, 1), a)


def test_guard():
    with pytest.raises(GuardError):
        ideal_component((2, 2, 2), max_dim=10)


def _minor(n, rows, idx):
    total = Fraction(0)
    for e, c in det_full(n, idx).items():
        term = Fraction(c)
        for pos, x in enumerate(e):
            if x:
                term *= rows[pos // n][pos % n] ** x
        total += term
    return total


@pytest.mark.parametrize("lam", [(1, 1), (2, 1), (1, 1, 1), (0, 2, 0)])
def test_relations_vanish_on_a_generic_flag(lam):
    from gtdegen.lie import pluecker_indices
    n = len(lam) + 1
    rng = random.Random(11)
    rows = [[Fraction(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
    coords = {idx: _minor(n, rows, idx) for idx in pluecker_indices(n)}
    for rel in ideal_component(lam).basis:
        assert evaluate_polynomial(rel, coords) == 0


def test_restrict_to_one_length():
    comp = ideal_component((1, 1))
    assert restrict_partial(comp, {1, 2}) == comp


@pytest.mark.parametrize("lam", list(itertools.product(range(3), repeat=2))
                         + list(itertools.product(range(2), repeat=3)))
def test_toric_equals_j_relations(lam):
    assert toric_component(lam) == jrelation_component(lam)


@pytest.mark.parametrize("lam", [(1, 1), (2, 1), (2, 2), (1, 1, 1), (0, 2, 0), (1, 0, 1)])
def test_zero_weighting_gives_plain_ideal(lam):
    n = len(lam) + 1
    zero = (0,) * (n * (n - 1) // 2)
    assert initial_ideal_component(lam, zero) == ideal_component(lam)


cases = st.tuples(st.integers(0, 100_000),
                  st.sampled_from([(1, 1), (2, 1), (1, 2), (1, 1, 1), (0, 2, 0), (1, 0, 1)]))


@given(cases)
def test_flatness_and_graded_dims(case):
    seed, lam = case
    n = len(lam) + 1
    a = random_weighting(n, random.Random(seed))
    ini = initial_ideal_component(lam, a)
    assert ini == initial_exp_component(lam, a)
    assert ini.monomial_count - ini.dim == weyl_dim(lam)
    s = sigma(n, a)
    assert graded_quotient_dims(ini, s) == module(lam).graded_dims(s)


@given(cases)
def test_initial_forms_of_ideal_match(case):
    seed, lam = case
    n = len(lam) + 1
    a = random_weighting(n, random.Random(seed))
    s = sigma(n, a)
    generic = general_initial_component(ideal_component(lam), s)
    assert generic == initial_ideal_component(lam, a)
