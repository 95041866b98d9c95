from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from gtdegen.config import GuardError
from gtdegen.lie import add_weights, weyl_dim
from gtdegen.polytope import (display, gt_contains, lattice_points_GT, lattice_points_P,
                              lattice_set_from_json, lattice_set_to_json, minkowski,
                              p_lambda_contains, parse_display3, pi_lambda, pi_omega, psi,
                              psi_determinant, sq, t_of_tuple)

SL3 = {"00/0", "10/0", "00/1", "01/0", "11/0", "01/1", "11/1", "21/0"}


def weights(n, cmax):
    return list(itertools.product(range(cmax + 1), repeat=n - 1))


def test_sl3_pi():
    assert {display(t) for t in pi_lambda((1, 1))} == SL3


def test_sl3_psi_examples():
    assert display(psi((1, 1), parse_display3("00/0"))) == "21/2"
    assert display(psi((1, 1), parse_display3("21/0"))) == "20/0"
    assert display(psi((1, 1), parse_display3("11/0"))) == "20/1"


def test_fundamental_points():
    assert {display(t) for t in pi_omega(3, 1)} == {"00/0", "10/0", "00/1"}
    assert {display(t) for t in pi_omega(3, 2)} == {"00/0", "01/0", "11/0"}
    assert display(t_of_tuple(3, (2, 3))) == "11/0"


def test_t_of_tuple_rejects_bad_index():
    with pytest.raises(ValueError):
        t_of_tuple(3, (2, 1))
    with pytest.raises(ValueError):
        t_of_tuple(3, (1, 2, 3))


def test_psi_is_unimodular():
    for n in range(2, 7):
        assert abs(psi_determinant(n)) == 1


def test_sq_values():
    assert sq(parse_display3("10/0")) == 1
    assert sq(parse_display3("00/1")) == 4
    assert sq(parse_display3("11/0")) == 2


def test_zero_weight():
    assert pi_lambda((0, 0, 0)) == {(0,) * 6}


def test_point_budget():
    with pytest.raises(GuardError):
        pi_lambda((2, 2, 2), budget=10)


def test_json_round_trip():
    pts = pi_lambda((1, 0, 1))
    assert lattice_set_from_json(lattice_set_to_json(4, pts)) == (4, pts)


@pytest.mark.parametrize("lam", weights(3, 2) + weights(4, 1))
def test_pi_is_p_and_psi_is_gt(lam):
    pts = pi_lambda(lam)
    assert len(pts) == weyl_dim(lam)
    assert pts == lattice_points_P(lam)
    assert {psi(lam, t) for t in pts} == lattice_points_GT(lam)
    assert all(p_lambda_contains(lam, t) for t in pts)
    assert all(gt_contains(lam, psi(lam, t)) for t in pts)


lam3 = st.tuples(st.integers(0, 2), st.integers(0, 2))
lam4 = st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1))


@given(st.one_of(st.tuples(lam3, lam3), st.tuples(lam4, lam4)))
def test_minkowski_property(pair):
    lam, mu = pair
    nu = add_weights(lam, mu)
    assert minkowski(pi_lambda(lam), pi_lambda(mu)) == pi_lambda(nu)
    assert minkowski(lattice_points_GT(lam), lattice_points_GT(mu)) == lattice_points_GT(nu)


@given(lam3, st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_p_membership_matches_enumeration(lam, t):
    assert p_lambda_contains(lam, tuple(t)) == (tuple(t) in lattice_points_P(lam))
