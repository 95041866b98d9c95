from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from gtdegen.cone import (certificate_binomial, cone_check, eta, eta_star, facet_family, facets,
                          from_display3, h_description_check, in_cone, maxcone_certificate,
                          normalize, pi_tilde, random_weighting, sample_weightings, sigma,
                          sigma_inverse, sigma_tilde, tight_facets, tilde_t,
                          upsilon)
from gtdegen.ideals import polynomial_to_str
from gtdegen.lie import dual_weight, pairs
from gtdegen.polytope import pi_lambda

seeds = st.integers(0, 100_000)
ns = st.sampled_from([3, 4, 5])


def test_sl3_grading():
    s = sigma(3, from_display3((-1, -1, -1)))
    assert s[(1,)] == s[(1, 2)] == 0
    assert s[(2,)] == s[(3,)] == s[(1, 3)] == -1
    assert s[(2, 3)] == -2


def test_facet_labels():
    assert facets(3) == [(1, 3)]
    assert facet_family((1, 3)) == ("a", (1,))
    assert facet_family((1, 4)) == ("b", (1, 3))
    assert len(facets(5)) == 6


def test_boundary_and_interior():
    rep = cone_check((0, 0, 0))
    assert rep.member and not rep.interior and rep.tight_a == [1]
    assert cone_check(from_display3((-1, -1, -1))).interior
    assert not in_cone(from_display3((0, 0, -1)))


def test_certificate_binomials():
    deg, b = certificate_binomial(3, (1, 3))
    assert deg == (1, 1)
    assert polynomial_to_str(b) == "X_1X_23 - X_2X_13"
    deg, b = certificate_binomial(4, (1, 4))
    assert deg == (1, 1, 0)
    assert polynomial_to_str(b) == "X_1X_34 - X_3X_14"


def test_certificate_for_zero_weighting():
    (cert,) = maxcone_certificate((0, 0, 0))
    assert cert.not_in_initial_ideal and cert.in_toric_ideal
    assert cert.to_json()["facet"] == {"family": "a", "indices": [1]}


def test_certificate_errors():
    with pytest.raises(ValueError):
        maxcone_certificate(from_display3((-1, -1, -1)))
    with pytest.raises(ValueError):
        maxcone_certificate(from_display3((0, 0, -1)))


def test_upsilon_and_tilde():
    assert upsilon(3, (1,)) == (1, 2)
    assert upsilon(3, (1, 2)) == (1,)
    assert upsilon(4, (2, 4)) == (2, 4)
    assert tilde_t(3, (1, 2)) == (0, 0, 0)


@given(ns, seeds)
def test_sampled_weightings_are_members(n, seed):
    for a in sample_weightings(n, 6, seed):
        assert in_cone(a)


@given(ns, seeds, st.data())
def test_tight_sets_are_exact(n, seed, data):
    fs = facets(n)
    tight = tuple(f for f in fs if data.draw(st.booleans()))
    a = random_weighting(n, random.Random(seed), tight)
    assert tight_facets(a) == list(tight)
    rep = cone_check(a)
    assert rep.member and rep.interior == (not tight)


@given(ns, st.data())
def test_sigma_inverse_round_trip(n, data):
    a = tuple(data.draw(st.integers(-20, 20)) for _ in pairs(n))
    assert sigma_inverse(n, sigma(n, a)) == a


@given(ns, seeds)
def test_h_description(n, seed):
    a = random_weighting(n, random.Random(seed))
    s = sigma(n, a)
    assert h_description_check(n, s)
    assert normalize(n, s) == s


def test_sigma_inverse_rejects_non_image():
    s = sigma(3, (0, 0, 0))
    s[(2, 3)] = 5
    assert sigma_inverse(3, s) is None


@given(ns, seeds)
def test_eta_star_preserves_cone(n, seed):
    a = random_weighting(n, random.Random(seed))
    assert in_cone(eta_star(a))
    assert eta(eta(a)) == a


@pytest.mark.parametrize("lam", [(1, 0), (0, 1), (1, 1), (2, 1), (1, 0, 1), (1, 1, 1), (0, 2, 0)])
def test_pi_tilde_is_eta_of_dual(lam):
    assert pi_tilde(lam) == frozenset(eta(t) for t in pi_lambda(dual_weight(lam)))


def test_sigma_tilde_strict():
    s = sigma_tilde(3, from_display3((-1, -1, -1)))
    assert s[(1,)] == s[(1, 2)] == 0
    assert s[(3,)] == -2
