from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gtdegen.cone import from_display3, pi_tilde, random_weighting, sample_weightings, sigma
from gtdegen.ideals import _initial_exp, evaluate_polynomial, evaluate_z, initial_ideal_component
from gtdegen.lie import add_weights, pairs, pluecker_indices, weyl_dim
from gtdegen.phi import (DegenerateModule, FundamentalDegenerate, TensorModule,
                         cartan_closure_dim, cartan_component_dim, degenerate_basis_rank,
                         dual_basis_rank, dual_phi_act_L, dual_phi_normal_form, embedding_holds,
                         exp_orbit_point, exp_tensor_holds, fundamental_phi_matches,
                         fundamental_tensor, mainproj_kernel, orbit_to_json, phi_act_L,
                         phi_normal_form, phi_T_on_L, plucker_point, psi_word)
from gtdegen.rep import apply_M_T, max_grad, module

STRICT3 = from_display3((-1, -1, -1))
SMALL = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 0, 1), (1, 1, 1), (0, 1, 0)]

letters3 = st.sampled_from(pairs(3))
letters4 = st.sampled_from(pairs(4))


def test_normal_forms():
    assert phi_normal_form(3, [(2, 3), (1, 2)]) is None
    assert phi_normal_form(3, [(1, 3), (1, 2)]) == (1, 1, 0)
    assert phi_normal_form(3, []) == (0, 0, 0)
    assert dual_phi_normal_form(3, [(1, 2), (1, 3)]) is None
    assert dual_phi_normal_form(3, []) == (0, 0, 0)


@given(st.lists(letters4, max_size=6))
def test_psi_transport_of_zero_words(word):
    sign, image = psi_word(4, word)
    assert (phi_normal_form(4, word) is None) == (dual_phi_normal_form(4, image) is None)
    assert sign == (-1) ** len(word)


def test_gate_on_omega_1():
    v = {((2,),): 1}
    assert phi_act_L((2, 3), (1, 0), v) == {}
    assert phi_act_L((1, 2), (1, 0), {((1,),): 1}) == v


def test_mixed_weights_rejected():
    with pytest.raises(ValueError):
        phi_act_L((1, 2), (1, 0), {((1,),): 1, ((2,),): 1})


@pytest.mark.parametrize("lam", SMALL)
def test_phi_t_is_m_t_on_polytope(lam):
    m = module(lam)
    for t in m.points:
        assert phi_T_on_L(t, lam, m.u) == m.vectors[t]


@given(st.sampled_from(SMALL), st.data())
def test_phi_t_is_m_t_everywhere(lam, data):
    n = len(lam) + 1
    t = tuple(data.draw(st.integers(0, 2)) for _ in pairs(n))
    u = module(lam).u
    assert phi_T_on_L(t, lam, u) == apply_M_T(t, u)


@pytest.mark.parametrize("lam", [(1, 1), (2, 1), (1, 1, 1)])
def test_degenerate_action_off_polytope(lam):
    n = len(lam) + 1
    a = sample_weightings(n, 1, 3)[0]
    deg = DegenerateModule(lam, a)
    m = deg.hw
    pts = set(m.points)
    z = (0,) * len(pairs(n))
    killed = 0
    for t in itertools.product(range(3), repeat=len(pairs(n))):
        if t in pts:
            assert deg.phi_T(t, {z: 1}) == {t: 1}
            continue
        v = apply_M_T(t, m.u)
        got = deg.phi_T(t, {z: 1})
        if not v:
            assert not got
            continue
        level = sum(x * y for x, y in zip(a, t))
        optimal = max_grad(sigma(n, a), v) == level
        if not optimal:
            killed += 1
            assert not got
        else:
            assert got == {k: x for k, x in deg.expand(v).items()
                           if sum(p * q for p, q in zip(a, k)) == level}
    assert killed > 0


@pytest.mark.parametrize("lam", SMALL)
def test_degenerate_basis(lam):
    n = len(lam) + 1
    for a in sample_weightings(n, 3, 1):
        assert degenerate_basis_rank(lam, a) == weyl_dim(lam)


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 2), (4, 3)])
def test_fundamental_module_agrees(n, k):
    for a in sample_weightings(n, 3, 2):
        assert fundamental_phi_matches(n, k, a)


def test_cartan_examples():
    assert cartan_component_dim((0, 0), (1, 1), STRICT3) == 8
    assert cartan_component_dim((1, 0), (1, 0), STRICT3) == 6
    assert cartan_component_dim((1, 0), (0, 1), STRICT3) == 8
    assert cartan_closure_dim((1, 0), (0, 1), STRICT3) == 8


@pytest.mark.parametrize("lam,mu", list(itertools.combinations_with_replacement(
    list(itertools.product(range(2), repeat=3)), 2))[::4])
def test_cartan_components_n4(lam, mu):
    for a in sample_weightings(4, 2, 9):
        assert cartan_component_dim(lam, mu, a) == weyl_dim(add_weights(lam, mu))


def test_tensor_relation_kills_everything():
    mod = fundamental_tensor((1, 1), STRICT3)
    labels = [(i, j) for i in pluecker_indices(3, 1) for j in pluecker_indices(3, 2)]
    for p, q in itertools.product(pairs(3), repeat=2):
        if p[0] > q[0]:
            for lab in labels:
                assert mod.act(p, mod.act(q, {lab: 1})) == {}


@given(st.lists(letters3, max_size=5), st.integers(0, 1000))
def test_tensor_bracketing(word, seed):
    a = random_weighting(3, random.Random(seed))
    f1, f2 = FundamentalDegenerate(3, 1, a), FundamentalDegenerate(3, 2, a)
    flat = TensorModule([f1, f2, f1])
    nested = TensorModule([TensorModule([f1, f2]), f1])
    start_flat = {((1,), (1, 2), (1,)): 1}
    start_nested = {(((1,), (1, 2)), (1,)): 1}
    got = nested.act_word(word, start_nested)
    assert flat.act_word(word, start_flat) == {(x, y, z): c for ((x, y), z), c in got.items()}


def _monomial(c, t):
    out = Fraction(1)
    for p, x in zip(pairs(3), t):
        out *= Fraction(c[p]) ** x
    return out


def test_exp_orbit_trivial_and_toric():
    assert exp_orbit_point((1, 1), STRICT3, {}) == {(0, 0, 0): 1}
    rng = random.Random(4)
    c1 = {p: Fraction(rng.randint(1, 9), rng.randint(1, 9)) for p in pairs(3)}
    c2 = {p: Fraction(rng.randint(1, 9), rng.randint(1, 9)) for p in pairs(3)}
    x1 = exp_orbit_point((1, 1), STRICT3, c1)
    x2 = exp_orbit_point((1, 1), STRICT3, c2)
    assert set(x1) == set(x2) == set(module((1, 1)).points)
    for t in x1:
        ratio = x1[t] / _monomial(c1, t)
        assert ratio > 0 and ratio == x2[t] / _monomial(c2, t)


def test_orbit_json():
    data = orbit_to_json(3, exp_orbit_point((1, 0), STRICT3, {(1, 2): Fraction(1, 2)}))
    assert {"T": [[1, 2, 1], [1, 3, 0], [2, 3, 0]], "value": "1/2"} in data["coords"]


seeds = st.integers(0, 100_000)


@given(seeds, st.sampled_from([3, 4]))
def test_orbit_points_lie_on_degenerate_variety(seed, n):
    rng = random.Random(seed)
    a = random_weighting(n, rng)
    c = {p: Fraction(rng.randint(-100, 100), rng.randint(1, 100)) for p in pairs(n)}
    pl = plucker_point(n, a, c)
    for idx in pluecker_indices(n):
        vals = dict(c)
        assert pl.get(idx, 0) == evaluate_z(n, _initial_exp(n, idx, a), vals)
    lams = [(1, 1), (2, 1), (1, 2)] if n == 3 else [(1, 1, 0), (0, 2, 0), (1, 0, 1)]
    for lam in lams:
        for rel in initial_ideal_component(lam, a).basis:
            assert evaluate_polynomial(rel, pl) == 0
        assert exp_tensor_holds(lam, a, c)
        assert embedding_holds(lam, a, c)


@pytest.mark.parametrize("lam", [(1, 1), (2, 1), (1, 1, 1), (0, 2, 0)])
def test_submodule_annihilator_is_initial_ideal(lam):
    n = len(lam) + 1
    for a in sample_weightings(n, 3, 5):
        assert mainproj_kernel(lam, a) == initial_ideal_component(lam, a)


@pytest.mark.parametrize("lam", SMALL)
def test_dual_basis(lam):
    assert dual_basis_rank(lam, pi_tilde(lam)) == weyl_dim(lam)


@pytest.mark.parametrize("lam", [(1, 1), (1, 1, 1)])
def test_dual_relations_on_L(lam):
    n = len(lam) + 1
    m = module(lam)
    for t in m.points:
        v = m.vectors[t]
        for p, q in itertools.product(pairs(n), repeat=2):
            pq = dual_phi_act_L(p, lam, dual_phi_act_L(q, lam, v))
            if p[1] < q[1]:
                assert pq == {}
            elif p[1] == q[1]:
                assert pq == dual_phi_act_L(q, lam, dual_phi_act_L(p, lam, v))
