"""Runners for the acceptance checks.  Each returns (passed, details)."""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction

from .config import default_max_dim
from .cone import (cone_check, eta, eta_star, facets, from_display3, maxcone_certificate,
                   pi_tilde, random_weighting, sample_weightings, sigma, sigma_inverse,
                   sigma_tilde, upsilon)
from .ideals import (general_initial_component, graded_quotient_dims, ideal_component,
                     initial_exp_component, initial_ideal_component, polynomial_to_str,
                     toric_component, transport)
from .lie import add_weights, dual_weight, pairs, weyl_dim
from .polytope import (lattice_points_GT, lattice_points_P, minkowski, parse_display3,
                       pi_lambda, psi)
from .rep import apply_M_T, max_grad, module

SL3_PI = ["00/0", "10/0", "00/1", "01/0", "11/0", "01/1", "11/1", "21/0"]
SL3_GAMMA = ["21/2", "20/2", "20/1", "21/1", "20/0", "11/1", "10/1", "10/0"]
SEED = 2024


def weights(n: int, cmax: int, skip_zero: bool = False) -> list:
    out = [lam for lam in itertools.product(range(cmax + 1), repeat=n - 1)]
    return [lam for lam in out if any(lam)] if skip_zero else out


def _timed(fn):
    def run(*args, **kwargs):
        t0 = time.perf_counter()
        ok, details = fn(*args, **kwargs)
        details["seconds"] = round(time.perf_counter() - t0, 3)
        return ok, details
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def criterion_1() -> tuple:
    """The n = 3, lambda = (1,1) example."""
    lam = (1, 1)
    pts = pi_lambda(lam)
    ok_pi = pts == {parse_display3(s) for s in SL3_PI}
    ok_psi = {psi(lam, t) for t in pts} == {parse_display3(s) for s in SL3_GAMMA}
    plain = ideal_component(lam)
    ok_plain = [polynomial_to_str(b) for b in plain.basis] == ["X_1X_23 - X_2X_13 + X_3X_12"]
    a = from_display3((-1, -1, -1))
    ini = initial_ideal_component(lam, a)
    ok_ini = ([polynomial_to_str(b) for b in ini.basis] == ["X_1X_23 - X_2X_13"]
              and ini == toric_component(lam))
    return ok_pi and ok_psi and ok_plain and ok_ini, {
        "pi": ok_pi, "psi": ok_psi, "ideal": ok_plain, "initial": ok_ini}


@_timed
def criterion_2(ns=(3, 4, 5), cmax: int = 2, max_dim: int | None = None) -> tuple:
    """|Pi| = weyl_dim, Pi = P cap Z, psi(Pi) = Gamma, M_T u is a basis of L."""
    cap = default_max_dim() if max_dim is None else max_dim
    failures, count = [], 0
    for n in ns:
        for lam in weights(n, cmax):
            if weyl_dim(lam) > cap:
                continue
            count += 1
            pts = pi_lambda(lam)
            ok = (len(pts) == weyl_dim(lam) and pts == lattice_points_P(lam)
                  and {psi(lam, t) for t in pts} == lattice_points_GT(lam))
            m = module(lam, cap)
            ok = ok and m.check_basis() and m.basis_rank() == weyl_dim(lam)
            module.cache_clear()
            if not ok:
                failures.append(lam)
    return not failures, {"weights": count, "failures": failures}


@_timed
def criterion_3(ns=(3, 4), cmax: int = 2) -> tuple:
    failures, count = [], 0
    for n in ns:
        ws = weights(n, cmax)
        for lam, mu in itertools.combinations_with_replacement(ws, 2):
            count += 1
            nu = add_weights(lam, mu)
            if minkowski(pi_lambda(lam), pi_lambda(mu)) != pi_lambda(nu):
                failures.append(("pi", lam, mu))
            if minkowski(lattice_points_GT(lam), lattice_points_GT(mu)) != lattice_points_GT(nu):
                failures.append(("gt", lam, mu))
    return not failures, {"pairs": count, "failures": failures}


def sweep(n: int, count: int = 20, seed: int = SEED) -> list:
    return sample_weightings(n, count, seed + n)


@_timed
def criterion_4(cases=((3, 2), (4, 2)), count: int = 20) -> tuple:
    failures, tested = [], 0
    for n, cmax in cases:
        for lam in weights(n, cmax):
            m = module(lam)
            for a in sweep(n, count):
                s = sigma(n, a)
                tested += 1
                if not (m.lfiltration_holds(a, s) and m.lfiltration_exact(a, s)):
                    failures.append((lam, a))
    return not failures, {"cases": tested, "failures": failures}


@_timed
def criterion_5(cases=((3, 2), (4, 2)), count: int = 20) -> tuple:
    failures, tested = [], 0
    for n, cmax in cases:
        zero = (0,) * len(pairs(n))
        for lam in weights(n, cmax):
            tor = toric_component(lam)
            plain = ideal_component(lam)
            for a in list(sweep(n, count)) + [zero]:
                tested += 1
                ini = initial_ideal_component(lam, a)
                ok = ini == initial_exp_component(lam, a)
                rep = cone_check(a)
                if rep.interior:
                    ok = ok and ini == tor
                if a == zero:
                    ok = ok and ini == plain
                if not ok:
                    failures.append((lam, a))
    return not failures, {"cases": tested, "failures": failures}


@_timed
def criterion_6(cases=((3, 2), (4, 2)), count: int = 20) -> tuple:
    failures, tested = [], 0
    for n, cmax in cases:
        for lam in weights(n, cmax):
            m = module(lam)
            for a in sweep(n, count):
                tested += 1
                ini = initial_ideal_component(lam, a)
                ok = ini.monomial_count - ini.dim == weyl_dim(lam)
                s = sigma(n, a)
                ok = ok and graded_quotient_dims(ini, s) == m.graded_dims(s)
                if not ok:
                    failures.append((lam, a))
    return not failures, {"cases": tested, "failures": failures}


@_timed
def criterion_7(ns=(3, 4, 5), seed: int = SEED) -> tuple:
    rng = random.Random(seed)
    failures, covered = [], {}
    for n in ns:
        covered[n] = 0
        for f in facets(n):
            a = random_weighting(n, rng, tight=(f,))
            certs = maxcone_certificate(a)
            ok = len(certs) == 1 and certs[0].facet == f
            ok = ok and certs[0].not_in_initial_ideal and certs[0].in_toric_ideal
            if ok:
                covered[n] += 1
            else:
                failures.append((n, f, a))
        if covered[n] != (n - 1) * (n - 2) // 2:
            failures.append((n, "coverage"))
    return not failures, {"covered": covered, "failures": failures}


def random_c(n: int, rng: random.Random) -> dict:
    return {p: Fraction(rng.randint(-100, 100), rng.randint(1, 100)) for p in pairs(n)}


@_timed
def criterion_8(seed: int = SEED, random_t: int = 100, orbit_points: int = 10) -> tuple:
    from .phi import (DegenerateModule, cartan_component_dim, degenerate_basis_rank,
                      exp_tensor_holds, phi_T_on_L, plucker_point)
    from .ideals import evaluate_polynomial
    rng = random.Random(seed)
    failures = []
    counts = {"phi_L": 0, "random_T": 0, "cartan": 0, "orbit": 0}
    for n in (3, 4):
        a_list = sweep(n, 4)
        for lam in weights(n, 1, skip_zero=True):
            m = module(lam)
            pts = set(m.points)
            for t in m.points:
                counts["phi_L"] += 1
                if phi_T_on_L(t, lam, m.u) != m.vectors[t]:
                    failures.append(("phiL", lam, t))
            a = a_list[1]
            s = sigma(n, a)
            deg = DegenerateModule(lam, a)
            z = (0,) * len(pairs(n))
            for t in m.points:
                if deg.phi_T(t, {z: 1}) != {t: 1}:
                    failures.append(("degbasis", lam, t))
            cap = max(sum(t) for t in pts) + 1
            tested = 0
            while tested < random_t:
                t = tuple(rng.randint(0, 2) for _ in pairs(n))
                if t in pts or sum(t) > cap:
                    continue
                tested += 1
                counts["random_T"] += 1
                v = apply_M_T(t, m.u)
                if phi_T_on_L(t, lam, m.u) != v:
                    failures.append(("phiL", lam, t))
                    continue
                got = deg.phi_T(t, {z: 1})
                if not v:
                    if got:
                        failures.append(("zero", lam, t))
                    continue
                level = sum(x * y for x, y in zip(a, t))
                if max_grad(s, v) > level:
                    failures.append(("filtration", lam, t))
                    continue
                expected = {k: x for k, x in deg.expand(v).items()
                            if sum(p * q for p, q in zip(a, k)) == level}
                if got != expected:
                    failures.append(("degenerate", lam, t))
            for a in a_list:
                if degenerate_basis_rank(lam, a) != weyl_dim(lam):
                    failures.append(("rank", lam, a))
        for lam, mu in itertools.combinations_with_replacement(weights(n, 1), 2):
            for a in a_list[:2]:
                counts["cartan"] += 1
                if cartan_component_dim(lam, mu, a) != weyl_dim(add_weights(lam, mu)):
                    failures.append(("cartan", lam, mu, a))
        for k in range(orbit_points):
            a = a_list[k % len(a_list)]
            c = random_c(n, rng)
            coords = plucker_point(n, a, c)
            for lam in weights(n, 2, skip_zero=True):
                counts["orbit"] += 1
                for b in initial_ideal_component(lam, a).basis:
                    if evaluate_polynomial(b, coords) != 0:
                        failures.append(("orbit", lam, a))
                        break
                if n == 3 or sum(lam) <= 3:
                    if not exp_tensor_holds(lam, a, c):
                        failures.append(("exptensor", lam, a))
    return not failures, {"counts": counts, "failures": failures[:20]}


@_timed
def criterion_9(ns=(3, 4), cmax: int = 2, seed: int = SEED, reweightings: int = 5) -> tuple:
    from .freeorder import (essential_signatures, prec_cartan_check, prec_toric_kernel,
                            random_reweighting)
    rng = random.Random(seed)
    failures = []
    for n in ns:
        gs = [random_reweighting(n, rng) for _ in range(reweightings)]
        for lam in weights(n, cmax):
            pts = pi_lambda(lam)
            if essential_signatures(lam) != pts:
                failures.append(("essential", lam))
            if any(essential_signatures(lam, g=g) != pts for g in gs):
                failures.append(("reweighting", lam))
            if prec_toric_kernel(lam) != toric_component(lam):
                failures.append(("toric", lam))
        for lam, mu in itertools.combinations_with_replacement(weights(n, cmax), 2):
            if not prec_cartan_check(lam, mu):
                failures.append(("cartan", lam, mu))
    return not failures, {"failures": failures}


@_timed
def criterion_10(seed: int = SEED, samples: int = 100) -> tuple:
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        n = rng.choice((3, 4, 5))
        a = tuple(rng.randint(-20, 20) for _ in pairs(n))
        if sigma_inverse(n, sigma(n, a)) != a:
            failures.append(("sigma", a))
    for n in (3, 4):
        for lam in weights(n, 1):
            lt = dual_weight(lam)
            if pi_tilde(lam) != frozenset(eta(t) for t in pi_lambda(lt)):
                failures.append(("pi_tilde", lam))
            plain = ideal_component(lam)
            for a in sweep(n, 6):
                s = sigma_tilde(n, a)
                lhs = general_initial_component(plain, s)
                image = transport(initial_ideal_component(lt, eta_star(a)),
                                  lambda i: upsilon(n, i), lam)
                if lhs != image:
                    failures.append(("transport", lam, a))
                if cone_check(a).interior:
                    toric = transport(toric_component(lt), lambda i: upsilon(n, i), lam)
                    if lhs != toric:
                        failures.append(("toric", lam, a))
    return not failures, {"failures": failures}


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}


def run_all(which=None) -> dict:
    out = {}
    for k, fn in CRITERIA.items():
        if which is None or k in which:
            out[k] = fn()
    return out
