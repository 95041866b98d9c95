"""The cone K of weightings A, the map sigma to Pluecker gradings, and the dual maps.

A weighting A is a tuple in the row-major pair order used for ThetaPoints;
``A(T)`` is the dot product.  A grading S is a dict PlueckerIndex -> value.

Facets of K are labelled by the pair (i, j) with j - i >= 2 whose entry
a_{i,j} they bound from below:

* the (a)-inequality at i is the facet (i, i+2);
* the (b)-inequality at (i, j) is the facet (i, j+1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .lie import pair_position, pairs, pluecker_indices
from .polytope import ThetaPoint, from_pairs, pairing, t_of_tuple

WeightingA = tuple
GradingS = dict


def n_of_weighting(a) -> int:
    from .polytope import _n_for_length
    return _n_for_length(len(a))


def from_display3(text_or_values) -> WeightingA:
    """n = 3 weighting given in the display order (a12, a23, a13)."""
    a12, a23, a13 = text_or_values
    return from_pairs(3, {(1, 2): a12, (2, 3): a23, (1, 3): a13})


def facets(n: int) -> list:
    return [(i, j) for i, j in pairs(n) if j - i >= 2]


def facet_family(f) -> tuple:
    """('a', (i,)) or ('b', (i, j)) in the numbering of the defining inequalities."""
    i, j = f
    if j == i + 2:
        return "a", (i,)
    return "b", (i, j - 1)


def facet_slack(a, f) -> int:
    """Nonnegative on K; zero exactly when the facet is tight."""
    n = n_of_weighting(a)
    pos = pair_position(n)
    i, j = f
    if j == i + 2:
        return a[pos[(i, i + 2)]] - a[pos[(i, i + 1)]] - a[pos[(i + 1, i + 2)]]
    jj = j - 1
    return a[pos[(i, jj + 1)]] + a[pos[(i + 1, jj)]] - a[pos[(i, jj)]] - a[pos[(i + 1, jj + 1)]]


def long_inequalities_hold(a) -> bool:
    """The families (A) and (B)."""
    n = n_of_weighting(a)
    pos = pair_position(n)

    def g(i, j):
        return a[pos[(i, j)]]

    for i, j, k in combinations(range(1, n + 1), 3):
        if g(i, j) + g(j, k) > g(i, k):
            return False
    for i, k, j, l in combinations(range(1, n + 1), 4):
        if g(i, j) + g(k, l) > g(i, l) + g(k, j):
            return False
    return True


@dataclass(frozen=True)
class ConeReport:
    member: bool
    tight_a: list = field(default_factory=list)
    tight_b: list = field(default_factory=list)
    interior: bool = False

    def to_json(self) -> dict:
        return {"member": self.member, "interior": self.interior,
                "tight_a": list(self.tight_a), "tight_b": [list(p) for p in self.tight_b]}


def cone_check(a) -> ConeReport:
    n = n_of_weighting(a)
    slacks = {f: facet_slack(a, f) for f in facets(n)}
    member = all(x >= 0 for x in slacks.values())
    if member and not long_inequalities_hold(a):
        raise AssertionError("(a),(b) hold but (A),(B) fail")
    tight_a, tight_b = [], []
    if member:
        for f, x in slacks.items():
            if x == 0:
                fam, idx = facet_family(f)
                (tight_a if fam == "a" else tight_b).append(idx[0] if fam == "a" else idx)
    return ConeReport(member, sorted(tight_a), sorted(tight_b),
                      member and not tight_a and not tight_b)


def in_cone(a) -> bool:
    return cone_check(a).member


def tight_facets(a) -> list:
    n = n_of_weighting(a)
    return [f for f in facets(n) if facet_slack(a, f) == 0]


def weighting_from_slacks(n: int, first: dict, slacks: dict) -> WeightingA:
    """Build A from its values a_{i,i+1} and the facet slacks."""
    pos = pair_position(n)
    a = [0] * len(pos)
    for i in range(1, n):
        a[pos[(i, i + 1)]] = first[i]
    for d in range(2, n):
        for i in range(1, n - d + 1):
            j = i + d
            if d == 2:
                base = a[pos[(i, i + 1)]] + a[pos[(i + 1, i + 2)]]
            else:
                base = a[pos[(i, j - 1)]] + a[pos[(i + 1, j)]] - a[pos[(i + 1, j - 1)]]
            a[pos[(i, j)]] = base + slacks[(i, j)]
    return tuple(a)


def random_weighting(n: int, rng: random.Random, tight=(), low: int = -3, high: int = 3,
                     max_slack: int = 3) -> WeightingA:
    """A in K whose tight facets are exactly ``tight``."""
    first = {i: rng.randint(low, high) for i in range(1, n)}
    slacks = {f: (0 if f in tight else rng.randint(1, max_slack)) for f in facets(n)}
    return weighting_from_slacks(n, first, slacks)


def sample_weightings(n: int, count: int, seed: int) -> list:
    """Seeded mix of interior, single-facet and multi-facet points of K."""
    rng = random.Random(seed)
    fs = facets(n)
    out = []
    for k in range(count):
        if k % 3 == 0 or not fs:
            tight = ()
        elif k % 3 == 1:
            tight = (fs[rng.randrange(len(fs))],)
        else:
            tight = tuple(f for f in fs if rng.random() < 0.5)
        out.append(random_weighting(n, rng, tight))
    return out


# --- sigma and its inverse --------------------------------------------------------

def sigma(n: int, a) -> GradingS:
    """sigma(A)_{i_1..i_k} = A(T(i_1..i_k)); automatically s_{1..k} = 0."""
    if len(a) != len(pairs(n)):
        raise ValueError("weighting and n disagree")
    return {idx: pairing(a, t_of_tuple(n, idx)) for idx in pluecker_indices(n)}


def sigma_inverse(n: int, s: GradingS):
    """A with sigma(A) = s, or None when s is not in the image."""
    a = from_pairs(n, {(i, j): s[tuple(range(1, i)) + (j,)] for i, j in pairs(n)})
    if sigma(n, a) != {idx: s[idx] for idx in pluecker_indices(n)}:
        return None
    return a


def normalize(n: int, s: GradingS) -> GradingS:
    """Shift every length-k entry by -s_{1..k}; the degeneration is unchanged."""
    return {idx: x - s[tuple(range(1, len(idx) + 1))] for idx, x in s.items()}


def h_description_check(n: int, s: GradingS) -> bool:
    """Linear relations plus the inequalities (a'), (b') on the grading side."""
    def base(i, j):
        return s[tuple(range(1, i)) + (j,)]

    for idx in pluecker_indices(n):
        t = t_of_tuple(n, idx)
        if s[idx] != sum(x * base(i, j) for (i, j), x in zip(pairs(n), t)):
            return False
    for i in range(1, n - 1):
        if base(i, i + 1) + base(i + 1, i + 2) > base(i, i + 2):
            return False
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            if base(i, j) + base(i + 1, j + 1) > base(i, j + 1) + base(i + 1, j):
                return False
    return True


def sigma_d(n: int, a, d) -> GradingS:
    """Experimental: sigma followed by zeroing the lengths outside ``d``."""
    d = set(d)
    return {idx: (x if len(idx) in d else 0) for idx, x in sigma(n, a).items()}


# --- the dual construction --------------------------------------------------------

def eta(t: ThetaPoint) -> ThetaPoint:
    n = n_of_weighting(t)
    pos = pair_position(n)
    return tuple(t[pos[(n + 1 - j, n + 1 - i)]] for i, j in pairs(n))


def eta_star(a) -> WeightingA:
    return eta(a)


def complement(n: int, idx: tuple) -> tuple:
    return tuple(m for m in range(1, n + 1) if m not in idx)


def upsilon(n: int, idx: tuple) -> tuple:
    """X_{i_1..i_k} -> X_{n+1-j_n, .., n+1-j_{k+1}}, j the complement in 1..n."""
    return tuple(sorted(n + 1 - j for j in complement(n, idx)))


def tilde_t(n: int, idx: tuple) -> ThetaPoint:
    """A 1 at (j_m, m) for each m > k with j_m < m."""
    k = len(idx)
    js = complement(n, idx)
    return from_pairs(n, {(j, m): 1 for m, j in zip(range(k + 1, n + 1), js) if j < m})


def sigma_tilde(n: int, a) -> GradingS:
    return {idx: pairing(a, tilde_t(n, idx)) for idx in pluecker_indices(n)}


def pi_tilde(lam) -> frozenset:
    """Minkowski sum of the sets {T~(i_1..i_k)}."""
    from .lie import weight_n
    from .polytope import minkowski, zero
    n = weight_n(lam)
    acc = frozenset({zero(n)})
    for k, x in enumerate(lam, start=1):
        pk = frozenset(tilde_t(n, idx) for idx in pluecker_indices(n, k))
        for _ in range(x):
            acc = minkowski(acc, pk)
    return acc


# --- boundary certificates ----------------------------------------------------------

def certificate_binomial(n: int, f) -> tuple:
    """(degree, {monomial: coeff}) for the facet ``f``.

    (a) at i:  X_{1..i} X_{1..i-1,i+1,i+2} - X_{1..i-1,i+1} X_{1..i,i+2}
    (b) at (i,j): X_{1..i} X_{1..i-1,j,j+1} - X_{1..i-1,j} X_{1..i,j+1}
    """
    from .ideals import monomial_key
    fam, idx = facet_family(f)
    if fam == "a":
        i = idx[0]
        j = i + 1
    else:
        i, j = idx
    head = tuple(range(1, i))
    plus = (tuple(range(1, i + 1)), head + (j, j + 1))
    minus = (head + (j,), tuple(range(1, i + 1)) + (j + 1,))
    degree = tuple(1 if k in (i, i + 1) else 0 for k in range(1, n))
    return degree, {monomial_key(plus): 1, monomial_key(minus): -1}


@dataclass(frozen=True)
class Certificate:
    facet: tuple
    binomial: dict
    degree: tuple
    not_in_initial_ideal: bool
    in_toric_ideal: bool

    def to_json(self) -> dict:
        from .ideals import polynomial_to_json
        fam, idx = facet_family(self.facet)
        return {"facet": {"family": fam, "indices": list(idx)},
                "binomial": polynomial_to_json(self.binomial),
                "degree": list(self.degree),
                "not_in_initial_ideal": self.not_in_initial_ideal,
                "in_toric_ideal": self.in_toric_ideal}


def maxcone_certificate(a) -> list:
    """One certificate per tight facet of A; ValueError for interior or non-members."""
    from .exactla import in_span
    from .ideals import initial_ideal_component, toric_component
    rep = cone_check(a)
    if not rep.member:
        raise ValueError("A is not in K")
    if rep.interior:
        raise ValueError("A is interior; no certificate is needed")
    n = n_of_weighting(a)
    out = []
    for f in tight_facets(a):
        degree, binom = certificate_binomial(n, f)
        ini = initial_ideal_component(degree, a)
        tor = toric_component(degree)
        out.append(Certificate(f, binom, degree,
                               not in_span(binom, ini.basis), in_span(binom, tor.basis)))
    return out
