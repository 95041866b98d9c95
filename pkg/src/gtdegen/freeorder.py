"""The total order on the free monoid of letters f_{i,j}, essential signatures and the
modules L_lambda^prec whose tensor products are gated by gradings.

Words are sequences of pairs.  The canonical word of T lists its letters with
(i, j) ascending; as an operator its rightmost letter acts first, so it
agrees with M_T.
"""

from __future__ import annotations

from collections import defaultdict
from functools import cmp_to_key

from .config import GuardError, default_max_dim
from .exactla import IntegerEchelon
from .lie import Weight, add_weights, fundamental, highest_content, pairs, pluecker_indices, weight_n
from .phi import PhiModule, TensorModule, _exponent
from .polytope import ThetaPoint, add, pi_lambda, t_of_tuple, unit
from .rep import apply_f, content_after, highest_weight_tensor

FreeWord = tuple


def _default_key(p):
    return tuple(p)


def word_weight(w, g=None) -> int:
    """|w| = sum (j - i), or sum (g(j) - g(i)) for a reweighting g."""
    if g is None:
        return sum(j - i for i, j in w)
    return sum(g(j) - g(i) for i, j in w)


def word_less(x, y, g=None, letter_key=_default_key) -> bool:
    """x precedes y: smaller weight first, then the first differing letter decides."""
    wx, wy = word_weight(x, g), word_weight(y, g)
    if wx != wy:
        return wx < wy
    for a, b in zip(x, y):
        if tuple(a) != tuple(b):
            return letter_key(a) < letter_key(b)
    if len(x) != len(y):
        raise ValueError("equal-weight words where one is a prefix of the other")
    return False


def u_prec_normal(n: int, word) -> ThetaPoint | None:
    """Exponent of a nonzero word of U^prec, or None.

    A word is nonzero iff its i-sequence never descends; letters with equal i commute.
    """
    word = [tuple(p) for p in word]
    for (i1, _), (i2, _) in zip(word, word[1:]):
        if i1 > i2:
            return None
    return _exponent(n, word)


def canonical_word(t: ThetaPoint) -> tuple:
    from .phi import _n
    n = _n(t)
    out = []
    for p, x in zip(pairs(n), t):
        out.extend([p] * x)
    return tuple(out)


def nonzero_monomials(lam: Weight, max_dim: int | None = None) -> dict:
    """Every T with M_T u_lambda != 0, mapped to that vector.

    M_{T+e_p} = f_p M_T whenever p is the last-acting letter of T+e_p, so the
    search extends T only by letters in a row <= its first nonzero row (and at
    a column >= the largest used in that row).  A zero vector has no nonzero
    extensions, so the search is exhaustive.
    """
    n = weight_n(lam)
    cap = (default_max_dim() if max_dim is None else max_dim) * 20
    ps = pairs(n)
    z = (0,) * len(ps)
    found = {z: highest_weight_tensor(lam)}
    stack = [z]
    while stack:
        t = stack.pop()
        v = found[t]
        row = next((p[0] for p, x in zip(ps, t) if x), n)
        col = max((p[1] for p, x in zip(ps, t) if x and p[0] == row), default=0)
        for p in ps:
            if p[0] > row or (p[0] == row and p[1] < col):
                continue
            w = apply_f(p, v)
            if w:
                t2 = add(t, unit(n, p))
                found[t2] = w
                if len(found) > cap:
                    raise GuardError(f"more than {cap} nonzero monomials")
                stack.append(t2)
    return found


def essential_signatures(lam: Weight, mu=None, g=None, letter_key=_default_key,
                         max_dim: int | None = None) -> frozenset:
    """T such that M_T u is not in the span of the M_T' u with T' before T.

    ``mu`` restricts to one weight space, given as a content vector.
    """
    lam = tuple(lam)
    top = highest_content(lam)
    vecs = nonzero_monomials(lam, max_dim)
    blocks = defaultdict(list)
    for t in vecs:
        blocks[content_after(top, t)].append(t)
    out = set()
    for c, ts in blocks.items():
        if mu is not None and c != tuple(mu):
            continue
        words = {t: canonical_word(t) for t in ts}
        if len(set(words.values())) != len(ts):
            raise AssertionError("two signatures share a canonical word")

        def cmp(s, t):
            if s == t:
                return 0
            return -1 if word_less(words[s], words[t], g, letter_key) else 1

        ech = IntegerEchelon()
        for t in sorted(ts, key=cmp_to_key(cmp)):
            if ech.add(vecs[t]):
                out.add(t)
    return frozenset(out)


def d_tensor_gate(p, grad: ThetaPoint) -> bool:
    """chi_{i,j} may act on a vector of this grading (no support before (i, j))."""
    from .phi import _n
    i, j = p
    for (l, m), x in zip(pairs(_n(grad)), grad):
        if x and (l < i or (l == i and m < j)):
            return False
    return True


class PrecModule(PhiModule):
    """L_lambda^prec on the basis chi^T v, T in Pi_lambda."""

    def __init__(self, lam: Weight):
        super().__init__()
        self.lam = tuple(lam)
        self.n = weight_n(lam)
        self.top = highest_content(lam)
        self.points = pi_lambda(lam)

    def grad(self, label) -> ThetaPoint:
        return label

    def content(self, label) -> tuple:
        return self.grad(label)

    def _act(self, p, label) -> dict:
        if not d_tensor_gate(p, label):
            return {}
        t2 = add(label, unit(self.n, p))
        return {t2: 1} if t2 in self.points else {}


class PrecFundamental(PhiModule):
    """L_{omega_k}^prec on the basis e_I, graded by T(I)."""

    def __init__(self, n: int, k: int):
        super().__init__()
        self.n, self.k = n, k
        self.top = highest_content(fundamental(n, k))
        self.index_of = {t_of_tuple(n, idx): idx for idx in pluecker_indices(n, k)}

    def grad(self, label) -> ThetaPoint:
        return t_of_tuple(self.n, label)

    def content(self, label) -> tuple:
        return self.grad(label)

    def _act(self, p, label) -> dict:
        t = self.grad(label)
        if not d_tensor_gate(p, t):
            return {}
        new = self.index_of.get(add(t, unit(self.n, p)))
        return {new: 1} if new is not None else {}


class PrecTensor(TensorModule):
    """Tensor product in which chi_{i,j} is gated by the total grading."""

    def grad(self, label) -> ThetaPoint:
        total = (0,) * len(pairs(self.n))
        for f, l in zip(self.factors, label):
            total = add(total, f.grad(l))
        return total

    def content(self, label) -> tuple:
        return self.grad(label)

    def gate(self, p, label) -> bool:
        return d_tensor_gate(p, self.grad(label))


def chi_orbit(mod: PhiModule, start: dict, budget: int = 200_000) -> dict:
    """All T with chi^T start != 0, mapped to chi^T start.

    chi^T is the canonical word of T; its leftmost letter acts last, so T is
    extended by letters <= every letter already used.
    """
    n = mod.n
    ps = pairs(n)
    z = (0,) * len(ps)
    found = {z: start}
    stack = [z]
    while stack:
        t = stack.pop()
        least = next((p for p, x in zip(ps, t) if x), None)
        for p in ps:
            if least is not None and p > least:
                break
            w = mod.act(p, found[t])
            if w:
                t2 = add(t, unit(n, p))
                found[t2] = w
                if len(found) > budget:
                    raise GuardError("chi-orbit exceeds its budget")
                stack.append(t2)
    return found


def prec_cartan_check(lam: Weight, mu: Weight) -> bool:
    """chi^T (v x v) != 0 exactly for T in Pi_{lambda+mu}, with positive coefficients."""
    mod = PrecTensor([PrecModule(lam), PrecModule(mu)])
    z = (0,) * len(pairs(weight_n(lam)))
    orbit = chi_orbit(mod, {(z, z): 1})
    for w in orbit.values():
        if any(x <= 0 for x in w.values()):
            raise AssertionError("negative structure constant")
    return set(orbit) == set(pi_lambda(add_weights(lam, mu)))


def prec_tensor(lam: Weight) -> PrecTensor:
    n = weight_n(lam)
    return PrecTensor([PrecFundamental(n, k) for k, x in enumerate(lam, start=1) for _ in range(x)])


def prec_toric_kernel(lam: Weight):
    """Annihilator in R_lambda of the submodule generated by the highest tensor."""
    from .ideals import pairing_kernel
    from .rep import highest_key
    lam = tuple(lam)
    if not any(lam):
        return pairing_kernel(lam, [{(): 1}])
    mod = prec_tensor(lam)
    orbit = chi_orbit(mod, {highest_key(lam): 1})
    return pairing_kernel(lam, list(orbit.values()))


def random_reweighting(n: int, rng):
    """A strictly increasing g on 1..n."""
    vals = sorted(rng.sample(range(1, 10 * n), n))
    table = dict(zip(range(1, n + 1), vals))
    return table.__getitem__
