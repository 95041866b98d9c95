"""The algebra Phi_n and its modules: L_lambda, the degenerations L_lambda^S and tensor products.

Modules are given by a basis of labels and the action of each generator on a
label; vectors are dicts label -> coefficient.  Tensor products follow the
Leibniz rule gated by the weight of the whole tensor.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from .cone import sigma
from .exactla import IntegerEchelon, SpanSolver, add_into
from .lie import (Weight, add_weights, content_in_cone, content_of_index, f_on_index,
                  fundamental, highest_content, pairs, weight_n)
from .polytope import ThetaPoint, pairing, pi_lambda, t_of_tuple
from .rep import TensorVector, apply_f, content_after, module, vector_content

PhiWord = tuple


# --- normal forms -------------------------------------------------------------------

def _exponent(n: int, word) -> ThetaPoint:
    ps = pairs(n)
    pos = {p: k for k, p in enumerate(ps)}
    t = [0] * len(ps)
    for p in word:
        t[pos[tuple(p)]] += 1
    return tuple(t)


def phi_normal_form(n: int, word) -> ThetaPoint | None:
    """Exponent T with word = phi^T in Phi_n, or None when the word is zero."""
    word = [tuple(p) for p in word]
    for (i1, _), (i2, _) in zip(word, word[1:]):
        if i1 > i2:
            return None
    return _exponent(n, word)


def dual_phi_normal_form(n: int, word) -> ThetaPoint | None:
    """Same for the dual algebra: zero iff the j-sequence ever increases."""
    word = [tuple(p) for p in word]
    for (_, j1), (_, j2) in zip(word, word[1:]):
        if j1 < j2:
            return None
    return _exponent(n, word)


def psi_word(n: int, word) -> tuple:
    """Image of a word under phi_{i,j} -> -phi~_{n+1-j,n+1-i}, as (sign, word)."""
    mapped = tuple((n + 1 - j, n + 1 - i) for i, j in word)
    return (-1) ** len(mapped), mapped


def letters_of(t: ThetaPoint) -> list:
    """Letters of phi^T (or M_T) in the order they act: larger i first."""
    n = _n(t)
    out = []
    for p, x in reversed(list(zip(pairs(n), t))):
        out.extend([p] * x)
    return out


def _n(t) -> int:
    from .polytope import _n_of_point
    return _n_of_point(t)


# --- Phi_n acting on L_lambda ---------------------------------------------------------

def phi_gate(top: tuple, content: tuple, i: int) -> bool:
    """phi_{i,j} may act on a weight vector of this content."""
    return content_in_cone(top, content, i)


def phi_act_L(p, lam: Weight, v: TensorVector) -> TensorVector:
    """phi_{i,j} v = f_{i,j} v when v lies in L_lambda(i), else 0."""
    if not v:
        return {}
    n = weight_n(lam)
    c = vector_content(v, n)
    if not phi_gate(highest_content(lam), c, p[0]):
        return {}
    return apply_f(p, v)


def phi_T_on_L(t: ThetaPoint, lam: Weight, v: TensorVector) -> TensorVector:
    for p in letters_of(t):
        if not v:
            return {}
        v = phi_act_L(p, lam, v)
    return v


def dual_gate(top: tuple, content: tuple, j: int) -> bool:
    """phi~_{i,j} acts on weight spaces reached using only f_{l,m} with m <= j."""
    s = 0
    for l in range(len(top) - 1):
        s += top[l] - content[l]
        if s < 0 or (l + 1 >= j and s != 0):
            return False
    return True


def dual_phi_act_L(p, lam: Weight, v: TensorVector) -> TensorVector:
    if not v:
        return {}
    n = weight_n(lam)
    c = vector_content(v, n)
    if not dual_gate(highest_content(lam), c, p[1]):
        return {}
    return apply_f(p, v)


def dual_monomial(t: ThetaPoint, v: TensorVector) -> TensorVector:
    """prod f_{i,j}^{T_{i,j}} v with the factors ordered by j decreasing left to right."""
    n = _n(t)
    order = sorted(zip(pairs(n), t), key=lambda px: (px[0][1], px[0][0]))
    for p, x in order:
        for _ in range(x):
            if not v:
                return {}
            v = apply_f(p, v)
    return v


def dual_basis_rank(mu: Weight, points) -> int:
    """Rank of {dual_monomial(T) v_mu : T in points}, one weight space at a time."""
    from .rep import highest_weight_tensor
    u = highest_weight_tensor(mu)
    top = highest_content(mu)
    blocks = defaultdict(IntegerEchelon)
    for t in points:
        w = dual_monomial(t, u)
        if w:
            blocks[content_after(top, t)].add(w)
    return sum(e.rank for e in blocks.values())


# --- abstract modules ---------------------------------------------------------------

class PhiModule:
    """A module over Phi_n given on a basis of labels."""

    n: int
    top: tuple

    def __init__(self):
        self._cache: dict = {}

    def content(self, label) -> tuple:
        raise NotImplementedError

    def _act(self, p, label) -> dict:
        raise NotImplementedError

    def act_basis(self, p, label) -> dict:
        key = (p, label)
        got = self._cache.get(key)
        if got is None:
            got = self._act(p, label)
            self._cache[key] = got
        return got

    def act(self, p, vec: dict) -> dict:
        out: dict = {}
        for label, c in vec.items():
            add_into(out, self.act_basis(tuple(p), label), c)
        return out

    def act_word(self, word, vec: dict) -> dict:
        """Apply a word; its rightmost letter acts first."""
        for p in reversed(list(word)):
            if not vec:
                return {}
            vec = self.act(p, vec)
        return vec

    def phi_T(self, t: ThetaPoint, vec: dict) -> dict:
        for p in letters_of(t):
            if not vec:
                return {}
            vec = self.act(p, vec)
        return vec

    def exp_letter(self, p, c, vec: dict) -> dict:
        out = dict(vec)
        term = vec
        m = 0
        while term:
            m += 1
            term = {k: x * Fraction(c) / m for k, x in self.act(p, term).items()}
            add_into(out, term)
        return out

    def exp(self, c: dict, vec: dict) -> dict:
        """exp(c) = prod exp(c_{i,j} phi_{i,j}), factors ordered by i increasing left to right."""
        for p in reversed(pairs(self.n)):
            x = c.get(p, 0)
            if x:
                vec = self.exp_letter(p, x, vec)
        return vec


class FundamentalDegenerate(PhiModule):
    """L_{omega_k}^S on the basis e_I^S."""

    def __init__(self, n: int, k: int, a):
        super().__init__()
        self.n, self.k, self.a = n, k, tuple(a)
        self.s = sigma(n, self.a)
        self.top = highest_content(fundamental(n, k))
        self.apos = {p: x for p, x in zip(pairs(n), self.a)}

    def content(self, label) -> tuple:
        return content_of_index(label, self.n)

    def _act(self, p, label) -> dict:
        if not phi_gate(self.top, self.content(label), p[0]):
            return {}
        r = f_on_index(p[0], p[1], label)
        if r is None:
            return {}
        sign, new = r
        target = self.s[label] + self.apos[p]
        if self.s[new] > target:
            raise AssertionError(f"f_{p} e_{label} leaves the filtration level")
        return {new: sign} if self.s[new] == target else {}


class DegenerateModule(PhiModule):
    """L_lambda^S on the basis phi^T v_lambda^S, T in Pi_lambda."""

    def __init__(self, lam: Weight, a, max_dim: int | None = None):
        super().__init__()
        self.lam = tuple(lam)
        self.n = weight_n(lam)
        self.a = tuple(a)
        self.top = highest_content(lam)
        self.hw = module(self.lam, max_dim)
        self.apos = {p: x for p, x in zip(pairs(self.n), self.a)}
        self._solvers: dict = {}

    def content(self, label) -> tuple:
        return content_after(self.top, label)

    def solver(self, c: tuple) -> SpanSolver:
        sol = self._solvers.get(c)
        if sol is None:
            sol = SpanSolver()
            for t in self.hw.blocks.get(c, []):
                sol.add(self.hw.vectors[t], t)
            self._solvers[c] = sol
        return sol

    def expand(self, w: TensorVector) -> dict:
        """Coordinates of a weight vector of L_lambda in the basis M_T u."""
        if not w:
            return {}
        c = vector_content(w, self.n)
        coords = self.solver(c).express(w)
        if coords is None:
            raise AssertionError("vector is not in L_lambda")
        return coords

    def graded_part(self, w: TensorVector, level: int) -> dict:
        """Image of w in (L^S)_level, assuming w lies in (L)_level."""
        coords = self.expand(w)
        out = {}
        for t, x in coords.items():
            g = pairing(self.a, t)
            if g > level:
                raise AssertionError("vector is above the expected filtration level")
            if g == level:
                out[t] = x
        return out

    def _act(self, p, label) -> dict:
        v = self.hw.vectors[label]
        w = phi_act_L(p, self.lam, v)
        return self.graded_part(w, pairing(self.a, label) + self.apos[p])


class TensorModule(PhiModule):
    """Tensor product of Phi_n modules; a letter phi_{i,j} acts by the Leibniz rule
    on tensors whose total weight lies in L(i), and by zero otherwise."""

    def __init__(self, factors: list):
        super().__init__()
        if not factors:
            raise ValueError("need at least one factor")
        self.factors = list(factors)
        self.n = factors[0].n
        top = [0] * self.n
        for f in factors:
            top = [x + y for x, y in zip(top, f.top)]
        self.top = tuple(top)

    def content(self, label) -> tuple:
        c = [0] * self.n
        for f, l in zip(self.factors, label):
            c = [x + y for x, y in zip(c, f.content(l))]
        return tuple(c)

    def gate(self, p, label) -> bool:
        return phi_gate(self.top, self.content(label), p[0])

    def _act(self, p, label) -> dict:
        if not self.gate(p, label):
            return {}
        out: dict = {}
        for s, (f, l) in enumerate(zip(self.factors, label)):
            for new, x in f.act_basis(p, l).items():
                key = label[:s] + (new,) + label[s + 1:]
                add_into(out, {key: x})
        return out


def fundamental_tensor(lam: Weight, a) -> TensorModule:
    """U_lambda^S as a tensor product of the L_{omega_k}^S."""
    n = weight_n(lam)
    return TensorModule([FundamentalDegenerate(n, k, a)
                         for k, x in enumerate(lam, start=1) for _ in range(x)])


def highest_label(lam: Weight) -> tuple:
    from .rep import highest_key
    return highest_key(lam)


def span_rank(vectors, content) -> int:
    blocks = defaultdict(IntegerEchelon)
    for v in vectors:
        if v:
            blocks[content(next(iter(v)))].add(v)
    return sum(e.rank for e in blocks.values())


def generated_closure_dim(mod: PhiModule, start: dict) -> int:
    """Dimension of the Phi_n-submodule generated by ``start`` (a weight vector)."""
    spaces: dict = {}
    c0 = mod.content(next(iter(start)))
    spaces[c0] = IntegerEchelon()
    spaces[c0].add(start)
    frontier = [c0]
    while frontier:
        touched = set()
        for c in frontier:
            rows = list(spaces[c].rows.values())
            for p in pairs(mod.n):
                for r in rows:
                    w = mod.act(p, r)
                    if not w:
                        continue
                    c2 = mod.content(next(iter(w)))
                    ech = spaces.setdefault(c2, IntegerEchelon())
                    if ech.add(w):
                        touched.add(c2)
        frontier = sorted(touched)
    return sum(e.rank for e in spaces.values())


def degenerate_basis_rank(lam: Weight, a) -> int:
    """Rank of {phi^T u_lambda^S : T in Pi_lambda} inside U_lambda^S."""
    mod = fundamental_tensor(lam, a) if any(lam) else None
    if mod is None:
        return 1
    u = {highest_label(lam): 1}
    return span_rank((mod.phi_T(t, u) for t in pi_lambda(lam)), mod.content)


def cartan_component_dim(lam: Weight, mu: Weight, a, max_dim: int | None = None) -> int:
    """dim of the span of phi^T (v_lambda^S x v_mu^S), T in Pi_{lambda+mu}."""
    mod = TensorModule([DegenerateModule(lam, a, max_dim), DegenerateModule(mu, a, max_dim)])
    n = weight_n(lam)
    z = (0,) * len(pairs(n))
    start = {(z, z): 1}
    return span_rank((mod.phi_T(t, start) for t in pi_lambda(add_weights(lam, mu))), mod.content)


def cartan_closure_dim(lam: Weight, mu: Weight, a, max_dim: int | None = None) -> int:
    mod = TensorModule([DegenerateModule(lam, a, max_dim), DegenerateModule(mu, a, max_dim)])
    z = (0,) * len(pairs(weight_n(lam)))
    return generated_closure_dim(mod, {(z, z): 1})


# --- exponentials and orbit points ------------------------------------------------

def exp_orbit_point(lam: Weight, a, c: dict, max_dim: int | None = None) -> dict:
    """Coordinates of exp(c) v_lambda^S in the basis phi^T v_lambda^S."""
    mod = degenerate_module(tuple(lam), tuple(a), max_dim)
    z = (0,) * len(pairs(mod.n))
    return mod.exp(c, {z: 1})


@lru_cache(maxsize=32)
def degenerate_module(lam: tuple, a: tuple, max_dim: int | None = None) -> DegenerateModule:
    return DegenerateModule(lam, a, max_dim)


def plucker_point(n: int, a, c: dict) -> dict:
    """Pluecker coordinates of exp(c) applied to the highest vectors of the L_{omega_k}^S."""
    out = {}
    for k in range(1, n):
        mod = FundamentalDegenerate(n, k, a)
        out.update(mod.exp(c, {tuple(range(1, k + 1)): 1}))
    return out


def exp_tensor_holds(lam: Weight, a, c: dict) -> bool:
    """exp(c) u_lambda^S equals the tensor product of the exp(c) v_{omega_k}^S."""
    if not any(lam):
        return True
    mod = fundamental_tensor(lam, a)
    lhs = mod.exp(c, {highest_label(lam): 1})
    rhs = {(): Fraction(1)}
    for f in mod.factors:
        fv = f.exp(c, {tuple(range(1, f.k + 1)): 1})
        rhs = {key + (l,): x * y for key, x in rhs.items() for l, y in fv.items()}
    rhs = {k: v for k, v in rhs.items() if v}
    return lhs == rhs


def embedding_holds(lam: Weight, a, c: dict) -> bool:
    """iota(exp(c) v_lambda^S) == exp(c) u_lambda^S, with iota(phi^T v^S) = phi^T u^S."""
    if not any(lam):
        return True
    mod = fundamental_tensor(lam, a)
    u = {highest_label(lam): 1}
    coords = exp_orbit_point(lam, a, c)
    lhs: dict = {}
    for t, x in coords.items():
        add_into(lhs, mod.phi_T(t, u), x)
    return lhs == mod.exp(c, u)


def orbit_to_json(n: int, coords: dict) -> dict:
    from .exactla import format_rational
    from .polytope import point_to_json
    return {"coords": [{"T": point_to_json(n, t)["pairs"], "value": format_rational(x)}
                       for t, x in sorted(coords.items())]}


def mainproj_kernel(lam: Weight, a):
    """Annihilator in R_lambda of the submodule generated by u_lambda^S."""
    from .ideals import pairing_kernel
    if not any(lam):
        return pairing_kernel(lam, [{(): 1}])
    mod = fundamental_tensor(lam, a)
    u = {highest_label(lam): 1}
    vecs = [mod.phi_T(t, u) for t in sorted(pi_lambda(lam))]
    return pairing_kernel(lam, [v for v in vecs if v])


def fundamental_phi_matches(n: int, k: int, a) -> bool:
    """The e^S action agrees with the general construction of L_{omega_k}^S."""
    lam = fundamental(n, k)
    gen = DegenerateModule(lam, a)
    fun = FundamentalDegenerate(n, k, a)
    hw = gen.hw
    label_of = {}
    for t in hw.points:
        (key, x), = hw.vectors[t].items()
        label_of[t] = (key[0], x)
    for t in hw.points:
        idx, x = label_of[t]
        for p in pairs(n):
            lhs = {label_of[t2][0]: y * label_of[t2][1] for t2, y in gen.act_basis(p, t).items()}
            rhs = {i: y * x for i, y in fun.act_basis(p, idx).items()}
            if lhs != rhs:
                return False
    return True


def index_point(n: int, idx: tuple) -> ThetaPoint:
    return t_of_tuple(n, idx)
