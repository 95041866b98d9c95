"""L_lambda inside U_lambda, ordered monomials M_T and the filtrations induced by a grading S.

A tensor key is a tuple of Pluecker indices: a_1 entries of length 1, then a_2
entries of length 2 and so on.  Tensor vectors are dicts key -> coefficient.

All linear algebra is done per weight space; a weight space of U_lambda is
identified by the content of its keys (see ``lie``).
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .config import GuardError, default_max_dim
from .exactla import IntegerEchelon
from .lie import (Weight, check_dominant, f_on_index, highest_content, pairs, weight_n,
                  weyl_dim)
from .polytope import ThetaPoint, pairing, pi_lambda

TensorKey = tuple
TensorVector = dict


def slot_lengths(lam: Weight) -> tuple:
    return tuple(k for k, a in enumerate(lam, start=1) for _ in range(a))


def highest_key(lam: Weight) -> TensorKey:
    return tuple(tuple(range(1, k + 1)) for k in slot_lengths(lam))


def highest_weight_tensor(lam: Weight) -> TensorVector:
    check_dominant(lam)
    return {highest_key(lam): 1}


def key_content(key: TensorKey, n: int) -> tuple:
    c = [0] * n
    for idx in key:
        for m in idx:
            c[m - 1] += 1
    return tuple(c)


def vector_content(v: TensorVector, n: int):
    """Common content of the keys of ``v``; ValueError if they mix weights."""
    contents = {key_content(k, n) for k in v}
    if len(contents) > 1:
        raise ValueError("vector is not a weight vector")
    return contents.pop() if contents else None


def content_after(top: tuple, t: ThetaPoint) -> tuple:
    """Content reached from ``top`` by applying M_T."""
    n = len(top)
    c = list(top)
    for (i, j), x in zip(pairs(n), t):
        c[i - 1] -= x
        c[j - 1] += x
    return tuple(c)


def apply_f(p, v: TensorVector) -> TensorVector:
    """Leibniz action of f_{i,j} on a tensor vector."""
    i, j = p
    if not i < j:
        raise ValueError(f"invalid pair {p}")
    out: dict = {}
    for key, c in v.items():
        for s, idx in enumerate(key):
            r = f_on_index(i, j, idx)
            if r is None:
                continue
            sign, new = r
            nk = key[:s] + (new,) + key[s + 1:]
            x = out.get(nk, 0) + sign * c
            if x:
                out[nk] = x
            else:
                del out[nk]
    return out


def apply_M_T(t: ThetaPoint, v: TensorVector) -> TensorVector:
    """M_T v; the factors of M_T with larger i act first."""
    if any(x < 0 for x in t):
        raise ValueError("exponents must be nonnegative")
    ps = pairs(_n_of(t))
    for p, x in reversed(list(zip(ps, t))):
        for _ in range(x):
            if not v:
                return {}
            v = apply_f(p, v)
    return v


def _n_of(t: ThetaPoint) -> int:
    from .polytope import _n_of_point
    return _n_of_point(t)


def last_letter(t: ThetaPoint):
    """The factor of M_T that acts last: smallest row, largest column."""
    n = _n_of(t)
    for p, x in zip(pairs(n), t):
        if x:
            i = p[0]
            break
    else:
        return None
    best = None
    for p, x in zip(pairs(n), t):
        if x and p[0] == i:
            best = p
    return best


def grad_S_of_key(s: dict, key: TensorKey) -> int:
    return sum(s[idx] for idx in key)


def max_grad(s: dict, v: TensorVector):
    return max((grad_S_of_key(s, k) for k in v), default=None)


def leading_part(s: dict, v: TensorVector) -> TensorVector:
    """Component of maximal S-grading (the image in the associated graded)."""
    m = max_grad(s, v)
    return {k: c for k, c in v.items() if grad_S_of_key(s, k) == m}


class HighestWeightModule:
    """L_lambda realized in U_lambda together with the vectors M_T u_lambda, T in Pi_lambda."""

    def __init__(self, lam: Weight, max_dim: int | None = None):
        check_dominant(lam)
        self.lam = tuple(lam)
        self.n = weight_n(lam)
        self.dim = weyl_dim(lam)
        cap = default_max_dim() if max_dim is None else max_dim
        if self.dim > cap:
            raise GuardError(f"dim L_{self.lam} = {self.dim} exceeds max_dim {cap}")
        self.top = highest_content(lam)
        self.u = highest_weight_tensor(lam)
        self.points = sorted(pi_lambda(lam))
        self._memo = {(0,) * len(pairs(self.n)): self.u}
        self.vectors = {t: self.m_t(t) for t in self.points}
        blocks = defaultdict(list)
        for t in self.points:
            blocks[content_after(self.top, t)].append(t)
        self.blocks = dict(blocks)
        self._closure = None

    def m_t(self, t: ThetaPoint) -> TensorVector:
        """M_T u_lambda, memoized through T - e_p for the last-acting letter p."""
        got = self._memo.get(t)
        if got is not None:
            return got
        p = last_letter(t)
        prev = list(t)
        prev[pairs(self.n).index(p)] -= 1
        w = apply_f(p, self.m_t(tuple(prev)))
        self._memo[t] = w
        return w

    def basis_rank(self) -> int:
        total = 0
        for ts in self.blocks.values():
            ech = IntegerEchelon()
            for t in ts:
                ech.add(self.vectors[t])
            total += ech.rank
        return total

    def basis_matrix(self):
        from .exactla import SparseMatrix
        keys = sorted({k for v in self.vectors.values() for k in v})
        row = {k: r for r, k in enumerate(keys)}
        ents = {(row[k], c): x for c, t in enumerate(self.points)
                for k, x in self.vectors[t].items()}
        return SparseMatrix(len(keys), len(self.points), ents), keys

    # --- independent realization of L_lambda ----------------------------------------

    def closure(self) -> dict:
        """Weight spaces of U(n_-) u_lambda from the simple root vectors alone.

        Returns content -> IntegerEchelon.  Weight spaces are processed by
        increasing depth, so each one is complete before it is pushed further.
        """
        if self._closure is not None:
            return self._closure
        n = self.n
        spaces = {self.top: IntegerEchelon()}
        spaces[self.top].add(self.u)
        frontier = [self.top]
        while frontier:
            nxt = {}
            for c in frontier:
                rows = list(spaces[c].rows.values())
                for l in range(1, n):
                    if c[l - 1] == 0:
                        continue
                    c2 = list(c)
                    c2[l - 1] -= 1
                    c2[l] += 1
                    c2 = tuple(c2)
                    ech = nxt.get(c2)
                    for r in rows:
                        w = apply_f((l, l + 1), r)
                        if w:
                            if ech is None:
                                ech = nxt[c2] = IntegerEchelon()
                            ech.add(w)
            for c2, ech in nxt.items():
                if ech.rank:
                    spaces[c2] = ech
            frontier = [c2 for c2, ech in nxt.items() if ech.rank]
        self._closure = spaces
        return spaces

    def closure_dim(self) -> int:
        return sum(e.rank for e in self.closure().values())

    def check_basis(self) -> bool:
        """M_T u (T in Pi) are independent and span the closure of u_lambda."""
        if self.basis_rank() != len(self.points):
            return False
        if self.closure_dim() != len(self.points):
            return False
        spaces = self.closure()
        for c, ts in self.blocks.items():
            ech = spaces.get(c)
            if ech is None:
                return False
            if any(not ech.contains(self.vectors[t]) for t in ts):
                return False
        return True

    # --- filtrations ------------------------------------------------------------

    def graded_echelon(self, s: dict) -> dict:
        """Per weight space, an echelon basis adapted to the S-filtration.

        Columns are ordered by decreasing grading, so the pivot of each row
        carries its maximal grading.  Returns content -> list of (grade, vector)
        sorted by grade.  The vectors with grade <= m form a basis of (L)_m and
        their top components form a basis of the associated graded piece.
        """
        out = {}
        for c, ts in self.blocks.items():
            ech = IntegerEchelon()
            for t in ts:
                ech.add({(-grad_S_of_key(s, k), k): x for k, x in self.vectors[t].items()})
            rows = []
            for piv, r in ech.rows.items():
                rows.append((-piv[0], {k: x for (_, k), x in r.items()}))
            rows.sort(key=lambda gr: gr[0])
            out[c] = rows
        return out

    def filtration_space(self, s: dict, m: int) -> list:
        ge = self.graded_echelon(s)
        return [v for c in sorted(ge) for g, v in ge[c] if g <= m]

    def graded_dims(self, s: dict) -> dict:
        hist: dict = defaultdict(int)
        for rows in self.graded_echelon(s).values():
            for g, _ in rows:
                hist[g] += 1
        return dict(sorted(hist.items()))

    def is_optimal(self, t: ThetaPoint, a, s: dict) -> bool:
        v = self.vectors.get(t)
        if v is None:
            v = apply_M_T(t, self.u)
        if not v:
            raise ValueError(f"M_T annihilates v_lambda for T={t}")
        return max_grad(s, v) == pairing(a, t)

    def lfiltration_holds(self, a, s: dict) -> bool:
        """span{M_T u : A(T) <= m} == (L)_m for every m.

        Each M_T u must lie in (U)_{<= A(T)} and, per weight space, the number of
        T with A(T) <= m must equal dim (L)_m.  Inclusion plus equal
        dimension gives equality.
        """
        ge = self.graded_echelon(s)
        for c, ts in self.blocks.items():
            vals = sorted(pairing(a, t) for t in ts)
            for t in ts:
                if max_grad(s, self.vectors[t]) > pairing(a, t):
                    return False
            grades = [g for g, _ in ge[c]]
            if vals != grades:
                return False
        return True

    def intersection_dim(self, s: dict, m: int) -> int:
        """dim L_lambda cap (U_lambda)_{<= m}, computed from the closure basis alone.

        Per weight space it is dim L minus the rank of the projection of L onto
        the keys of grading > m.
        """
        total = 0
        for ech in self.closure().values():
            proj = IntegerEchelon()
            for r in ech.rows.values():
                high = {k: x for k, x in r.items() if grad_S_of_key(s, k) > m}
                if high:
                    proj.add(high)
            total += ech.rank - proj.rank
        return total

    def lfiltration_exact(self, a, s: dict) -> bool:
        """For every attained m, span{M_T u : A(T) <= m} lies in (U)_{<= m} and has
        the dimension of L_lambda cap (U)_{<= m}."""
        grades = sorted({pairing(a, t) for t in self.points})
        for m in grades:
            ts = [t for t in self.points if pairing(a, t) <= m]
            if any(max_grad(s, self.vectors[t]) > m for t in ts):
                return False
            blocks = defaultdict(IntegerEchelon)
            for t in ts:
                blocks[content_after(self.top, t)].add(self.vectors[t])
            if sum(e.rank for e in blocks.values()) != self.intersection_dim(s, m):
                return False
        return True


@lru_cache(maxsize=64)
def module(lam: Weight, max_dim: int | None = None) -> HighestWeightModule:
    return HighestWeightModule(tuple(lam), max_dim)


def basis_matrix(lam: Weight, max_dim: int | None = None):
    return module(tuple(lam), max_dim).basis_matrix()[0]


def filtration_space(lam: Weight, s: dict, m: int, max_dim: int | None = None) -> list:
    return module(tuple(lam), max_dim).filtration_space(s, m)


def graded_dims(lam: Weight, a, max_dim: int | None = None) -> dict:
    from .cone import sigma
    n = weight_n(lam)
    return module(tuple(lam), max_dim).graded_dims(sigma(n, a))


def is_optimal(t: ThetaPoint, lam: Weight, a, max_dim: int | None = None) -> bool:
    from .cone import sigma
    n = weight_n(lam)
    return module(tuple(lam), max_dim).is_optimal(t, a, sigma(n, a))
