"""Points T(i_1..i_k), the Minkowski sums Pi_lambda and the polytopes P_lambda, GT_lambda.

A point of Theta (a ``ThetaPoint``) is a tuple of integers indexed by the
pairs ``1 <= i < j <= n`` in row-major order, see ``lie.pairs``.  For n = 3
that order is (T12, T13, T23), while the text display follows the classical
layout ``T12 T23 / T13``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .config import DEFAULT_POINT_BUDGET, check_budget
from .exactla import determinant
from .lie import (Weight, check_dominant, pair_position, pairs, partition_of,
                  pluecker_indices, weight_n)

ThetaPoint = tuple
LatticeSet = frozenset


def zero(n: int) -> ThetaPoint:
    return (0,) * len(pairs(n))


def from_pairs(n: int, values: dict) -> ThetaPoint:
    pos = pair_position(n)
    out = [0] * len(pos)
    for p, x in values.items():
        out[pos[tuple(p)]] = x
    return tuple(out)


def as_pairs(n: int, t: ThetaPoint) -> dict:
    return {p: x for p, x in zip(pairs(n), t) if x}


def unit(n: int, p) -> ThetaPoint:
    return from_pairs(n, {p: 1})


def add(s: ThetaPoint, t: ThetaPoint) -> ThetaPoint:
    return tuple(a + b for a, b in zip(s, t))


def sub(s: ThetaPoint, t: ThetaPoint) -> ThetaPoint:
    return tuple(a - b for a, b in zip(s, t))


def pairing(a: Iterable[int], t: ThetaPoint) -> int:
    """Value A(T) of a functional on Theta given in the same coordinates."""
    return sum(x * y for x, y in zip(a, t))


def total(t: ThetaPoint) -> int:
    return sum(t)


@lru_cache(maxsize=None)
def t_of_tuple(n: int, idx: tuple) -> ThetaPoint:
    """T(i_1..i_k): a 1 at (l, i_l) whenever i_l > l."""
    idx = tuple(idx)
    if not idx or len(idx) >= n or list(idx) != sorted(set(idx)) or idx[0] < 1 or idx[-1] > n:
        raise ValueError(f"invalid Pluecker index {idx} for n={n}")
    return from_pairs(n, {(l, i): 1 for l, i in enumerate(idx, start=1) if i > l})


@lru_cache(maxsize=None)
def pi_omega(n: int, k: int) -> LatticeSet:
    return frozenset(t_of_tuple(n, idx) for idx in pluecker_indices(n, k))


def minkowski(a: Iterable[ThetaPoint], b: Iterable[ThetaPoint],
              budget: int | None = DEFAULT_POINT_BUDGET) -> LatticeSet:
    b = list(b)
    out = set()
    for s in a:
        for t in b:
            out.add(add(s, t))
        check_budget(len(out), budget, "Minkowski sum")
    return frozenset(out)


def pi_lambda(lam: Weight, budget: int | None = DEFAULT_POINT_BUDGET) -> LatticeSet:
    """Pi_lambda as an iterated Minkowski sum of the sets Pi_{omega_k}."""
    check_dominant(lam)
    n = weight_n(lam)
    acc = frozenset({zero(n)})
    for k, a in enumerate(lam, start=1):
        for _ in range(a):
            acc = minkowski(acc, pi_omega(n, k), budget)
    return acc


def p_lambda_contains(lam: Weight, t: ThetaPoint) -> bool:
    """Inequalities (i) T >= 0 and (ii) of the polytope P_lambda."""
    n = weight_n(lam)
    pos = pair_position(n)
    if len(t) != len(pos):
        raise ValueError("point and weight disagree on n")
    if any(x < 0 for x in t):
        return False

    def row_suffix(i, j):
        if i >= n:
            return 0
        return sum(t[pos[(i, l)]] for l in range(max(j, i + 1), n + 1))

    for i, j in pairs(n):
        if row_suffix(i, j) - row_suffix(i + 1, j + 1) > lam[i - 1]:
            return False
    return True


def gt_contains(lam: Weight, t: ThetaPoint) -> bool:
    """Gelfand-Tsetlin inequalities (iii) and (iv)."""
    n = weight_n(lam)
    pos = pair_position(n)
    if len(t) != len(pos):
        raise ValueError("point and weight disagree on n")
    part = partition_of(lam)
    for i in range(1, n):
        x = t[pos[(i, i + 1)]]
        if not part[i - 1] >= x >= part[i]:
            return False
    for i, j in pairs(n):
        if j > i + 1:
            x = t[pos[(i, j)]]
            if not t[pos[(i, j - 1)]] >= x >= t[pos[(i + 1, j)]]:
                return False
    return True


def psi(lam: Weight, t: ThetaPoint) -> ThetaPoint:
    """The unimodular affine map carrying P_lambda onto GT_lambda."""
    n = weight_n(lam)
    pos = pair_position(n)
    part = partition_of(lam)
    return tuple(part[i - 1] - sum(t[pos[(i, l)]] for l in range(i + n + 1 - j, n + 1))
                 for i, j in pairs(n))


def psi_linear_matrix(n: int) -> list:
    """Matrix of the linear part of psi in the row-major pair basis."""
    pos = pair_position(n)
    rows = []
    for i, j in pairs(n):
        row = [0] * len(pos)
        for l in range(i + n + 1 - j, n + 1):
            row[pos[(i, l)]] = -1
        rows.append(row)
    return rows


def psi_determinant(n: int):
    return determinant(psi_linear_matrix(n))


def lattice_points_P(lam: Weight, budget: int | None = DEFAULT_POINT_BUDGET) -> LatticeSet:
    """Integer points of P_lambda.

    Rows are filled from i = n-1 upwards and, inside a row, from j = n down.
    Every coordinate T_{i,l} is capped by lambda_i (the box obtained from (ii)
    with all other coordinates zero) and partial assignments are pruned with
    the suffix form of (ii), which is exact: a partial point satisfying the
    checked inequalities always extends by zeros.
    """
    check_dominant(lam)
    n = weight_n(lam)
    pos = pair_position(n)
    part = partition_of(lam)
    out = []
    cur = [0] * len(pos)

    def fill_row(i, below_suffix):
        # below_suffix[j] = sum_{l >= j} T_{i+1,l}, indexed 0..n+1
        if i == 0:
            out.append(tuple(cur))
            check_budget(len(out), budget, "P_lambda enumeration")
            return
        cap = lam[i - 1]

        def choose(j, suffix, my_suffix):
            if j == i:
                fill_row(i - 1, my_suffix)
                return
            bound = cap + below_suffix[j + 1]
            top = min(bound - suffix, part[i - 1])
            for x in range(top + 1):
                cur[pos[(i, j)]] = x
                my_suffix[j] = suffix + x
                choose(j - 1, suffix + x, my_suffix)
            cur[pos[(i, j)]] = 0

        choose(n, 0, [0] * (n + 2))

    fill_row(n - 1, [0] * (n + 2))
    return frozenset(out)


def lattice_points_GT(lam: Weight, budget: int | None = DEFAULT_POINT_BUDGET) -> LatticeSet:
    """Integer points Gamma_lambda of GT_lambda, filled diagonal by diagonal."""
    check_dominant(lam)
    n = weight_n(lam)
    pos = pair_position(n)
    part = partition_of(lam)
    out = []
    cur = [0] * len(pos)
    cells = [(i, i + d) for d in range(1, n) for i in range(1, n - d + 1)]

    def bounds(i, j):
        if j == i + 1:
            return part[i], part[i - 1]
        return cur[pos[(i + 1, j)]], cur[pos[(i, j - 1)]]

    def rec(k):
        if k == len(cells):
            out.append(tuple(cur))
            check_budget(len(out), budget, "GT_lambda enumeration")
            return
        i, j = cells[k]
        lo, hi = bounds(i, j)
        for x in range(lo, hi + 1):
            cur[pos[(i, j)]] = x
            rec(k + 1)
        cur[pos[(i, j)]] = 0

    rec(0)
    return frozenset(out)


def sq(t: ThetaPoint) -> int:
    n = _n_of_point(t)
    return sum(x * (j - i) ** 2 for (i, j), x in zip(pairs(n), t))


@lru_cache(maxsize=None)
def _n_for_length(length: int) -> int:
    n = 2
    while len(pairs(n)) < length:
        n += 1
    if len(pairs(n)) != length:
        raise ValueError(f"{length} is not the length of a ThetaPoint")
    return n


def _n_of_point(t: ThetaPoint) -> int:
    return _n_for_length(len(t))


def root_sum(t: ThetaPoint) -> tuple:
    """Simple-root coordinates of sum_{i<j} T_{i,j} alpha_{i,j}."""
    n = _n_of_point(t)
    out = [0] * (n - 1)
    for (i, j), x in zip(pairs(n), t):
        if x:
            for l in range(i, j):
                out[l - 1] += x
    return tuple(out)


# --- presentation -------------------------------------------------------------------

def display(t: ThetaPoint) -> str:
    """Text form; for n = 3 the classical 'T12 T23/T13' layout."""
    n = _n_of_point(t)
    d = dict(zip(pairs(n), t))
    if n == 3:
        return f"{d[(1, 2)]}{d[(2, 3)]}/{d[(1, 3)]}"
    rows = []
    for i in range(1, n):
        rows.append(" ".join(str(d[(i, j)]) for j in range(i + 1, n + 1)))
    return " | ".join(rows)


def parse_display3(text: str) -> ThetaPoint:
    """Inverse of ``display`` for n = 3, e.g. '21/0'."""
    top, bottom = text.split("/")
    top = top.replace(" ", "")
    t12, t23 = int(top[0]), int(top[1])
    return from_pairs(3, {(1, 2): t12, (2, 3): t23, (1, 3): int(bottom)})


def point_to_json(n: int, t: ThetaPoint) -> dict:
    return {"pairs": [[i, j, x] for (i, j), x in zip(pairs(n), t)]}


def lattice_set_to_json(n: int, points: Iterable[ThetaPoint]) -> dict:
    return {"n": n, "points": [point_to_json(n, t) for t in sorted(points)]}


def lattice_set_from_json(data: dict) -> tuple:
    n = data["n"]
    pts = frozenset(from_pairs(n, {(i, j): x for i, j, x in p["pairs"]}) for p in data["points"])
    return n, pts
