"""sl_n combinatorics: weights, positive roots, fundamental representations.

Conventions used throughout the package:

* a weight is a tuple ``(a_1, ..., a_{n-1})`` of fundamental-weight coordinates;
* a pair ``(i, j)`` with ``1 <= i < j <= n`` labels the root vector ``f_{i,j}``;
* a Pluecker index is a strictly increasing tuple ``(i_1, ..., i_k)``, ``1 <= k < n``,
  standing for ``e_{i_1} ^ ... ^ e_{i_k}``;
* ``f_{i,j}`` acts on the tautological representation as ``e_i -> e_j`` and on
  wedges as a derivation.

Weights of vectors in tensor products of fundamental representations are
tracked by their *content*: the vector counting how often each of ``1..n``
occurs among the wedge indices.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable

Weight = tuple
Pair = tuple
PlueckerIndex = tuple
WedgeVector = dict


def check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple:
    """All pairs (i, j), 1 <= i < j <= n, in row-major order."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


@lru_cache(maxsize=None)
def pair_position(n: int) -> dict:
    return {p: k for k, p in enumerate(pairs(n))}


@lru_cache(maxsize=None)
def pluecker_indices(n: int, k: int | None = None) -> tuple:
    """Pluecker indices of length k (or of every length 1..n-1), sorted by (length, tuple)."""
    ks = range(1, n) if k is None else (k,)
    return tuple(c for kk in ks for c in combinations(range(1, n + 1), kk))


def fundamental(n: int, k: int) -> Weight:
    return tuple(1 if i == k else 0 for i in range(1, n))


def weight_n(lam: Weight) -> int:
    return len(lam) + 1


def check_dominant(lam: Weight) -> None:
    if any(a < 0 for a in lam):
        raise ValueError(f"weight {lam} is not dominant")


def partition_of(lam: Weight) -> tuple:
    """(lambda_1, ..., lambda_n) with lambda_i = a_i + ... + a_{n-1} and lambda_n = 0."""
    out = [0] * (len(lam) + 1)
    for i in range(len(lam) - 1, -1, -1):
        out[i] = out[i + 1] + lam[i]
    return tuple(out)


def add_weights(lam: Weight, mu: Weight) -> Weight:
    return tuple(a + b for a, b in zip(lam, mu))


def dual_weight(lam: Weight) -> Weight:
    """Image under the diagram automorphism omega_k <-> omega_{n-k}."""
    return tuple(reversed(lam))


def weyl_dim(lam: Weight) -> int:
    """Dimension of the irreducible representation with highest weight ``lam``."""
    check_dominant(lam)
    n = weight_n(lam)
    part = partition_of(lam)
    num = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            num *= Fraction(part[i] - part[j] + j - i, j - i)
    assert num.denominator == 1
    return int(num)


# --- roots and the cones c(k) ---------------------------------------------------

@lru_cache(maxsize=None)
def cartan_inverse(n: int) -> tuple:
    """Inverse of the A_{n-1} Cartan matrix as a tuple of Fraction rows."""
    r = n - 1
    # closed form: (C^-1)_{ij} = min(i,j) (n - max(i,j)) / n
    return tuple(tuple(Fraction(min(i, j) * (n - max(i, j)), n) for j in range(1, r + 1))
                 for i in range(1, r + 1))


def simple_root_coords(diff: Weight) -> tuple:
    """Expand a weight given in fundamental coordinates in the simple roots."""
    n = weight_n(diff)
    inv = cartan_inverse(n)
    return tuple(sum((row[j] * diff[j] for j in range(n - 1)), Fraction(0)) for row in inv)


def root_weight(i: int, j: int, n: int) -> Weight:
    """alpha_{i,j} = alpha_i + ... + alpha_{j-1} in fundamental coordinates."""
    out = [0] * (n - 1)
    for l in range(i, j):
        # alpha_l = 2 omega_l - omega_{l-1} - omega_{l+1}
        out[l - 1] += 2
        if l > 1:
            out[l - 2] -= 1
        if l < n - 1:
            out[l] -= 1
    return tuple(out)


def in_cone_c(n: int, k: int, diff: Weight) -> bool:
    """Is ``diff`` a nonnegative integer combination of the simple roots alpha_l, l >= k?"""
    if not 1 <= k <= n - 1:
        raise ValueError(f"cone index k={k} outside 1..{n - 1}")
    c = simple_root_coords(diff)
    for l, x in enumerate(c, start=1):
        if x.denominator != 1 or x < 0:
            return False
        if l < k and x != 0:
            return False
    return True


# --- contents ---------------------------------------------------------------------

def content_of_index(idx: PlueckerIndex, n: int) -> tuple:
    return tuple(1 if m in idx else 0 for m in range(1, n + 1))


def highest_content(lam: Weight) -> tuple:
    """Content of the highest weight vector u_lambda; this is the partition of lambda."""
    return partition_of(lam)


def content_to_weight(content: Iterable[int]) -> Weight:
    c = tuple(content)
    return tuple(c[k] - c[k + 1] for k in range(len(c) - 1))


def depth_from_content(top: tuple, content: tuple) -> tuple:
    """Simple-root coordinates of (weight of ``top``) - (weight of ``content``).

    Both contents must have the same total.  Coordinate l is
    sum_{m <= l} (top_m - content_m).
    """
    out = []
    s = 0
    for l in range(len(top) - 1):
        s += top[l] - content[l]
        out.append(s)
    return tuple(out)


def content_in_cone(top: tuple, content: tuple, k: int) -> bool:
    """Content-level version of ``in_cone_c``: top - content lies in c(k)."""
    s = 0
    for l in range(len(top) - 1):
        s += top[l] - content[l]
        if s < 0 or (l + 1 < k and s != 0):
            return False
    return True


def shift_content(content: tuple, i: int, j: int, times: int = 1) -> tuple:
    c = list(content)
    c[i - 1] -= times
    c[j - 1] += times
    return tuple(c)


# --- action on wedges -------------------------------------------------------------

def f_on_index(i: int, j: int, idx: PlueckerIndex):
    """f_{i,j} e_idx as (sign, new index), or None when it vanishes."""
    if i not in idx or j in idx:
        return None
    lo, hi = (i, j) if i < j else (j, i)
    between = sum(1 for m in idx if lo < m < hi)
    new = tuple(sorted(j if m == i else m for m in idx))
    return (-1 if between % 2 else 1), new


def f_on_wedge(n: int, p: Pair, v: WedgeVector) -> WedgeVector:
    i, j = p
    if not 1 <= i < j <= n:
        raise ValueError(f"invalid pair {p} for n={n}")
    out: dict = {}
    for idx, c in v.items():
        r = f_on_index(i, j, idx)
        if r is None:
            continue
        sign, new = r
        s = out.get(new, 0) + sign * c
        if s:
            out[new] = s
        else:
            out.pop(new, None)
    return out
