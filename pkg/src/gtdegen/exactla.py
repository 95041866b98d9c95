"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts mapping a basis key to a nonzero coefficient.  Keys
only need to be hashable and mutually comparable; elimination always pivots on
the smallest key of a row, so results do not depend on insertion order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping

Q = Fraction

SparseVector = dict


def clean(v: Mapping) -> dict:
    """Drop zero coefficients."""
    return {k: c for k, c in v.items() if c}


def add_into(acc: dict, v: Mapping, scale=1) -> dict:
    for k, c in v.items():
        s = acc.get(k, 0) + scale * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def scaled(v: Mapping, scale) -> dict:
    if not scale:
        return {}
    return {k: scale * c for k, c in v.items()}


def to_rational(v: Mapping) -> dict:
    return {k: Q(c) for k, c in v.items() if c}


def _primitive(v: Mapping) -> dict:
    """Integer multiple of ``v`` with coprime integer entries."""
    den = 1
    for c in v.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    g = 0
    out = {}
    for k, c in v.items():
        x = int(c * den) if den != 1 or isinstance(c, Fraction) else c
        out[k] = x
        g = gcd(g, x)
    if g > 1:
        out = {k: x // g for k, x in out.items()}
    return out


@dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    entries: Mapping = field(default_factory=dict)

    def __post_init__(self):
        ents = {}
        for (r, c), x in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if x:
                ents[(r, c)] = Q(x)
        object.__setattr__(self, "entries", ents)

    @classmethod
    def from_dense(cls, data) -> "SparseMatrix":
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        ents = {(i, j): x for i, r in enumerate(data) for j, x in enumerate(r) if x}
        return cls(len(data), ncols, ents)

    @classmethod
    def from_columns(cls, columns, rows: int) -> "SparseMatrix":
        ents = {}
        for j, col in enumerate(columns):
            for i, x in col.items():
                ents[(i, j)] = x
        return cls(rows, len(columns), ents)

    def row_vectors(self) -> list[dict]:
        out = [dict() for _ in range(self.rows)]
        for (r, c), x in self.entries.items():
            out[r][c] = x
        return out

    def column_vectors(self) -> list[dict]:
        out = [dict() for _ in range(self.cols)]
        for (r, c), x in self.entries.items():
            out[c][r] = x
        return out

    def apply(self, v: Mapping) -> dict:
        out: dict = {}
        for (r, c), x in self.entries.items():
            y = v.get(c)
            if y:
                out[r] = out.get(r, 0) + x * y
        return clean(out)


class IntegerEchelon:
    """Fraction-free row echelon form for rank and span computations.

    Rows are kept primitive (integer entries with trivial content).  Each row
    is keyed by its pivot, the smallest key it contains.
    """

    def __init__(self):
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: dict) -> dict:
        rows = self.rows
        if not rows:
            return v
        heap = [k for k in v if k in rows]
        heapq.heapify(heap)
        seen = set()
        while heap:
            k = heapq.heappop(heap)
            if k in seen:
                continue
            seen.add(k)
            a = v.get(k)
            if not a:
                continue
            row = rows[k]
            p = row[k]
            g = gcd(p, a)
            mv, mr = p // g, a // g
            if mv != 1:
                for key in v:
                    v[key] *= mv
            for key, x in row.items():
                s = v.get(key, 0) - mr * x
                if s:
                    v[key] = s
                    if key in rows and key not in seen:
                        heapq.heappush(heap, key)
                else:
                    v.pop(key, None)
            if v:
                g = 0
                for x in v.values():
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    for key in v:
                        v[key] //= g
        return v

    def reduce(self, v: Mapping) -> dict:
        """Remainder of ``v`` (up to a nonzero scalar) modulo the row space."""
        return self._reduce(_primitive(clean(v)))

    def add(self, v: Mapping) -> bool:
        """Insert ``v``; return True iff it was independent of earlier rows."""
        r = self._reduce(_primitive(clean(v)))
        if not r:
            return False
        piv = min(r)
        if r[piv] < 0:
            r = {k: -x for k, x in r.items()}
        self.rows[piv] = r
        return True

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)


class SpanSolver:
    """Incremental basis of a span that can express members in the inserted vectors.

    ``add(v, label)`` records ``v`` under ``label`` if it is independent of what
    was added so far.  ``express(w)`` returns the coefficients of ``w`` in the
    accepted vectors, or ``None`` if ``w`` is outside the span.
    """

    def __init__(self):
        self.rows: dict = {}  # pivot -> (row with pivot coefficient 1, combo)
        self.labels: list = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: dict, combo: dict):
        rows = self.rows
        heap = [k for k in v if k in rows]
        heapq.heapify(heap)
        seen = set()
        while heap:
            k = heapq.heappop(heap)
            if k in seen:
                continue
            seen.add(k)
            a = v.get(k)
            if not a:
                continue
            row, rc = rows[k]
            for key, x in row.items():
                s = v.get(key, 0) - a * x
                if s:
                    v[key] = s
                    if key in rows and key not in seen:
                        heapq.heappush(heap, key)
                else:
                    v.pop(key, None)
            add_into(combo, rc, -a)
        return v, combo

    def add(self, v: Mapping, label: Hashable = None) -> bool:
        label = len(self.labels) if label is None else label
        r, combo = self._reduce(to_rational(v), {label: Q(1)})
        if not r:
            return False
        piv = min(r)
        inv = 1 / r[piv]
        self.rows[piv] = ({k: x * inv for k, x in r.items()}, scaled(combo, inv))
        self.labels.append(label)
        return True

    def express(self, w: Mapping):
        r, combo = self._reduce(to_rational(w), {})
        if r:
            return None
        return {k: -c for k, c in combo.items()}


def rank(m: SparseMatrix) -> int:
    ech = IntegerEchelon()
    for row in m.row_vectors():
        if row:
            ech.add(row)
    return ech.rank


def rank_of_vectors(vectors: Iterable[Mapping]) -> int:
    ech = IntegerEchelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def rref(vectors: Iterable[Mapping]) -> list[dict]:
    """Reduced row echelon basis of the span, sorted by pivot.

    Coefficients are rational with pivot entries equal to 1; two families span
    the same space iff their ``rref`` lists are equal.
    """
    ech = IntegerEchelon()
    for v in vectors:
        ech.add(v)
    pivots = sorted(ech.rows)
    rows = {p: to_rational(ech.rows[p]) for p in pivots}
    for p in reversed(pivots):
        row = rows[p]
        inv = 1 / row[p]
        row = {k: x * inv for k, x in row.items()}
        rows[p] = row
        for q in pivots:
            if q >= p:
                break
            other = rows[q]
            a = other.get(p)
            if a:
                add_into(other, row, -a)
    return [rows[p] for p in pivots]


def kernel_basis(m: SparseMatrix) -> list[dict]:
    """Basis of the right kernel, one vector per free column in increasing order.

    The vector for free column ``f`` has a 1 at ``f``, zeros at the other free
    columns, and is determined on the pivot columns by the reduced echelon form.
    """
    reduced = rref(r for r in m.row_vectors() if r)
    pivots = {min(r): r for r in reduced}
    basis = []
    for f in range(m.cols):
        if f in pivots:
            continue
        v = {f: Q(1)}
        for p, row in pivots.items():
            x = row.get(f)
            if x:
                v[p] = -x
        basis.append(dict(sorted(v.items())))
    return basis


def kernel_of_columns(columns: list[Mapping]) -> list[dict]:
    """Linear relations among ``columns``: kernel of the matrix having them as columns.

    Works on arbitrary row keys.  Relation vectors are indexed by column position.
    """
    keys = sorted({k for c in columns for k in c})
    index = {k: i for i, k in enumerate(keys)}
    m = SparseMatrix(len(keys), len(columns),
                     {(index[k], j): x for j, c in enumerate(columns) for k, x in c.items()})
    return kernel_basis(m)


def in_span(v: Mapping, basis: Iterable[Mapping]) -> bool:
    ech = IntegerEchelon()
    for b in basis:
        ech.add(b)
    return ech.contains(v)


def same_span(a: Iterable[Mapping], b: Iterable[Mapping]) -> bool:
    return rref(a) == rref(b)


def determinant(rows) -> Fraction:
    """Exact determinant of a square matrix given as a list of rows."""
    m = [[Q(x) for x in r] for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    det = Q(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Q(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def format_rational(x) -> str:
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
