"""Graded components of the Pluecker ideal, its initial ideals and the toric ideal J.

Pluecker monomials are tuples of Pluecker indices sorted by (length, index);
the same tuple is the tensor key of the symmetric basis vector dual to the
monomial.  Polynomials in R are dicts monomial -> coefficient.

Polynomials in z_{i,j} (i <= j) are dicts from exponent tuples, indexed by
``zvars(n)``, to coefficients.  Every kernel is computed one weight space
(content) at a time: the content of an X-monomial can be read off each
z-monomial of its image, so different contents never interact.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import comb, prod
from typing import Callable, Iterable

from .config import GuardError, default_max_dim
from .exactla import format_rational, kernel_of_columns, rref
from .lie import (Weight, check_dominant, f_on_index, pairs, pluecker_indices, weight_n)

ZPolynomial = dict


# --- z-polynomials ------------------------------------------------------------------

@lru_cache(maxsize=None)
def zvars(n: int) -> tuple:
    return tuple((i, j) for i in range(1, n + 1) for j in range(i, n + 1))


@lru_cache(maxsize=None)
def zvar_position(n: int) -> dict:
    return {v: k for k, v in enumerate(zvars(n))}


def z_monomial(n: int, exps: dict) -> tuple:
    pos = zvar_position(n)
    e = [0] * len(pos)
    for v, x in exps.items():
        e[pos[v]] += x
    return tuple(e)


def z_variable(n: int, i: int, j: int) -> ZPolynomial:
    return {z_monomial(n, {(i, j): 1}): 1}


def poly_mul(p: ZPolynomial, q: ZPolynomial) -> ZPolynomial:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def poly_add(p: ZPolynomial, q: ZPolynomial, scale=1) -> ZPolynomial:
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, 0) + scale * c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def grad_A(n: int, a, e: tuple) -> int:
    """grad^A of a z-monomial: a_{i,j} per z_{i,j} with i < j, 0 for z_{i,i}."""
    pos = {p: k for k, p in enumerate(pairs(n))}
    return sum(x * a[pos[v]] for v, x in zip(zvars(n), e) if x and v[0] < v[1])


def initial_part(n: int, p: ZPolynomial, a) -> ZPolynomial:
    """Terms of minimal grad^A."""
    if not p:
        raise ValueError("initial part of the zero polynomial")
    grades = {e: grad_A(n, a, e) for e in p}
    m = min(grades.values())
    return {e: c for e, c in p.items() if grades[e] == m}


def evaluate_z(n: int, p: ZPolynomial, values: dict):
    """Evaluate at z_{i,j} = values[(i,j)] (i < j) and z_{i,i} = values.get((i,i), 1)."""
    total = Fraction(0)
    vs = zvars(n)
    for e, c in p.items():
        term = Fraction(c)
        for v, x in zip(vs, e):
            if x:
                term *= Fraction(values.get(v, 1 if v[0] == v[1] else 0)) ** x
        total += term
    return total


def zpoly_to_str(n: int, p: ZPolynomial) -> str:
    parts = []
    for e, c in sorted(p.items(), reverse=True):
        mono = "*".join(f"z{i}{j}" + (f"^{x}" if x > 1 else "")
                        for (i, j), x in zip(zvars(n), e) if x) or "1"
        parts.append(f"{format_rational(c)}*{mono}")
    return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def det_D(n: int, idx: tuple) -> ZPolynomial:
    """Minor of the upper triangular matrix (z_{i,j}) on rows 1..k and columns idx."""
    k = len(idx)
    out: dict = {}
    for perm in permutations(range(k)):
        exps = {}
        ok = True
        for r in range(k):
            col = idx[perm[r]]
            if r + 1 > col:
                ok = False
                break
            exps[(r + 1, col)] = exps.get((r + 1, col), 0) + 1
        if not ok:
            continue
        inv = sum(1 for x in range(k) for y in range(x + 1, k) if perm[x] > perm[y])
        out = poly_add(out, {z_monomial(n, exps): 1}, -1 if inv % 2 else 1)
    return out


@lru_cache(maxsize=None)
def det_full(n: int, idx: tuple) -> ZPolynomial:
    """Same minor of a generic full n x n matrix.

    Exponent tuples here have length n*n (entry (r, c) at (r-1)*n + c-1), a
    variable set separate from ``zvars``.
    """
    k = len(idx)
    out: dict = {}
    for perm in permutations(range(k)):
        e = [0] * (n * n)
        for r in range(k):
            e[r * n + idx[perm[r]] - 1] += 1
        inv = sum(1 for x in range(k) for y in range(x + 1, k) if perm[x] > perm[y])
        out = poly_add(out, {tuple(e): 1}, -1 if inv % 2 else 1)
    return out


@lru_cache(maxsize=None)
def exp_coordinate_poly(n: int, idx: tuple) -> ZPolynomial:
    """z_{k,k} times the e_idx coordinate of prod exp(z_{i,j} f_{i,j}) v_{omega_k}."""
    k = len(idx)
    vec = {tuple(range(1, k + 1)): {z_monomial(n, {}): 1}}
    for p in reversed(pairs(n)):
        i, j = p
        zp = z_variable(n, i, j)
        term = vec
        acc = dict(vec)
        m = 0
        while term:
            m += 1
            nxt: dict = {}
            for key, coeff in term.items():
                r = f_on_index(i, j, key)
                if r is None:
                    continue
                sign, new = r
                c = poly_mul(coeff, zp)
                c = {e: Fraction(x * sign, m) for e, x in c.items()}
                nxt[new] = poly_add(nxt.get(new, {}), c)
                if not nxt[new]:
                    del nxt[new]
            term = nxt
            for key, coeff in term.items():
                acc[key] = poly_add(acc.get(key, {}), coeff)
                if not acc[key]:
                    del acc[key]
        vec = acc
    c = vec.get(tuple(idx), {})
    c = {e: (int(x) if Fraction(x).denominator == 1 else x) for e, x in c.items()}
    return poly_mul(c, z_variable(n, k, k))


def toric_image(n: int, idx: tuple) -> ZPolynomial:
    return {z_monomial(n, {(l, i): 1 for l, i in enumerate(idx, start=1)}): 1}


# --- the Pluecker ring ---------------------------------------------------------------

def index_sort_key(idx: tuple) -> tuple:
    return (len(idx), idx)


def monomial_key(indices: Iterable[tuple]) -> tuple:
    return tuple(sorted((tuple(i) for i in indices), key=index_sort_key))


def monomial_degree(mono: tuple, n: int) -> Weight:
    d = [0] * (n - 1)
    for idx in mono:
        d[len(idx) - 1] += 1
    return tuple(d)


def monomial_content(mono: tuple, n: int) -> tuple:
    c = [0] * n
    for idx in mono:
        for m in idx:
            c[m - 1] += 1
    return tuple(c)


def r_lambda_size(lam: Weight) -> int:
    n = weight_n(lam)
    return prod(comb(comb(n, k) + a - 1, a) for k, a in enumerate(lam, start=1))


def r_lambda_monomials(lam: Weight, d=None) -> list:
    """Monomials of R_lambda (optionally only in variables with lengths in d)."""
    check_dominant(lam)
    n = weight_n(lam)
    parts = [()]
    for k, a in enumerate(lam, start=1):
        if a and d is not None and k not in d:
            raise ValueError(f"weight {lam} has support outside {sorted(d)}")
        choices = list(combinations_with_replacement(pluecker_indices(n, k), a))
        parts = [p + c for p in parts for c in choices]
    return parts


def polynomial_to_json(poly: dict) -> list:
    return [{"monomial": [list(i) for i in m], "coeff": format_rational(c)}
            for m, c in sorted(poly.items())]


def polynomial_to_str(poly: dict) -> str:
    if not poly:
        return "0"
    out = []
    for m, c in sorted(poly.items()):
        c = Fraction(c)
        name = "".join("X_" + "".join(map(str, i)) if max(i) < 10 else
                       "X_{" + ",".join(map(str, i)) + "}" for i in m)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coeff = "" if mag == 1 else format_rational(mag) + "*"
        out.append(f"{sign} {coeff}{name}")
    s = " ".join(out)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def evaluate_polynomial(poly: dict, coords: dict):
    """Value of a polynomial in the X's at the Pluecker coordinates ``coords``."""
    total = Fraction(0)
    for m, c in poly.items():
        term = Fraction(c)
        for idx in m:
            term *= coords.get(idx, 0)
            if not term:
                break
        total += term
    return total


@dataclass(frozen=True)
class IdealComponent:
    lam: tuple
    basis: list
    monomial_count: int
    graded: dict = field(default_factory=dict, compare=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "basis": [polynomial_to_json(v) for v in self.basis]}

    def __eq__(self, other):
        return (isinstance(other, IdealComponent) and self.lam == other.lam
                and self.basis == other.basis)

    def __hash__(self):
        return hash(self.lam)


def _canonical(vectors: list) -> list:
    return rref(vectors)


def _guard(lam: Weight, max_dim: int | None) -> None:
    cap = default_max_dim() if max_dim is None else max_dim
    size = r_lambda_size(lam)
    # R_lambda is a little larger than L_lambda; allow a fixed factor over the cap
    if size > 4 * cap:
        raise GuardError(f"dim R_{tuple(lam)} = {size} exceeds 4*max_dim = {4 * cap}")


def _images(monos: list, image: Callable) -> dict:
    """Product of the factor images for each monomial, sharing prefixes."""
    memo: dict = {(): None}
    out = {}
    for m in monos:
        for r in range(1, len(m) + 1):
            pre = m[:r]
            if pre in memo:
                continue
            prev = memo[m[:r - 1]]
            f = image(m[r - 1])
            memo[pre] = f if prev is None else poly_mul(prev, f)
        out[m] = memo[m] if m else {(): 1}
    return out


def kernel_component(lam: Weight, image: Callable, block_key: Callable | None = None,
                     max_dim: int | None = None, d=None) -> IdealComponent:
    """Kernel of X_I -> image(I) on R_lambda, one block at a time.

    Blocks are contents, refined by ``block_key(monomial)`` when given; the
    caller must make sure images of different blocks never share z-monomials.
    """
    _guard(lam, max_dim)
    n = weight_n(lam)
    monos = r_lambda_monomials(lam, d)
    blocks = defaultdict(list)
    for m in monos:
        key = monomial_content(m, n)
        if block_key is not None:
            key = (key, block_key(m))
        blocks[key].append(m)
    basis = []
    graded: dict = defaultdict(int)
    for key in sorted(blocks):
        ms = blocks[key]
        imgs = _images(ms, image)
        rels = kernel_of_columns([imgs[m] for m in ms])
        vecs = [{ms[c]: x for c, x in r.items()} for r in rels]
        basis.extend(rref(vecs))
        if block_key is not None:
            graded[key[1]] += len(rels)
    basis.sort(key=min)
    return IdealComponent(tuple(lam), basis, len(monos), dict(graded))


def ideal_component(lam: Weight, max_dim: int | None = None) -> IdealComponent:
    n = weight_n(lam)
    return kernel_component(lam, lambda idx: det_D(n, idx), max_dim=max_dim)


def grading_compatible(n: int, a) -> bool:
    """grad^A of in_A D_I equals sigma(A)_I for every I."""
    from .cone import sigma
    s = sigma(n, a)
    for idx in pluecker_indices(n):
        ip = initial_part(n, det_D(n, idx), a)
        if {grad_A(n, a, e) for e in ip} != {s[idx]}:
            return False
    return True


def initial_ideal_component(lam: Weight, a, max_dim: int | None = None) -> IdealComponent:
    """Kernel of delta^S: X_I -> in_A D_I, computed per grad^S degree."""
    from .cone import sigma
    n = weight_n(lam)
    a = tuple(a)
    if not grading_compatible(n, a):
        raise ValueError(f"A={a} does not make delta^S graded; is A in K?")
    s = sigma(n, a)
    return kernel_component(lam, lambda idx: _initial_D(n, idx, a),
                            block_key=lambda m: sum(s[i] for i in m), max_dim=max_dim)


@lru_cache(maxsize=4096)
def _initial_D(n: int, idx: tuple, a: tuple) -> ZPolynomial:
    return initial_part(n, det_D(n, idx), a)


@lru_cache(maxsize=4096)
def _initial_exp(n: int, idx: tuple, a: tuple) -> ZPolynomial:
    return initial_part(n, exp_coordinate_poly(n, idx), a)


def exp_component(lam: Weight, max_dim: int | None = None) -> IdealComponent:
    n = weight_n(lam)
    return kernel_component(lam, lambda idx: exp_coordinate_poly(n, idx), max_dim=max_dim)


def initial_exp_component(lam: Weight, a, max_dim: int | None = None) -> IdealComponent:
    n = weight_n(lam)
    a = tuple(a)
    return kernel_component(lam, lambda idx: _initial_exp(n, idx, a), max_dim=max_dim)


def toric_component(lam: Weight, max_dim: int | None = None) -> IdealComponent:
    n = weight_n(lam)
    return kernel_component(lam, lambda idx: toric_image(n, idx), max_dim=max_dim)


def restrict_partial(component: IdealComponent, d, image: Callable | None = None) -> IdealComponent:
    """Recompute ``component`` over the variables of lengths in ``d`` only.

    By default the Pluecker relations (delta) are used; pass ``image`` to
    restrict another kernel map.
    """
    lam = component.lam
    n = weight_n(lam)
    if image is None:
        def image(idx):
            return det_D(n, idx)
    return kernel_component(lam, image, d=set(d))


# --- binomials of J -------------------------------------------------------------

def swap_max_min(i: tuple, j: tuple) -> tuple:
    if len(i) > len(j):
        i, j = j, i
    k = len(i)
    hi = tuple(max(x, y) for x, y in zip(i, j))
    lo = tuple(min(x, y) for x, y in zip(i, j)) + j[k:]
    return hi, lo


def jrelation_binomials(lam: Weight) -> list:
    """All m - m' with m' obtained from m by one max/min exchange of two factors."""
    out = []
    seen = set()
    for m in r_lambda_monomials(lam):
        for x in range(len(m)):
            for y in range(x + 1, len(m)):
                hi, lo = swap_max_min(m[x], m[y])
                rest = m[:x] + m[x + 1:y] + m[y + 1:]
                m2 = monomial_key(rest + (hi, lo))
                if m2 == m:
                    continue
                key = (min(m, m2), max(m, m2))
                if key in seen:
                    continue
                seen.add(key)
                out.append({m: 1, m2: -1})
    return out


def jrelation_component(lam: Weight) -> IdealComponent:
    vecs = jrelation_binomials(lam)
    return IdealComponent(tuple(lam), rref(vecs), r_lambda_size(lam))


# --- gradings on R and initial subspaces ------------------------------------------

def grade_of_monomial(s: dict, mono: tuple) -> int:
    return sum(s[i] for i in mono)


def initial_subspace(vectors: list, grade: Callable) -> list:
    """Span of the minimal-grade parts of the elements of span(vectors)."""
    reduced = rref([{(grade(m), m): c for m, c in v.items()} for v in vectors])
    out = []
    for r in reduced:
        g = min(r)[0]
        out.append({m: c for (gg, m), c in r.items() if gg == g})
    return rref(out)


def general_initial_component(component: IdealComponent, s: dict) -> IdealComponent:
    vecs = initial_subspace(component.basis, lambda m: grade_of_monomial(s, m))
    return IdealComponent(component.lam, sorted(vecs, key=min), component.monomial_count)


def graded_quotient_dims(component: IdealComponent, s: dict) -> dict:
    """dim (R_lambda)_m - dim (component)_m for a component spanned by homogeneous vectors."""
    hist: dict = defaultdict(int)
    for m in r_lambda_monomials(component.lam):
        hist[grade_of_monomial(s, m)] += 1
    for v in component.basis:
        gs = {grade_of_monomial(s, m) for m in v}
        if len(gs) != 1:
            raise ValueError("component basis is not homogeneous")
        hist[gs.pop()] -= 1
    return {g: x for g, x in sorted(hist.items()) if x}


def transport(component: IdealComponent, index_map: Callable, lam: Weight) -> IdealComponent:
    """Image of a component under a relabeling of the Pluecker variables."""
    vecs = []
    for v in component.basis:
        vecs.append({monomial_key(index_map(i) for i in m): c for m, c in v.items()})
    return IdealComponent(tuple(lam), rref(vecs), component.monomial_count)


def pairing_kernel(lam: Weight, vectors: list) -> IdealComponent:
    """Elements of R_lambda annihilating every given symmetric tensor.

    A monomial pairs with a tensor through the tensor's coefficient at the
    monomial's sorted key.
    """
    n = weight_n(lam)
    monos = r_lambda_monomials(lam)
    blocks = defaultdict(list)
    for m in monos:
        blocks[monomial_content(m, n)].append(m)
    basis = []
    for c in sorted(blocks):
        ms = blocks[c]
        cols = []
        for m in ms:
            cols.append({k: v[m] for k, v in enumerate(vectors) if m in v})
        rels = kernel_of_columns(cols)
        basis.extend(rref([{ms[i]: x for i, x in r.items()} for r in rels]))
    basis.sort(key=min)
    return IdealComponent(tuple(lam), basis, len(monos))


def sigma_grade(n: int, a) -> Callable:
    from .cone import sigma
    s = sigma(n, a)
    return lambda m: grade_of_monomial(s, m)

