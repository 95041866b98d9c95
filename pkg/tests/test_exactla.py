from __future__ import annotations

from fractions import Fraction

from hypothesis import given, strategies as st

from gtdegen.exactla import (IntegerEchelon, SpanSolver, SparseMatrix, determinant, format_rational,
                             in_span, kernel_basis, kernel_of_columns, rank, rank_of_vectors, rref,
                             same_span)

small = st.integers(min_value=-3, max_value=3)
matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rank_examples():
    assert rank(SparseMatrix.from_dense([[1, 2], [2, 4]])) == 1
    assert rank(SparseMatrix.from_dense([[1, 0], [0, 1]])) == 2
    assert rank(SparseMatrix.from_dense([[0, 0]])) == 0


def test_kernel_of_row():
    ker = kernel_basis(SparseMatrix.from_dense([[1, -1]]))
    assert len(ker) == 1
    v = ker[0]
    assert v[0] == v[1] != 0


def test_determinant():
    assert determinant([[2, 1], [1, 1]]) == 1
    assert determinant([[1, 2], [2, 4]]) == 0
    assert determinant([[0, 1], [1, 0]]) == -1


def test_format_rational():
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(-6, 3)) == "-2"


def test_span_solver_expresses_combinations():
    sol = SpanSolver()
    sol.add({"a": 1, "b": 1}, "u")
    sol.add({"b": 1}, "v")
    assert sol.express({"a": 2, "b": 5}) == {"u": 2, "v": 3}
    assert sol.express({"c": 1}) is None


def test_echelon_reports_new_vectors():
    ech = IntegerEchelon()
    assert ech.add({1: 2, 2: 4})
    assert not ech.add({1: 1, 2: 2})
    assert ech.contains({1: -3, 2: -6})
    assert ech.rank == 1


@given(matrices)
def test_rank_is_transpose_invariant(rows):
    m = SparseMatrix.from_dense(rows)
    t = SparseMatrix.from_dense([list(c) for c in zip(*rows)])
    assert rank(m) == rank(t)


@given(matrices)
def test_rank_nullity(rows):
    m = SparseMatrix.from_dense(rows)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == len(rows[0])
    for v in ker:
        assert not m.apply(v)


@given(matrices)
def test_kernel_of_columns_relations(rows):
    cols = [{r: row[c] for r, row in enumerate(rows) if row[c]} for c in range(len(rows[0]))]
    for rel in kernel_of_columns(cols):
        acc = {}
        for c, x in rel.items():
            for r, y in cols[c].items():
                acc[r] = acc.get(r, 0) + x * y
        assert all(v == 0 for v in acc.values())


@given(matrices)
def test_rref_preserves_span(rows):
    vecs = [{k: x for k, x in enumerate(r) if x} for r in rows]
    red = rref(vecs)
    assert len(red) == rank_of_vectors(vecs)
    assert same_span(red, vecs)
    for v in vecs:
        assert in_span(v, red)
