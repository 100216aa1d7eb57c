import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hochpar.exactla import (GF, QQ, Subspace, freeze, kernel_basis, parse_field, quotient_by, rank,
                             rref, solve)


def small_matrices(max_rows=6, max_cols=6, lo=-4, hi=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_parse_field():
    assert parse_field("Q") == QQ
    assert parse_field("GF:5") == GF(5)
    with pytest.raises(ValueError):
        parse_field("GF:4")
    with pytest.raises(ValueError):
        parse_field("R")


def test_scalar_text_round_trip():
    assert QQ.format(QQ("6/-4")) == "-3/2"
    assert GF(7).format(GF(7)("1/3")) == "5"
    assert GF(2).format(GF(2)(-1)) == "1"


def test_rref_known():
    red, piv = rref(QQ, QQ.array([[2, 4, 2], [1, 2, 3]]))
    assert piv == [0, 2]
    assert [[QQ.format(x) for x in r] for r in red] == [["1", "2", "0"], ["0", "0", "1"]]


def test_kernel_and_solve():
    m = QQ.array([["1/2", 1, 0], [0, 0, 1]])
    k = kernel_basis(QQ, m)
    assert k.dim == 1
    assert not np.any(QQ.dot(m, k.basis.T))
    x = solve(QQ, m, QQ.array([1, 2]))
    assert np.all(QQ.dot(m, x) == QQ.array([1, 2]))
    assert solve(QQ, QQ.array([[1, 1], [1, 1]]), QQ.array([0, 1])) is None


def test_large_entries_fall_back_exactly():
    big = 2 ** 40
    m = QQ.array([[big, 1, 0], [1, big, 1], [big + 1, big + 1, 1]])
    assert rank(QQ, m) == oracles.rank(m.tolist(), 0) == 2


def test_frozen_arrays_are_read_only():
    a = freeze(QQ.array([[1, 2]]))
    with pytest.raises(ValueError):
        a[0, 0] = 3


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.sampled_from([0, 2, 3, 5]))
def test_rank_matches_gaussian_oracle(rows, p):
    F = parse_field("Q" if p == 0 else f"GF:{p}")
    assert rank(F, F.array(rows)) == oracles.rank(rows, p)


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.sampled_from([0, 2, 3]))
def test_rank_nullity(rows, p):
    F = parse_field("Q" if p == 0 else f"GF:{p}")
    m = F.array(rows)
    k = kernel_basis(F, m)
    assert rank(F, m) + k.dim == m.shape[1]
    if k.dim:
        assert F.is_zero(F.dot(m, k.basis.T))


@settings(max_examples=40, deadline=None)
@given(small_matrices(lo=-9, hi=9), st.integers(1, 50))
def test_rref_is_idempotent_and_scale_invariant(rows, den):
    m = QQ.array(rows)
    red, piv = rref(QQ, m)
    red2, piv2 = rref(QQ, red)
    assert piv == piv2 and np.all(red == red2)
    scaled, piv3 = rref(QQ, QQ.array([[f"{x}/{den}" for x in r] for r in rows]))
    assert piv3 == piv and np.all(scaled == red)


@settings(max_examples=40, deadline=None)
@given(small_matrices(max_rows=4, max_cols=5), st.sampled_from([0, 3]))
def test_quotient_section_projection(rows, p):
    F = parse_field("Q" if p == 0 else f"GF:{p}")
    sub = Subspace.span(F, F.array(rows), len(rows[0]))
    q = quotient_by(sub)
    assert q.dim == len(rows[0]) - sub.dim
    if q.dim:
        assert np.all(F.dot(q.projection, q.section) == F.eye(q.dim))
    if sub.dim and q.dim:
        assert F.is_zero(F.dot(q.projection, sub.basis.T))
