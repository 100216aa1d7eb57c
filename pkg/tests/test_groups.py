import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hochpar import parse_field
from hochpar.findim import AlgModule
from hochpar.groups import (GroupError, conjugacy, cyclic, group_algebra, group_cohomology, group_homology,
                            make_group, subgroup, symmetric, trivial_module)


def trivial_left(F, G):
    return trivial_module(group_algebra(F, G), "left")


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([("cyclic", n) for n in range(1, 8)] + [("symmetric", n) for n in range(1, 4)]))
def test_group_axioms(spec):
    G = make_group({spec[0]: spec[1]})
    t = G.table
    n = G.order
    assert np.all(t[t, :] == t[np.arange(n)[:, None, None], t[None, :, :]])
    assert np.all(t[G.identity] == np.arange(n))
    assert all(G.mul(g, G.inv(g)) == G.identity for g in range(n))
    classes = conjugacy(G).classes
    assert sorted(x for c in classes for x in c) == list(range(n))
    assert sum(n // len(G.centralizer(c[0])) for c in classes) == n


def test_s3_classes():
    G = symmetric(3)
    conj = conjugacy(G)
    assert sorted(len(c) for c in conj.classes) == [1, 2, 3]
    assert sorted(len(c) for c in conj.centralizers) == [2, 3, 6]
    assert G.names[G.identity] == "1"


def test_bad_tables_rejected():
    with pytest.raises(GroupError):
        make_group({"table": [[0, 1], [0, 1]]})
    with pytest.raises(GroupError):
        make_group({"dihedral": 4})
    with pytest.raises(GroupError):
        subgroup(symmetric(3), [0, 1, 2])


@pytest.mark.parametrize("group, p, expected", [
    (cyclic(2), 2, [1, 1, 1, 1]),
    (cyclic(2), 3, [1, 0, 0, 0]),
    (cyclic(3), 3, [1, 1, 1, 1]),
    (cyclic(3), 0, [1, 0, 0, 0]),
    (symmetric(3), 2, [1, 1, 1, 1]),
    # mod 3 cohomology of S3 is periodic of period 4 in degrees 0, 3
    (symmetric(3), 3, [1, 0, 0, 1]),
    (symmetric(3), 0, [1, 0, 0, 0]),
])
def test_trivial_coefficients(group, p, expected):
    F = parse_field("Q" if p == 0 else f"GF:{p}")
    m = trivial_left(F, group)
    assert group_homology(group, m, 3) == expected
    assert group_cohomology(group, m, 3) == expected


def test_regular_module_is_acyclic():
    F = parse_field("GF:2")
    G = symmetric(3)
    kg = group_algebra(F, G)
    assert group_homology(G, AlgModule(kg, kg.left_regular, "left"), 3) == [1, 0, 0, 0]
