import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hochpar import parse_field
from hochpar.exactla import kernel_basis
from hochpar.findim import AlgModule, check_module, submodule
from hochpar.groups import cyclic, group_homology, symmetric
from hochpar.parrep import (PartialRep, b_left_module, b_right_module, build_kpar, check_kpar_relations,
                            check_partial_rep, exactness_check, globalize, module_from_partial_rep,
                            partial_cohomology, partial_homology, partial_rep_from_module, zero_orbit_check)

GROUPS = {"Z2": cyclic(2), "Z3": cyclic(3), "S3": symmetric(3)}


@pytest.mark.parametrize("name, dim", [("Z2", 3), ("Z3", 8), ("S3", 112)])
def test_kpar_dimension_and_pairs(name, dim):
    G = GROUPS[name]
    k = build_kpar(parse_field("GF:2"), G)
    assert k.dim == dim == oracles.canonical_pair_count(G.order)
    closure = oracles.exel_closure(G.table.tolist(), G.identity)
    assert {(frozenset(A), g) for A, g in k.elements} == closure


@pytest.mark.parametrize("name", GROUPS)
def test_kpar_relations(name, field):
    k = build_kpar(field, GROUPS[name])
    assert check_kpar_relations(k) is None


@pytest.mark.parametrize("name", GROUPS)
def test_b_modules(name, field):
    k = build_kpar(field, GROUPS[name])
    assert check_module(b_left_module(k)) is None
    assert check_module(b_right_module(k)) is None
    assert b_left_module(k).dim == 2 ** (GROUPS[name].order - 1)


@pytest.mark.parametrize("name", GROUPS)
def test_partial_homology_of_b_matches_orbit_oracle(name, field):
    G = GROUPS[name]
    k = build_kpar(field, G)
    b = b_left_module(k)
    expect = oracles.partial_homology_of_b(G.table.tolist(), G.identity, field.p, 3)
    assert partial_homology(k, b, 3) == expect
    glob = globalize(k, b)
    assert glob.dim == 2 ** G.order - 1
    assert group_homology(G, glob.module, 3) == expect


def test_partial_cohomology_of_b():
    F = parse_field("GF:2")
    k = build_kpar(F, cyclic(2))
    assert partial_cohomology(k, b_left_module(k), 2) == [2, 1, 1]


def _ses(k):
    F = k.field
    mid = AlgModule(k.algebra, k.algebra.left_regular, "left")
    quot = b_left_module(k)
    p = np.ascontiguousarray(quot.action[:, :, 0].T)
    sub_space = kernel_basis(F, p)
    sub = submodule(mid, sub_space)
    return sub, mid, quot, np.ascontiguousarray(sub_space.basis.T), p


@pytest.mark.parametrize("fs, name, dims", [
    ("Q", "Z3", None), ("GF:2", "Z2", None), ("GF:3", "S3", (129, 192, 63)),
])
def test_globalization_is_exact(fs, name, dims):
    k = build_kpar(parse_field(fs), GROUPS[name])
    r = exactness_check(k, *_ses(k))
    assert r["exact"] and r["additive"] and r["composes_to_zero"]
    if dims is not None:
        assert r["dims"] == dims


def restricted_action(F, G, subset):
    """Linearized restriction of left multiplication to ``subset``."""
    pos = {y: i for i, y in enumerate(subset)}
    d = len(subset)
    mats = F.zeros((G.order, d, d))
    for g in range(G.order):
        for y in subset:
            gy = G.mul(g, y)
            if gy in pos:
                mats[g, pos[gy], pos[y]] = F.one
    return PartialRep(F, G, mats)


@settings(max_examples=12, deadline=None)
@given(st.sampled_from(["Z2", "Z3", "S3"]), st.sampled_from(["Q", "GF:2", "GF:3"]), st.data())
def test_restricted_actions_globalize(name, fs, data):
    G = GROUPS[name]
    F = parse_field(fs)
    subset = sorted(data.draw(st.sets(st.integers(0, G.order - 1), min_size=1)))
    rep = restricted_action(F, G, subset)
    assert check_partial_rep(rep) is None
    k = build_kpar(F, G)
    m = module_from_partial_rep(k, rep)
    assert check_module(m) is None
    assert np.all(partial_rep_from_module(k, m).matrices == rep.matrices)
    glob = globalize(k, m)
    assert np.all(F.dot(glob.lam, glob.iota) == F.eye(m.dim))
    assert zero_orbit_check(glob) == 0
    assert partial_homology(k, m, 2) == group_homology(G, glob.module, 2)


@settings(max_examples=10, deadline=None)
@given(st.sampled_from(["Z2", "Z3", "S3"]), st.data())
def test_global_representations_are_partial(name, data):
    G = GROUPS[name]
    F = parse_field("GF:3")
    twist = data.draw(st.permutations(range(G.order)))
    # conjugate the regular representation by a permutation of the basis
    P = np.eye(G.order, dtype=np.int64)[list(twist)]
    mats = np.stack([P @ np.eye(G.order, dtype=np.int64)[G.table[g]].T @ P.T for g in range(G.order)])
    rep = PartialRep(F, G, F.array(mats))
    assert check_partial_rep(rep) is None
    k = build_kpar(F, G)
    glob = globalize(k, module_from_partial_rep(k, rep))
    assert glob.dim == G.order


def test_non_partial_rep_rejected():
    F = parse_field("Q")
    G = cyclic(3)
    mats = F.zeros((3, 1, 1))
    mats[0, 0, 0] = F.one
    mats[1, 0, 0] = F.one  # pi_g = 1, pi_g^2 = 0 violates the axioms
    assert check_partial_rep(PartialRep(F, G, mats)) is not None
    with pytest.raises(ValueError):
        module_from_partial_rep(build_kpar(F, G), PartialRep(F, G, mats))
