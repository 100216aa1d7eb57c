import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hochpar import parse_field
from hochpar.exactla import Subspace
from hochpar.findim import (AlgModule, FinDimAlgebra, Resolution, check_algebra, check_module, direct_sum,
                            enveloping, ext, ext_via_injective, hom_space, is_isomorphic, quotient_module,
                            regular_module, submodule, tensor_product, tor)


def dual_numbers(F):
    """``K[x]/(x^2)`` on the basis ``1, x``."""
    mult = F.zeros((2, 2, 2))
    mult[0, 0, 0] = mult[0, 1, 1] = mult[1, 0, 1] = F.one
    return FinDimAlgebra(F, mult, F.array([1, 0]), ("1", "x"))


def a2_path(F):
    """Upper triangular 2x2 matrices ``e1, e2, a`` with ``e1 a = a = a e2``."""
    mult = F.zeros((3, 3, 3))
    mult[0, 0, 0] = mult[1, 1, 1] = mult[0, 2, 2] = mult[2, 1, 2] = F.one
    return FinDimAlgebra(F, mult, F.array([1, 1, 0]), ("e1", "e2", "a"), None,
                         (F.array([1, 0, 0]), F.array([0, 1, 0])))


def simple(alg, values, side):
    F = alg.field
    act = F.zeros((alg.dim, 1, 1))
    act[:, 0, 0] = F.array(values)
    return AlgModule(alg, act, side)


def test_fixture_algebras_valid(field):
    assert check_algebra(dual_numbers(field)) is None
    assert check_algebra(a2_path(field)) is None
    assert check_module(regular_module(a2_path(field))) is None


def test_nonassociative_detected():
    F = parse_field("Q")
    a = dual_numbers(F)
    mult = a.mult.copy()
    mult[1, 1, 0] = F.one  # x^2 = 1 breaks nothing; x * 1 = 1 breaks the unit
    mult[1, 0, 0] = F.one
    assert check_algebra(FinDimAlgebra(F, mult, a.unit)) is not None


def test_dual_numbers_tor_ext(field):
    a = dual_numbers(field)
    k_right = simple(a, [1, 0], "right")
    k_left = simple(a, [1, 0], "left")
    assert tor(k_right, k_left, 4)[0] == [1, 1, 1, 1, 1]
    assert ext(k_left, k_left, 4)[0] == [1, 1, 1, 1, 1]
    assert ext_via_injective(k_left, k_left, 3)[0] == [1, 1, 1, 1]


def test_a2_hereditary(field):
    a = a2_path(field)
    s1 = simple(a, [1, 0, 0], "left")
    s2 = simple(a, [0, 1, 0], "left")
    res = Resolution(s1).extend_to(3)
    assert res.check()
    assert ext(s1, s2, 3)[0] == [0, 0, 0, 0]
    assert ext(s2, s1, 3)[0] == [0, 1, 0, 0]
    assert ext(s2, s1, 3)[0] == ext_via_injective(s2, s1, 3)[0]


def test_tensor_with_regular_is_identity(field):
    a = a2_path(field)
    m = submodule(regular_module(a), Subspace.coordinate(field, 3, [0, 2]))
    q = tensor_product(AlgModule(a, a.right_regular, "right"), m)
    assert q.dim == m.dim


def test_enveloping_dimension_and_unit(field):
    a = dual_numbers(field)
    env = enveloping(a)
    assert env.dim == 4
    assert check_algebra(env) is None


@settings(max_examples=20, deadline=None)
@given(st.lists(st.sampled_from(["s1", "s2", "p1"]), min_size=1, max_size=3), st.sampled_from(["Q", "GF:2"]))
def test_ext_additive_over_direct_sums(parts, fs):
    F = parse_field(fs)
    a = a2_path(F)
    reg = regular_module(a)
    mods = {"s1": simple(a, [1, 0, 0], "left"), "s2": simple(a, [0, 1, 0], "left"),
            "p1": submodule(reg, Subspace.coordinate(F, 3, [0]))}
    target = mods["s1"]
    total = direct_sum([mods[p] for p in parts])
    expect = [sum(v) for v in zip(*(ext(mods[p], target, 2)[0] for p in parts))]
    assert ext(total, target, 2)[0] == expect
    assert hom_space(total, target).dim == expect[0]


def test_isomorphism_and_quotients(field):
    a = a2_path(field)
    reg = regular_module(a)
    rad = Subspace.coordinate(field, 3, [2])
    top, _ = quotient_module(reg, rad)
    assert top.dim == 2
    assert is_isomorphic(top, direct_sum([simple(a, [1, 0, 0], "left"), simple(a, [0, 1, 0], "left")]))
    assert not is_isomorphic(submodule(reg, Subspace.coordinate(field, 3, [1, 2])),
                             direct_sum([simple(a, [0, 1, 0], "left")] * 2))
