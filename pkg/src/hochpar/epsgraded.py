"""Group-graded algebras with a homogeneous basis, the epsilon-strong
verifier, graded bimodules and the built-in examples."""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .exactla import Subspace, kernel_basis, solve
from .findim import (AlgModule, FinDimAlgebra, bimodule_actions, bimodule_module,
                     cover_from_generators, enveloping, subalgebra)
from .groups import cyclic, group_algebra, make_group, symmetric

__all__ = [
    "GradedAlgebra", "GradedBimodule", "EpsilonData", "NotEpsilonStrong",
    "check_graded", "check_bimodule_grading", "epsilon_verify", "b_action_on_s",
    "graded_free_cover", "regular_bimodule", "product_space",
    "pcp2", "tri2", "kgrp", "fixture", "fixtures", "FIXTURE_NAMES",
]


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    algebra: FinDimAlgebra
    group: object
    degrees: tuple
    name: str = ""

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    def component(self, g):
        return [i for i, d in enumerate(self.degrees) if d == g]

    def component_space(self, g):
        return Subspace.coordinate(self.field, self.dim, self.component(g))

    @cached_property
    def identity_indices(self):
        return self.component(self.group.identity)

    @cached_property
    def a(self):
        """The identity component ``A = S_1`` as an algebra."""
        return subalgebra(self.algebra, self.identity_indices)

    @cached_property
    def envelope(self):
        return enveloping(self.algebra)

    @cached_property
    def a_envelope(self):
        return enveloping(self.a)

    def env_grading_hook(self):
        """Degrees of the coordinates ``(k, l)`` of a free ``S^e`` summand generated in degree ``t``."""
        G = self.group
        deg = self.degrees
        n = self.dim

        def hook(t):
            return tuple(G.mul(G.mul(deg[k], t), deg[l]) for k in range(n) for l in range(n))
        return hook


@dataclass(frozen=True, eq=False)
class GradedBimodule:
    graded: GradedAlgebra
    module: AlgModule      # left module over the enveloping algebra
    degrees: tuple = None

    @property
    def dim(self):
        return self.module.dim

    @cached_property
    def actions(self):
        return bimodule_actions(self.module, self.graded.algebra)

    @property
    def left(self):
        return self.actions[0]

    @property
    def right(self):
        return self.actions[1]


def regular_bimodule(s):
    """``S`` as a bimodule over itself, graded by the algebra grading."""
    a = s.algebra
    mod = bimodule_module(s.envelope, a.left_regular, a.right_regular, s.degrees)
    return GradedBimodule(s, mod, tuple(s.degrees))


def check_graded(s):
    """``None`` if ``S_g S_h`` lies in ``S_gh`` for all basis products, else ``(i, j)``;
    ``("unit", k)`` if the unit has a component outside ``S_1``."""
    G = s.group
    c = s.algebra.mult
    for i in range(s.dim):
        for j in range(s.dim):
            target = G.mul(s.degrees[i], s.degrees[j])
            for k in np.flatnonzero(c[i, j] != 0):
                if s.degrees[k] != target:
                    return (i, j)
    for k in np.flatnonzero(s.algebra.unit != 0):
        if s.degrees[k] != G.identity:
            return ("unit", int(k))
    return None


def check_bimodule_grading(x):
    """``None`` if ``S_g X_h`` lies in ``X_gh`` and ``X_h S_g`` in ``X_hg``, else ``(side, i, j)``."""
    s = x.graded
    G = s.group
    left, right = x.actions
    for i in range(s.dim):
        g = s.degrees[i]
        for j in range(x.dim):
            h = x.degrees[j]
            for r in np.flatnonzero(left[i][:, j] != 0):
                if x.degrees[r] != G.mul(g, h):
                    return ("left", i, j)
            for r in np.flatnonzero(right[i][:, j] != 0):
                if x.degrees[r] != G.mul(h, g):
                    return ("right", i, j)
    return None


def product_space(s, *spaces):
    """Span of all products ``x_1 x_2 ... x_k`` with ``x_i`` in the given subspaces."""
    F = s.field
    cur = spaces[0]
    for nxt in spaces[1:]:
        if cur.dim == 0 or nxt.dim == 0:
            return Subspace.zero(F, s.dim)
        prods = F.tensordot(F.tensordot(cur.basis, s.algebra.mult, 1), nxt.basis.T, ([1], [0]))
        cur = Subspace.span(F, np.transpose(prods, (0, 2, 1)).reshape(-1, s.dim), s.dim)
    return cur


class NotEpsilonStrong(ArithmeticError):
    """Raised by :func:`epsilon_verify`; ``violations`` lists every failing check."""

    def __init__(self, violations):
        self.violations = violations
        first = violations[0]
        super().__init__(f"axiom ({first['axiom']}) fails at {first['pair']}: {first['detail']}")

    def axioms(self):
        return sorted({v["axiom"] for v in self.violations})


@dataclass(eq=False)
class EpsilonData:
    graded: GradedAlgebra
    ideals: dict           # g -> Subspace S_g S_{g^-1}
    units: dict            # g -> vector 1_g
    witnesses: dict        # g -> list of (L_g, R_{g^-1})
    checks: dict = field(default_factory=dict)

    def unit(self, g):
        return self.units[g]

    def family(self, g):
        return self.witnesses[g]


def _local_unit(s, ideal):
    F = s.field
    if ideal.dim == 0:
        return F.zeros(s.dim)
    mult = s.algebra.mult
    rows, rhs = [], []
    for x in ideal.basis:
        left = F.tensordot(ideal.basis, F.tensordot(x, mult, ([0], [1])), 1)  # row r: I_r x
        right = F.tensordot(ideal.basis, F.tensordot(x, mult, 1), ([1], [0]))  # row r: x I_r
        rows += [left.T, right.T]
        rhs += [x, x]
    m = np.concatenate(rows)
    b = np.concatenate(rhs)
    c = solve(F, m, b)
    if c is None:
        return None
    if kernel_basis(F, m).dim != 0:
        raise ArithmeticError("local unit is not unique")
    return F.dot(c, ideal.basis)


def _witness(s, g, unit):
    F, G = s.field, s.group
    sg, sgi = s.component(g), s.component(G.inv(g))
    if F.is_zero(unit):
        return []
    mult = s.algebra.mult
    pairs = [(i, j) for i in sg for j in sgi]
    m = np.stack([mult[i, j] for i, j in pairs], axis=1)
    c = solve(F, m, unit)
    if c is None:
        return None
    fam = []
    for j in sgi:
        L = F.zeros(s.dim)
        for (i, jj), coef in zip(pairs, c):
            if jj == j and coef != 0:
                L[i] = coef
        if not F.is_zero(L):
            fam.append((L, s.algebra.basis_vector(j)))
    return fam


def _separating_vector(lhs, rhs):
    """A basis vector of one side outside the other, tagged with the side it lies in."""
    for side, big, small in (("rhs", rhs, lhs), ("lhs", lhs, rhs)):
        for v in big.basis:
            if not small.contains(v):
                return {"in": side, "vector": [big.field.format(c) for c in v]}
    return None


def epsilon_verify(s):
    """Local units, witness families and axiom checks; raises :class:`NotEpsilonStrong`."""
    bad = check_graded(s)
    if bad is not None:
        raise ValueError(f"not a grading: basis product {bad} leaves its component")
    F, G = s.field, s.group
    comp = {g: s.component_space(g) for g in range(G.order)}
    a_space = comp[G.identity]
    violations = []
    ideals, units, witnesses = {}, {}, {}
    for g in range(G.order):
        gi = G.inv(g)
        ideal = product_space(s, comp[g], comp[gi])
        ideals[g] = ideal
        # (i): two-sided ideal of S_1 with a unit
        for side, prod in (("left", product_space(s, a_space, ideal)), ("right", product_space(s, ideal, a_space))):
            if not ideal.contains_subspace(prod):
                violations.append({"axiom": "i", "pair": (g, g),
                                   "detail": f"S_1 S_g S_g^-1 not in S_g S_g^-1 ({side})"})
        u = _local_unit(s, ideal)
        if u is None:
            violations.append({"axiom": "i", "pair": (g, g), "detail": "S_g S_g^-1 has no unit",
                               "dims": (ideal.dim,)})
            continue
        units[g] = u
        fam = _witness(s, g, u)
        if fam is None:
            violations.append({"axiom": "i", "pair": (g, g), "detail": "1_g not in the image of S_g x S_g^-1"})
        witnesses[g] = fam
    for g in range(G.order):
        gi = G.inv(g)
        for h in range(G.order):
            lhs = product_space(s, comp[gi], comp[g], comp[h])
            rhs = product_space(s, comp[gi], comp[G.mul(g, h)])
            if lhs != rhs:
                violations.append({"axiom": "ii", "pair": (g, h), "lhs_dim": lhs.dim, "rhs_dim": rhs.dim,
                                   "witness": _separating_vector(lhs, rhs),
                                   "detail": f"dim S_g^-1 S_g S_h = {lhs.dim} but dim S_g^-1 S_gh = {rhs.dim}"})
            lhs = product_space(s, comp[h], comp[g], comp[gi])
            rhs = product_space(s, comp[G.mul(h, g)], comp[gi])
            if lhs != rhs:
                violations.append({"axiom": "iii", "pair": (g, h), "lhs_dim": lhs.dim, "rhs_dim": rhs.dim,
                                   "witness": _separating_vector(lhs, rhs),
                                   "detail": f"dim S_h S_g S_g^-1 = {lhs.dim} but dim S_hg S_g^-1 = {rhs.dim}"})
    if violations:
        raise NotEpsilonStrong(violations)
    data = EpsilonData(s, ideals, units, witnesses)
    data.checks = _unit_identities(s, data)
    if not all(data.checks.values()):
        raise ArithmeticError(f"local unit identities fail: {data.checks}")
    return data


def _unit_identities(s, eps):
    """The identities ``1_g x = x = x 1_g^-1`` and ``x 1_h = 1_gh x`` for homogeneous basis ``x``."""
    F, G = s.field, s.group
    a = s.algebra
    witness_ok = all(
        bool(np.all(F.reduce(sum((a.mul(L, R) for L, R in eps.witnesses[g]), F.zeros(s.dim))) == eps.units[g]))
        for g in range(G.order))
    local = True
    conj = True
    for i in range(s.dim):
        x = a.basis_vector(i)
        g = s.degrees[i]
        if np.any(a.mul(eps.units[g], x) != x) or np.any(a.mul(x, eps.units[G.inv(g)]) != x):
            local = False
        for h in range(G.order):
            if np.any(a.mul(x, eps.units[h]) != a.mul(eps.units[G.mul(g, h)], x)):
                conj = False
    return {"witness_sum": witness_ok, "local_units": local, "unit_shift": conj}


def b_action_on_s(s, eps, k):
    """Matrix ``(dim S, dim B)`` sending ``(C, 1)`` to ``prod_{c in C} 1_c``; checks multiplicativity."""
    F = s.field
    a = s.algebra
    cols = []
    for C in k.subsets:
        v = a.unit
        for c in C:
            v = a.mul(v, eps.units[c])
        cols.append(v)
    m = np.stack(cols, axis=1) if cols else F.zeros((s.dim, 0))
    for i, C in enumerate(k.subsets):
        for j, D in enumerate(k.subsets):
            cd = k.subset_index[tuple(sorted(set(C) | set(D)))]
            if np.any(a.mul(m[:, i], m[:, j]) != m[:, cd]):
                raise ArithmeticError("B -> S is not multiplicative")
    return m


def graded_free_cover(s, x, minimal=False):
    """Free graded ``S^e`` cover of a graded bimodule.

    By default there is one generator per homogeneous basis vector; with
    ``minimal=True`` generators are picked greedily. The kernel carries the
    induced grading.
    """
    F = s.field
    env = s.envelope
    mod = x.module.with_grading(x.degrees)
    idem = [env.unit]
    hook = s.env_grading_hook()
    if minimal:
        from .findim import free_cover
        cov = free_cover(mod, idem, grading_hook=hook)
    else:
        gens = [(0, F.eye(x.dim)[i]) for i in range(x.dim)]
        cov = cover_from_generators(mod, gens, idem, hook)
    labels = cov.term.module.grading
    # degree preservation: a generator's summand maps degree-wise onto X
    for col in range(cov.term.dim):
        for r in np.flatnonzero(cov.surjection[:, col] != 0):
            if x.degrees[r] != labels[col]:
                raise ArithmeticError("cover is not degree preserving")
    for row in cov.kernel.basis:
        degs = {labels[c] for c in np.flatnonzero(row != 0)}
        if len(degs) > 1:
            raise ArithmeticError("kernel basis vector is not homogeneous")
    return cov


# ---------------------------------------------------------------- fixtures

def _algebra(F, n, products, unit, names, idempotents=None):
    mult = F.zeros((n, n, n))
    for (i, j), out in products.items():
        for k, c in out.items():
            mult[i, j, k] = F(c)
    u = F.array(unit)
    idem = None
    if idempotents:
        idem = tuple(F.array(v) for v in idempotents)
    return FinDimAlgebra(F, mult, u, tuple(names), None, idem)


def pcp2(F):
    """``K x K`` extended by ``d`` of degree ``g`` with ``d^2 = u``; basis ``u, v, d``."""
    prods = {(0, 0): {0: 1}, (1, 1): {1: 1}, (0, 2): {2: 1}, (2, 0): {2: 1}, (2, 2): {0: 1}}
    alg = _algebra(F, 3, prods, [1, 1, 0], ["u", "v", "d"], [[1, 0, 0], [0, 1, 0]])
    return GradedAlgebra(alg, cyclic(2), (0, 0, 1), "pcp2")


def tri2(F):
    """Upper triangular 2x2 matrices; ``e12`` in the nontrivial degree."""
    prods = {(0, 0): {0: 1}, (1, 1): {1: 1}, (0, 2): {2: 1}, (2, 1): {2: 1}}
    alg = _algebra(F, 3, prods, [1, 1, 0], ["e11", "e22", "e12"], [[1, 0, 0], [0, 1, 0]])
    return GradedAlgebra(alg, cyclic(2), (0, 0, 1), "tri2")


def kgrp(F, G):
    """Group algebra with its canonical (strong) grading."""
    G = make_group(G)
    alg = group_algebra(F, G)
    return GradedAlgebra(alg, G, tuple(range(G.order)), "kgrp")


_GROUPS = {"Z2": lambda: cyclic(2), "Z3": lambda: cyclic(3), "S3": lambda: symmetric(3)}
FIXTURE_NAMES = ("pcp2", "tri2", "kgrp:Z2", "kgrp:Z3", "kgrp:S3")


def fixture(name, F):
    if name == "pcp2":
        return pcp2(F)
    if name == "tri2":
        return tri2(F)
    if name.startswith("kgrp:") and name[5:] in _GROUPS:
        s = kgrp(F, _GROUPS[name[5:]]())
        return GradedAlgebra(s.algebra, s.group, s.degrees, name)
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


def fixtures(F):
    """Named fixtures over ``F`` with their expected epsilon-strong status."""
    out = {}
    for name in FIXTURE_NAMES:
        out[name] = (fixture(name, F), name != "tri2")
    return out
