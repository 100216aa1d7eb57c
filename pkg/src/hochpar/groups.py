"""Finite groups by multiplication table, conjugacy data, group algebras and
ordinary group homology."""

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .findim import AlgModule, FinDimAlgebra, tor, ext

__all__ = [
    "FinGroup", "GroupError", "ConjClassData", "make_group", "cyclic", "symmetric",
    "conjugacy", "subgroup", "group_algebra", "trivial_module", "group_homology",
    "group_cohomology", "induce",
]


class GroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FinGroup:
    table: np.ndarray      # table[i, j] = index of g_i g_j
    identity: int
    names: tuple

    @property
    def order(self):
        return self.table.shape[0]

    def __len__(self):
        return self.order

    @cached_property
    def inverse(self):
        inv = np.empty(self.order, dtype=np.int64)
        for i in range(self.order):
            inv[i] = int(np.flatnonzero(self.table[i] == self.identity)[0])
        return inv

    def mul(self, a, b):
        return int(self.table[a, b])

    def inv(self, a):
        return int(self.inverse[a])

    def conj(self, h, s):
        """``h s h^-1``."""
        return int(self.table[self.table[h, s], self.inverse[h]])

    def is_abelian(self):
        return bool(np.all(self.table == self.table.T))

    def index(self, name):
        if isinstance(name, (int, np.integer)):
            return int(name)
        return self.names.index(name)

    def centralizer(self, g):
        return [h for h in range(self.order) if self.table[h, g] == self.table[g, h]]

    def element_order(self, g):
        k, x = 1, g
        while x != self.identity:
            x = int(self.table[x, g])
            k += 1
        return k


def _check_table(table):
    n = table.shape[0]
    if table.shape != (n, n) or n < 1:
        raise GroupError("multiplication table must be square and non-empty")
    if table.min() < 0 or table.max() >= n:
        raise GroupError("table entries must be element indices")
    for r in range(n):
        if len(set(table[r].tolist())) != n or len(set(table[:, r].tolist())) != n:
            raise GroupError(f"table is not a latin square at index {r}")
    ids = [e for e in range(n) if np.all(table[e] == np.arange(n)) and np.all(table[:, e] == np.arange(n))]
    if not ids:
        raise GroupError("no identity element")
    # (ab)c vs a(bc) over all triples
    left = table[table, :]                       # left[a, b, c] = (ab)c
    right = table[np.arange(n)[:, None, None], table[None, :, :]]  # a(bc)
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(x) for x in bad[0])
        raise GroupError(f"not associative at triple ({a}, {b}, {c})")
    return ids[0]


def make_group(spec):
    """Group from ``{"cyclic": n}``, ``{"symmetric": n}`` or ``{"table": [[...]]}``."""
    if isinstance(spec, FinGroup):
        return spec
    if not isinstance(spec, dict) or len(spec) == 0:
        raise GroupError("group spec must be an object with cyclic, symmetric or table")
    if "cyclic" in spec:
        return cyclic(int(spec["cyclic"]))
    if "symmetric" in spec:
        return symmetric(int(spec["symmetric"]))
    if "table" in spec:
        table = np.asarray(spec["table"], dtype=np.int64)
        if table.ndim != 2:
            raise GroupError("table must be a 2-d array")
        e = _check_table(table)
        names = spec.get("names") or [str(i) for i in range(table.shape[0])]
        return FinGroup(table, e, tuple(names))
    raise GroupError(f"unknown group spec keys {sorted(spec)}")


def cyclic(n):
    if n < 1:
        raise GroupError("cyclic order must be >= 1")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    names = ["1"] + ["g" if k == 1 else f"g^{k}" for k in range(1, n)]
    return FinGroup(table, 0, tuple(names))


def _cycle_name(perm):
    seen, cycles = set(), []
    for s in range(len(perm)):
        if s in seen or perm[s] == s:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = perm[x]
        cycles.append("(" + "".join(str(c) for c in cyc) + ")")
    return "".join(cycles) or "1"


def symmetric(n):
    """``S_n`` on permutations of ``0..n-1``; ``(s t)(x) = s(t(x))``; identity first."""
    if n < 1:
        raise GroupError("symmetric degree must be >= 1")
    perms = list(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = np.empty((len(perms), len(perms)), dtype=np.int64)
    for i, s in enumerate(perms):
        for j, t in enumerate(perms):
            table[i, j] = pos[tuple(s[t[x]] for x in range(n))]
    return FinGroup(table, 0, tuple(_cycle_name(p) for p in perms))


@dataclass(frozen=True)
class ConjClassData:
    classes: tuple          # tuples of element indices, ordered by smallest element
    representatives: tuple
    centralizers: tuple     # element lists, one per representative

    def class_of(self, g):
        for k, c in enumerate(self.classes):
            if g in c:
                return k
        raise KeyError(g)


def conjugacy(G):
    seen = set()
    classes = []
    for g in range(G.order):
        if g in seen:
            continue
        cls = sorted({G.conj(h, g) for h in range(G.order)})
        seen.update(cls)
        classes.append(tuple(cls))
    reps = tuple(c[0] for c in classes)
    cents = tuple(tuple(G.centralizer(r)) for r in reps)
    return ConjClassData(tuple(classes), reps, cents)


def subgroup(G, elements):
    """Subgroup on ``elements`` as its own :class:`FinGroup` plus the embedding list."""
    elems = sorted(set(int(x) for x in elements))
    pos = {g: i for i, g in enumerate(elems)}
    if G.identity not in pos:
        raise GroupError("subset does not contain the identity")
    table = np.empty((len(elems), len(elems)), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            ab = G.mul(a, b)
            if ab not in pos:
                raise GroupError(f"subset not closed: {G.names[a]} * {G.names[b]}")
            table[i, j] = pos[ab]
    return FinGroup(table, pos[G.identity], tuple(G.names[g] for g in elems)), elems


def group_algebra(F, G):
    n = G.order
    mult = F.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            mult[i, j, G.table[i, j]] = F.one
    unit = F.zeros(n)
    unit[G.identity] = F.one
    return FinDimAlgebra(F, mult, unit, G.names)


def trivial_module(kg, side="right"):
    F = kg.field
    act = F.zeros((kg.dim, 1, 1))
    act[:, 0, 0] = F.one
    return AlgModule(kg, act, side)


def group_homology(G, m, n_max, rng=None):
    """``dim H_p(G, m) = dim Tor_p^{KG}(K, m)`` for a left ``KG``-module ``m``."""
    return tor(trivial_module(m.algebra, "right"), m, n_max, resolve="right", rng=rng)[0]


def group_cohomology(G, m, n_max, rng=None):
    return ext(trivial_module(m.algebra, "left"), m, n_max, rng=rng)[0]


def induce(G, elems, kg, v):
    """``KG (x)_{KN} v`` for ``N`` given by its element list (in ``G`` indices)
    and a left ``KN``-module ``v`` whose basis order follows ``elems``."""
    F = v.field
    members = set(elems)
    pos = {g: i for i, g in enumerate(sorted(members))}
    reps, covered = [], set()
    for g in range(G.order):
        if g in covered:
            continue
        reps.append(g)
        covered.update(G.mul(g, n) for n in members)
    k, d = len(reps), v.dim
    act = F.zeros((G.order, k * d, k * d))
    for h in range(G.order):
        for i, gi in enumerate(reps):
            hg = G.mul(h, gi)
            for j, gj in enumerate(reps):
                n = G.mul(G.inv(gj), hg)
                if n in members:
                    act[h, j * d:(j + 1) * d, i * d:(i + 1) * d] = v.action[pos[n]]
                    break
    return AlgModule(kg, act, "left")
