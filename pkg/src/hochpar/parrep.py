"""The partial group algebra ``K_par G``, its subalgebra ``B``, partial
representations, partial (co)homology and the globalization functor.

Elements of Exel's semigroup are stored as canonical pairs ``(A, g)`` with
``1, g`` in ``A``; the product is ``(A, g)(B, h) = (A | gB, gh)``. The symbol
``[g]`` is ``({1, g}, g)`` and ``e_g = [g][g^-1]`` is ``({1, g}, 1)``.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exactla import Subspace, image, kernel_basis, quotient_by, rank
from .findim import AlgModule, FinDimAlgebra, Resolution, submodule, tor, ext
from .groups import group_algebra, group_homology, subgroup

__all__ = [
    "KparAlgebra", "PartialRep", "GlobalizedModule", "build_kpar", "enumerate_pairs",
    "check_kpar_relations", "b_right_module", "b_left_module", "epsilon_map",
    "check_partial_rep", "module_from_partial_rep", "partial_rep_from_module",
    "partial_homology", "partial_cohomology", "globalize", "lambda_grading",
    "check_module_grading", "restrict_module", "psi_embedding", "conj_class_reduction",
    "zero_partial_rep", "global_partial_rep", "lambda_map", "is_module_map",
    "exactness_check", "zero_orbit_check",
]


def enumerate_pairs(G):
    """All canonical pairs ``(A, g)`` ordered by (sorted ``A``, ``g``)."""
    e = G.identity
    others = [x for x in range(G.order) if x != e]
    subsets = []
    for mask in range(1 << len(others)):
        subsets.append(tuple(sorted([e] + [others[i] for i in range(len(others)) if mask >> i & 1])))
    subsets.sort()
    pairs = [(A, g) for A in subsets for g in A]
    return subsets, pairs


@dataclass(eq=False)
class KparAlgebra:
    group: object
    field: object
    subsets: list           # basis of B, lexicographic
    elements: list          # canonical pairs, basis of K_par G
    table: np.ndarray       # table[i, j] = index of the product pair
    algebra: FinDimAlgebra

    @cached_property
    def index(self):
        return {p: i for i, p in enumerate(self.elements)}

    def pair_index(self, A, g):
        return self.index[(tuple(sorted(set(A))), g)]

    @cached_property
    def bracket(self):
        G = self.group
        return [self.pair_index({G.identity, g}, g) for g in range(G.order)]

    @cached_property
    def e(self):
        G = self.group
        return [self.pair_index({G.identity, g}, G.identity) for g in range(G.order)]

    @cached_property
    def b_index(self):
        """Position in ``elements`` of ``(C, 1)`` for each subset ``C``."""
        return [self.index[(C, self.group.identity)] for C in self.subsets]

    @cached_property
    def subset_index(self):
        return {C: i for i, C in enumerate(self.subsets)}

    @property
    def dim(self):
        return len(self.elements)

    def vector(self, i):
        return self.algebra.basis_vector(i)

    def name(self, i):
        A, g = self.elements[i]
        n = self.group.names
        return "({" + ",".join(n[a] for a in A) + "}," + n[g] + ")"

    @cached_property
    def b_algebra(self):
        """``B`` as a commutative algebra on the subsets ``C``; ``(C)(D) = (C | D)``."""
        F = self.field
        n = len(self.subsets)
        mult = F.zeros((n, n, n))
        for i, C in enumerate(self.subsets):
            for j, D in enumerate(self.subsets):
                mult[i, j, self.subset_index[tuple(sorted(set(C) | set(D)))]] = F.one
        unit = F.zeros(n)
        unit[0] = F.one
        gens = tuple(self._b_unit(self.subset_index[tuple(sorted({self.group.identity, g}))])
                     for g in range(self.group.order))
        return FinDimAlgebra(F, mult, unit, None, gens, None)

    def _b_unit(self, i):
        v = self.field.zeros(len(self.subsets))
        v[i] = self.field.one
        return v

    @cached_property
    def idempotent_family(self):
        """Orthogonal idempotents ``sum_{D >= C} (-1)^{|D - C|} (D, 1)``, one per subset ``C``."""
        F = self.field
        out = []
        for C in self.subsets:
            v = F.zeros(self.dim)
            sc = set(C)
            for D in self.subsets:
                if sc <= set(D):
                    v[self.b_index[self.subset_index[D]]] = F((-1) ** (len(D) - len(C)))
            out.append(v)
        return tuple(out)

    def right_b(self):
        return b_right_module(self)

    @cached_property
    def _b_resolution(self):
        return Resolution(b_right_module(self).op(), self.idempotent_family)

    @cached_property
    def _b_left_resolution(self):
        return Resolution(b_left_module(self), self.idempotent_family)


_KPAR_CACHE = {}


def build_kpar(F, G):
    """``K_par G`` over ``F``; memoized per (field, group table)."""
    key = (F.p, G.table.tobytes(), G.identity)
    hit = _KPAR_CACHE.get(key)
    if hit is not None:
        return hit
    subsets, pairs = enumerate_pairs(G)
    pos = {p: i for i, p in enumerate(pairs)}
    n = len(pairs)
    table = np.empty((n, n), dtype=np.int64)
    for i, (A, g) in enumerate(pairs):
        sa = set(A)
        for j, (B, h) in enumerate(pairs):
            C = tuple(sorted(sa | {G.mul(g, b) for b in B}))
            table[i, j] = pos[(C, G.mul(g, h))]
    mult = F.zeros((n, n, n))
    ii, jj = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    mult[ii, jj, table] = F.one
    unit = F.zeros(n)
    unit[pos[((G.identity,), G.identity)]] = F.one
    k = KparAlgebra(G, F, subsets, pairs, table, None)
    gens = tuple(F.array(np.eye(n, dtype=np.int64)[b]) for b in k.bracket)
    names = tuple(k.name(i) for i in range(n))
    k.algebra = FinDimAlgebra(F, mult, unit, names, gens, k.idempotent_family)
    _KPAR_CACHE[key] = k
    return k


def check_kpar_relations(k):
    """``None`` when every defining relation and computation rule holds, else a message.

    Checks run on the integer regular representation (0/1 matrices), which is
    faithful and valid over every field.
    """
    G = k.group
    t = k.table
    n = t.shape[0]
    # associativity of the pair product
    bad = np.argwhere(t[t, :] != t[np.arange(n)[:, None, None], t[None, :, :]])
    if len(bad):
        return f"pair product not associative at {tuple(int(x) for x in bad[0])}"
    L = np.zeros((n, n, n), dtype=np.int64)
    L[np.arange(n)[:, None], t, np.arange(n)[None, :]] = 1  # L[i] @ e_j = e_{ij}

    def mat(*idx):
        out = np.eye(n, dtype=np.int64)
        for i in idx:
            out = out @ L[i]
        return out

    br, e, inv = k.bracket, k.e, G.inverse
    unit = k.pair_index({G.identity}, G.identity)
    if br[G.identity] != unit or not np.array_equal(L[unit], np.eye(n, dtype=np.int64)):
        return "[1] is not the unit"
    for s in range(G.order):
        if not np.array_equal(mat(br[s], br[inv[s]]), L[e[s]]):
            return f"e_{G.names[s]} != [s][s^-1]"
        if not np.array_equal(mat(e[s], e[s]), L[e[s]]):
            return f"e_{G.names[s]} not idempotent"
        for h in range(G.order):
            st = G.mul(s, h)
            if not np.array_equal(mat(br[inv[s]], br[s], br[h]), mat(br[inv[s]], br[st])):
                return f"[s^-1][s][t] != [s^-1][st] at ({G.names[s]}, {G.names[h]})"
            if not np.array_equal(mat(br[s], br[h], br[inv[h]]), mat(br[st], br[inv[h]])):
                return f"[s][t][t^-1] != [st][t^-1] at ({G.names[s]}, {G.names[h]})"
            if not np.array_equal(mat(br[s], e[h]), mat(e[st], br[s])):
                return f"[g]e_h != e_gh[g] at ({G.names[s]}, {G.names[h]})"
            # conjugation rule, in the form implied by [g]e_h = e_gh[g]
            if not np.array_equal(mat(br[s], e[h], br[inv[s]]), mat(e[st], e[s])):
                return f"[g]e_h[g^-1] != e_gh e_g at ({G.names[s]}, {G.names[h]})"
            if not np.array_equal(mat(e[s], e[h]), mat(e[h], e[s])):
                return f"e_g e_h != e_h e_g at ({G.names[s]}, {G.names[h]})"
    return None


# ---------------------------------------------------------------- B modules

def b_right_module(k):
    """``B`` with ``u <| (A, g) = (g^-1 (A | C), 1)`` on the basis ``(C, 1)``."""
    F, G = k.field, k.group
    nb = len(k.subsets)
    act = F.zeros((k.dim, nb, nb))
    for i, (A, g) in enumerate(k.elements):
        gi = G.inv(g)
        for c, C in enumerate(k.subsets):
            D = tuple(sorted(G.mul(gi, x) for x in set(A) | set(C)))
            act[i, k.subset_index[D], c] = F.one
    return AlgModule(k.algebra, act, "right")


def b_left_module(k):
    """``B`` with ``(A, g) |> (C, 1) = (A | gC, 1)``."""
    F, G = k.field, k.group
    nb = len(k.subsets)
    act = F.zeros((k.dim, nb, nb))
    for i, (A, g) in enumerate(k.elements):
        for c, C in enumerate(k.subsets):
            D = tuple(sorted(set(A) | {G.mul(g, x) for x in C}))
            act[i, k.subset_index[D], c] = F.one
    return AlgModule(k.algebra, act, "left")


def epsilon_map(k):
    """Matrix of ``z -> 1 <| z``, from ``K_par G`` to ``B``."""
    F, G = k.field, k.group
    eps = F.zeros((len(k.subsets), k.dim))
    for i, (A, g) in enumerate(k.elements):
        gi = G.inv(g)
        eps[k.subset_index[tuple(sorted(G.mul(gi, a) for a in A))], i] = F.one
    return eps


# ---------------------------------------------------------------- partial reps

@dataclass(frozen=True, eq=False)
class PartialRep:
    field: object
    group: object
    matrices: np.ndarray  # (|G|, d, d)

    @property
    def dim(self):
        return self.matrices.shape[1]


def zero_partial_rep(F, G, d):
    m = F.zeros((G.order, d, d))
    m[G.identity] = F.eye(d)
    return PartialRep(F, G, m)


def global_partial_rep(F, G, matrices):
    return PartialRep(F, G, F.array(matrices))


def check_partial_rep(p):
    """``None`` or ``(axiom, s, t)`` for the first failing pair."""
    F, G = p.field, p.group
    P = p.matrices
    if np.any(P[G.identity] != F.eye(p.dim)):
        return ("c", G.identity, G.identity)
    inv = G.inverse
    Pinv = P[inv]
    # (a) pi_s pi_t pi_t^-1 = pi_st pi_t^-1
    lhs = F.dot(P[:, None], F.dot(P, Pinv)[None, :])
    rhs = F.dot(P[G.table], Pinv[None, :])
    bad = np.argwhere(np.any(lhs != rhs, axis=(2, 3)))
    if len(bad):
        return ("a", int(bad[0][0]), int(bad[0][1]))
    # (b) pi_s^-1 pi_s pi_t = pi_s^-1 pi_st
    lhs = F.dot(F.dot(Pinv, P)[:, None], P[None, :])
    rhs = F.dot(Pinv[:, None], P[G.table])
    bad = np.argwhere(np.any(lhs != rhs, axis=(2, 3)))
    if len(bad):
        return ("b", int(bad[0][0]), int(bad[0][1]))
    return None


def module_from_partial_rep(k, p, check=True):
    """Left ``K_par G``-module with ``(A, g)`` acting as ``prod_{a in A} pi_a pi_a^-1 . pi_g``."""
    if check:
        bad = check_partial_rep(p)
        if bad is not None:
            raise ValueError(f"not a partial representation: axiom ({bad[0]}) fails at {bad[1:]}")
    F, G = k.field, k.group
    P = p.matrices
    idem = F.dot(P, P[G.inverse])
    # E[A] = prod of idem[a] over a in A, built one subset size at a time
    E = {(G.identity,): F.eye(p.dim)}
    by_size = sorted(set(A for A, _ in k.elements), key=len)
    for size in sorted(set(len(A) for A in by_size)):
        todo = [A for A in by_size if len(A) == size and A not in E]
        if not todo:
            continue
        heads = [max(a for a in A if a != G.identity) for A in todo]
        rests = [tuple(a for a in A if a != h) for A, h in zip(todo, heads)]
        prods = F.dot(idem[heads], np.stack([E[r] for r in rests]))
        E.update(zip(todo, prods))
    subs = np.stack([E[A] for A, _ in k.elements])
    act = F.dot(subs, P[[g for _, g in k.elements]])
    return AlgModule(k.algebra, np.ascontiguousarray(act), "left")


def partial_rep_from_module(k, m):
    return PartialRep(k.field, k.group, np.ascontiguousarray(m.action[k.bracket]))


# ---------------------------------------------------------------- (co)homology

def partial_homology(k, m, n_max, rng=None):
    """``dim Tor_p^{K_par G}(B, m)`` for ``p <= n_max``; ``B`` is the resolved side."""
    res = None if rng is not None else k._b_resolution
    return tor(b_right_module(k), m, n_max, resolve="right", rng=rng,
               idempotents=k.idempotent_family, resolution=res)[0]


def partial_cohomology(k, m, n_max, rng=None):
    res = None if rng is not None else k._b_left_resolution
    return ext(b_left_module(k), m, n_max, rng=rng, idempotents=k.idempotent_family,
               resolution=res)[0]


# ---------------------------------------------------------------- globalization

@dataclass(eq=False)
class GlobalizedModule:
    kpar: KparAlgebra
    source: AlgModule
    module: AlgModule          # left KG-module on the quotient basis
    quotient: object           # QuotientSpace of KG (x) X (coordinates g * dim X + i)
    iota: np.ndarray           # X -> Lambda(X)
    lam: np.ndarray            # Lambda(X) -> X

    @property
    def dim(self):
        return self.module.dim

    def tag(self, g, x):
        """Class of ``g (x) x`` in quotient coordinates."""
        F = self.kpar.field
        d = self.source.dim
        v = F.zeros(self.quotient.ambient_dim)
        v[g * d:(g + 1) * d] = x
        return F.dot(self.quotient.projection, v)


def _relation_span(k, x):
    F, G = k.field, k.group
    d = x.dim
    n = G.order
    cols = []
    for h in range(n):
        bh = x.action[k.bracket[h]]
        eh = x.action[k.e[G.inv(h)]]
        for g in range(n):
            block = F.zeros((n * d, d))
            block[g * d:(g + 1) * d] = bh
            gh = G.mul(g, h)
            block[gh * d:(gh + 1) * d] = F.reduce(block[gh * d:(gh + 1) * d] - eh)
            cols.append(block)
    if d == 0:
        return Subspace.zero(F, 0)
    return image(F, np.concatenate(cols, axis=1))


def _perm_action(F, G, d):
    n = G.order
    act = F.zeros((n, n * d, n * d))
    for h in range(n):
        for g in range(n):
            hg = G.mul(h, g)
            for i in range(d):
                act[h, hg * d + i, g * d + i] = F.one
    return act


def globalize(k, x):
    """``Lambda(X) = (KG (x) X) / <g (x) [h]x - gh (x) e_{h^-1} x>`` with ``iota`` and ``lambda``."""
    F, G = k.field, k.group
    d, n = x.dim, G.order
    rel = _relation_span(k, x)
    q = quotient_by(rel)
    perm = _perm_action(F, G, d)
    if rel.dim and not rel.contains(np.transpose(F.dot(perm, rel.basis.T), (0, 2, 1)).reshape(-1, n * d)):
        raise ArithmeticError("relation span is not G-stable")
    act = F.dot(F.dot(q.projection, perm), q.section)
    kg = group_algebra(F, G)
    mod = AlgModule(kg, np.ascontiguousarray(act), "left")
    amb_iota = F.zeros((n * d, d))
    amb_iota[G.identity * d:(G.identity + 1) * d] = F.eye(d)
    iota = F.dot(q.projection, amb_iota)
    amb_lam = np.concatenate([x.action[k.bracket[g]] for g in range(n)], axis=1) if d else F.zeros((0, 0))
    if rel.dim and not F.is_zero(F.dot(amb_lam, rel.basis.T)):
        raise ArithmeticError("lambda does not vanish on the relations")
    lam = F.dot(amb_lam, q.section) if d else F.zeros((0, q.dim))
    return GlobalizedModule(k, x, mod, q, iota, lam)


def is_module_map(x, y, f):
    """``True`` if ``f: x -> y`` commutes with every basis element's action."""
    F = x.field
    if f.size == 0:
        return True
    return bool(np.all(F.dot(y.action, f) == F.dot(f, x.action)))


def lambda_map(gx, gy, f):
    """``Lambda(f): Lambda(X) -> Lambda(Y)``, ``g (x) x -> g (x) f(x)``."""
    k = gx.kpar
    F, n = k.field, k.group.order
    amb = np.kron(F.eye(n), f)
    rel = gx.quotient.sub
    if rel.dim and gy.dim and not F.is_zero(F.dot(F.dot(gy.quotient.projection, amb), rel.basis.T)):
        raise ArithmeticError("induced map does not respect the globalization relations")
    if gy.dim == 0 or gx.dim == 0:
        return F.zeros((gy.dim, gx.dim))
    return F.dot(F.dot(gy.quotient.projection, amb), gx.quotient.section)


def exactness_check(k, sub, mid, quot, i, p):
    """Globalize ``0 -> sub -i-> mid -p-> quot -> 0`` and compare dimensions and ranks."""
    F = k.field
    if not (is_module_map(sub, mid, i) and is_module_map(mid, quot, p)):
        raise ValueError("maps are not K_par G-linear")
    if rank(F, i) != sub.dim or rank(F, p) != quot.dim or not F.is_zero(F.dot(p, i)) \
            or mid.dim != sub.dim + quot.dim:
        raise ValueError("sequence is not short exact")
    gs, gm, gq = globalize(k, sub), globalize(k, mid), globalize(k, quot)
    li, lp = lambda_map(gs, gm, i), lambda_map(gm, gq, p)
    ri = rank(F, li) if li.size else 0
    rp = rank(F, lp) if lp.size else 0
    composes = F.is_zero(F.dot(lp, li)) if li.size and lp.size else True
    return {
        "dims": (gs.dim, gm.dim, gq.dim),
        "additive": gm.dim == gs.dim + gq.dim,
        "composes_to_zero": bool(composes),
        "ranks": (ri, rp),
        "exact": bool(composes) and ri == gs.dim and rp == gq.dim and gm.dim == gs.dim + gq.dim,
    }


def zero_orbit_check(glob):
    """Dimension of ``{z : lambda(g z) = 0 for all g}``; zero when no nonzero element has a zero orbit."""
    F = glob.kpar.field
    if glob.dim == 0:
        return 0
    stacked = np.concatenate([F.dot(glob.lam, glob.module.action[g]) for g in range(glob.kpar.group.order)])
    if stacked.shape[0] == 0:
        return glob.dim
    return kernel_basis(F, stacked).dim


def check_module_grading(k, x, labels):
    """``None`` if ``[h] X_s`` lies in ``X_{h s h^-1}`` for all ``h``, basis ``s``; else ``(h, i)``."""
    G = k.group
    for h in range(G.order):
        m = x.action[k.bracket[h]]
        for i in range(x.dim):
            target = G.conj(h, labels[i])
            for r in np.flatnonzero(m[:, i] != 0):
                if labels[r] != target:
                    return (h, i)
    return None


def lambda_grading(k, glob, labels):
    """Components ``Lambda(X)_g`` as subspaces of the quotient, one per group element."""
    F, G = k.field, k.group
    bad = check_module_grading(k, glob.source, labels)
    if bad is not None:
        h, i = bad
        raise ValueError(f"grading not compatible: [{G.names[h]}] moves basis vector {i} out of degree")
    d = glob.source.dim
    comps = {}
    for g in range(G.order):
        coords = [h * d + i for h in range(G.order) for i in range(d) if G.conj(h, labels[i]) == g]
        if not coords:
            comps[g] = Subspace.zero(F, glob.dim)
            continue
        comps[g] = image(F, glob.quotient.projection[:, coords])
    total = sum(c.dim for c in comps.values())
    stacked = [c.basis for c in comps.values() if c.dim]
    full = rank(F, np.concatenate(stacked)) if stacked else 0
    if total != glob.dim or full != glob.dim:
        raise ArithmeticError("Lambda(X) components are not a direct decomposition")
    for h in range(G.order):
        for g, c in comps.items():
            if c.dim and not comps[G.conj(h, g)].contains(F.dot(c.basis, glob.module.action[h].T)):
                raise ArithmeticError("G does not permute the Lambda(X) components")
    return comps


def restrict_module(k, kn, elems, m, sub=None):
    """Restrict a ``K_par G``-module to ``K_par N`` for ``N`` on ``elems`` (``G`` indices);
    optionally onto an ``N``-stable subspace ``sub``."""
    F = k.field
    act = F.zeros((kn.dim, m.dim, m.dim))
    for i, (A, g) in enumerate(kn.elements):
        act[i] = m.action[k.pair_index({elems[a] for a in A}, elems[g])]
    res = AlgModule(kn.algebra, act, "left")
    if sub is None:
        return res
    return submodule(res, sub)


def psi_embedding(k, elems, m, sub):
    """Matrix of ``Psi : Lambda_N(V) -> Lambda_G(M)``, ``V = sub`` inside ``m``.

    Raises ``ValueError`` with a witness when ``V`` is not stable under ``[n]``.
    """
    F, G = k.field, k.group
    for nn in elems:
        moved = F.dot(sub.basis, m.action[k.bracket[nn]].T)
        if sub.dim and not sub.contains(moved):
            bad = [r for r in range(sub.dim) if not sub.contains(moved[r])][0]
            raise ValueError(f"subspace not stable under [{G.names[nn]}]: basis vector {bad}")
    N, _ = subgroup(G, elems)
    kn = build_kpar(F, N)
    v = restrict_module(k, kn, elems, m, sub)
    gn = globalize(kn, v)
    gg = globalize(k, m)
    d, dv = m.dim, v.dim
    amb = F.zeros((G.order * d, N.order * dv))
    for a, s in enumerate(elems):
        amb[s * d:(s + 1) * d, a * dv:(a + 1) * dv] = sub.basis.T
    if gn.quotient.sub.dim:
        moved = F.dot(F.dot(gg.quotient.projection, amb), gn.quotient.sub.basis.T)
        if not F.is_zero(moved):
            raise ArithmeticError("Psi is not well defined")
    psi = F.dot(F.dot(gg.quotient.projection, amb), gn.quotient.section)
    for a, s in enumerate(elems):
        if not np.all(F.dot(psi, gn.module.action[a]) == F.dot(gg.module.action[s], psi)):
            raise ArithmeticError("Psi is not N-equivariant")
    return psi, gn, gg


def conj_class_reduction(k, x, labels, g, p_max, rng=None):
    """Compare ``H^par(G, X_gbar)`` with ``H(C_g, Lambda(X_gbar)_g)`` and, under the
    spanning condition, with ``H^par(C_g, X_g)``."""
    F, G = k.field, k.group
    cls = sorted({G.conj(h, g) for h in range(G.order)})
    coords = [i for i in range(x.dim) if labels[i] in cls]
    xbar = submodule(x, Subspace.coordinate(F, x.dim, coords))
    lab_bar = [labels[i] for i in coords]
    par = partial_homology(k, xbar, p_max)

    glob = globalize(k, xbar)
    comps = lambda_grading(k, glob, lab_bar)
    cent = G.centralizer(g)
    C, _ = subgroup(G, cent)
    kc = group_algebra(F, C)
    lam_g = comps[g]
    restricted = AlgModule(kc, np.ascontiguousarray(glob.module.action[cent]), "left")
    lam_mod = submodule(restricted, lam_g)
    glob_dims = group_homology(C, lam_mod, p_max)

    xg = [j for j, i in enumerate(coords) if labels[i] == g]
    span = F.zeros((0, xbar.dim))
    for h in range(G.order):
        blk = xbar.action[k.bracket[h]][:, xg]
        span = np.concatenate([span, blk.T])
    spanning = image(F, span.T).dim == xbar.dim if xbar.dim else True
    cent_dims = None
    if spanning:
        kc_par = build_kpar(F, C)
        v = restrict_module(k, kc_par, cent, xbar, Subspace.coordinate(F, xbar.dim, xg))
        cent_dims = partial_homology(kc_par, v, p_max)
    return {
        "class": [G.names[c] for c in cls],
        "partial_dims": par,
        "shapiro_dims": glob_dims,
        "shapiro_equal": par == glob_dims,
        "condition_holds": spanning,
        "reduced_dims": cent_dims,
        "reduced_equal": None if cent_dims is None else cent_dims == par,
        "lambda_dim": glob.dim,
        "lambda_g_dim": lam_g.dim,
    }
