"""Finite-dimensional algebras by structure constants, their modules, and
derived functors computed from projective resolutions.

Conventions: ``mult[i, j, k]`` is the coefficient of ``b_k`` in ``b_i b_j``.
A module stores one ``dim x dim`` matrix per algebra basis vector. For a
left module ``act(b_i) act(b_j) = act(b_i b_j)``; for a right module the
matrices represent ``x -> x b_i`` so ``rho(b_i) rho(b_j) = rho(b_j b_i)``.
A right ``R``-module is the same data as a left ``R^op``-module.
"""

import random
from dataclasses import dataclass, field, replace
from functools import cached_property

import numpy as np

from .exactla import Subspace, freeze, image, kernel_basis, quotient_by, rank

__all__ = [
    "FinDimAlgebra", "AlgModule", "ChainComplex", "CochainComplex",
    "Summand", "ProjectiveTerm", "Resolution", "InjectiveResolution",
    "check_algebra", "check_module", "enveloping", "bimodule_module",
    "bimodule_actions", "regular_module", "zero_module", "subalgebra",
    "free_cover", "cover_from_generators", "projective_resolution", "injective_resolution",
    "tensor_complex", "hom_complex", "tor", "ext", "ext_via_injective",
    "tensor_product", "hom_space", "homology", "cohomology",
    "homology_with_action", "cohomology_with_action", "submodule",
    "quotient_module", "direct_sum", "is_isomorphic",
]


@dataclass(frozen=True, eq=False)
class FinDimAlgebra:
    field: object
    mult: np.ndarray
    unit: np.ndarray
    names: tuple = None
    # Elements generating the algebra; relation spans only need these.
    generators: tuple = None
    # A complete family of orthogonal idempotents (sums to the unit).
    idempotents: tuple = None

    def __post_init__(self):
        freeze(self.mult)

    @property
    def dim(self):
        return self.mult.shape[0]

    def basis_vector(self, i):
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return v

    def vector(self, coeffs):
        """Vector from a ``{basis index: coefficient}`` mapping."""
        v = self.field.zeros(self.dim)
        for i, c in coeffs.items():
            v[i] = self.field(c)
        return v

    def mul(self, x, y):
        F = self.field
        return F.dot(y, F.tensordot(x, self.mult, 1))

    @cached_property
    def left_regular(self):
        """``L[i]`` is the matrix of ``y -> b_i y``."""
        return freeze(np.ascontiguousarray(np.transpose(self.mult, (0, 2, 1))))

    @cached_property
    def right_regular(self):
        """``R[j]`` is the matrix of ``x -> x b_j``."""
        return freeze(np.ascontiguousarray(np.transpose(self.mult, (1, 2, 0))))

    def left_matrix(self, x):
        return self.field.tensordot(x, self.left_regular, 1)

    def right_matrix(self, y):
        return self.field.tensordot(y, self.right_regular, 1)

    @cached_property
    def opposite(self):
        op = replace(self, mult=np.ascontiguousarray(np.transpose(self.mult, (1, 0, 2))))
        object.__setattr__(op, "opposite", self)
        return op

    def generator_vectors(self):
        if self.generators is not None:
            return list(self.generators)
        return [self.basis_vector(i) for i in range(self.dim)]

    def idempotent_vectors(self):
        if self.idempotents:
            return list(self.idempotents)
        return [self.unit]

    def is_commutative(self):
        return bool(np.all(self.mult == np.transpose(self.mult, (1, 0, 2))))

    def label(self, i):
        return self.names[i] if self.names else f"b{i}"


@dataclass(frozen=True, eq=False)
class AlgModule:
    algebra: FinDimAlgebra
    action: np.ndarray
    side: str = "left"
    # Optional degree label per basis vector (homogeneous basis).
    grading: tuple = None

    def __post_init__(self):
        freeze(self.action)

    @property
    def dim(self):
        return self.action.shape[1]

    @property
    def field(self):
        return self.algebra.field

    def act(self, x):
        return self.field.tensordot(x, self.action, 1)

    def op(self):
        """Same data seen over the opposite algebra, side flipped."""
        side = "right" if self.side == "left" else "left"
        return AlgModule(self.algebra.opposite, self.action, side, self.grading)

    def with_grading(self, labels):
        return replace(self, grading=None if labels is None else tuple(labels))


def zero_module(algebra, side="left"):
    return AlgModule(algebra, algebra.field.zeros((algebra.dim, 0, 0)), side)


def regular_module(algebra, side="left"):
    if side == "left":
        return AlgModule(algebra, algebra.left_regular, "left")
    return AlgModule(algebra, algebra.right_regular, "right")


def subalgebra(algebra, indices):
    """Subalgebra spanned by basis vectors ``indices`` (must be closed)."""
    idx = list(indices)
    rest = [k for k in range(algebra.dim) if k not in set(idx)]
    block = algebra.mult[np.ix_(idx, idx)]
    if rest and np.any(block[:, :, rest] != 0):
        raise ValueError("basis subset is not closed under multiplication")
    if np.any(algebra.unit[rest] != 0):
        raise ValueError("unit does not lie in the subalgebra")
    names = tuple(algebra.names[i] for i in idx) if algebra.names else None
    mult = np.ascontiguousarray(block[:, :, idx])
    return FinDimAlgebra(algebra.field, mult, algebra.unit[idx].copy(), names)


def check_algebra(a):
    """First failing associativity triple ``(i, j, k)``, ``("unit", i)``, or ``None``."""
    F = a.field
    c = a.mult
    lhs = F.tensordot(c, c, ([2], [0]))  # (b_i b_j) b_k
    rhs = np.transpose(F.tensordot(c, c, ([1], [2])), (0, 2, 3, 1))  # b_i (b_j b_k)
    bad = np.argwhere(np.any(lhs != rhs, axis=3))
    if len(bad):
        return tuple(int(t) for t in bad[0])
    for i in range(a.dim):
        e = a.basis_vector(i)
        if np.any(a.mul(a.unit, e) != e) or np.any(a.mul(e, a.unit) != e):
            return ("unit", i)
    return None


def check_module(m):
    """``None`` if ``m`` is a module, else a short description of the failure."""
    F = m.field
    a = m.algebra
    if np.any(m.act(a.unit) != F.eye(m.dim)):
        return "unit does not act as identity"
    prod = F.dot(m.action[:, None], m.action[None, :])
    c = a.mult if m.side == "left" else np.transpose(a.mult, (1, 0, 2))
    expect = F.tensordot(c, m.action, ([2], [0]))
    bad = np.argwhere(np.any(prod != expect, axis=(2, 3)))
    if len(bad):
        i, j = (int(t) for t in bad[0])
        return f"action not multiplicative at basis pair ({i}, {j})"
    return None


# ---------------------------------------------------------------- bimodules

def enveloping(a):
    """``a (x) a^op``; basis ``(i, j) -> i * n + j`` stands for ``b_i (x) b_j``.

    A left module over the result is an ``a``-bimodule with
    ``(b_i (x) b_j) . m = b_i m b_j``.
    """
    F = a.field
    n = a.dim
    c = a.mult
    # (b_i x b_j)(b_k x b_l) = b_i b_k x b_l b_j
    env = F.reduce(np.einsum("ikm,ljr->ijklmr", c, c)).reshape(n * n, n * n, n * n)
    unit = F.reduce(np.outer(a.unit, a.unit)).reshape(-1)
    gens = []
    for g in a.generator_vectors():
        gens.append(F.reduce(np.outer(g, a.unit)).reshape(-1))
        gens.append(F.reduce(np.outer(a.unit, g)).reshape(-1))
    idem = None
    if a.idempotents:
        idem = tuple(F.reduce(np.outer(e, f)).reshape(-1)
                     for e in a.idempotents for f in a.idempotents)
    names = None
    if a.names:
        names = tuple(f"{x}|{y}" for x in a.names for y in a.names)
    return FinDimAlgebra(F, env, unit, names, tuple(gens), idem)


def bimodule_module(env, left, right, grading=None):
    """Left ``env``-module from left/right action stacks of an ``a``-bimodule."""
    F = env.field
    n = left.shape[0]
    act = F.dot(left[:, None], right[None, :]).reshape(n * n, left.shape[1], left.shape[1])
    return AlgModule(env, act, "left", None if grading is None else tuple(grading))


def bimodule_actions(m, base):
    """Inverse of :func:`bimodule_module`: left and right action stacks."""
    F = m.field
    n = base.dim
    act = m.action.reshape(n, n, m.dim, m.dim)
    left = F.tensordot(base.unit, np.transpose(act, (1, 0, 2, 3)), 1)
    right = F.tensordot(base.unit, act, 1)
    return left, right


# ---------------------------------------------------------------- module ops

def submodule(m, sub, check=True):
    """Module structure on an invariant subspace (basis = ``sub`` rows)."""
    F = m.field
    moved = F.dot(m.action, sub.basis.T)  # (n, dim, k)
    if check and sub.dim:
        flat = np.transpose(moved, (0, 2, 1)).reshape(-1, m.dim)
        if not sub.contains(flat):
            raise ValueError("subspace is not invariant under the action")
    act = np.ascontiguousarray(moved[:, list(sub.pivots), :])
    labels = None
    if m.grading is not None:
        labels = tuple(m.grading[c] for c in sub.pivots)
    return AlgModule(m.algebra, act, m.side, labels)


def quotient_module(m, sub):
    """``m / sub`` on the non-pivot coordinate basis, and the quotient space."""
    F = m.field
    q = quotient_by(sub)
    act = F.dot(F.dot(q.projection, m.action), q.section)
    labels = None
    if m.grading is not None:
        labels = tuple(m.grading[c] for c in q.representatives)
    return AlgModule(m.algebra, np.ascontiguousarray(act), m.side, labels), q


def direct_sum(mods):
    F = mods[0].field
    n = mods[0].algebra.dim
    total = sum(x.dim for x in mods)
    act = F.zeros((n, total, total))
    off = 0
    for x in mods:
        act[:, off:off + x.dim, off:off + x.dim] = x.action
        off += x.dim
    labels = None
    if all(x.grading is not None for x in mods):
        labels = tuple(l for x in mods for l in x.grading)
    return AlgModule(mods[0].algebra, act, mods[0].side, labels)


def hom_space(n, m, generators=None):
    """``Hom`` between two same-side modules as a subspace of row-major ``dim m x dim n`` matrices."""
    F = n.field
    gens = generators if generators is not None else n.algebra.generator_vectors()
    dn, dm = n.dim, m.dim
    if dn == 0 or dm == 0:
        return Subspace.zero(F, dn * dm)
    blocks = []
    for g in gens:
        an, am = n.act(g), m.act(g)
        # row-major vec: vec(A f) = (A kron I) vec f, vec(f B) = (I kron B^T) vec f
        blocks.append(F.reduce(np.kron(am, F.eye(dn)) - np.kron(F.eye(dm), an.T)))
    return kernel_basis(F, np.concatenate(blocks))


def is_isomorphic(x, y, attempts=8, seed=0):
    """Exact isomorphism test by searching for an invertible intertwiner.

    Returns ``True``/``False`` when decided; random combinations of a
    ``Hom`` basis are tried, so ``False`` means none of the trials was
    invertible (with a uniform search this is conclusive over large fields
    only; callers compare dimensions as well).
    """
    if x.dim != y.dim:
        return False
    if x.dim == 0:
        return True
    F = x.field
    hom = hom_space(x, y)
    if hom.dim == 0:
        return False
    rng = random.Random(seed)
    for t in range(attempts + hom.dim):
        if t < hom.dim:
            coeffs = F.zeros(hom.dim)
            coeffs[t] = F.one
            if t > 0:
                coeffs[:t] = F.array([rng.randrange(1, 7) for _ in range(t)])
        else:
            coeffs = F.array([rng.randrange(0, 97) for _ in range(hom.dim)])
        f = F.dot(coeffs, hom.basis).reshape(y.dim, x.dim)
        if rank(F, f) == x.dim:
            return True
    return False


def tensor_product(x, n, generators=None):
    """``x (x)_R n`` for a right module ``x`` and left module ``n``, as a quotient of ``x (x)_K n``."""
    F = n.field
    gens = generators if generators is not None else n.algebra.generator_vectors()
    dx, dn = x.dim, n.dim
    cols = []
    for g in gens:
        cols.append(F.reduce(np.kron(x.act(g), F.eye(dn)) - np.kron(F.eye(dx), n.act(g))))
    if not cols or dx * dn == 0:
        return quotient_by(Subspace.zero(F, dx * dn))
    return quotient_by(image(F, np.concatenate(cols, axis=1)))


# ---------------------------------------------------------------- complexes

@dataclass(frozen=True, eq=False)
class ChainComplex:
    """``C_0 <- C_1 <- ...``; ``differentials[k]`` is ``d_k : C_k -> C_{k-1}`` (``k >= 1``)."""

    field: object
    dims: tuple
    differentials: tuple  # index 0 is the zero map C_0 -> 0

    @classmethod
    def build(cls, F, dims, maps):
        dims = tuple(int(d) for d in dims)
        ds = [F.zeros((0, dims[0]))] + [np.asarray(m) for m in maps]
        for k in range(1, len(dims)):
            if ds[k].shape != (dims[k - 1], dims[k]):
                raise ValueError(f"d_{k} has shape {ds[k].shape}, expected {(dims[k - 1], dims[k])}")
        return cls(F, dims, tuple(ds))

    def check(self):
        F = self.field
        for k in range(2, len(self.dims)):
            if not F.is_zero(F.dot(self.differentials[k - 1], self.differentials[k])):
                return k
        return None


@dataclass(frozen=True, eq=False)
class CochainComplex:
    """``C^0 -> C^1 -> ...``; ``coboundaries[k]`` is ``C^k -> C^{k+1}``."""

    field: object
    dims: tuple
    coboundaries: tuple

    @classmethod
    def build(cls, F, dims, maps):
        dims = tuple(int(d) for d in dims)
        ds = [np.asarray(m) for m in maps]
        for k, m in enumerate(ds):
            if m.shape != (dims[k + 1], dims[k]):
                raise ValueError(f"delta^{k} has shape {m.shape}, expected {(dims[k + 1], dims[k])}")
        return cls(F, dims, tuple(ds))

    def check(self):
        F = self.field
        for k in range(1, len(self.coboundaries)):
            if not F.is_zero(F.dot(self.coboundaries[k], self.coboundaries[k - 1])):
                return k
        return None


def homology(c):
    """Dimensions ``dim H_k`` for every degree of the complex."""
    bad = c.check()
    if bad is not None:
        raise ValueError(f"d_{bad - 1} d_{bad} != 0")
    F = c.field
    ranks = [0] + [rank(F, d) for d in c.differentials[1:]] + [0]
    return [c.dims[k] - ranks[k] - ranks[k + 1] for k in range(len(c.dims))]


def cohomology(c):
    bad = c.check()
    if bad is not None:
        raise ValueError(f"delta^{bad} delta^{bad - 1} != 0")
    F = c.field
    ranks = [0] + [rank(F, d) for d in c.coboundaries]
    ranks += [0] * (len(c.dims) + 1 - len(ranks))
    return [c.dims[k] - ranks[k + 1] - ranks[k] for k in range(len(c.dims))]


def _subquotient_module(F, dim, incoming, outgoing, actions, labels, aux):
    """Module ``ker(outgoing) / im(incoming)`` with the induced action."""
    z = Subspace.full(F, dim) if outgoing is None or outgoing.shape[0] == 0 else kernel_basis(F, outgoing)
    if incoming is None or incoming.shape[1] == 0:
        bz = Subspace.zero(F, z.dim)
    else:
        bd = image(F, incoming)
        bz = Subspace.span(F, z.coords(bd.basis), z.dim)
    q = quotient_by(bz)
    free = q.representatives
    reps = z.basis[free]
    if actions is None:
        act = F.zeros((aux.dim, len(free), len(free)))
    else:
        moved = F.dot(actions, reps.T)  # (n, dim, h)
        act = F.dot(q.projection, moved[:, list(z.pivots), :])
    out_labels = None
    if labels is not None:
        out_labels = tuple(labels[z.pivots[i]] for i in free)
    return AlgModule(aux, np.ascontiguousarray(act), "left", out_labels), reps


def _check_equivariant(F, d, src_act, dst_act):
    if src_act is None or d.size == 0:
        return True
    lhs = F.dot(d, src_act)
    rhs = F.dot(dst_act, d)
    return bool(np.all(lhs == rhs))


def homology_with_action(c, actions, aux, labels=None):
    """Homology of a complex of ``aux``-modules.

    ``actions[k]`` is the ``(aux.dim, dim C_k, dim C_k)`` action stack on
    ``C_k``; each differential must intertwine the actions. ``labels[k]``
    optionally grades ``C_k`` by a homogeneous basis. Returns one
    :class:`AlgModule` per degree.
    """
    F = c.field
    for k in range(1, len(c.dims)):
        if not _check_equivariant(F, c.differentials[k], actions[k], actions[k - 1]):
            raise ValueError(f"d_{k} is not equivariant for the auxiliary action")
    out = []
    for k in range(len(c.dims)):
        outgoing = c.differentials[k] if k > 0 else None
        incoming = c.differentials[k + 1] if k + 1 < len(c.dims) else None
        lab = labels[k] if labels is not None else None
        mod, _ = _subquotient_module(F, c.dims[k], incoming, outgoing, actions[k], lab, aux)
        out.append(mod)
    return out


def cohomology_with_action(c, actions, aux, labels=None):
    F = c.field
    for k, d in enumerate(c.coboundaries):
        if not _check_equivariant(F, d, actions[k], actions[k + 1]):
            raise ValueError(f"delta^{k} is not equivariant for the auxiliary action")
    out = []
    n = len(c.dims)
    for k in range(n):
        outgoing = c.coboundaries[k] if k < len(c.coboundaries) else None
        incoming = c.coboundaries[k - 1] if k > 0 else None
        lab = labels[k] if labels is not None else None
        mod, _ = _subquotient_module(F, c.dims[k], incoming, outgoing, actions[k], lab, aux)
        out.append(mod)
    return out


# ---------------------------------------------------------------- resolutions

@dataclass(frozen=True, eq=False)
class Summand:
    """The projective ``Gamma e`` for an idempotent ``e`` of the resolving algebra."""

    idempotent: int
    degree: object
    rows: np.ndarray      # basis of Gamma e, rows in Gamma coordinates (rref)
    pivots: tuple
    action: np.ndarray    # (dim Gamma, k, k)
    labels: tuple

    @property
    def dim(self):
        return self.rows.shape[0]


def _make_summand(algebra, idem_index, idem, degree, grading_hook):
    F = algebra.field
    spans = F.tensordot(idem, algebra.mult, ([0], [1]))  # row i = b_i e
    sub = Subspace.span(F, spans, algebra.dim)
    moved = F.dot(algebra.left_regular, sub.basis.T)
    act = np.ascontiguousarray(moved[:, list(sub.pivots), :])
    labels = None
    if grading_hook is not None:
        coord = grading_hook(degree)
        labels = tuple(coord[c] for c in sub.pivots)
    return Summand(idem_index, degree, sub.basis, sub.pivots, act, labels)


@dataclass(eq=False)
class ProjectiveTerm:
    algebra: FinDimAlgebra
    summands: list
    module: AlgModule
    # components[c][t]: Gamma-vector phi with d(e_c) = sum_t phi e_t, or None
    components: list = field(default_factory=list)

    @property
    def dim(self):
        return self.module.dim

    @cached_property
    def offsets(self):
        out, off = [], 0
        for s in self.summands:
            out.append(off)
            off += s.dim
        return out

    def split(self, v):
        """Cut a vector in this term's coordinates into per-summand Gamma elements."""
        F = self.algebra.field
        parts = []
        for s, off in zip(self.summands, self.offsets):
            block = v[off:off + s.dim]
            parts.append(None if F.is_zero(block) else F.dot(block, s.rows))
        return parts


def _assemble_term(algebra, summands):
    mods = [AlgModule(algebra, s.action, "left", s.labels) for s in summands]
    mod = direct_sum(mods) if mods else zero_module(algebra)
    return ProjectiveTerm(algebra, list(summands), mod)


@dataclass(eq=False)
class Cover:
    term: ProjectiveTerm
    generators: list       # generator vectors in the covered module's coordinates
    surjection: np.ndarray  # (dim covered, dim term)
    kernel: Subspace       # inside the term
    kernel_module: AlgModule


def free_cover(n, idempotents=None, rng=None, grading_hook=None, _cache=None):
    """Surjection onto ``n`` from a sum of projectives ``Gamma e``.

    ``idempotents`` defaults to the algebra's idempotent family (or just
    the unit, which gives a free cover). Generators are chosen greedily from
    the subspaces ``e n``; with a grading the candidates are homogeneous.
    """
    alg = n.algebra
    F = alg.field
    idem = list(idempotents) if idempotents is not None else alg.idempotent_vectors()
    cache = _cache if _cache is not None else {}
    candidates = []
    for a, e in enumerate(idem):
        img = image(F, n.act(e)) if n.dim else Subspace.zero(F, 0)
        for r in range(img.dim):
            candidates.append((a, img.basis[r]))
    if rng is not None:
        rng.shuffle(candidates)
    current = Subspace.zero(F, n.dim)
    gens = []
    for a, y in candidates:
        if current.dim == n.dim:
            break
        if current.contains(y):
            continue
        cyc = Subspace.span(F, F.dot(n.action, y), n.dim)
        current = current + cyc
        gens.append((a, y))
    return cover_from_generators(n, gens, idem, grading_hook, cache)


def cover_from_generators(n, gens, idempotents, grading_hook=None, _cache=None):
    """Cover of ``n`` by one summand ``Gamma e_a`` per generator ``(a, y)`` with ``y`` in ``e_a n``."""
    alg = n.algebra
    F = alg.field
    cache = _cache if _cache is not None else {}
    summands = []
    cols = []
    for a, y in gens:
        deg = None
        if grading_hook is not None:
            deg = n.grading[int(np.flatnonzero(y != 0)[0])]
        key = (a, deg)
        if key not in cache:
            cache[key] = _make_summand(alg, a, idempotents[a], deg, grading_hook)
        s = cache[key]
        summands.append(s)
        acts = F.tensordot(s.rows, n.action, 1)  # (k, d, d)
        cols.append(F.dot(acts, y).T if s.dim else F.zeros((n.dim, 0)))
    term = _assemble_term(alg, summands)
    surj = np.concatenate(cols, axis=1) if cols else F.zeros((n.dim, 0))
    ker = kernel_basis(F, surj, term.dim)
    kmod = submodule(term.module, ker, check=False)
    return Cover(term, [y for _, y in gens], surj, ker, kmod)


class Resolution:
    """Projective resolution ``... -> P_1 -> P_0 -> N`` built lazily.

    Each ``P_k`` is a sum of projectives ``Gamma e``; ``differentials[k]``
    is ``d_k : P_k -> P_{k-1}`` for ``k >= 1`` and ``augmentation`` maps
    ``P_0`` onto ``N``.
    """

    def __init__(self, module, idempotents=None, rng=None, grading_hook=None):
        self.module = module
        self.algebra = module.algebra
        self.idempotents = (list(idempotents) if idempotents is not None
                            else self.algebra.idempotent_vectors())
        self.rng = rng
        self.grading_hook = grading_hook
        self.terms = []
        self.differentials = [None]
        self.augmentation = None
        self._cache = {}
        self._kernel = None  # (embedding rows in last term, kernel module)

    @property
    def length(self):
        return len(self.terms) - 1

    def extend_to(self, n):
        F = self.algebra.field
        while len(self.terms) <= n:
            if not self.terms:
                cov = free_cover(self.module, self.idempotents, self.rng, self.grading_hook, self._cache)
                self.terms.append(cov.term)
                self.augmentation = cov.surjection
                self._kernel = (cov.kernel, cov.kernel_module)
                continue
            ker, kmod = self._kernel
            prev = self.terms[-1]
            cov = free_cover(kmod, self.idempotents, self.rng, self.grading_hook, self._cache)
            d = F.dot(ker.basis.T, cov.surjection) if ker.dim else F.zeros((prev.dim, cov.term.dim))
            term = cov.term
            comps = []
            for y in cov.generators:
                comps.append(prev.split(F.dot(ker.basis.T, y)))
            term.components = comps
            self.terms.append(term)
            self.differentials.append(d)
            self._kernel = (cov.kernel, cov.kernel_module)
        return self

    def ranks(self):
        return [len(t.summands) for t in self.terms]

    def dims(self):
        return [t.dim for t in self.terms]

    def complex(self):
        F = self.algebra.field
        return ChainComplex.build(F, self.dims(), self.differentials[1:])

    def check(self):
        """``True`` iff ``d d = 0``, the augmentation kills ``im d_1`` and
        the truncated complex is exact in degrees ``1 .. length-1``."""
        F = self.algebra.field
        c = self.complex()
        if c.check() is not None:
            return False
        if len(self.terms) > 1 and not F.is_zero(F.dot(self.augmentation, self.differentials[1])):
            return False
        if rank(F, self.augmentation) != self.module.dim:
            return False
        h = homology(c)
        if len(self.terms) > 1:
            ker_aug = self.terms[0].dim - self.module.dim
            if rank(F, self.differentials[1]) != ker_aug:
                return False
        return all(x == 0 for x in h[1:-1])


def projective_resolution(n, n_max, idempotents=None, rng=None, grading_hook=None):
    res = Resolution(n, idempotents, rng, grading_hook)
    return res.extend_to(n_max + 1)


def _summand_subspaces(res, other):
    F = other.field
    out = {}
    for a, e in enumerate(res.idempotents):
        out[a] = image(F, other.act(e)) if other.dim else Subspace.zero(F, 0)
    return out


def tensor_complex(res, other, top):
    """``other (x)_Gamma P_k`` for ``k <= top``; ``other`` is a right ``Gamma``-module
    (given by its action matrices over the resolving algebra's basis)."""
    F = other.field
    res.extend_to(top)
    images = _summand_subspaces(res, other)
    dims = [sum(images[s.idempotent].dim for s in res.terms[k].summands) for k in range(top + 1)]
    maps = []
    moved_cache = {}
    for k in range(1, top + 1):
        src, dst = res.terms[k], res.terms[k - 1]
        d = F.zeros((dims[k - 1], dims[k]))
        dst_off = _offsets([images[s.idempotent].dim for s in dst.summands])
        col = 0
        for c, sc in enumerate(src.summands):
            oc = images[sc.idempotent]
            if oc.dim == 0:
                continue
            if sc.idempotent not in moved_cache:
                moved_cache[sc.idempotent] = F.dot(other.action, oc.basis.T)  # (n, d, k)
            moved = moved_cache[sc.idempotent]
            for t, phi in enumerate(src.components[c]):
                if phi is None:
                    continue
                ot = images[dst.summands[t].idempotent]
                if ot.dim == 0:
                    continue
                v = F.tensordot(phi, moved, 1)  # (d, k_c)
                d[dst_off[t]:dst_off[t] + ot.dim, col:col + oc.dim] = ot.coords(v.T).T
            col += oc.dim
        maps.append(d)
    return ChainComplex.build(F, dims, maps)


def hom_complex(res, target, top):
    """``Hom_Gamma(P_k, target)`` for ``k <= top`` (target a left ``Gamma``-module)."""
    F = target.field
    res.extend_to(top)
    images = _summand_subspaces(res, target)
    dims = [sum(images[s.idempotent].dim for s in res.terms[k].summands) for k in range(top + 1)]
    maps = []
    moved_cache = {}
    for k in range(top):
        src, nxt = res.terms[k], res.terms[k + 1]
        d = F.zeros((dims[k + 1], dims[k]))
        src_off = _offsets([images[s.idempotent].dim for s in src.summands])
        row = 0
        for c, sc in enumerate(nxt.summands):
            oc = images[sc.idempotent]
            if oc.dim == 0:
                continue
            for t, phi in enumerate(nxt.components[c]):
                if phi is None:
                    continue
                st = src.summands[t]
                ot = images[st.idempotent]
                if ot.dim == 0:
                    continue
                if st.idempotent not in moved_cache:
                    moved_cache[st.idempotent] = F.dot(target.action, ot.basis.T)
                v = F.tensordot(phi, moved_cache[st.idempotent], 1)  # (d, k_t)
                d[row:row + oc.dim, src_off[t]:src_off[t] + ot.dim] = oc.coords(v.T).T
            row += oc.dim
        maps.append(d)
    return CochainComplex.build(F, dims, maps)


def _offsets(sizes):
    out, off = [], 0
    for s in sizes:
        out.append(off)
        off += s
    return out


def tor(x, n, n_max, resolve="auto", rng=None, idempotents=None, resolution=None):
    """``dim Tor_p^R(x, n)`` for ``p <= n_max``; ``x`` right, ``n`` left ``R``-module.

    ``resolve`` picks which argument is resolved ("left" resolves ``n``,
    "right" resolves ``x``). A prebuilt ``resolution`` of the chosen side may
    be passed. Returns ``(dims, complex)``.
    """
    if x.side != "right" or n.side != "left":
        raise ValueError("tor expects a right module and a left module")
    if resolve == "auto":
        resolve = "right" if x.dim <= n.dim else "left"
    if resolve == "left":
        res = resolution or Resolution(n, idempotents, rng)
        other = x
    else:
        res = resolution or Resolution(x.op(), idempotents, rng)
        other = n.op()
    c = tensor_complex(res, other, n_max + 1)
    return homology(c)[:n_max + 1], c


def ext(n, m, n_max, rng=None, idempotents=None, resolution=None):
    """``dim Ext^p_R(n, m)`` for ``p <= n_max`` via a projective resolution of ``n``."""
    res = resolution or Resolution(n, idempotents, rng)
    c = hom_complex(res, m, n_max + 1)
    return cohomology(c)[:n_max + 1], c


@dataclass(eq=False)
class InjectiveResolution:
    """``N -> I^0 -> I^1 -> ...`` with ``I^k`` dual to projective right modules."""

    module: AlgModule
    terms: list
    coboundaries: list
    coaugmentation: np.ndarray

    def complex(self):
        F = self.module.field
        return CochainComplex.build(F, [t.dim for t in self.terms], self.coboundaries)


def injective_resolution(n, n_max, rng=None, idempotents=None):
    """Injective coresolution of a left module, through degree ``n_max + 1``."""
    F = n.field
    dual = AlgModule(n.algebra.opposite, np.ascontiguousarray(np.transpose(n.action, (0, 2, 1))), "left")
    res = Resolution(dual, idempotents, rng).extend_to(n_max + 1)
    terms = []
    for t in res.terms:
        terms.append(AlgModule(n.algebra, np.ascontiguousarray(np.transpose(t.module.action, (0, 2, 1))), "left"))
    cob = [np.ascontiguousarray(res.differentials[k + 1].T) for k in range(len(res.terms) - 1)]
    return InjectiveResolution(n, terms, cob, np.ascontiguousarray(res.augmentation.T))


def ext_via_injective(n, m, n_max, rng=None):
    """``dim Ext^p_R(n, m)`` from an injective coresolution of ``m``."""
    F = n.field
    inj = injective_resolution(m, n_max, rng)
    homs = [hom_space(n, t) for t in inj.terms]
    dims = [h.dim for h in homs]
    maps = []
    for k, d in enumerate(inj.coboundaries):
        src, dst = homs[k], homs[k + 1]
        if src.dim == 0 or dst.dim == 0:
            maps.append(F.zeros((dst.dim, src.dim)))
            continue
        moved = []
        for r in range(src.dim):
            f = src.basis[r].reshape(inj.terms[k].dim, n.dim)
            moved.append(F.dot(d, f).reshape(-1))
        maps.append(dst.coords(np.array(moved)).T)
    c = CochainComplex.build(F, dims, maps)
    return cohomology(c)[:n_max + 1], c
