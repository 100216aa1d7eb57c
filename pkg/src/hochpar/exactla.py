"""Exact dense linear algebra over the rationals and prime fields.

Matrices are plain numpy arrays tagged by a :class:`Field`. Rational
entries are ``gmpy2.mpq`` objects in object arrays; prime-field entries are
``int64`` residues in ``[0, p)``. All linear maps use the column convention:
a map ``V -> W`` is a ``(dim W, dim V)`` array acting on column vectors.
"""

import math
import weakref
from dataclasses import dataclass
from functools import cached_property

import gmpy2
import numpy as np

__all__ = [
    "Field", "QQ", "GF", "parse_field",
    "rref", "row_basis", "rank", "kernel_basis", "image", "solve",
    "Subspace", "QuotientSpace", "quotient_by",
]

_FLOAT_EXACT = 2 ** 53
_INT_SAFE = 2 ** 62
_INT_ELIM = 2 ** 30


def _is_prime(n):
    return n >= 2 and gmpy2.is_prime(n)


class Field:
    """The rationals (``p == 0``) or the prime field GF(p)."""

    def __init__(self, p=0):
        p = int(p)
        if p != 0 and not _is_prime(p):
            raise ValueError(f"GF({p}): {p} is not prime")
        self.p = p

    @property
    def is_rational(self):
        return self.p == 0

    @cached_property
    def dtype(self):
        if self.p == 0 or (self.p - 1) ** 2 >= _INT_SAFE:
            return object
        return np.int64

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p == 0 else f"GF({self.p})"

    def __str__(self):
        return "Q" if self.p == 0 else f"GF:{self.p}"

    # scalars

    def __call__(self, x):
        if self.p == 0:
            if isinstance(x, str):
                return gmpy2.mpq(x.strip())
            return gmpy2.mpq(x)
        if isinstance(x, str):
            num, _, den = x.strip().partition("/")
            value = int(num) % self.p
            if den:
                value = value * self.inv(int(den) % self.p) % self.p
            return value
        if isinstance(x, gmpy2.mpq().__class__):
            return int(x.numerator) * self.inv(int(x.denominator)) % self.p
        return int(x) % self.p

    def inv(self, x):
        if self.p == 0:
            if x == 0:
                raise ZeroDivisionError("inverse of 0")
            return 1 / gmpy2.mpq(x)
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(x, -1, self.p)

    def format(self, x):
        """Canonical text form of a scalar ("3", "-1/2")."""
        if self.p == 0:
            q = gmpy2.mpq(x)
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        return str(int(x) % self.p)

    # arrays

    @cached_property
    def zero(self):
        return gmpy2.mpq(0) if self.p == 0 else 0

    @cached_property
    def one(self):
        return gmpy2.mpq(1) if self.p == 0 else 1

    def zeros(self, shape):
        if self.dtype is object:
            return np.full(shape, self.zero, dtype=object)
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n):
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i] = self.one
        return a

    def array(self, data):
        """Convert nested data (ints, strings, fractions) to a field array."""
        if isinstance(data, np.ndarray) and data.dtype != object and self.dtype is not object:
            return np.asarray(data, dtype=np.int64) % self.p
        raw = np.asarray(data, dtype=object)
        if raw.size == 0:
            return self.zeros(raw.shape)
        flat = [self(x) for x in raw.ravel()]
        out = np.empty(raw.shape, dtype=object)
        out.ravel()[:] = flat
        if self.dtype is object:
            return out
        return out.astype(np.int64)

    def reduce(self, a):
        if self.p == 0:
            return a
        return a % self.p

    def dot(self, a, b):
        """Matrix product (numpy ``matmul`` semantics) reduced into the field."""
        if self.dtype is object:
            fast = _q_product(a, b, np.matmul, a.shape[-1] if a.ndim else 1)
            if fast is not None:
                return fast
            return np.matmul(a, b)
        inner = a.shape[-1] if a.ndim else 1
        bound = max(inner, 1) * (self.p - 1) ** 2
        if bound < _FLOAT_EXACT:
            out = np.matmul(a.astype(np.float64), b.astype(np.float64))
            return np.rint(out).astype(np.int64) % self.p
        if bound < _INT_SAFE:
            return np.matmul(a, b) % self.p
        return np.matmul(a.astype(object), b.astype(object)) % self.p

    def tensordot(self, a, b, axes):
        if self.dtype is object:
            prod = lambda x, y: np.tensordot(x, y, axes=axes)
            fast = _q_product(a, b, prod, _contracted_size(a, axes))
            if fast is not None:
                return fast
            return np.tensordot(a, b, axes=axes)
        bound = max(1, _contracted_size(a, axes)) * (self.p - 1) ** 2
        if bound < _FLOAT_EXACT:
            out = np.tensordot(a.astype(np.float64), b.astype(np.float64), axes=axes)
            return np.rint(out).astype(np.int64) % self.p
        return np.tensordot(a.astype(object), b.astype(object), axes=axes).astype(np.int64) % self.p

    def is_zero(self, a):
        return not np.any(a != 0)


_FROZEN = {}


def freeze(a):
    """Mark ``a`` read-only so its integer form can be cached across products."""
    if isinstance(a, np.ndarray):
        a.flags.writeable = False
    return a


def _scaled_integers(a):
    """``(ints, den, bound)`` with ``a = ints / den``; ``None`` if too large for int64."""
    if a.flags.writeable:
        return _scale(a)
    hit = _FROZEN.get(id(a))
    if hit is not None and hit[0]() is a:
        return hit[1]
    got = _scale(a)
    key = id(a)
    try:
        ref = weakref.ref(a, lambda _r, key=key: _FROZEN.pop(key, None))
    except TypeError:
        return got
    _FROZEN[key] = (ref, got)
    return got


_TO_MPQ = np.frompyfunc(gmpy2.mpq, 1, 1)


def _scale(a):
    # integer-valued arrays: one C-level float cast, checked exactly against ``a``
    try:
        f = a.astype(np.float64)
    except (OverflowError, TypeError):
        f = None
    if f is not None:
        bound = float(np.abs(f).max()) if f.size else 0.0
        if bound < _FLOAT_EXACT and np.array_equal(f, np.rint(f)) and bool(np.all(a == f)):
            return f.astype(np.int64), 1, int(bound)
    flat = a.ravel().tolist()
    if not flat:
        return np.zeros(a.shape, dtype=np.int64), 1, 0
    den = math.lcm(*[int(x.denominator) for x in flat])
    ints = [int(x) for x in flat] if den == 1 else [int(x * den) for x in flat]
    bound = max(map(abs, ints))
    if bound >= _INT_SAFE:
        return None
    return np.array(ints, dtype=np.int64).reshape(a.shape), den, bound


def _q_product(a, b, prod, inner):
    """Exact rational product through integer arithmetic when it cannot overflow."""
    if a.size == 0 or b.size == 0:
        return None
    sa, sb = _scaled_integers(a), _scaled_integers(b)
    if sa is None or sb is None:
        return None
    (ia, da, ba), (ib, db, bb) = sa, sb
    bound = max(inner, 1) * ba * bb
    if bound < _FLOAT_EXACT:
        out = np.rint(prod(ia.astype(np.float64), ib.astype(np.float64))).astype(np.int64)
    elif bound < _INT_SAFE:
        out = prod(ia, ib)
    else:
        return None
    res = _TO_MPQ(out.astype(object))
    if da * db != 1:
        res = res / (da * db)
    return np.asarray(res, dtype=object)


def _contracted_size(a, axes):
    if isinstance(axes, int):
        return int(np.prod(a.shape[a.ndim - axes:])) if axes else 1
    ax = axes[0]
    if isinstance(ax, int):
        ax = [ax]
    return int(np.prod([a.shape[i] for i in ax])) if ax else 1


QQ = Field(0)


def GF(p):
    return Field(p)


def parse_field(text):
    """Parse ``"Q"`` or ``"GF:p"`` (also ``"GF(p)"``)."""
    t = str(text).strip()
    if t.upper() in ("Q", "QQ"):
        return QQ
    for prefix in ("GF:", "GF(", "gf:", "gf("):
        if t.startswith(prefix):
            return Field(int(t[len(prefix):].rstrip(")")))
    raise ValueError(f"unknown field {text!r}; expected Q or GF:p")


# ---------------------------------------------------------------- elimination

def _integer_rows(a):
    """Rows of a rational matrix scaled to int64 (row space unchanged), or ``None``."""
    out = np.empty(a.shape, dtype=np.int64)
    for i, row in enumerate(a.tolist()):
        den = math.lcm(*[int(x.denominator) for x in row]) if row else 1
        ints = [int(x) for x in row] if den == 1 else [int(x * den) for x in row]
        if ints and max(map(abs, ints)) >= _INT_ELIM:
            return None
        out[i] = ints
    return out


def _rref_integer(a):
    """Fraction-free Gauss-Jordan on int64 rows with gcd normalisation.

    Returns ``(rows, pivots)`` with each pivot row still scaled by its lead,
    or ``None`` as soon as an entry could overflow.
    """
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        lead = a[r, c]
        col = a[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            top = max(int(np.abs(a[r]).max()), int(np.abs(a[others]).max()))
            if 2 * top * top >= _INT_SAFE:
                return None
            # whole rows: earlier pivot rows carry entries left of c
            upd = lead * a[others] - np.outer(col[others], a[r])
            g = np.gcd.reduce(upd, axis=1)
            g[g == 0] = 1
            a[others] = upd // g[:, None]
        pivots.append(c)
        r += 1
    return a, pivots


def _rref_rational(a):
    ints = _integer_rows(a)
    if ints is None:
        return None
    got = _rref_integer(ints)
    if got is None:
        return None
    red, pivots = got
    mpq = gmpy2.mpq
    zero = mpq(0)
    for r, c in enumerate(pivots):
        lead = int(red[r, c])
        a[r] = [zero if v == 0 else mpq(v, lead) for v in red[r].tolist()]
    if len(pivots) < a.shape[0]:
        a[len(pivots):] = zero
    return pivots


def _rref_inplace(F, a):
    """Gauss-Jordan elimination on ``a`` (modified in place); returns pivots."""
    if F.p == 0 and a.size:
        pivots = _rref_rational(a)
        if pivots is not None:
            return pivots
    rows, cols = a.shape
    pivots = []
    r = 0
    p = F.p
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c] != 0)
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        lead = a[r, c]
        if lead != 1:
            inv = F.inv(lead)
            a[r, c:] = a[r, c:] * inv
            if p:
                a[r, c:] %= p
        col = a[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col != 0)
        if others.size:
            upd = a[others, c:] - np.outer(col[others], a[r, c:])
            a[others, c:] = upd % p if p else upd
        pivots.append(c)
        r += 1
    return pivots


def rref(F, m):
    """Reduced row-echelon form of ``m`` (same shape) and its pivot columns."""
    a = np.array(m, dtype=F.dtype, copy=True)
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    pivots = _rref_inplace(F, a)
    return a, pivots


def row_basis(F, rows, ncols=None):
    """Canonical (rref, nonzero rows) basis of the row space and its pivots.

    Tall inputs are reduced chunk by chunk so the working matrix never has
    many more rows than columns.
    """
    a = np.asarray(rows, dtype=F.dtype)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else F.zeros((0, ncols or 0))
    n = a.shape[1] if ncols is None else ncols
    if a.shape[0] == 0:
        return F.zeros((0, n)), []
    chunk = max(2 * n, 64)
    if a.shape[0] <= chunk:
        work = a.copy()
        piv = _rref_inplace(F, work)
        return work[:len(piv)], piv
    basis = F.zeros((0, n))
    piv = []
    for start in range(0, a.shape[0], chunk):
        block = a[start:start + chunk]
        if piv:
            block = F.reduce(block - F.dot(block[:, piv], basis))
        keep = np.flatnonzero(np.any(block != 0, axis=1))
        if keep.size == 0:
            continue
        work = np.concatenate([basis, block[keep]])
        piv = _rref_inplace(F, work)
        basis = work[:len(piv)]
        if len(piv) == n:
            break
    return basis, piv


def rank(F, m):
    m = np.asarray(m)
    if m.size == 0:
        return 0
    if m.shape[0] > m.shape[1]:
        m = m.T
    return len(row_basis(F, m)[1])


def kernel_basis(F, m, ncols=None):
    """Subspace ``{x : m @ x = 0}``."""
    m = np.asarray(m, dtype=F.dtype)
    n = m.shape[1] if m.ndim == 2 else ncols
    if m.size == 0:
        return Subspace.full(F, n)
    red, piv = row_basis(F, m)
    free = [c for c in range(n) if c not in set(piv)]
    vecs = F.zeros((len(free), n))
    for k, f in enumerate(free):
        vecs[k, f] = F.one
        for r, c in enumerate(piv):
            vecs[k, c] = -red[r, f]
    return Subspace.span(F, F.reduce(vecs), n)


def image(F, m):
    """Column space of ``m`` as a subspace of the codomain."""
    m = np.asarray(m, dtype=F.dtype)
    return Subspace.span(F, m.T, m.shape[0])


def solve(F, m, b):
    """Some ``x`` with ``m @ x == b``, or ``None`` when ``b`` is not in the image."""
    m = np.asarray(m, dtype=F.dtype)
    b = np.asarray(b, dtype=F.dtype).reshape(-1)
    rows, cols = m.shape
    if b.shape[0] != rows:
        raise ValueError("right-hand side has wrong length")
    aug = np.concatenate([m, b.reshape(-1, 1)], axis=1)
    red, piv = row_basis(F, aug, cols + 1)
    if piv and piv[-1] == cols:
        return None
    x = F.zeros(cols)
    for r, c in enumerate(piv):
        x[c] = red[r, cols]
    return x


# ---------------------------------------------------------------- subspaces

@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of ``F^n`` with a canonical rref basis (rows)."""

    field: Field
    ambient_dim: int
    basis: np.ndarray
    pivots: tuple

    @classmethod
    def span(cls, F, vectors, ambient_dim):
        vecs = np.asarray(vectors, dtype=F.dtype)
        if vecs.size == 0:
            return cls.zero(F, ambient_dim)
        vecs = vecs.reshape(-1, ambient_dim)
        b, piv = row_basis(F, vecs, ambient_dim)
        return cls(F, ambient_dim, b, tuple(piv))

    @classmethod
    def zero(cls, F, n):
        return cls(F, n, F.zeros((0, n)), ())

    @classmethod
    def full(cls, F, n):
        return cls(F, n, F.eye(n), tuple(range(n)))

    @classmethod
    def coordinate(cls, F, n, indices):
        idx = sorted(set(int(i) for i in indices))
        b = F.zeros((len(idx), n))
        for r, c in enumerate(idx):
            b[r, c] = F.one
        return cls(F, n, b, tuple(idx))

    @property
    def dim(self):
        return len(self.pivots)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.pivots == other.pivots
                and bool(np.all(self.basis == other.basis)))

    __hash__ = object.__hash__

    def coords(self, v):
        """Coordinates of vectors (last axis) in this basis; assumes membership."""
        v = np.asarray(v)
        return v[..., list(self.pivots)]

    def residual(self, v):
        """``v`` minus its echelon reduction against the basis (zero iff member)."""
        F = self.field
        v = np.asarray(v, dtype=F.dtype)
        if not self.pivots:
            return v
        return F.reduce(v - F.dot(v[..., list(self.pivots)], self.basis))

    def contains(self, v):
        return self.field.is_zero(self.residual(v))

    def contains_subspace(self, other):
        return other.dim == 0 or self.contains(other.basis)

    def __add__(self, other):
        F = self.field
        return Subspace.span(F, np.concatenate([self.basis, other.basis]), self.ambient_dim)

    def intersect(self, other):
        F = self.field
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(F, self.ambient_dim)
        stacked = np.concatenate([self.basis, other.basis])
        ker = kernel_basis(F, stacked.T)
        combos = ker.basis[:, :self.dim]
        return Subspace.span(F, F.dot(combos, self.basis), self.ambient_dim)

    def image_under(self, m):
        """Image of this subspace under the linear map ``m`` (column convention)."""
        F = self.field
        m = np.asarray(m, dtype=F.dtype)
        if self.dim == 0:
            return Subspace.zero(F, m.shape[0])
        return Subspace.span(F, F.dot(self.basis, m.T), m.shape[0])

    def nonpivots(self):
        pset = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in pset]


@dataclass(frozen=True, eq=False)
class QuotientSpace:
    """``F^n / sub`` with basis the classes of the non-pivot coordinate vectors."""

    sub: Subspace
    projection: np.ndarray
    section: np.ndarray

    @property
    def ambient_dim(self):
        return self.sub.ambient_dim

    @property
    def dim(self):
        return self.projection.shape[0]

    @property
    def representatives(self):
        """Ambient coordinates chosen as quotient basis (the section columns)."""
        return self.sub.nonpivots()


def quotient_by(sub):
    F = sub.field
    n = sub.ambient_dim
    free = sub.nonpivots()
    q = len(free)
    proj = F.zeros((q, n))
    sec = F.zeros((n, q))
    for k, c in enumerate(free):
        proj[k, c] = F.one
        sec[c, k] = F.one
    if sub.dim and q:
        proj[:, list(sub.pivots)] = F.reduce(-sub.basis[:, free].T)
    return QuotientSpace(sub, proj, sec)
