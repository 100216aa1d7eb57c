"""Slow independent reference computations used to pin values in the tests.

Everything here works on plain Python lists with ``fractions.Fraction`` or
integers mod p and shares no code with the package.
"""

import itertools
from fractions import Fraction


def _norm(x, p):
    return Fraction(x) if p == 0 else int(x) % p


def _inv(x, p):
    return 1 / x if p == 0 else pow(int(x), p - 2, p)


def rank(rows, p=0):
    """Rank by textbook Gaussian elimination."""
    m = [[_norm(x, p) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _inv(m[r][c], p)
        m[r] = [_norm(x * inv, p) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [_norm(a - f * b, p) for a, b in zip(m[i], m[r])]
        r += 1
    return r


def bar_hochschild(mult, n_max, p=0):
    """``dim HH_n(A, A)`` for ``n <= n_max`` from the unnormalized bar complex.

    ``mult[i][j]`` is the coefficient list of ``b_i b_j``.
    """
    d = len(mult)

    def prod(x, y):
        out = [0] * d
        for i, a in x.items():
            for j, b in y.items():
                for k, c in enumerate(mult[i][j]):
                    if c:
                        out[k] += a * b * c
        return {k: _norm(v, p) for k, v in enumerate(out) if _norm(v, p) != 0}

    def basis(i):
        return {i: 1}

    tensors = [list(itertools.product(range(d), repeat=n + 1)) for n in range(n_max + 2)]
    index = [{t: i for i, t in enumerate(ts)} for ts in tensors]

    def boundary(n):
        # matrix C_n -> C_{n-1}, rows indexed by C_{n-1}
        rows = [[0] * len(tensors[n]) for _ in tensors[n - 1]]
        for col, t in enumerate(tensors[n]):
            for i in range(n + 1):
                sign = -1 if i % 2 else 1
                if i < n:
                    merged = prod(basis(t[i]), basis(t[i + 1]))
                    for k, c in merged.items():
                        new = t[:i] + (k,) + t[i + 2:]
                        rows[index[n - 1][new]][col] += sign * c
                else:
                    merged = prod(basis(t[n]), basis(t[0]))
                    for k, c in merged.items():
                        new = (k,) + t[1:n]
                        rows[index[n - 1][new]][col] += sign * c
        return rows

    ranks = [0] + [rank(boundary(n), p) for n in range(1, n_max + 2)]
    return [len(tensors[n]) - ranks[n] - ranks[n + 1] for n in range(n_max + 1)]


def exel_closure(table, identity):
    """All pairs ``(A, g)`` reachable as products of the generators ``({1, g}, g)``."""
    n = len(table)
    gens = {(frozenset({identity, g}), g) for g in range(n)}

    def mul(x, y):
        (a, g), (b, h) = x, y
        return (a | frozenset(table[g][c] for c in b), table[g][h])

    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for y in gens:
                z = mul(x, y)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return seen


def canonical_pair_count(order):
    """Number of pairs ``(A, g)`` with ``1, g in A`` in a group of the given order."""
    return 2 ** (order - 1) + (order - 1) * 2 ** (order - 2)


def _stab_homology(table, identity, stab, p, n_max):
    """Textbook ``dim H_n(H, K)`` for the small stabilizers that occur (orders 1, 2, 3, 6)."""
    order = len(stab)
    if order == 1 or (p == 0):
        return [1] + [0] * n_max
    abelian = all(table[a][b] == table[b][a] for a in stab for b in stab)
    if abelian and order in (2, 3):
        return [1] * (n_max + 1) if p == order else [1] + [0] * n_max
    if order == 6 and not abelian:
        if p == 2:
            return [1] * (n_max + 1)
        if p == 3:
            return [1 if n % 4 in (0, 3) else 0 for n in range(n_max + 1)]
        return [1] + [0] * n_max
    raise ValueError("stabilizer outside the tabulated cases")


def partial_homology_of_b(table, identity, p, n_max):
    """``dim H_n^par(G, B)`` as ordinary homology of the permutation module on
    nonempty subsets, summed over orbits with stabilizer coefficients."""
    n = len(table)
    seen = set()
    total = [0] * (n_max + 1)
    for size in range(1, n + 1):
        for sub in itertools.combinations(range(n), size):
            A = frozenset(sub)
            if A in seen:
                continue
            orbit = {frozenset(table[g][a] for a in A) for g in range(n)}
            seen |= orbit
            stab = [g for g in range(n) if frozenset(table[g][a] for a in A) == A]
            for k, v in enumerate(_stab_homology(table, identity, stab, p, n_max)):
                total[k] += v
    return total
