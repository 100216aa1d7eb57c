"""Small graded algebras built from scratch for property tests."""

from hochpar.epsgraded import GradedAlgebra
from hochpar.findim import FinDimAlgebra


def matrix_algebra(F, G, d):
    """``M_n(K)`` with ``deg e_ij = d_i d_j^-1``; basis index ``i * n + j``."""
    n = len(d)
    mult = F.zeros((n * n, n * n, n * n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                mult[i * n + j, j * n + k, i * n + k] = F.one
    unit = F.zeros(n * n)
    for i in range(n):
        unit[i * n + i] = F.one
    names = tuple(f"e{i + 1}{j + 1}" for i in range(n) for j in range(n))
    idem = tuple(F.array([1 if t == i * n + i else 0 for t in range(n * n)]) for i in range(n))
    alg = FinDimAlgebra(F, mult, unit, names, None, idem)
    degrees = tuple(G.mul(d[i], G.inv(d[j])) for i in range(n) for j in range(n))
    return GradedAlgebra(alg, G, degrees, f"M{n}")


def matrix_local_unit(F, G, d, g):
    """``1_g = sum of e_ii`` over rows ``i`` with some ``j`` of degree ``d_i d_j^-1 = g``."""
    n = len(d)
    v = F.zeros(n * n)
    for i in range(n):
        if any(G.mul(d[i], G.inv(d[j])) == g for j in range(n)):
            v[i * n + i] = F.one
    return v
