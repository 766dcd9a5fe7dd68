"""Seeded random generators for exact property tests.

Random elements of sigma(lam, ell) are model points transported to a random
basis of g and then conjugated by a Cayley transform of a random element of
the Lie algebra of {P : P^t b P = b, P I_k = I_k P}.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from .exactla import Matrix, SingularMatrixError, rref_kernel
from .extended import ExtendedSpace, GenStructure, PseudoMetric, build_extended
from .twistor import model_point, split_admissibility

__all__ = [
    "random_rational",
    "random_invertible",
    "basis_change",
    "stabilizer_basis",
    "cayley",
    "random_group_element",
    "random_structure",
    "random_involution",
    "admissible_signatures",
]


def random_rational(rng: random.Random, bound=3, denominators=(1, 1, 2, 3), nonzero=False):
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.choice(denominators))
        if x or not nonzero:
            return x


def random_invertible(n: int, rng: random.Random, bound=2) -> Matrix:
    while True:
        P = Matrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])
        if P.det():
            return P


def basis_change(P: Matrix) -> Matrix:
    """Map on E induced by the change of basis of g with matrix ``P``.

    New vector coordinates are ``P^-1 u`` and new covector coordinates
    ``P^t sigma``; this preserves b and sends I_k for G to I_k for P^t G P.
    """
    m = P.nrows
    Z = Matrix.zeros(m)
    return Matrix.block([[P.inverse(), Z], [Z, P.T]])


def _lie_algebra_basis(n, maps):
    cols = []
    basis_mats = []
    for a in range(n):
        for c in range(n):
            X = Matrix.from_sparse(n, n, {(a, c): 1}, one_based=False)
            basis_mats.append(X)
            col = []
            for f in maps:
                for r in f(X).rows:
                    col.extend(r)
            cols.append(col)
    _, ker = rref_kernel(Matrix.from_columns(cols))
    out = []
    for v in ker:
        out.append(Matrix([[v[a * n + c] for c in range(n)] for a in range(n)]))
    return out


def stabilizer_basis(E: ExtendedSpace, commute_with_Ik=True):
    """Basis of {X : X^t b + b X = 0 (and X I_k = I_k X)}."""
    return _stabilizer_basis(E.B, E.Ik if commute_with_Ik else None)


@lru_cache(maxsize=256)
def _stabilizer_basis(B, Ik):
    maps = [lambda X: X.T @ B + B @ X]
    if Ik is not None:
        maps.append(lambda X: X @ Ik - Ik @ X)
    return tuple(_lie_algebra_basis(B.nrows, maps))


def cayley(X: Matrix) -> Matrix:
    n = X.nrows
    I = Matrix.identity(n)
    return (I - X).inverse() @ (I + X)


def random_group_element(E: ExtendedSpace, rng: random.Random, basis=None, commute_with_Ik=True, terms=3):
    """Cayley transform of a sparse random combination of stabilizer generators."""
    basis = stabilizer_basis(E, commute_with_Ik) if basis is None else basis
    n = E.dim
    while True:
        X = Matrix.zeros(n)
        for Y in rng.sample(list(basis), min(terms, len(basis))):
            X = X + Y * Fraction(rng.choice((-1, 1)), rng.choice((1, 2)))
        try:
            return cayley(X)
        except SingularMatrixError:
            continue


def admissible_signatures(lam, ell, m):
    out = []
    for p in range(m + 1):
        q = m - p
        if lam == -1 and m % 2:
            continue
        if not split_admissibility(lam, ell, p, q)[0]:
            continue
        out.append((p, q))
    return out


def random_structure(lam, ell, m, rng: random.Random, signature=None, sig=None, mix_basis=True):
    """Random ``(metric, E, S)`` with S in sigma(lam, ell) for a random metric of dim m."""
    if signature is None:
        choices = admissible_signatures(lam, ell, m)
        if not choices:
            raise ValueError(f"no admissible signature for ({lam},{ell}) with m={m}")
        signature = rng.choice(choices)
    p, q = signature
    if sig is None and (lam, ell) == (1, 1):
        sig = rng.randint(0, m)
    mp = model_point(lam, ell, p, q, sig)
    metric, S = mp.metric, mp.structure
    if mix_basis:
        P = random_invertible(m, rng, bound=1)
        Psi = basis_change(P)
        metric = PseudoMetric(P.T @ metric.G @ P)
        S = GenStructure(Psi @ S.S @ Psi.inverse(), lam, ell)
    E = build_extended(metric, S.k)
    g = random_group_element(E, rng)
    S = GenStructure(g @ S.S @ g.inverse(), lam, ell)
    return metric, E, S


def random_involution(lam, m, rng: random.Random) -> Matrix:
    """A random 2m x 2m matrix with S^2 = lam id and trace 0 (no compatibility)."""
    n = 2 * m
    if lam == 1:
        D = Matrix.diag([1] * m + [-1] * m)
    else:
        j = [[0, -1], [1, 0]]
        rows = []
        for b in range(m):
            for r in j:
                rows.append([0] * (2 * b) + r + [0] * (n - 2 * b - 2))
        D = Matrix(rows)
    P = random_invertible(n, rng, bound=1)
    return P @ D @ P.inverse()
