"""Signature invariant, the C/L-valued forms b_k, and linearised fibre checks.

For k = -1 the pair (E, I_{-1}) is a complex vector space, for k = +1 the
pair (E, I_1) is a module over the Lorentz numbers L.  The scalar ``iota``
(``i`` or ``eps``) acts as I_k.  All L-valued identities are equalities of
QuadScalar entries, so no division in L is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactla import Matrix, QuadScalar, rref_kernel, signature_of_symmetric
from .extended import (
    ClassicalForm,
    ExtendedSpace,
    GenStructure,
    PseudoMetric,
    build_extended,
    build_extremal,
    from_classical,
    verify_algebraic,
)
from .report import Report

__all__ = [
    "TwistorForms",
    "ModelPoint",
    "InadmissibleSignatureError",
    "bk_gram",
    "beta_form",
    "beta_signature",
    "char_condition",
    "null_transport",
    "model_point",
    "orbit_dimension_check",
    "split_admissibility",
    "standard_metric",
]


class InadmissibleSignatureError(ValueError):
    pass


@dataclass
class TwistorForms:
    k: int
    gram: Matrix  # b_k on the real basis of E, QuadScalar entries
    scalar_basis_gram: Matrix  # b_k on the F-basis e_1..e_m of (E, I_k)
    checks: dict = field(default_factory=dict)


def bk_gram(E: ExtendedSpace) -> TwistorForms:
    """Gram of ``b_k(x, y) = b(x, y) + k*iota*b(x, I_k y)``."""
    iota = QuadScalar.unit(E.k)
    BI = E.B @ E.Ik
    n = E.dim
    M = Matrix([[E.B[a, c] + E.k * iota * BI[a, c] for c in range(n)] for a in range(n)])
    checks = {
        "symmetric": M == M.T,
        "iota-linear (first slot)": E.Ik.T @ M == M * iota,
        "iota-linear (second slot)": M @ E.Ik == M * iota,
    }
    if not all(checks.values()):
        raise AssertionError(f"b_k fails: {[k for k, v in checks.items() if not v]}")
    m = E.m
    return TwistorForms(E.k, M, M.submatrix(0, m, 0, m), checks)


def null_transport(metric: PseudoMetric) -> Matrix:
    """Real coordinates ``(x, y)`` of ``x e + y ebar`` in L^m, mapped into E.

    The L-basis is e_1..e_m with eps acting as I_1, so ``a + eps b`` in slot i
    is ``a e_i + b G e_i``; with ``x e + y ebar`` one has a = (x+y)/2,
    b = (y-x)/2.
    """
    m = metric.m
    I, G = Matrix.identity(m), metric.G
    return Matrix.block([[I * "1/2", I * "1/2"], [G * "-1/2", G * "1/2"]])


def beta_form(S: GenStructure, E: ExtendedSpace) -> Matrix:
    """Gram of ``beta_S(x, y) = b(S I_{-1} x, y)``."""
    if E.k != -1:
        raise ValueError("beta_S is defined with I_{-1}")
    return (S.S @ E.Ik).T @ E.B


def beta_signature(S: GenStructure, E: ExtendedSpace) -> int:
    """``sig(S) = n`` where beta_S has signature ``(2n, 2m - 2n)``."""
    if (S.lam, S.ell) != (1, 1):
        raise ValueError("sig is defined for (1,1)-structures only")
    beta = beta_form(S, E)
    if beta != beta.T:
        raise AssertionError("beta_S is not symmetric")
    p, q, z = signature_of_symmetric(beta)
    if z != 0 or p % 2 or q % 2 or p + q != E.dim:
        raise AssertionError(f"beta_S has unexpected signature {(p, q, z)}")
    return p // 2


def char_condition(S: Matrix, lam: int, ell: int, E: ExtendedSpace) -> bool:
    """``b_k(Sx, Sy) == -lambda * conj(b_k(x, y))`` on all basis pairs."""
    if isinstance(S, GenStructure):
        S = S.S
    k = -lam * ell
    if E.k != k:
        raise ValueError(f"need an extended space with k={k}")
    n = E.dim
    if S @ S != Matrix.identity(n) * lam:
        raise ValueError("char_condition presupposes S^2 = lambda id")
    M = bk_gram(E).gram
    return S.T @ M @ S == M.conjugate() * (-lam)


def standard_metric(p: int, q: int) -> PseudoMetric:
    return PseudoMetric.diagonal([1] * p + [-1] * q)


@dataclass
class ModelPoint:
    lam: int
    ell: int
    p: int
    q: int
    model_matrix: Matrix  # S in the coordinates it was defined in
    transport: Matrix  # columns: model coordinates expressed in E
    structure: GenStructure  # S in standard coordinates of E
    metric: PseudoMetric
    description: str
    sig: int | None = None

    @property
    def extended(self) -> ExtendedSpace:
        return build_extended(self.metric, self.structure.k)


def _swap(m):
    Z, I = Matrix.zeros(m), Matrix.identity(m)
    return Matrix.block([[Z, I], [I, Z]])


def model_point(lam: int, ell: int, p: int, q: int, sig: int | None = None) -> ModelPoint:
    """A base point of sigma(lam, ell) for the metric diag(I_p, -I_q).

    (1,-1): conjugation of L^m in null coordinates.
    (-1,1): ``x e + y ebar -> r(y) e - r(x) ebar`` with r swapping halves (p = q).
    (1,1):  R from a diagonal product structure with ``sig(R) = sig``.
    (-1,-1): block sums of pseudo-Kahler and anti-Hermitian planes (m even).
    """
    m = p + q
    if m < 1 or p < 0 or q < 0:
        raise InadmissibleSignatureError("need p, q >= 0 and p + q >= 1")
    metric = standard_metric(p, q)
    n2 = 2 * m
    if (lam, ell) == (1, -1):
        Phi = null_transport(metric)
        Sn = _swap(m)
        S = Phi @ Sn @ Phi.inverse()
        desc = "conjugation x e + y ebar -> y e + x ebar of L^m"
        return ModelPoint(lam, ell, p, q, Sn, Phi, GenStructure(S, lam, ell), metric, desc)
    if (lam, ell) == (-1, 1):
        ok, reason = split_admissibility(lam, ell, p, q)
        if not ok:
            raise InadmissibleSignatureError(reason)
        Phi = null_transport(metric)
        r = _swap(p)
        Z = Matrix.zeros(m)
        Sn = Matrix.block([[Z, r], [-r, Z]])
        S = Phi @ Sn @ Phi.inverse()
        desc = "x e + y ebar -> r(y) e - r(x) ebar, r swapping the two halves"
        return ModelPoint(lam, ell, p, q, Sn, Phi, GenStructure(S, lam, ell), metric, desc)
    if (lam, ell) == (1, 1):
        n = (m + 1) // 2 if sig is None else sig
        if not 0 <= n <= m:
            raise InadmissibleSignatureError(f"sig must lie in [0, {m}]")
        # beta_R = -(h + h) with h = g(r., .), so sig(R) = p_- + q_+
        p_minus = min(n, p)
        q_plus = n - p_minus
        if q_plus > q:
            raise InadmissibleSignatureError(f"sig {n} unreachable for signature ({p},{q})")
        diag = [-1] * p_minus + [1] * (p - p_minus) + [1] * q_plus + [-1] * (q - q_plus)
        r = Matrix.diag(diag)
        S = build_extremal("R", r, 1, 1, metric)
        desc = f"R from the product structure r = diag{tuple(diag)}"
        return ModelPoint(lam, ell, p, q, S.S, Matrix.identity(n2), S, metric, desc, sig=n)
    if (lam, ell) == (-1, -1):
        if m % 2:
            raise InadmissibleSignatureError("generalized complex structures need even m")
        blocks = []  # (gram, A, B) planes
        pp, qq = p, q
        if pp % 2:
            G2 = Matrix.diag([1, -1])
            blocks.append((G2, Matrix([[0, -1], [1, 0]]), Matrix.zeros(2)))
            pp, qq = pp - 1, qq - 1
        j = Matrix([[0, -1], [1, 0]])
        blocks += [(Matrix.identity(2), Matrix.zeros(2), j)] * (pp // 2)
        blocks += [(Matrix.identity(2) * -1, Matrix.zeros(2), j)] * (qq // 2)
        G = _block_diag([b[0] for b in blocks])
        A = _block_diag([b[1] for b in blocks])
        B = _block_diag([b[2] for b in blocks])
        metric = PseudoMetric(G)
        S = from_classical(ClassicalForm(A, B), -1, -1, metric)
        desc = "block sum of anti-Hermitian (1,1) planes and pseudo-Kahler definite planes"
        return ModelPoint(lam, ell, p, q, S.S, Matrix.identity(n2), S, metric, desc)
    raise ValueError("lambda and ell must be +-1")


def _block_diag(mats):
    n = sum(M.nrows for M in mats)
    rows = []
    off = 0
    for M in mats:
        for r in M.rows:
            rows.append([0] * off + list(r) + [0] * (n - off - M.ncols))
        off += M.ncols
    return Matrix(rows, n)


def _solution_dim(n, maps):
    """Dimension of {X in gl(n) : f(X) = 0 for all f in maps}."""
    cols = []
    for a in range(n):
        for c in range(n):
            X = Matrix.from_sparse(n, n, {(a, c): 1}, one_based=False)
            col = []
            for f in maps:
                for r in f(X).rows:
                    col.extend(r)
            cols.append(col)
    rk, ker = rref_kernel(Matrix.from_columns(cols))
    return len(ker)


def orbit_dimension_check(mp: ModelPoint, E: ExtendedSpace | None = None) -> Report:
    """Compare the tangent space of sigma(lam, ell) at S with the tangent of the group orbit.

    The group is {P : P^t b P = b, P I_k = I_k P}; its orbit through S has
    dimension dim(group) - dim(centralizer of S).
    """
    E = mp.extended if E is None else E
    S, B, Ik = mp.structure.S, E.B, E.Ik
    n = E.dim
    m = E.m
    b_skew = lambda X: X.T @ B + B @ X  # noqa: E731
    tangent = _solution_dim(n, [lambda X: X @ S + S @ X, b_skew, lambda X: X @ Ik + Ik @ X])
    group = _solution_dim(n, [lambda X: X @ Ik - Ik @ X, b_skew])
    centralizer = _solution_dim(n, [lambda X: X @ Ik - Ik @ X, b_skew, lambda X: X @ S - S @ X])
    orbit = group - centralizer
    table_group = m * (m - 1)  # O(m,C) and O(p,q)xO(p,q) both have this real dimension
    table_isotropy = m * (m - 1) // 2  # O(n,m-n), O(p,q), O(p,p), SO*(m)
    rep = Report(
        f"linearised fibre ({mp.lam},{mp.ell}) at signature ({mp.p},{mp.q})",
        info={
            "constraintTangentDim": tangent,
            "orbitDim": orbit,
            "groupDim": group,
            "centralizerDim": centralizer,
            "tableGroupDim": table_group,
            "tableIsotropyDim": table_isotropy,
        },
    )
    rep.add("tangent = orbit", tangent == orbit, f"{tangent} vs {orbit}")
    rep.add("group dim matches table", group == table_group, f"{group} vs {table_group}")
    rep.add("isotropy dim matches table", centralizer == table_isotropy, f"{centralizer} vs {table_isotropy}")
    rep.extend(verify_algebraic(mp.structure, E), "model point ")
    return rep


def split_admissibility(lam: int, ell: int, p: int, q: int):
    """Necessary signature condition from the anti-isometry argument for (-1,1).

    Returns ``(ok, reason)``.  Only (-1,1) is constrained: there S is an
    anti-isometry of ``h = Im(b_1)``, which has signature (2p, 2q).
    """
    if (lam, ell) != (-1, 1):
        return True, "no signature constraint at this level"
    E = build_extended(standard_metric(p, q), 1)
    h = E.B @ E.Ik  # imaginary part of the b_1 Gram
    hp, hq, hz = signature_of_symmetric(h)
    assert (hp, hq, hz) == (2 * p, 2 * q, 0)
    if hp != hq:
        return False, (f"Im(b_1) has signature ({hp},{hq}); an anti-isometry needs it split, "
                       f"so g must be split (p = q), got ({p},{q})")
    return True, f"Im(b_1) has split signature ({hp},{hq})"
