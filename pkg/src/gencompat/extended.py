"""Generalized (para)complex structures on E = g + g* compatible with a metric.

Coordinates on E are ``(u, sigma)``: the first m entries are the vector part
in the basis ``e_i``, the last m the covector part in the dual basis.  With
this ordering the split form ``b(u+sigma, v+tau) = tau(u) + sigma(v)`` has
Gram matrix ``[[0, I], [I, 0]]`` and ``g_flat`` is the Gram matrix ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exactla import (
    Matrix,
    NotSymmetricError,
    SingularMatrixError,
    rref_kernel,
    signature_of_symmetric,
    to_rational,
)
from .liealg import LieAlgebra, bracket_eval, subalgebra_check
from .report import Report

__all__ = [
    "PseudoMetric",
    "ExtendedSpace",
    "GenStructure",
    "ClassicalForm",
    "EigenBasis",
    "CurveSpec",
    "Extremal",
    "InvolutivityResult",
    "StructureError",
    "ClassicalFormError",
    "CompatibilityError",
    "NotExtremalError",
    "split_form",
    "build_extended",
    "verify_algebraic",
    "to_classical",
    "from_classical",
    "classical_identities",
    "build_extremal",
    "extract_extremal",
    "nijenhuis_integrability",
    "nijenhuis_values",
    "eigenspace_involutivity",
    "curve_point",
    "weierstrass",
]


class StructureError(ValueError):
    pass


class ClassicalFormError(StructureError):
    pass


class CompatibilityError(StructureError):
    pass


class NotExtremalError(StructureError):
    pass


def _pm1(x, name):
    if x not in (-1, 1):
        raise ValueError(f"{name} must be -1 or +1, got {x!r}")
    return int(x)


@dataclass(frozen=True)
class PseudoMetric:
    """Nondegenerate symmetric Gram matrix ``G`` with cached inverse and signature."""

    G: Matrix
    Ginv: Matrix = field(init=False, repr=False)
    p: int = field(init=False)
    q: int = field(init=False)

    def __post_init__(self):
        G = self.G if isinstance(self.G, Matrix) else Matrix(self.G)
        if not G.is_symmetric():
            raise NotSymmetricError("metric Gram matrix must be symmetric")
        try:
            Ginv = G.inverse()
        except SingularMatrixError:
            raise SingularMatrixError("metric is degenerate (det G = 0)") from None
        p, q, z = signature_of_symmetric(G)
        assert z == 0
        object.__setattr__(self, "G", G)
        object.__setattr__(self, "Ginv", Ginv)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def m(self):
        return self.G.nrows

    @property
    def signature(self):
        return (self.p, self.q)

    @classmethod
    def diagonal(cls, entries):
        return cls(Matrix.diag(entries))


def split_form(m: int) -> Matrix:
    Z, I = Matrix.zeros(m), Matrix.identity(m)
    return Matrix.block([[Z, I], [I, Z]])


@dataclass(frozen=True)
class ExtendedSpace:
    metric: PseudoMetric
    k: int
    B: Matrix
    Ik: Matrix

    @property
    def m(self):
        return self.metric.m

    @property
    def dim(self):
        return 2 * self.metric.m


def build_extended(metric: PseudoMetric, k: int) -> ExtendedSpace:
    """E with its split form and ``I_k = [[0, k G^-1], [G, 0]]``."""
    k = _pm1(k, "k")
    m = metric.m
    B = split_form(m)
    Ik = Matrix.block([[Matrix.zeros(m), metric.Ginv * k], [metric.G, Matrix.zeros(m)]])
    if Ik @ Ik != Matrix.identity(2 * m) * k:
        raise AssertionError("I_k squared is not k*id")
    if Ik.T @ B != B @ Ik:
        raise AssertionError("I_k is not symmetric for b")
    return ExtendedSpace(metric, k, B, Ik)


@dataclass(frozen=True)
class GenStructure:
    S: Matrix
    lam: int
    ell: int

    def __post_init__(self):
        _pm1(self.lam, "lambda")
        _pm1(self.ell, "ell")
        if not isinstance(self.S, Matrix):
            object.__setattr__(self, "S", Matrix(self.S))
        if not self.S.is_square() or self.S.nrows % 2:
            raise ValueError("S must be a square matrix of even size")

    @property
    def k(self):
        return -self.lam * self.ell

    @property
    def m(self):
        return self.S.nrows // 2

    def blocks(self):
        m = self.m
        S = self.S
        return (S.submatrix(0, m, 0, m), S.submatrix(0, m, m, 2 * m),
                S.submatrix(m, 2 * m, 0, m), S.submatrix(m, 2 * m, m, 2 * m))

    def conjugate_by(self, P: Matrix, Pinv: Matrix | None = None):
        Pinv = P.inverse() if Pinv is None else Pinv
        return GenStructure(P @ self.S @ Pinv, self.lam, self.ell)


def verify_algebraic(S: GenStructure, E: ExtendedSpace) -> Report:
    """Pointwise axioms: S^2 = lambda, trace 0, b-skew, anti-commutes with I_k."""
    if S.m != E.m:
        raise ValueError(f"structure has m={S.m}, extended space has m={E.m}")
    if S.k != E.k:
        raise ValueError(f"structure needs k={S.k}, extended space has k={E.k}")
    M, n = S.S, E.dim
    rep = Report(f"algebraic axioms ({S.lam},{S.ell})", info={"m": E.m, "k": E.k})
    sq = M @ M - Matrix.identity(n) * S.lam
    rep.add("square", sq.is_zero(), "S^2 = lambda id", {"S^2 - lambda id": sq})
    tr = M.trace()
    rep.add("split", tr == 0, "trace S = 0", {"trace": tr})
    sk = M.T @ E.B + E.B @ M
    rep.add("b_skew", sk.is_zero(), "S^t b + b S = 0", {"S^t b + b S": sk})
    ac = M @ E.Ik + E.Ik @ M
    rep.add("anticommutes_Ik", ac.is_zero(), "S I_k + I_k S = 0", {"S I_k + I_k S": ac})
    return rep


@dataclass(frozen=True)
class ClassicalForm:
    A: Matrix
    B: Matrix

    def theta_flat(self, metric: PseudoMetric) -> Matrix:
        return metric.G @ self.B

    def pi_sharp(self, lam, ell, metric: PseudoMetric) -> Matrix:
        return self.B @ metric.Ginv * (lam * ell)


def classical_identities(cf: ClassicalForm, lam, ell, metric: PseudoMetric) -> dict:
    A, B, G = cf.A, cf.B, metric.G
    m = metric.m
    theta = cf.theta_flat(metric)
    pi = cf.pi_sharp(lam, ell, metric)
    return {
        "lambda A^2 + ell B^2 = id": (A @ A) * lam + (B @ B) * ell == Matrix.identity(m),
        "AB = BA": A @ B == B @ A,
        "G A = A^t G": G @ A == A.T @ G,
        "theta skew": theta.T == -theta,
        "pi skew": pi.T == -pi,
    }


def to_classical(S: GenStructure, metric: PseudoMetric) -> ClassicalForm:
    """Read off ``A`` and ``B`` from ``S = [[A, lam ell B G^-1], [G B, -A^t]]``."""
    if S.m != metric.m:
        raise ValueError("dimension mismatch")
    A, P, T, D = S.blocks()
    B = metric.Ginv @ T
    if D != -A.T:
        raise ClassicalFormError("lower-right block is not -A^t")
    if P != B @ metric.Ginv * (S.lam * S.ell):
        raise ClassicalFormError("upper-right block is not lambda*ell*B*G^-1")
    cf = ClassicalForm(A, B)
    bad = [name for name, ok in classical_identities(cf, S.lam, S.ell, metric).items() if not ok]
    if bad:
        raise ClassicalFormError("classical identities fail: " + ", ".join(bad))
    return cf


def from_classical(cf: ClassicalForm, lam, ell, metric: PseudoMetric, check=True) -> GenStructure:
    """Assemble ``S`` from ``A`` and ``B``; ``check=False`` skips the identity gate."""
    lam, ell = _pm1(lam, "lambda"), _pm1(ell, "ell")
    if cf.A.shape != (metric.m, metric.m) or cf.B.shape != (metric.m, metric.m):
        raise ValueError(f"A and B must be {metric.m} x {metric.m}")
    bad = [name for name, ok in classical_identities(cf, lam, ell, metric).items() if not ok]
    if bad and check:
        raise ClassicalFormError("classical identities fail: " + ", ".join(bad))
    S = Matrix.block([[cf.A, cf.pi_sharp(lam, ell, metric)], [cf.theta_flat(metric), -cf.A.T]])
    return GenStructure(S, lam, ell)


def build_extremal(kind: str, data: Matrix, lam, ell, metric: PseudoMetric) -> GenStructure:
    """Block-diagonal ``R = diag(s, -s^t)`` or off-diagonal ``Q = [[0, lam w^-1], [w, 0]]``.

    For ``kind="R"`` ``data`` is ``s``; for ``kind="Q"`` it is ``w = omega_flat``.
    """
    lam, ell = _pm1(lam, "lambda"), _pm1(ell, "ell")
    m = metric.m
    G, Gi = metric.G, metric.Ginv
    Z = Matrix.zeros(m)
    if data.shape != (m, m):
        raise ValueError("data must be m x m")
    if kind == "R":
        s = data
        if s @ s != Matrix.identity(m) * lam:
            raise CompatibilityError("s^2 = lambda id fails")
        if G @ s != s.T @ G:
            raise CompatibilityError("s is not symmetric for g (G s = s^t G fails)")
        S = Matrix.block([[s, Z], [Z, -s.T]])
    elif kind == "Q":
        w = data
        if w.T != -w:
            raise CompatibilityError("omega_flat is not skew")
        try:
            wi = w.inverse()
        except SingularMatrixError:
            raise CompatibilityError("omega is degenerate") from None
        if wi @ G != Gi @ w * ell:
            raise CompatibilityError("omega_flat^-1 G = ell G^-1 omega_flat fails")
        S = Matrix.block([[Z, wi * lam], [w, Z]])
    else:
        raise ValueError(f"kind must be 'R' or 'Q', got {kind!r}")
    return GenStructure(S, lam, ell)


@dataclass
class Extremal:
    kind: str  # "product_or_complex" or "symplectic"
    matrix: Matrix
    report: Report


def extract_extremal(S: GenStructure, metric: PseudoMetric, algebra: LieAlgebra | None = None) -> Extremal:
    """Recover ``s`` (block-diagonal S) or ``omega_flat`` (off-diagonal S) and certify it.

    ``algebra`` is the cotangent algebra T*g; when given, integrability is
    added to the report through the Nijenhuis tensor of S.
    """
    A, P, T, D = S.blocks()
    m = metric.m
    G, Gi = metric.G, metric.Ginv
    I = Matrix.identity(m)
    if P.is_zero() and T.is_zero():
        s = A
        rep = Report(f"({S.lam},0)-structure")
        rep.add("s^2 = lambda id", s @ s == I * S.lam)
        rep.add("G s = s^t G", G @ s == s.T @ G)
        rep.add("lower-right = -s^t", D == -s.T)
        kind, mat = "product_or_complex", s
    elif A.is_zero() and D.is_zero():
        w = T
        rep = Report(f"(0,{S.ell})-structure")
        rep.add("omega skew", w.T == -w)
        try:
            wi = w.inverse()
        except SingularMatrixError:
            raise NotExtremalError("off-diagonal structure with degenerate omega") from None
        rep.add("omega^-1 G = ell G^-1 omega", wi @ G == Gi @ w * S.ell)
        rep.add("upper-right = lambda omega^-1", P == wi * S.lam)
        kind, mat = "symplectic", w
    else:
        raise NotExtremalError("structure is neither block-diagonal nor block-off-diagonal")
    if algebra is not None:
        rep.extend(nijenhuis_integrability(algebra, S))
    return Extremal(kind, mat, rep)


def nijenhuis_values(T: LieAlgebra, S: GenStructure):
    """``{(a, b): N(e_a, e_b)}`` over basis pairs a < b, including zeros."""
    n = T.dim
    if S.S.nrows != n:
        raise ValueError(f"structure acts on dimension {S.S.nrows}, algebra has dimension {n}")
    M = S.S
    cols = M.columns()
    out = {}
    for a, b in combinations(range(n), 2):
        ea, eb = T.basis(a), T.basis(b)
        Sa, Sb = cols[a], cols[b]
        v1 = bracket_eval(T, Sa, Sb)
        v2 = M.apply(bracket_eval(T, Sa, eb))
        v3 = M.apply(bracket_eval(T, ea, Sb))
        v4 = T.consts[a][b]
        out[(a, b)] = tuple(w - x - y + S.lam * z for w, x, y, z in zip(v1, v2, v3, v4))
    return out


def nijenhuis_integrability(T: LieAlgebra, S: GenStructure) -> Report:
    """N(x,y) = [Sx,Sy] - S[Sx,y] - S[x,Sy] + lambda [x,y] on every basis pair."""
    vals = nijenhuis_values(T, S)
    nonzero = {f"{T.labels[a]},{T.labels[b]}": v for (a, b), v in vals.items() if any(v)}
    rep = Report("Nijenhuis tensor", info={"pairs_checked": len(vals), "nonzero_pairs": len(nonzero)})
    rep.add("nijenhuis_vanishes", not nonzero, f"{len(vals)} basis pairs", nonzero)
    return rep


@dataclass
class EigenBasis:
    delta: int
    vectors: list


@dataclass
class InvolutivityResult:
    involutive: bool
    eigenbasis: EigenBasis
    pair: tuple | None = None
    residual: tuple | None = None

    def __bool__(self):
        return self.involutive


def eigenspace_involutivity(T: LieAlgebra, S: GenStructure, delta: int) -> InvolutivityResult:
    """Is ``D(delta) = ker(S - delta id)`` a subalgebra of T?  Paracomplex S only."""
    delta = _pm1(delta, "delta")
    if S.lam != 1:
        raise StructureError("eigenspace involutivity needs real eigenvalues (lambda = +1); "
                             "use nijenhuis_integrability for complex structures")
    n = S.S.nrows
    if S.S @ S.S != Matrix.identity(n):
        raise StructureError("S^2 != id")
    _, vecs = rref_kernel(S.S - Matrix.identity(n) * delta)
    eb = EigenBasis(delta, vecs)
    res = subalgebra_check(T, vecs)
    return InvolutivityResult(res.closed, eb, res.pair, res.residual)


def weierstrass(s):
    """``(cos t, sin t)`` at the rational point ``s = tan(t/2)``."""
    s = to_rational(s)
    d = 1 + s * s
    return (1 - s * s) / d, 2 * s / d


@dataclass(frozen=True)
class CurveSpec:
    R: GenStructure
    Q: GenStructure
    s: Fraction = Fraction(0)


def curve_point(spec: CurveSpec, E: ExtendedSpace | None = None) -> GenStructure:
    """``cos t R + sin t Q`` at the rational parameter ``s = tan(t/2)``."""
    R, Q = spec.R, spec.Q
    if (R.lam, R.ell) != (Q.lam, Q.ell):
        raise StructureError("R and Q must share (lambda, ell)")
    if not (R.S @ Q.S + Q.S @ R.S).is_zero():
        raise StructureError("R and Q do not anti-commute")
    c, sn = weierstrass(spec.s)
    assert c * c + sn * sn == 1
    out = GenStructure(R.S * c + Q.S * sn, R.lam, R.ell)
    if out.S @ out.S != Matrix.identity(out.S.nrows) * out.lam:
        raise StructureError("curve point does not square to lambda id")
    if E is not None:
        rep = verify_algebraic(out, E)
        if not rep.passed:
            raise StructureError(f"curve point fails axioms: {[c.name for c in rep.failures()]}")
    return out
