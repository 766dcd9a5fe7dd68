"""Built-in examples: five 6-dimensional nilpotent algebras and the ellipse algebra.

Each entry carries the data exactly as printed (Salamon strings, Gram
matrices, sparse A/B tables, printed cotangent bracket lists) and
``verify_entry`` reproduces every claim made about it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .exactla import Matrix, congruent_gram, rank, same_span, to_rational
from .extended import (
    ClassicalForm,
    CurveSpec,
    NotExtremalError,
    PseudoMetric,
    build_extended,
    build_extremal,
    curve_point,
    eigenspace_involutivity,
    extract_extremal,
    from_classical,
    nijenhuis_integrability,
    verify_algebraic,
    weierstrass,
)
from .liealg import LieAlgebra, cotangent_algebra, from_brackets, jacobi_check, parse_salamon
from .report import Report

__all__ = [
    "CatalogEntry",
    "CATALOG_NAMES",
    "DEFAULT_SAMPLES",
    "catalog_get",
    "catalog_all",
    "parse_cotangent_table",
    "expected_mixed_brackets",
    "ellipse_generators",
    "verify_entry",
]

CATALOG_NAMES = ("g1", "g2", "g3", "g4", "g5", "ellipse")
DEFAULT_SAMPLES = tuple(Fraction(x) for x in ("0", "1", "1/2", "-3", "7/5"))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    metric: PseudoMetric
    lam: int
    ell: int
    salamon: str | None = None
    gram_basis: tuple | None = None  # (C, P): metric given as Gram C in the basis with columns P
    classical: ClassicalForm | None = None
    curves: dict = field(default_factory=dict)  # epsilon -> CurveSpec
    printed_table: dict = field(default_factory=dict)  # (i, j) -> dual vector of [e_i, e_j*]
    expected_signature: tuple = ()
    extremal: bool = True

    @property
    def structure(self):
        if self.classical is None:
            return None
        return from_classical(self.classical, self.lam, self.ell, self.metric)

    @property
    def extended(self):
        return build_extended(self.metric, -self.lam * self.ell)


_DUAL_TERM = re.compile(r"([+-]?)(\d*?)(\d)(\*?)(\d)(\*?)$")


def parse_cotangent_table(text: str, m: int) -> dict:
    """Parse a printed list of mixed brackets such as ``"(25*+56*,5*1,...)"``.

    In slot ``l`` the term ``ab*`` means ``[e_a, e_b*] = e_l*`` and ``a*b``
    means ``[e_a*, e_b] = e_l*``, i.e. ``[e_b, e_a*] = -e_l*``.  Returns
    ``{(i, j): coefficients of [e_i, e_j*] in e_1*..e_m*}`` (0-based).
    """
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"expected a parenthesised list, got {text!r}")
    slots = [s.strip() for s in body[1:-1].split(",")]
    if len(slots) != m:
        raise ValueError(f"expected {m} slots, got {len(slots)}")
    out = {}
    for l, slot in enumerate(slots):
        if slot == "0":
            continue
        for raw in re.findall(r"[+-]?[^+-]+", slot.replace(" ", "")):
            mt = _DUAL_TERM.match(raw)
            if not mt:
                raise ValueError(f"malformed token {raw!r} in slot {l + 1}")
            sign, coef, a, star_a, b, star_b = mt.groups()
            c = Fraction(int(coef) if coef else 1) * (-1 if sign == "-" else 1)
            a, b = int(a) - 1, int(b) - 1
            if star_b and not star_a:
                i, j = a, b
            elif star_a and not star_b:
                i, j, c = b, a, -c
            else:
                raise ValueError(f"token {raw!r} must pair one vector with one covector")
            vec = out.setdefault((i, j), [Fraction(0)] * m)
            vec[l] += c
    return {key: tuple(v) for key, v in out.items() if any(v)}


def expected_mixed_brackets(entries, m: int) -> dict:
    """``[(i, j, l, c), ...]`` meaning ``[e_i, e_j*] = c e_l*`` (1-based) to table form."""
    out = {}
    for i, j, l, c in entries:
        vec = out.setdefault((i - 1, j - 1), [Fraction(0)] * m)
        vec[l - 1] += to_rational(c)
    return {key: tuple(v) for key, v in out.items()}


def _sparse(m, table):
    entries = {}
    for key, v in table.items():
        r, c = (int(t) for t in key.split(","))
        entries[(r, c)] = v
    return Matrix.from_sparse(m, m, entries, one_based=True)


_SALAMON = {
    "g1": "(0,0,12,13,14+23,34+52)",
    "g2": "(0,0,12,13,14,34+52)",
    "g3": "(0,0,0,12,13,14+35)",
    "g4": "(0,0,0,12,23,14+35)",
    "g5": "(0,0,0,0,12,15+34)",
}

_A = {
    "g1": {"1,2": 1, "4,3": 1, "4,4": 1, "5,5": 1, "6,5": 1, "2,1": -1, "3,2": -1, "3,3": -1, "6,6": -1},
    "g2": {"1,1": 1, "3,3": 1, "6,6": 1, "1,2": -1, "2,2": -1, "2,1": 2},
    "g3": {"1,2": -1, "2,1": 1},
    "g4": {"1,1": 1, "1,2": -1, "2,2": -1, "3,3": -1, "6,6": -1, "2,1": 2},
    "g5": {"1,2": 1, "4,3": 1, "2,1": -1, "3,4": -1},
}

_B = {
    "g1": {"3,5": -1, "4,6": -1, "5,2": -1, "6,2": -1, "3,6": 2, "5,3": 2, "6,4": 2, "5,1": 1, "5,4": 4},
    "g2": {"3,6": -1, "4,5": -1, "5,4": 1, "6,3": 2},
    "g3": {"3,6": -1, "4,5": -1, "5,4": 1, "6,3": 1},
    "g4": {"3,6": -1, "4,5": -1, "5,4": 1, "6,3": 2},
    "g5": {"5,6": -1, "6,5": 1},
}

# columns are the printed basis {e4, -4e1+e4, -3e1-e2+e3, -e1+e2+e3, e6, 2e5+e6}
_G1_BASIS = [[0, 0, 0, 1, 0, 0], [-4, 0, 0, 1, 0, 0], [-3, -1, 1, 0, 0, 0],
             [-1, 1, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 2, 1]]

_DIAG = {
    "g1": (4, -4, 2, -2, -2, 2),
    "g2": (-2, 1, 1, 1, 1, "1/2"),
    "g3": (-1, 1, 1, 1, 1, 1),
    "g4": (-2, 1, 2, 1, 1, 1),
    "g5": (-1, 1, -1, 1, 1, 1),
}

_TABLES = {
    "g1": "(23*+34*+45*,3*1+35*+6*5,4*1+5*2+46*,5*1+6*3,26*,0)",
    "g2": "(23*+34*+45*,3*1+6*5,4*1+46*,5*1+6*3,26*,0)",
    "g3": "(24*+35*+46*,4*1,5*1+56*,6*1,6*3,0)",
    "g4": "(24*+46*,4*1+35*,5*2+56*,6*1,6*3,0)",
    "g5": "(25*+56*,5*1,46*,6*3,6*1,0)",
}

_SIGNATURES = {"g1": (3, 3), "g2": (5, 1), "g3": (5, 1), "g4": (5, 1), "g5": (4, 2), "ellipse": (4, 0)}

# [e3,e4] = 2e4, [e4,e2] = 2e1, [e3,e1] = e1, [e2,e3] = e2 (0-based keys)
_ELLIPSE_BRACKETS = {(2, 3): {3: 2}, (3, 1): {0: 2}, (2, 0): {0: 1}, (1, 2): {1: 1}}

_ELLIPSE_TABLE = [
    (1, 1, 3, 1), (2, 1, 4, 2), (2, 2, 3, -1), (3, 1, 1, -1),
    (3, 2, 2, 1), (3, 4, 4, -2), (4, 1, 2, -2), (4, 4, 3, 2),
]

_J = Matrix([[0, -1], [1, 0]])


def _nilpotent_entry(name):
    L = parse_salamon(_SALAMON[name])
    C = Matrix.diag(_DIAG[name])
    gram_basis = None
    if name == "g1":
        P = Matrix.from_columns(_G1_BASIS, 6)
        G = congruent_gram(C, P)
        gram_basis = (C, P)
    else:
        G = C
    metric = PseudoMetric(G)
    cf = ClassicalForm(_sparse(6, _A[name]), _sparse(6, _B[name]))
    return CatalogEntry(
        name=name, algebra=L, metric=metric, lam=-1, ell=-1, salamon=_SALAMON[name],
        gram_basis=gram_basis, classical=cf,
        printed_table=parse_cotangent_table(_TABLES[name], 6),
        expected_signature=_SIGNATURES[name], extremal=False,
    )


def _ellipse_entry():
    L = from_brackets(4, _ELLIPSE_BRACKETS)
    metric = PseudoMetric(Matrix.identity(4))
    r = Matrix.diag([1, 1, -1, -1])
    R = build_extremal("R", r, 1, -1, metric)
    curves = {}
    for eps in (1, -1):
        B_eps = _block2(_J, _J * eps)
        curves[eps] = CurveSpec(R, build_extremal("Q", B_eps, 1, -1, metric))
    return CatalogEntry(
        name="ellipse", algebra=L, metric=metric, lam=1, ell=-1, curves=curves,
        printed_table=expected_mixed_brackets(_ELLIPSE_TABLE, 4),
        expected_signature=_SIGNATURES["ellipse"],
    )


def _block2(X, Y):
    Z = Matrix.zeros(2)
    return Matrix.block([[X, Z], [Z, Y]])


def catalog_get(name: str) -> CatalogEntry:
    if name in _SALAMON:
        return _nilpotent_entry(name)
    if name == "ellipse":
        return _ellipse_entry()
    raise KeyError(f"unknown catalog entry {name!r}; choose from {', '.join(CATALOG_NAMES)}")


def catalog_all():
    return [catalog_get(n) for n in CATALOG_NAMES]


def ellipse_generators(eps: int, delta: int, s) -> list:
    """The four printed spanning vectors of D_eps(delta) at ``s = tan(t/2)``."""
    c, sn = weierstrass(s)
    v = [[Fraction(0)] * 8 for _ in range(4)]
    v[0][0], v[0][5] = -sn, c - delta  # -sin e1 + (cos - delta) e2*
    v[1][1], v[1][4] = sn, c - delta  # sin e2 + (cos - delta) e1*
    v[2][2], v[2][7] = eps * sn, c + delta  # eps sin e3 + (cos + delta) e4*
    v[3][3], v[3][6] = -eps * sn, c + delta  # -eps sin e4 + (cos + delta) e3*
    return [tuple(x) for x in v]


def _mixed_table(T: LieAlgebra, m: int) -> dict:
    """Actual ``[e_i, e_j*]`` for all i, j (dual coordinates and any stray vector part)."""
    return {(i, j): T.consts[i][m + j] for i in range(m) for j in range(m)}


def _check_table(rep: Report, T: LieAlgebra, entry: CatalogEntry):
    m = entry.algebra.dim
    zero = (Fraction(0),) * m
    mismatches = {}
    for (i, j), got in _mixed_table(T, m).items():
        want = (Fraction(0),) * m + entry.printed_table.get((i, j), zero)
        if got != want:
            mismatches[f"[e{i + 1},e{j + 1}*]"] = {"computed": list(got), "printed": list(want)}
    rep.add("cotangent table matches printed list", not mismatches,
            f"{m * m} mixed brackets, {len(entry.printed_table)} nonzero printed", mismatches)


def verify_entry(entry: CatalogEntry, samples=DEFAULT_SAMPLES) -> Report:
    """Reproduce every claim about a catalog entry; returns a pass/fail report."""
    L = entry.algebra
    rep = Report(f"catalog {entry.name}", info={"dim": L.dim, "lambda": entry.lam, "ell": entry.ell})
    bad = jacobi_check(L)
    rep.add("jacobi", not bad, f"{len(bad)} violating triples", {"violations": [list(b[:3]) for b in bad]})
    sig = entry.metric.signature
    rep.add("metric signature", sig == entry.expected_signature, f"{sig} vs expected {entry.expected_signature}")
    if entry.gram_basis is not None:
        C, P = entry.gram_basis
        rep.add("gram in printed basis", P.T @ entry.metric.G @ P == C, "P^t G P = C")
    T = cotangent_algebra(L)
    _check_table(rep, T, entry)
    E = entry.extended
    if entry.classical is not None:
        _verify_classical(rep, entry, T, E)
    for eps, spec in sorted(entry.curves.items(), reverse=True):
        _verify_curve(rep, entry, T, E, eps, spec, samples)
    return rep


def _verify_classical(rep, entry, T, E):
    S = entry.structure
    rep.extend(verify_algebraic(S, E), "S: ")
    nij = nijenhuis_integrability(T, S)
    rep.info["nijenhuis_pairs_checked"] = nij.info["pairs_checked"]
    rep.extend(nij, "S: ")
    Bmat = entry.classical.B
    try:
        extract_extremal(S, entry.metric)
        extremal = True
    except NotExtremalError:
        extremal = False
    rep.add("extremality", extremal == entry.extremal,
            f"{'extremal' if extremal else 'not extremal'}, rank B = {rank(Bmat)}")


def _verify_curve(rep, entry, T, E, eps, spec, samples):
    tag = f"eps={eps:+d}"
    ext_R = extract_extremal(spec.R, entry.metric, T)
    rep.extend(ext_R.report, f"{tag} R extremal: ")
    ext_Q = extract_extremal(spec.Q, entry.metric, T)
    rep.extend(ext_Q.report, f"{tag} Q extremal: ")
    for s in samples:
        s = to_rational(s)
        stag = f"{tag} s={s}"
        S = curve_point(CurveSpec(spec.R, spec.Q, s))
        rep.extend(verify_algebraic(S, E), f"{stag}: ")
        dims = []
        for delta in (1, -1):
            res = eigenspace_involutivity(T, S, delta)
            dim = len(res.eigenbasis.vectors)
            dims.append(dim)
            rep.add(f"{stag}: D({delta:+d}) involutive", res.involutive and dim == 4, f"dim {dim}",
                    {} if res.involutive else {"pair": res.pair, "residual": res.residual})
            gens = ellipse_generators(eps, delta, s)
            grank = rank(Matrix(gens))
            if grank == 4:
                ok = same_span(gens, res.eigenbasis.vectors)
                detail = "printed generators span D"
            else:
                ok = all(S.S.apply(g) == tuple(delta * x for x in g) for g in gens)
                detail = f"printed generators lie in D (rank {grank})"
            rep.add(f"{stag}: D({delta:+d}) printed span", ok, detail)
        nij = nijenhuis_integrability(T, S)
        rep.add(f"{stag}: Nijenhuis vanishes", nij.passed, f"{nij.info['pairs_checked']} basis pairs")
