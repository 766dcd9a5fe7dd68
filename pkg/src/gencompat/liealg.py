"""Lie algebras given by structure constants, Salamon strings and cotangent algebras.

Basis vectors are indexed from 0 internally; labels carry the usual 1-based
names (``e1``, ``e1*``).  A vector is a tuple of Fractions in that basis.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exactla import Matrix, rank, rref, to_rational

__all__ = [
    "LieAlgebra",
    "SalamonParseError",
    "JacobiError",
    "DependentSpanError",
    "SubalgebraResult",
    "from_brackets",
    "parse_salamon",
    "serialize_salamon",
    "jacobi_check",
    "bracket_eval",
    "cotangent_algebra",
    "subalgebra_check",
    "abelian",
    "change_basis",
]


class SalamonParseError(ValueError):
    pass


class JacobiError(ValueError):
    def __init__(self, violations):
        self.violations = violations
        i, j, k, _ = violations[0]
        super().__init__(f"Jacobi identity fails on basis triple ({i + 1},{j + 1},{k + 1})")


class DependentSpanError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """``consts[i][j]`` is the coordinate tuple of ``[e_i, e_j]``."""

    dim: int
    consts: tuple
    labels: tuple = field(default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i + 1}" for i in range(self.dim)))

    def c(self, k, i, j) -> Fraction:
        """Structure constant c^k_{ij} (0-based)."""
        return self.consts[i][j][k]

    def bracket_basis(self, i, j):
        return self.consts[i][j]

    def basis(self, i):
        return tuple(Fraction(int(t == i)) for t in range(self.dim))

    def ad(self, x) -> Matrix:
        """Matrix of ``ad_x`` (columns are ``[x, e_j]``)."""
        return Matrix.from_columns([bracket_eval(self, x, self.basis(j)) for j in range(self.dim)], self.dim)

    def nonzero_brackets(self):
        """``{(i, j): [e_i, e_j]}`` for i < j with nonzero bracket."""
        return {
            (i, j): self.consts[i][j]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
            if any(self.consts[i][j])
        }

    def is_abelian(self):
        return not self.nonzero_brackets()

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.consts == other.consts

    def __hash__(self):
        return hash((self.dim, self.consts))


def _zero_table(m):
    return [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]


def _freeze(table):
    return tuple(tuple(tuple(v) for v in row) for row in table)


def from_brackets(dim, brackets, labels=(), check=True):
    """Build an algebra from ``{(i, j): {k: c}}`` meaning [e_i, e_j] += c e_k (0-based).

    Antisymmetry is filled in and repeated entries accumulate, so giving both
    ``(i, j)`` and ``(j, i)`` adds their contributions.
    """
    table = _zero_table(dim)
    for (i, j), out in brackets.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise IndexError(f"bracket index ({i + 1},{j + 1}) out of range")
        if i == j:
            if any(to_rational(c) for c in out.values()):
                raise ValueError(f"[e{i + 1}, e{i + 1}] must vanish")
            continue
        for k, c in out.items():
            if not 0 <= k < dim:
                raise IndexError(f"output index {k + 1} out of range")
            c = to_rational(c)
            table[i][j][k] += c
            table[j][i][k] -= c
    L = LieAlgebra(dim, _freeze(table), tuple(labels))
    if check:
        bad = jacobi_check(L)
        if bad:
            raise JacobiError(bad)
    return L


def abelian(dim):
    return LieAlgebra(dim, _freeze(_zero_table(dim)))


def change_basis(L: LieAlgebra, P: Matrix) -> LieAlgebra:
    """Structure constants in the basis ``f_j = sum_i P[i, j] e_i`` (P invertible)."""
    m = L.dim
    if P.shape != (m, m):
        raise ValueError(f"P must be {m} x {m}")
    Pinv = P.inverse()
    cols = P.columns()
    table = _zero_table(m)
    for a in range(m):
        for b in range(a + 1, m):
            v = Pinv.apply(bracket_eval(L, cols[a], cols[b]))
            table[a][b] = list(v)
            table[b][a] = [-x for x in v]
    return LieAlgebra(m, _freeze(table))


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(\d)(\d)$")


def parse_salamon(spec: str) -> LieAlgebra:
    """Parse ``"(0,0,12,13,14+23,34+52)"``.

    A term ``jk`` in slot ``i`` sets ``[e_j, e_k] = e_i``; a leading ``-``
    negates it and an optional integer coefficient may precede the pair.
    Descending pairs are accepted (``52`` means ``[e_5, e_2] = e_i``).
    """
    text = spec.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise SalamonParseError(f"expected a parenthesised list, got {spec!r}")
    slots = [s.strip() for s in text[1:-1].split(",")]
    m = len(slots)
    if m > 9:
        raise SalamonParseError("digit-pair notation supports at most 9 generators")
    brackets = {}
    for i, slot in enumerate(slots):
        if slot == "0":
            continue
        if not slot:
            raise SalamonParseError(f"empty slot {i + 1}")
        for raw in re.findall(r"[+-]?[^+-]+", slot.replace(" ", "")):
            mt = _TERM.match(raw)
            if not mt:
                raise SalamonParseError(f"malformed token {raw!r} in slot {i + 1}")
            sign, coef, j, k = mt.groups()
            j, k = int(j), int(k)
            c = Fraction(int(coef) if coef else 1) * (-1 if sign == "-" else 1)
            if not (1 <= j <= m and 1 <= k <= m) or j == k:
                raise SalamonParseError(f"index pair {j}{k} out of range in slot {i + 1}")
            brackets.setdefault((j - 1, k - 1), {})
            brackets[(j - 1, k - 1)][i] = brackets[(j - 1, k - 1)].get(i, 0) + c
    return from_brackets(m, brackets)


def serialize_salamon(L: LieAlgebra) -> str:
    """Inverse of :func:`parse_salamon` (ascending pairs, explicit signs)."""
    if L.dim > 9:
        raise ValueError("digit-pair notation supports at most 9 generators")
    slots = []
    for k in range(L.dim):
        terms = []
        for i, j in combinations(range(L.dim), 2):
            c = L.consts[i][j][k]
            if not c:
                continue
            if c.denominator != 1:
                raise ValueError("non-integral structure constants cannot be written as digit pairs")
            mag = abs(c.numerator)
            coef = "" if mag == 1 else str(mag)
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign}{coef}{i + 1}{j + 1}")
        s = "".join(terms).lstrip("+")
        slots.append(s or "0")
    return "(" + ",".join(slots) + ")"


def bracket_eval(L: LieAlgebra, x, y):
    if len(x) != L.dim or len(y) != L.dim:
        raise ValueError(f"vectors must have length {L.dim}")
    out = [Fraction(0)] * L.dim
    for i, a in enumerate(x):
        if not a:
            continue
        row = L.consts[i]
        for j, b in enumerate(y):
            if not b or i == j:
                continue
            ab = a * b
            for k, c in enumerate(row[j]):
                if c:
                    out[k] += ab * c
    return tuple(out)


def _add(*vs):
    return tuple(sum(t, Fraction(0)) for t in zip(*vs))


def jacobi_check(L: LieAlgebra):
    """Violating triples ``(i, j, k, residual)`` over i<j<k (0-based); empty means valid."""
    bad = []
    e = L.basis
    for i, j, k in combinations(range(L.dim), 3):
        r = _add(
            bracket_eval(L, e(i), L.consts[j][k]),
            bracket_eval(L, e(j), L.consts[k][i]),
            bracket_eval(L, e(k), L.consts[i][j]),
        )
        if any(r):
            bad.append((i, j, k, r))
    return bad


def cotangent_algebra(L: LieAlgebra) -> LieAlgebra:
    """T*g = g semidirect g* with [(x,a),(y,b)] = ([x,y], -b.ad_x + a.ad_y).

    Basis order is (e_1..e_m, e_1*..e_m*).
    """
    bad = jacobi_check(L)
    if bad:
        raise JacobiError(bad)
    m = L.dim
    n = 2 * m
    table = _zero_table(n)
    for i in range(m):
        for j in range(m):
            for k in range(m):
                table[i][j][k] = L.consts[i][j][k]
            # [e_i, e_j*] = -(e_j* o ad_{e_i}) = -sum_l c^j_{il} e_l*
            for l in range(m):
                c = L.consts[i][l][j]
                if c:
                    table[i][m + j][m + l] = -c
                    table[m + j][i][m + l] = c
    labels = tuple(L.labels) + tuple(f"{lab}*" for lab in L.labels)
    T = LieAlgebra(n, _freeze(table), labels)
    bad = jacobi_check(T)
    if bad:
        raise JacobiError(bad)
    return T


@dataclass
class SubalgebraResult:
    closed: bool
    pair: tuple | None = None
    bracket: tuple | None = None
    residual: tuple | None = None

    def __bool__(self):
        return self.closed


def _reduce(red: Matrix, pivots, v):
    """Remainder of ``v`` after eliminating the pivot coordinates of a row-reduced span."""
    v = list(v)
    for r, p in enumerate(pivots):
        f = v[p]
        if f:
            row = red.rows[r]
            v = [a - f * b for a, b in zip(v, row)]
    return tuple(v)


def subalgebra_check(L: LieAlgebra, span) -> SubalgebraResult:
    """Is span(vectors) closed under the bracket?  Witness is the first failing pair."""
    span = [tuple(to_rational(x) for x in v) for v in span]
    if not span:
        return SubalgebraResult(True)
    M = Matrix(span)
    if rank(M) != len(span):
        raise DependentSpanError("span vectors are linearly dependent")
    red, pivots = rref(M)
    for a, b in combinations(range(len(span)), 2):
        br = bracket_eval(L, span[a], span[b])
        res = _reduce(red, pivots, br)
        if any(res):
            return SubalgebraResult(False, (a, b), br, res)
    return SubalgebraResult(True)

