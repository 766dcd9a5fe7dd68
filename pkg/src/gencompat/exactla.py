"""Exact linear algebra over Q and over the quadratic rings Q[iota], iota**2 = kappa.

Scalars are :class:`fractions.Fraction` or :class:`QuadScalar`.  Matrices are
immutable and dense.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "Fraction",
    "QuadScalar",
    "Matrix",
    "ExactLAError",
    "ZeroDivisorError",
    "NotSymmetricError",
    "SingularMatrixError",
    "to_rational",
    "format_rational",
    "quad_arith",
    "rref",
    "rref_kernel",
    "rank",
    "signature_of_symmetric",
    "congruent_gram",
    "span_contains",
    "same_span",
]


class ExactLAError(ValueError):
    pass


class ZeroDivisorError(ExactLAError):
    """Raised when elimination is attempted over a ring with zero divisors."""


class NotSymmetricError(ExactLAError):
    pass


class SingularMatrixError(ExactLAError):
    pass


def to_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point input is refused; pass a string or Fraction")
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class QuadScalar:
    """An element ``re + im*iota`` with ``iota**2 == kappa`` and kappa in {-1, +1}.

    ``kappa = -1`` gives the Gaussian rationals (a field), ``kappa = +1`` the
    Lorentz (split-complex) numbers, which have the null idempotents
    ``e = (1 - iota)/2`` and ``ebar = (1 + iota)/2``.
    """

    __slots__ = ("re", "im", "kappa")

    def __init__(self, re=0, im=0, kappa=-1):
        if kappa not in (-1, 1):
            raise ValueError("kappa must be -1 or +1")
        object.__setattr__(self, "re", to_rational(re))
        object.__setattr__(self, "im", to_rational(im))
        object.__setattr__(self, "kappa", kappa)

    def __setattr__(self, name, value):
        raise AttributeError("QuadScalar is immutable")

    @classmethod
    def unit(cls, kappa):
        return cls(0, 1, kappa)

    @classmethod
    def null_e(cls):
        return cls(Fraction(1, 2), Fraction(-1, 2), 1)

    @classmethod
    def null_ebar(cls):
        return cls(Fraction(1, 2), Fraction(1, 2), 1)

    def _coerce(self, other):
        if isinstance(other, QuadScalar):
            if other.kappa != self.kappa:
                raise ExactLAError(f"mixed kappa: {self.kappa} and {other.kappa}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadScalar(other, 0, self.kappa)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadScalar(self.re + o.re, self.im + o.im, self.kappa)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.re, -self.im, self.kappa)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadScalar(self.re - o.re, self.im - o.im, self.kappa)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadScalar(
            self.re * o.re + self.kappa * self.im * o.im,
            self.re * o.im + self.im * o.re,
            self.kappa,
        )

    __rmul__ = __mul__

    def conjugate(self):
        return QuadScalar(self.re, -self.im, self.kappa)

    def norm(self) -> Fraction:
        """``z * conj(z)``, a rational."""
        return self.re * self.re - self.kappa * self.im * self.im

    def inverse(self):
        n = self.norm()
        if n == 0:
            if self:
                raise ZeroDivisorError(f"{self} is a zero divisor")
            raise ZeroDivisionError("division by zero")
        return QuadScalar(self.re / n, -self.im / n, self.kappa)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, QuadScalar):
            return (self.re, self.im, self.kappa) == (other.re, other.im, other.kappa)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im, self.kappa))

    def __repr__(self):
        sym = "i" if self.kappa == -1 else "eps"
        return f"QuadScalar({format_rational(self.re)} + {format_rational(self.im)}*{sym})"

    __str__ = __repr__


def quad_arith(a: QuadScalar, b: QuadScalar | None, op: str) -> QuadScalar:
    """Functional form of the QuadScalar operations ``add``, ``mul`` and ``conj``."""
    if op == "conj":
        return a.conjugate()
    if b is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if not isinstance(b, QuadScalar) or b.kappa != a.kappa:
        raise ExactLAError("quad_arith needs two QuadScalars with matching kappa")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def _scalar(x):
    if isinstance(x, QuadScalar):
        return x
    return to_rational(x)


def _is_zero(x) -> bool:
    return not x


class Matrix:
    """Immutable dense matrix with exact entries.

    Build from nested sequences (ints, strings ``"n/d"``, Fractions or
    QuadScalars).  ``@`` is matrix product, ``*`` scales by a scalar.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        rows = tuple(tuple(_scalar(x) for x in r) for r in rows)
        nrows = len(rows)
        if ncols is None:
            if nrows == 0:
                raise ValueError("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # construction helpers

    @classmethod
    def _raw(cls, rows, ncols):
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "nrows", len(rows))
        object.__setattr__(obj, "ncols", ncols)
        return obj

    @classmethod
    def zeros(cls, n, m=None):
        m = n if m is None else m
        z = Fraction(0)
        return cls._raw(tuple((z,) * m for _ in range(n)), m)

    @classmethod
    def identity(cls, n):
        one, z = Fraction(1), Fraction(0)
        return cls._raw(tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def diag(cls, entries):
        entries = [_scalar(x) for x in entries]
        n = len(entries)
        z = Fraction(0)
        return cls._raw(tuple(tuple(entries[i] if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def column(cls, entries):
        return cls([[x] for x in entries], 1)

    @classmethod
    def from_columns(cls, cols, nrows=None):
        cols = [tuple(c) for c in cols]
        if not cols:
            if nrows is None:
                raise ValueError("need nrows for an empty column list")
            return cls([[] for _ in range(nrows)], 0)
        return cls(list(zip(*cols)))

    @classmethod
    def from_sparse(cls, n, m, entries, one_based=True):
        """``entries`` maps ``(i, j)`` or ``"i,j"`` to a scalar."""
        data = [[Fraction(0)] * m for _ in range(n)]
        for key, val in entries.items():
            if isinstance(key, str):
                i, j = (int(t) for t in key.split(","))
            else:
                i, j = key
            if one_based:
                i, j = i - 1, j - 1
            if not (0 <= i < n and 0 <= j < m):
                raise IndexError(f"entry {key} outside a {n}x{m} matrix")
            data[i][j] = _scalar(val)
        return cls(data, m)

    @classmethod
    def block(cls, blocks):
        """Assemble from a 2-D list of matrices."""
        rows = []
        for brow in blocks:
            h = brow[0].nrows
            if any(b.nrows != h for b in brow):
                raise ValueError("block row height mismatch")
            for i in range(h):
                rows.append(sum((b.rows[i] for b in brow), ()))
        return cls._raw(tuple(rows), len(rows[0]) if rows else 0)

    # basic protocol

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({self.to_strings()})"

    def to_strings(self):
        def fmt(x):
            if isinstance(x, QuadScalar):
                return repr(x)
            return format_rational(x)

        return [[fmt(x) for x in r] for r in self.rows]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    def submatrix(self, r0, r1, c0, c1):
        return Matrix._raw(tuple(r[c0:c1] for r in self.rows[r0:r1]), c1 - c0)

    @property
    def T(self):
        return Matrix._raw(tuple(zip(*self.rows)) if self.nrows else (), self.nrows)

    def map(self, f):
        return Matrix._raw(tuple(tuple(f(x) for x in r) for r in self.rows), self.ncols)

    def conjugate(self):
        return self.map(lambda x: x.conjugate() if isinstance(x, QuadScalar) else x)

    def is_zero(self):
        return all(_is_zero(x) for r in self.rows for x in r)

    def is_square(self):
        return self.nrows == self.ncols

    def is_symmetric(self):
        return self.is_square() and self == self.T

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols
        )

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        c = _scalar(c)
        return self.map(lambda x: x * c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for c in cols:
                acc = Fraction(0)
                for k, a in nz:
                    b = c[k]
                    if b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix._raw(tuple(out), other.ncols)

    def apply(self, v):
        """Matrix times a plain coordinate sequence, returning a tuple."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        nz = [(k, x) for k, x in enumerate(v) if x]
        return tuple(sum((r[k] * x for k, x in nz), Fraction(0)) for r in self.rows)

    def __pow__(self, n):
        if not self.is_square() or n < 0:
            raise ValueError("integer powers of square matrices only")
        out = Matrix.identity(self.nrows)
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def inverse(self):
        if not self.is_square():
            raise SingularMatrixError("non-square matrix")
        n = self.nrows
        aug = Matrix.block([[self, Matrix.identity(n)]])
        red, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return red.submatrix(0, n, n, 2 * n)

    def det(self):
        if not self.is_square():
            raise ValueError("non-square matrix")
        a = [list(r) for r in self.rows]
        n = self.nrows
        d = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            d = d * a[c][c]
            inv = 1 / a[c][c]
            for r in range(c + 1, n):
                f = a[r][c] * inv
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return d


def _check_field(M: Matrix):
    for r in M.rows:
        for x in r:
            if isinstance(x, QuadScalar) and x.kappa == 1:
                raise ZeroDivisorError(
                    "Gaussian elimination over the Lorentz numbers is not supported "
                    "(zero divisors); split into null-basis components first"
                )


def rref(M: Matrix):
    """Reduced row echelon form.  Returns ``(R, pivot_columns)``."""
    _check_field(M)
    a = [list(r) for r in M.rows]
    n, m = M.nrows, M.ncols
    pivots = []
    row = 0
    for c in range(m):
        if row >= n:
            break
        p = next((r for r in range(row, n) if a[r][c]), None)
        if p is None:
            continue
        a[row], a[p] = a[p], a[row]
        inv = 1 / a[row][c]
        prow = a[row] = [x * inv if x else x for x in a[row]]
        # rows are mostly sparse; skip zero entries of the pivot row
        support = [j for j in range(c, m) if prow[j]]
        for r in range(n):
            f = a[r][c]
            if r != row and f:
                ar = a[r]
                for j in support:
                    ar[j] = ar[j] - f * prow[j]
        pivots.append(c)
        row += 1
    return Matrix._raw(tuple(tuple(r) for r in a), m), pivots


def rref_kernel(M: Matrix):
    """Return ``(rank, kernel_basis)`` where the kernel vectors are coordinate tuples."""
    red, pivots = rref(M)
    m = M.ncols
    free = [c for c in range(m) if c not in set(pivots)]
    zero = Fraction(0)
    basis = []
    for f in free:
        v = [zero] * m
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red.rows[i][f]
        basis.append(tuple(v))
    return len(pivots), basis


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def span_contains(vectors, v) -> bool:
    """True iff ``v`` lies in the span of ``vectors``."""
    if not vectors:
        return not any(v)
    A = Matrix.from_columns(vectors)
    return rank(A) == rank(Matrix.block([[A, Matrix.column(v)]]))


def same_span(us, vs) -> bool:
    n = len(us[0]) if us else len(vs[0])
    A = Matrix.from_columns(us, n) if us else Matrix.zeros(n, 1)
    B = Matrix.from_columns(vs, n) if vs else Matrix.zeros(n, 1)
    r = rank(Matrix.block([[A, B]]))
    return rank(A) == r == rank(B)


def signature_of_symmetric(M: Matrix):
    """Inertia ``(p, q, z)`` of a symmetric rational matrix by Lagrange reduction."""
    if not M.is_symmetric():
        raise NotSymmetricError("signature requires a symmetric matrix")
    _check_field(M)
    if any(isinstance(x, QuadScalar) for r in M.rows for x in r):
        raise ExactLAError("signature is defined for real (rational) forms only")
    a = [list(r) for r in M.rows]
    n = M.nrows
    p = q = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # zero diagonal: add row/col j into i, making a[i][i] = 2*a[i][j]
            a[i] = [x + y for x, y in zip(a[i], a[j])]
            for r in range(n):
                a[r][i] = a[r][i] + a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for r in range(n):
                a[r][k], a[r][piv] = a[r][piv], a[r][k]
        d = a[k][k]
        if d > 0:
            p += 1
        else:
            q += 1
        for r in range(k + 1, n):
            f = a[r][k] / d
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
        # the trailing block is now the (symmetric) Schur complement
        for r in range(k + 1, n):
            a[k][r] = Fraction(0)
            a[r][k] = Fraction(0)
        k += 1
    return p, q, n - p - q


def congruent_gram(C: Matrix, P: Matrix) -> Matrix:
    """Gram matrix in the standard basis of a form whose Gram in the basis given
    by the columns of ``P`` is ``C``:  ``G = P^-T C P^-1``."""
    if not C.is_symmetric():
        raise NotSymmetricError("C must be symmetric")
    try:
        Pinv = P.inverse()
    except SingularMatrixError:
        raise SingularMatrixError("basis matrix P is singular") from None
    return Pinv.T @ C @ Pinv
