"""Independent reference computations built on sympy."""

import sympy as sp


def to_sympy(M):
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in row] for row in M.rows])


def sign_changes(coeffs):
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia(M):
    """(p, q, z) of a rational symmetric matrix via Descartes' rule.

    A symmetric matrix has only real eigenvalues, so the sign changes of its
    characteristic polynomial count the positive roots exactly.
    """
    A = to_sympy(M)
    x = sp.Symbol("x")
    poly = A.charpoly(x)
    coeffs = poly.all_coeffs()
    n = A.shape[0]
    z = 0
    while z < n and coeffs[n - z] == 0:
        z += 1
    p = sign_changes(coeffs)
    neg = [c * (-1) ** (n - k) for k, c in enumerate(coeffs)]
    q = sign_changes(neg)
    return p, q, z
