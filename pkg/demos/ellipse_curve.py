"""A curve of integrable (1,-1)-structures on the space of ellipses.

Phi(t) = cos t R + sin t Q is sampled at rational s = tan(t/2), so every
point of the curve is an exact rational matrix.
"""

from fractions import Fraction

from gencompat import catalog_get, cotangent_algebra, curve_point, eigenspace_involutivity, verify_algebraic
from gencompat.catalog import ellipse_generators
from gencompat.exactla import Matrix, rank
from gencompat.extended import CurveSpec, weierstrass

entry = catalog_get("ellipse")
T = cotangent_algebra(entry.algebra)
E = entry.extended

for eps in (1, -1):
    spec = entry.curves[eps]
    print(f"eps = {eps:+d}")
    for s in [Fraction(0), Fraction(1, 3), Fraction(1), Fraction(-3), Fraction(7, 5)]:
        c, sn = weierstrass(s)
        S = curve_point(CurveSpec(spec.R, spec.Q, s))
        ok = verify_algebraic(S, E).passed
        dims = []
        for delta in (1, -1):
            res = eigenspace_involutivity(T, S, delta)
            printed = rank(Matrix(ellipse_generators(eps, delta, s)))
            dims.append(f"D({delta:+d}) dim {len(res.eigenbasis.vectors)} "
                        f"closed {res.involutive} printed rank {printed}")
        print(f"  s = {str(s):5s} cos = {str(c):7s} sin = {str(sn):7s} axioms {ok}  " + "  ".join(dims))

print("\nAt s = 0 two of the four printed spanning vectors vanish, so they span only a plane of D.")
