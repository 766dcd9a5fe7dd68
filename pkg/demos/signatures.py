"""The integer sig(S) of (1,1)-structures.

beta_S(x, y) = b(S I_{-1} x, y) has signature (2n, 2m - 2n) and sig(S) = n.
For R built from a product structure r, beta_R = -(h + h) with h = g(r., .),
so sig(R) counts the negative directions of h: q_+ + p_-.
"""

from itertools import product

from gencompat import beta_signature, build_extended, build_extremal
from gencompat.exactla import Matrix
from gencompat.extended import PseudoMetric
from gencompat.twistor import beta_form

m = 3
print("(p+, q+, p-, q-)  sig(R)  q+ + p-  p+ + q-")
for pp, qp, pm, qm in product(range(m + 1), repeat=4):
    if pp + qp + pm + qm != m:
        continue
    g = PseudoMetric.diagonal([1] * pp + [-1] * qp + [1] * pm + [-1] * qm)
    r = Matrix.diag([1] * (pp + qp) + [-1] * (pm + qm))
    R = build_extremal("R", r, 1, 1, g)
    n = beta_signature(R, build_extended(g, -1))
    print(f"{(pp, qp, pm, qm)!s:17s} {n:6d}  {qp + pm:7d}  {pp + qm:7d}")

g = PseudoMetric.diagonal([1])
R = build_extremal("R", Matrix.identity(1), 1, 1, g)
print("\nr = id on a Riemannian line: beta_R =", beta_form(R, build_extended(g, -1)).to_strings())
