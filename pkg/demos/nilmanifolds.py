"""Compatible generalized complex structures on five 6-dimensional nilmanifolds.

Each structure S is assembled from its blocks A and B, checked against the
pointwise axioms and then against the Nijenhuis tensor on the cotangent
algebra.  None of them is block-diagonal or block-off-diagonal.
"""

from gencompat import catalog_get, cotangent_algebra, nijenhuis_integrability, verify_algebraic
from gencompat.exactla import Matrix
from gencompat.extended import GenStructure, NotExtremalError, extract_extremal

for name in ["g1", "g2", "g3", "g4", "g5"]:
    entry = catalog_get(name)
    S, E = entry.structure, entry.extended
    T = cotangent_algebra(entry.algebra)
    axioms = verify_algebraic(S, E)
    nij = nijenhuis_integrability(T, S)
    try:
        extract_extremal(S, entry.metric)
        kind = "extremal"
    except NotExtremalError:
        kind = "not extremal"
    print(f"{name} {entry.salamon:28s} signature {entry.metric.signature}  "
          f"axioms {'ok' if axioms.passed else 'FAIL'}  "
          f"N = 0 on {nij.info['pairs_checked']} pairs: {nij.passed}  ({kind})")

# flip the sign of one entry of the lower-left block G B and watch the checks fail
entry = catalog_get("g5")
M = entry.structure.S
m = entry.algebra.dim
rows = [list(r) for r in M.rows]
rows[m + 5][4] = -rows[m + 5][4]
broken = GenStructure(Matrix(rows), -1, -1)
rep = verify_algebraic(broken, entry.extended)
print("\nperturbed g5:", ", ".join(c.name for c in rep.failures()), "fail")
