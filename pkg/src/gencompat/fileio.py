"""JSON file formats for algebras, metrics and structures.

Indices are 1-based and every rational is written as a string ``"n"`` or
``"n/d"``.  Loaders raise :class:`FormatError` on anything malformed.

algebra:   {"dim": m, "salamon": "(0,0,12)"}
           {"dim": m, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}, ...]}
metric:    {"gram": [[...]]}
           {"gram_in_basis": {"C": [[...]], "P": [[...]]}}   columns of P are the basis
structure: {"lambda": -1, "ell": -1, "S": [[...]]}
           {"lambda": -1, "ell": -1, "A": {"1,2": "1"}, "B": {"5,6": "-1"}}
"""

from __future__ import annotations

import json
from pathlib import Path

from .exactla import Matrix, congruent_gram, format_rational, to_rational
from .extended import ClassicalForm, GenStructure, PseudoMetric, from_classical
from .liealg import LieAlgebra, from_brackets, parse_salamon

__all__ = [
    "FormatError",
    "load_algebra",
    "load_metric",
    "load_structure",
    "dump_algebra",
    "dump_metric",
    "dump_structure",
    "read_json",
    "write_json",
]


class FormatError(ValueError):
    pass


def read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def write_json(path, data):
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


def _require(data, key, what):
    if not isinstance(data, dict) or key not in data:
        raise FormatError(f"{what}: missing key {key!r}")
    return data[key]


def _rational(x, where):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise FormatError(f"{where}: rationals must be strings or integers, got {x!r}")
    try:
        return to_rational(x)
    except (ValueError, ZeroDivisionError, TypeError):
        raise FormatError(f"{where}: not a rational {x!r}") from None


def _matrix(rows, where):
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise FormatError(f"{where}: expected a non-empty list of rows")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise FormatError(f"{where}: ragged rows")
    return Matrix([[_rational(x, where) for x in r] for r in rows])


def _sparse(table, m, where):
    if not isinstance(table, dict):
        raise FormatError(f"{where}: expected a map from \"row,col\" to rationals")
    entries = {}
    for key, val in table.items():
        try:
            r, c = (int(t) for t in key.split(","))
        except ValueError:
            raise FormatError(f"{where}: bad index {key!r}") from None
        if not (1 <= r <= m and 1 <= c <= m):
            raise FormatError(f"{where}: index {key!r} out of range for m={m}")
        entries[(r, c)] = _rational(val, where)
    return Matrix.from_sparse(m, m, entries, one_based=True)


def _pm1(x, name):
    if x not in (1, -1) or isinstance(x, bool):
        raise FormatError(f"{name} must be 1 or -1, got {x!r}")
    return x


def load_algebra(data) -> LieAlgebra:
    dim = _require(data, "dim", "algebra")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FormatError(f"algebra: dim must be a positive integer, got {dim!r}")
    if "salamon" in data:
        L = parse_salamon(data["salamon"])
    elif "brackets" in data:
        brackets = {}
        for t, item in enumerate(data["brackets"]):
            try:
                i, j, k = (int(item[key]) - 1 for key in "ijk")
                c = _rational(item["c"], f"algebra bracket {t + 1}")
            except (KeyError, TypeError, ValueError):
                raise FormatError(f"algebra: bracket {t + 1} needs integer i, j, k and rational c") from None
            out = brackets.setdefault((i, j), {})
            out[k] = out.get(k, 0) + c
        try:
            L = from_brackets(dim, brackets)
        except IndexError as exc:
            raise FormatError(f"algebra: {exc}") from None
    else:
        raise FormatError("algebra: need either 'salamon' or 'brackets'")
    if L.dim != dim:
        raise FormatError(f"algebra: dim {dim} disagrees with the {L.dim} generators given")
    return L


def dump_algebra(L: LieAlgebra, salamon: str | None = None) -> dict:
    """Salamon form when a string is supplied (checked against ``L``), else a bracket list."""
    if salamon is not None:
        if parse_salamon(salamon) != L:
            raise ValueError("Salamon string does not describe this algebra")
        return {"dim": L.dim, "salamon": salamon}
    out = []
    for (i, j), vec in sorted(L.nonzero_brackets().items()):
        for k, c in enumerate(vec):
            if c:
                out.append({"i": i + 1, "j": j + 1, "k": k + 1, "c": format_rational(c)})
    return {"dim": L.dim, "brackets": out}


def load_metric(data) -> PseudoMetric:
    if isinstance(data, dict) and "gram" in data:
        G = _matrix(data["gram"], "metric gram")
    elif isinstance(data, dict) and "gram_in_basis" in data:
        gb = data["gram_in_basis"]
        C = _matrix(_require(gb, "C", "metric gram_in_basis"), "metric C")
        P = _matrix(_require(gb, "P", "metric gram_in_basis"), "metric P")
        if C.shape != P.shape or not C.is_square():
            raise FormatError("metric: C and P must be square of the same size")
        G = congruent_gram(C, P)
    else:
        raise FormatError("metric: need either 'gram' or 'gram_in_basis'")
    return PseudoMetric(G)


def dump_metric(metric: PseudoMetric, C: Matrix | None = None, P: Matrix | None = None) -> dict:
    if C is not None and P is not None:
        return {"gram_in_basis": {"C": C.to_strings(), "P": P.to_strings()}}
    return {"gram": metric.G.to_strings()}


def load_structure(data, metric: PseudoMetric) -> GenStructure:
    lam = _pm1(_require(data, "lambda", "structure"), "lambda")
    ell = _pm1(_require(data, "ell", "structure"), "ell")
    m = metric.m
    if "S" in data:
        S = _matrix(data["S"], "structure S")
        if S.shape != (2 * m, 2 * m):
            raise FormatError(f"structure: S must be {2 * m} x {2 * m} for a metric of dimension {m}")
        return GenStructure(S, lam, ell)
    if "A" in data or "B" in data:
        A = _sparse(data.get("A", {}), m, "structure A")
        B = _sparse(data.get("B", {}), m, "structure B")
        return from_classical(ClassicalForm(A, B), lam, ell, metric, check=False)
    raise FormatError("structure: need either 'S' or sparse 'A'/'B'")


def _to_sparse(M: Matrix) -> dict:
    return {f"{r + 1},{c + 1}": format_rational(M[r, c])
            for r in range(M.nrows) for c in range(M.ncols) if M[r, c]}


def dump_structure(S: GenStructure, classical: ClassicalForm | None = None) -> dict:
    out = {"lambda": S.lam, "ell": S.ell}
    if classical is not None:
        out["A"] = _to_sparse(classical.A)
        out["B"] = _to_sparse(classical.B)
    else:
        out["S"] = S.S.to_strings()
    return out
