from fractions import Fraction

import pytest

from gencompat.catalog import (
    CATALOG_NAMES,
    catalog_get,
    ellipse_generators,
    expected_mixed_brackets,
    parse_cotangent_table,
    verify_entry,
)
from gencompat.exactla import Matrix, rank, same_span
from gencompat.extended import CurveSpec, curve_point, eigenspace_involutivity
from gencompat.liealg import cotangent_algebra


def test_g3_entry_data():
    entry = catalog_get("g3")
    assert entry.metric.G == Matrix.diag([-1, 1, 1, 1, 1, 1])
    A, B = entry.classical.A, entry.classical.B
    assert (A[0, 1], A[1, 0]) == (-1, 1)
    assert (B[2, 5], B[3, 4], B[4, 3], B[5, 2]) == (-1, -1, 1, 1)
    assert sum(1 for r in A.rows for x in r if x) == 2


def test_ellipse_entry_data():
    entry = catalog_get("ellipse")
    L = entry.algebra
    assert L.consts[0][1] == (0, 0, 0, 0) and L.consts[0][3] == (0, 0, 0, 0)
    assert L.consts[2][3] == (0, 0, 0, 2)
    assert L.consts[3][1] == (2, 0, 0, 0)
    assert L.consts[2][0] == (1, 0, 0, 0)
    assert L.consts[1][2] == (0, 1, 0, 0)
    assert entry.metric.G == Matrix.identity(4)


def test_g1_metric_from_printed_basis():
    entry = catalog_get("g1")
    C, P = entry.gram_basis
    assert C == Matrix.diag([4, -4, 2, -2, -2, 2])
    assert P.T @ entry.metric.G @ P == C
    assert entry.metric.signature == (3, 3)


@pytest.mark.parametrize("name,sig", [("g1", (3, 3)), ("g2", (5, 1)), ("g3", (5, 1)), ("g4", (5, 1)),
                                      ("g5", (4, 2)), ("ellipse", (4, 0))])
def test_metric_signatures(name, sig):
    assert catalog_get(name).metric.signature == sig


def test_unknown_entry():
    with pytest.raises(KeyError):
        catalog_get("g6")


def test_parse_cotangent_table_conventions():
    t = parse_cotangent_table("(25*+56*,5*1,46*,6*3,6*1,0)", 6)
    # [e2, e5*] = e1* and [e5*, e1] = e2*, i.e. [e1, e5*] = -e2*
    assert t[(1, 4)] == (1, 0, 0, 0, 0, 0)
    assert t[(0, 4)] == (0, -1, 0, 0, 0, 0)
    assert t[(2, 5)] == (0, 0, 0, -1, 0, 0)
    with pytest.raises(ValueError):
        parse_cotangent_table("(12)", 6)
    with pytest.raises(ValueError):
        parse_cotangent_table("(1*2*)", 1)


@pytest.mark.parametrize("name", ["g1", "g2", "g3", "g4", "g5"])
def test_printed_tables_match(name):
    entry = catalog_get(name)
    rep = verify_entry(entry, samples=())
    assert rep.check("cotangent table matches printed list").passed


def test_ellipse_printed_brackets():
    entry = catalog_get("ellipse")
    T = cotangent_algebra(entry.algebra)
    expected = expected_mixed_brackets([(3, 2, 2, 1), (2, 1, 4, 2)], 4)
    for (i, j), v in expected.items():
        assert T.consts[i][4 + j][4:] == v
    assert len(entry.printed_table) == 8


def test_all_entries_verify():
    for name in CATALOG_NAMES:
        rep = verify_entry(catalog_get(name))
        assert rep.passed, rep.to_text()


@pytest.mark.parametrize("name", ["g1", "g2", "g3", "g4", "g5"])
def test_nijenhuis_pair_count(name):
    assert verify_entry(catalog_get(name), samples=()).info["nijenhuis_pairs_checked"] == 66


def test_tampered_table_is_caught():
    entry = catalog_get("g5")
    bad = dict(entry.printed_table)
    bad[(1, 4)] = (2, 0, 0, 0, 0, 0)
    from dataclasses import replace

    rep = verify_entry(replace(entry, printed_table=bad), samples=())
    c = rep.check("cotangent table matches printed list")
    assert not c.passed and "[e2,e5*]" in c.witness


def test_S5_not_extremal_in_report():
    rep = verify_entry(catalog_get("g5"))
    assert "not extremal" in rep.check("extremality").detail
    assert "rank B = 2" in rep.check("extremality").detail


@pytest.mark.parametrize("eps", [1, -1])
@pytest.mark.parametrize("s", ["1/2", "-3", "7/5", "2/9"])
def test_ellipse_eigenspaces_are_the_printed_spans(eps, s):
    entry = catalog_get("ellipse")
    T = cotangent_algebra(entry.algebra)
    spec = entry.curves[eps]
    S = curve_point(CurveSpec(spec.R, spec.Q, Fraction(s)))
    for delta in (1, -1):
        res = eigenspace_involutivity(T, S, delta)
        gens = ellipse_generators(eps, delta, Fraction(s))
        assert rank(Matrix(gens)) == 4
        assert same_span(gens, res.eigenbasis.vectors)
        assert res.involutive


def test_printed_generators_degenerate_at_s0():
    # at t = 0 two of the four printed vectors vanish for each delta
    for delta in (1, -1):
        gens = ellipse_generators(1, delta, 0)
        assert rank(Matrix(gens)) == 2


def test_ellipse_report_lists_each_sample():
    rep = verify_entry(catalog_get("ellipse"), samples=(Fraction(0), Fraction(1), Fraction(1, 2)))
    names = [c.name for c in rep.checks]
    for eps in ("+1", "-1"):
        for s in ("0", "1", "1/2"):
            for d in ("+1", "-1"):
                assert f"eps={eps} s={s}: D({d}) involutive" in names
