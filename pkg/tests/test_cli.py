import io
import json

import pytest

from gencompat.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, export_entry, main
from gencompat.exactla import to_rational
from gencompat.fileio import read_json, write_json
from gencompat.report import Report


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def g5_files(tmp_path):
    export_entry("g5", tmp_path)
    return tmp_path


def files(d, structure="structure.json"):
    return str(d / "algebra.json"), str(d / "metric.json"), str(d / structure)


def test_exported_g5_verifies(g5_files):
    code, text = run("verify", *files(g5_files))
    assert code == EXIT_PASS
    assert "[pass] square" in text


def test_broken_g5_fails_with_named_axiom(g5_files):
    data = read_json(g5_files / "structure.json")
    data["B"]["6,5"] = "2"
    write_json(g5_files / "structure.json", data)
    code, text = run("verify", *files(g5_files), "--report", "json")
    assert code == EXIT_FAIL
    rep = Report.from_json(text)
    failed = {c.name for c in rep.failures()}
    assert "square" in failed
    assert rep.check("square").witness


def test_truncated_file_is_a_usage_error(g5_files):
    p = g5_files / "structure.json"
    p.write_text(p.read_text()[:40])
    assert run("verify", *files(g5_files))[0] == EXIT_USAGE


def test_dimension_mismatch_is_a_usage_error(g5_files):
    write_json(g5_files / "algebra.json", {"dim": 3, "salamon": "(0,0,12)"})
    assert run("verify", *files(g5_files))[0] == EXIT_USAGE


def test_ellipse_exports_verify(tmp_path):
    names = [p.name for p in export_entry("ellipse", tmp_path)]
    assert names == ["algebra.json", "metric.json", "structure_R.json", "structure_Q+1.json", "structure_Q-1.json"]
    for s in names[2:]:
        assert run("verify", *files(tmp_path, s))[0] == EXIT_PASS


def test_export_command_lists_files(tmp_path):
    code, text = run("export", "g1", "--out", str(tmp_path))
    assert code == EXIT_PASS and len(text.splitlines()) == 3


def test_catalog_all():
    code, text = run("catalog", "--all", "--report", "json")
    assert code == EXIT_PASS
    rep = Report.from_json(text)
    assert rep.info == {"entries": 6, "passed": 6}


def test_catalog_g2_counts_pairs():
    code, text = run("catalog", "g2", "--report", "json")
    assert code == EXIT_PASS
    assert Report.from_json(text).info["nijenhuis_pairs_checked"] == 66


def test_catalog_ellipse_samples():
    code, text = run("catalog", "ellipse", "--curve-samples", "0,1,1/2")
    assert code == EXIT_PASS
    for s in ("0", "1", "1/2"):
        assert f"eps=+1 s={s}: D(+1) involutive" in text
    assert "s=7/5" not in text


def test_catalog_usage_errors():
    assert run("catalog", "g7")[0] == EXIT_USAGE
    assert run("catalog")[0] == EXIT_USAGE
    assert run("catalog", "g1", "--all")[0] == EXIT_USAGE
    assert run("catalog", "ellipse", "--curve-samples", "1,x")[0] == EXIT_USAGE
    assert run("catalog", "g1", "--no-such-flag")[0] == EXIT_USAGE
    assert run()[0] == EXIT_USAGE


def test_interpolate_at_zero_is_R():
    code, text = run("interpolate", "ellipse", "0", "--epsilon", "-1", "--report", "json")
    assert code == EXIT_PASS
    from gencompat.catalog import catalog_get

    R = catalog_get("ellipse").curves[-1].R
    assert Report.from_json(text).info["S"] == R.S.to_strings()


@pytest.mark.parametrize("s", ["1/2", "7/5"])
def test_interpolate_passes(s):
    code, text = run("interpolate", "ellipse", s, "--report", "json")
    assert code == EXIT_PASS
    assert Report.from_json(text).info["eigenspace_dims"] == {"D(+1)": 4, "D(-1)": 4}


def test_interpolate_entry_without_curve():
    assert run("interpolate", "g2", "1")[0] == EXIT_USAGE
    assert run("interpolate", "ellipse", "1/0")[0] == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ("catalog", "g3"),
    ("catalog", "ellipse", "--curve-samples", "2/3,5", "--report", "json"),
    ("interpolate", "ellipse", "-1/3", "--epsilon", "-1"),
])
def test_output_is_byte_identical(argv):
    first = run(*argv, "--seed", "7")
    assert first == run(*argv, "--seed", "7")


@pytest.mark.parametrize("argv", [("catalog", "ellipse"), ("interpolate", "ellipse", "3"), ("catalog", "g1")])
def test_json_reports_roundtrip(argv):
    text = run(*argv, "--report", "json")[1]
    rep = Report.from_json(text)
    assert rep.to_json() + "\n" == text
    assert Report.from_json(rep.to_json()) == rep


def test_no_floats_in_output():
    text = run("interpolate", "ellipse", "7/5", "--report", "json")[1]
    for row in json.loads(text)["info"]["S"]:
        for x in row:
            assert "." not in x
            to_rational(x)


def test_negative_rationals_are_values():
    code, text = run("interpolate", "ellipse", "-1/3", "--epsilon", "-1")
    assert code == EXIT_PASS and "s=-1/3" in text
    code, text = run("catalog", "ellipse", "--curve-samples", "-3,-1/2")
    assert code == EXIT_PASS and "s=-1/2" in text and "s=-3" in text
