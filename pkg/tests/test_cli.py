import io
import json
import shutil

import pytest

from qcg import golden
from qcg.algebra import ZERO, LaurentPoly
from qcg.cli import run
from qcg.spinon import GradedDecomposition, spinon_character


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_mpoly_text_and_json():
    code, text = call("mpoly", "--lambda", "1,0", "--mu", "3,0")
    assert code == 0 and text == "q + q^2 + q^3\n"
    code, text = call("mpoly", "--lambda", "1,0", "--mu", "3,0", "--json")
    data = json.loads(text)
    assert data["command"] == "mpoly"
    assert data["params"] == {"lambda": [1, 0], "mu": [3, 0]}
    assert LaurentPoly.from_json(data["result"]["polynomial"]) == LaurentPoly.parse("q + q^2 + q^3")


def test_qcg_text_matches_json():
    code, text = call("qcg", "--n", "1", "--m", "3")
    assert code == 0
    _, js = call("qcg", "--n", "1", "--m", "3", "--json")
    rows = json.loads(js)["result"]
    assert text.splitlines() == [f"{r['label']}: {r['text']}" for r in rows]
    assert text.splitlines()[0] == "4: q^3 + q^4 + q^5 + q^6"
    assert json.loads(js)["params"]["level"] == "inf"


def test_paths_grouped_by_end():
    code, text = call("paths", "--n", "2", "--m", "0", "--level", "1")
    assert code == 0
    assert text.splitlines() == ["# end 1", "14 1", "# end 5", "12 1"]
    code, text = call("paths", "--n", "0", "--m", "0", "--end", "0,0")
    assert text == "φ 0\n"


def test_spinon_json_round_trip():
    code, text = call("spinon", "--target", "0,0", "--level", "1", "--depth", "3", "--json")
    assert code == 0
    dec = GradedDecomposition.from_json(json.loads(text)["result"])
    assert dec == spinon_character(ZERO, 1, 3)


def test_oracle_commands():
    assert call("oracle", "tensor", "--n", "1", "--m", "1") == (0, "4: 1\n16: 1\n")
    code, text = call("oracle", "character", "--lambda", "0,1")
    assert code == 0 and len(text.splitlines()) == 5
    code, text = call("oracle", "affine", "--target", "0,0", "--level", "1", "--depth", "1", "--json")
    assert json.loads(text)["command"] == "oracle affine"
    assert call("oracle", "affine", "--target", "0,0", "--level", "1", "--depth", "9")[0] == 2


@pytest.mark.parametrize("argv", [
    ("mpoly", "--lambda=-1,0", "--mu", "1,0"),
    ("qcg", "--n", "1", "--m", "1", "--level", "0"),
    ("spinon", "--target", "2,0", "--level", "1", "--depth", "1"),
    ("check", "conjecture1", "--max", "0"),
    ("paths", "--n", "x", "--m", "0"),
    ("nonsense",),
])
def test_usage_errors_exit_two(argv, capsys):
    assert call(*argv)[0] == 2


@pytest.mark.parametrize("suite", ["appendix2", "appendix3", "level1", "eq1"])
def test_regression_suites_pass(suite):
    code, text = call("check", suite)
    assert code == 0, text
    assert text.splitlines()[-1].endswith("0 failed")


def test_conjecture1_command():
    code, text = call("check", "conjecture1", "--max", "3")
    assert code == 0 and text.splitlines()[-1].endswith("verdict: equal")


def test_corrupted_golden_dir_fails(tmp_path, monkeypatch):
    for f in golden.golden_dir().iterdir():
        if f.suffix == ".tsv":
            shutil.copy(f, tmp_path / f.name)
    target = tmp_path / golden.UNRESTRICTED_FILE
    target.write_text(target.read_text().replace("3 0 inf\t20\t1", "3 0 inf\t20\tq"))
    monkeypatch.setenv("QCG_GOLDEN_DIR", str(tmp_path))
    code, text = call("check", "appendix3")
    assert code == 1
    assert "FAIL [4^3]" in text
    code, text = call("check", "appendix3", "--json")
    assert json.loads(text)["result"]["ok"] is False
