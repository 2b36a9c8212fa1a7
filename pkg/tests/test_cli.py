import json
import subprocess
import sys

import pytest

from conftest import CATALOG
from hyperrings.cli import main, render, run
from hyperrings.document import serialize


@pytest.fixture
def files(tmp_path):
    out = {}
    for key, spec in (("z2", "ring-as-hyperring:Z2"), ("z4coset", "coset-hyperring:Z4/0,2")):
        path = tmp_path / f"{key}.hr"
        path.write_text(serialize(CATALOG[spec]))
        out[key] = str(path)
    bad = tmp_path / "bad.hr"
    bad.write_text("q: 2\nplus: [[[0], []], [[1], [0]]]\ntimes: [[[0], [0]], [[0], [1]]]\n")
    out["bad"] = str(bad)
    return out


def test_validate_file(files):
    code, report = run(["validate", files["z2"]])
    assert code == 0
    assert report["schema"] == 1 and report["command"] == "validate"
    assert all(a["ok"] for a in report["result"]["axioms"])
    assert set(report) == {"schema", "command", "input-digest", "parameters", "result",
                           "witnesses", "timings"}


def test_closure_lambda_star(files):
    code, report = run(["closure", "--kind", "lambda-star-e", "--e", "1", files["z4coset"]])
    assert code == 0
    res = report["result"]
    assert res["partition"] == [[0, 2], [1, 3]]
    assert res["identityClass"] == [1, 3]
    assert res["classCount"] == 2


def test_parts_escape(files):
    code, report = run(["parts", "--e", "1", "--subset", "0,1", files["z4coset"]])
    assert code == 1
    assert report["witnesses"] == [{"escape": [0, 2]}]


def test_parts_without_subset_reports_triad():
    code, report = run(["parts", "--e", "1", "--catalog", "coset-hyperring:Z4/0,2"])
    assert code == 0 and report["result"]["agree"]


def test_relation_with_bounds_and_expression():
    code, report = run(["relation", "--kind", "gamma", "--bounds", "n=2,k=2",
                        "--expr", "1*1 + 1", "--catalog", "coset-hyperring:Z4/0,2"])
    assert code == 0
    assert report["result"]["expression"]["value"] == [0, 2]
    assert report["result"]["closure"] == [[0, 2], [1, 3]]


def test_relation_saturated():
    code, report = run(["relation", "--kind", "lambda-e", "--e", "1", "--catalog",
                        "ring-as-hyperring:Z2"])
    assert code == 0
    assert report["parameters"]["bounds"] == "saturated"
    assert report["result"]["pairs"] == [[0, 0], [1, 1]]


def test_quotient_with_fibers():
    code, report = run(["quotient", "--kind", "lambdaStarE", "--e", "1", "--subset", "1",
                        "--catalog", "coset-hyperring:Z4/0,2"])
    assert code == 0
    f = report["result"]["fibers"]
    assert f["K+M"] == f["saturation"] == [1, 3]
    assert report["result"]["K"] == [0, 2] and report["result"]["D"] == [1, 3]


def test_strong_violation():
    code, report = run(["strong", "--e", "0", "--catalog", "b-hypergroup-ring:2,zero"])
    assert code == 1
    assert report["witnesses"][0]["clause"] == "invertible-right"


def test_complete():
    code, report = run(["complete", "--n", "2", "--catalog", "total:2"])
    assert code == 0 and report["result"]["nComplete"]
    code, report = run(["complete", "--n", "1", "--catalog", "total:2"])
    assert code == 1 and report["witnesses"]


def test_oracle_command():
    code, report = run(["oracle", "--catalog", "total:3"])
    assert code == 0 and report["result"]["agree"]


@pytest.mark.parametrize("argv", [
    ["frobnicate", "--catalog", "total:2"],
    ["validate", "--catalog", "total:2", "--colour"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["validate"],
    ["closure", "--kind", "lambda-star-e", "--catalog", "total:2"],
    ["closure", "--kind", "delta", "--catalog", "total:2"],
    ["parts", "--e", "9", "--catalog", "total:2"],
    ["parts", "--e", "0", "--subset", "0,7", "--catalog", "total:2"],
    ["relation", "--bounds", "n=0", "--catalog", "total:2"],
    ["relation", "--expr", "0*", "--catalog", "total:2"],
    ["validate", "--catalog", "coset-hyperring:Z4/0,1"],
    ["validate", "/no/such/file.hr"],
    ["oracle", "--catalog", "ring-as-hyperring:UT2"],
    ["demo", "--catalog", "total:2"],
])
def test_input_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_semantic_document_error(files, capsys):
    assert main(["validate", files["bad"]]) == 2
    assert "plus.0.1" in capsys.readouterr().err


def test_text_format(capsys):
    assert main(["validate", "--catalog", "total:2", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("schema: 1\ncommand: \"validate\"")


def test_timings_only_on_request():
    _, quiet = run(["validate", "--catalog", "total:2"])
    _, timed = run(["validate", "--catalog", "total:2", "--timings"])
    assert quiet["timings"] == {}
    assert set(timed["timings"]) == {"loadSeconds", "computeSeconds"}


def test_digest_same_for_file_and_catalog(files):
    _, a = run(["validate", files["z2"]])
    _, b = run(["validate", "--catalog", "ring-as-hyperring:Z2"])
    assert a["input-digest"] == b["input-digest"]


def test_reports_are_repeatable(files):
    argv = ["closure", "--kind", "alpha-star", files["z4coset"]]
    assert render(run(argv)[1]) == render(run(argv)[1])


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "hyperrings", "validate", files["z2"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["ok"]
