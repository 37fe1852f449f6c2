import io
import json
import subprocess
import sys

import pytest

from biquotient13.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_check_reports_invariants():
    code, out, err = call("check", "1,2,2,2,2")
    assert code == 0 and err == ""
    d = json.loads(out)
    assert d["admissible"] is True and d["r"] == 25 and d["pi1"] == 1
    assert d["tuple"] == [1, 2, 2, 2, 2] and d["failures"] == [] and d["schema"] == 1


def test_check_reports_failures():
    d = json.loads(call("check", "1,1,1,2,2")[1])
    assert not d["admissible"]
    assert {"b", "c"} <= {f["condition"] for f in d["failures"]}


def test_invariant_parity_warning():
    code, out, _ = call("invariant", "1,1,1,1,2")
    assert code == 0
    d = json.loads(out)
    assert d["pi1"] == 2 and d["cohomology"] is None
    assert d["warnings"][0]["error"] == "ParityError"
    d = json.loads(call("invariant", "1,1,1,1,1")[1])
    assert d["cohomology"]["h6_order"] == 5 and d["warnings"] == []


def test_cohomology_command():
    d = json.loads(call("cohomology", "1,2,2,2,2")[1])
    assert d["r"] == 25 and abs(d["det"]) == 25 and d["h6_invariant_factors"] == [25]
    code, out, err = call("cohomology", "1,1,1,1,2")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "ParityError"


def test_enum_and_collide():
    d = json.loads(call("enum", "--max-entry", "2")[1])
    assert [t["tuple"] for t in d["tuples"]] == [[1, 1, 1, 1, 1], [1, 2, 2, 2, 2]]
    code, out, _ = call("enum", "--max-entry", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p1,p2,p3,p4,p5,r" and lines[1] == "1,1,1,1,1,5"
    d = json.loads(call("collide", "--max-entry", "3")[1])
    assert d["collisions"] == {}


def test_shift():
    d = json.loads(call("shift", "1,1,1,2,4")[1])
    assert d["shifted"] == [13, 13, 13, 14, 16] and d["multiplier"] == 12
    code, _, err = call("shift", "1,1,1,1,1")
    assert code == 2 and json.loads(err)["error"] == "ZeroSplitError"


def test_certify_gate_and_force():
    code, out, err = call("certify", "1,1,1,2,2", "--points", "5")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "NotAdmissibleError"
    code, out, _ = call("certify", "1,1,1,2,2", "--points", "2", "--restarts", "3",
                        "--iters", "100", "--force")
    assert code == 0
    d = json.loads(out)
    assert d["admissible"] is False and d["min_value"] >= 0 and d["runtime_ms"] is None


def test_certify_non_free():
    code, _, err = call("certify", "1,1,1,1,2", "--force")
    assert code == 2
    e = json.loads(err)
    assert e["error"] == "NonFreeActionError" and e["divisor"] == 2


def test_certify_json_is_reproducible():
    args = ("certify", "1,1,1,1,1", "--points", "2", "--restarts", "3", "--iters", "100")
    first, second = call(*args)[1], call(*args)[1]
    assert first == second
    timed = json.loads(call(*args, "--timing")[1])
    assert timed["runtime_ms"] > 0


@pytest.mark.parametrize("argv", [
    ["check", "1,2"], ["check", "1,a,2,2,2"], ["bogus"], ["check", "1,1,1,1,1", "--nope"],
    [], ["enum", "--max-entry", "x"],
])
def test_usage_errors_are_single_line_json(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert err.count("\n") == 1
    assert "error" in json.loads(err)


def test_negative_entries_parse_but_fail_admissibility():
    d = json.loads(call("check", "--", "-1,2,2,2,2")[1])
    assert not d["admissible"]
    assert any(f["condition"] == "positivity" for f in d["failures"])


def test_text_and_csv_formats():
    code, out, _ = call("check", "1,1,1,1,1", "--format", "text")
    assert code == 0 and "admissible: True" in out
    code, out, _ = call("--format", "csv", "check", "1,1,1,1,1")
    header, row = out.strip().splitlines()
    assert "admissible" in header.split(",")


def test_internal_error_exit_code(monkeypatch):
    import biquotient13.cli as cli

    def boom(args):
        raise RuntimeError("unexpected")

    monkeypatch.setitem(cli.HANDLERS, "check", boom)
    code, _, err = call("check", "1,1,1,1,1")
    assert code == 1 and json.loads(err)["error"] == "InternalError"


def test_verify_command():
    code, out, _ = call("verify", "--samples", "3", "--max-entry", "4")
    assert code == 0
    d = json.loads(out)
    assert d["passed"] is True and d["pi1_counterexamples"] == []


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "biquotient13", "check", "1,1,1,1,1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["r"] == 5
