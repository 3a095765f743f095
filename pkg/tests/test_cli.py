import json
import subprocess
import sys

import pytest

from conelab.cli import EXIT_FALSE, EXIT_INPUT, EXIT_RESOURCE, EXIT_TRUE, main, run


def test_verdict_smooth_family():
    code, rep = run(["verdict", "--poly", "x*y - t", "--param", "t", "--verify"])
    assert code == EXIT_TRUE
    assert rep["verdict"] is True
    assert rep["verify"]["flat_over_germ"] is True
    assert rep["verify"]["fiber_compare"] == "equal"


def test_verdict_coalescing_family():
    code, rep = run(["verdict", "--poly", "x^2 - t^2", "--param", "t"])
    assert code == EXIT_FALSE
    assert rep["witness"] == "x"


def test_verdict_needs_parameter():
    code, rep = run(["verdict", "--poly", "x*y - 1"])
    assert code == EXIT_INPUT
    assert "parameter" in rep["error"]


def test_internal_flat_on_corpus_file():
    code, rep = run(["internal-flat", "examples/ex52.cone"])
    assert code == EXIT_FALSE
    assert rep["witness"]
    assert rep["witness_valid"] is True


def test_pd_of_bare_ideal_file():
    code, rep = run(["pd", "examples/ex51_ts.ideal"])
    assert code == EXIT_TRUE
    assert rep["result"] == 5


def test_tangent_star_compares_with_reference():
    code, rep = run(["tangent-star", "ex51.cone"])
    assert code == EXIT_TRUE and rep["compared_with"] == "I"


def test_cm_false_exit_code():
    code, rep = run(["cm", "ex51.cone"])
    assert code == EXIT_FALSE
    assert (rep["pd"], rep["height"]) == (5, 4)


def test_gb_lex():
    code, rep = run(["gb", "--ideal-text", "x^2 - y, x^3 - z", "--order", "lex"])
    assert code == EXIT_TRUE
    assert sorted(rep["result"]) == sorted(["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"])


def test_resource_cap_exit_code():
    code, rep = run(["gb", "--ideal-text", "x^2*y - z^2, x*y^2 - z, x*z - y^3 + 1",
                     "--max-pairs", "1"])
    assert code == EXIT_RESOURCE


def test_parse_error_exit_code(tmp_path):
    p = tmp_path / "bad.cone"
    p.write_text("ring x, y;\nideal I = ;\n")
    code, rep = run(["gb", str(p)])
    assert code == EXIT_INPUT
    assert "line 2" in rep["error"]


def test_missing_file():
    code, _ = run(["gb", "nowhere.cone"])
    assert code == EXIT_INPUT


def test_flat_without_parameter():
    code, rep = run(["flat", "ex51.cone", "--ideal", "X"])
    assert code == EXIT_INPUT


def test_ideal_operations(tmp_path):
    p = tmp_path / "ops.cone"
    p.write_text("ring x, y, t; param t; ideal I = x^2, x*y; ideal J = x;\n"
                 "ideal K = t*x; poly f = x;\n")
    assert run(["colon", str(p)])[1]["result"] == ["y", "x"]
    assert run(["intersect", str(p)])[1]["result"] == ["x*y", "x^2"]
    assert run(["saturate", str(p), "--poly", "f"])[1]["result"] == ["1"]
    assert run(["eliminate", str(p), "--vars", "x"])[1]["result"] == []
    assert run(["dim", str(p)])[1]["result"]["dimension"] == 2
    assert run(["nf", str(p), "--poly", "x*y + t"])[1]["result"] == "t"
    code, rep = run(["flat", str(p), "--ideal", "K"])
    assert code == EXIT_FALSE and rep["witness"] == "x"
    code, rep = run(["embedded", str(p), "--test-ideal", str(_write(tmp_path, "x^2"))])
    assert code == EXIT_FALSE and rep["witness"] == "x"


def _write(tmp_path, text):
    p = tmp_path / "j.ideal"
    p.write_text(text + "\n")
    return p


def test_hypersurface_commands():
    cone = "hypersurfaces.cone"
    assert run(["s0", cone, "--poly", "xx_y"])[1]["result"] == [[4, "x"], [1, "y"]]
    code, rep = run(["coalesce", cone, "--poly", "double_shift"])
    assert code == EXIT_FALSE and rep["failing_criterion"] == 2
    _, rep = run(["smf", cone, "--poly", "xx_y"])
    assert rep["result"][0] == "x^2*y"
    code, rep = run(["fiber-compare", cone, "--ideal-text", "x*y - t"])
    assert code == EXIT_TRUE and rep["result"] == "equal"


def test_run_uses_script_command(tmp_path):
    p = tmp_path / "s.cone"
    p.write_text("ring x, y, t; param t; poly f = x^2 - t^2;\ncommand coalesce --poly f;\n")
    code, rep = run(["run", str(p)])
    assert code == EXIT_FALSE
    assert rep["command"] == "coalesce"


def test_json_report_is_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    main(["internal-flat", "ex52.cone", "--seed", "1", "--json", str(out1)])
    main(["internal-flat", "ex52.cone", "--seed", "1", "--json", str(out2)])
    a, b = json.loads(out1.read_text()), json.loads(out2.read_text())
    for key in ("verdict", "witness", "gb_size", "seed", "notes"):
        assert key in a
    a.pop("stats"), b.pop("stats")
    assert a == b


def test_generated_test_ideal_used_when_none_bound(tmp_path):
    p = tmp_path / "g.cone"
    p.write_text("ring x, y, t; param t; ideal I = x^2, x*y, x*t;\n")
    code, rep = run(["internal-flat", str(p), "--seed", "2"])
    assert code == EXIT_FALSE and rep["witness_valid"]
    assert rep["seed"] == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "conelab.cli", "pd", "ex51_ts.ideal"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "pd: 5" in proc.stdout
