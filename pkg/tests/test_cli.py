import io
import json
import shutil
import subprocess
import sys

import pytest

from rickart import catalog
from rickart.cli import EXIT_AXIOM, EXIT_ERROR, EXIT_OK, EXIT_SIZE, main
from rickart.textio import resolve


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def verdicts(text):
    return {k: v["holds"] for k, v in json.loads(text)["verdicts"].items()}


def test_classify_zmod4():
    code, out, _ = run("classify", "zmod4", "--format", "json")
    assert code == EXIT_OK
    v = verdicts(out)
    assert v["generalized_rickart"] is True and v["rickart"] is False
    assert json.loads(out)["extras"]["catalog"]["matches"] is True


def test_classify_m2z3():
    code, out, _ = run("classify", "m2z3", "--format", "json")
    v = verdicts(out)
    assert code == EXIT_OK and v["pc"] is False and v["gc"] is False and v["parallelogram_law"] is False


def test_classify_quaternions_table():
    code, out, _ = run("classify", "quaternion-z2")
    assert code == EXIT_OK
    lines = dict(line.split(None, 1) for line in out.splitlines() if line.startswith(("rickart ", "generalized_rickart ")))
    assert lines["generalized_rickart"].startswith("true")
    assert lines["rickart"].startswith("false")


def test_classify_expression_and_file(tmp_path):
    f = tmp_path / "ring.txt"
    f.write_text("sum(zmod(2), zmod(3))\n")
    assert run("classify", str(f))[0] == EXIT_OK
    assert run("classify", "sum(zmod(2), zmod(3))")[0] == EXIT_OK


def test_reports_are_byte_identical_across_runs_and_threads():
    a = run("classify", "triangular-s3-z3", "--format", "json")[1]
    b = run("classify", "triangular-s3-z3", "--format", "json", "--threads", "4")[1]
    assert a == b
    assert run("prove", "zmod12")[1] == run("prove", "zmod12", "--threads", "3")[1]


def test_prove_zmod12_zero_product_check():
    code, out, _ = run("prove", "zmod12", "prop-2.3", "--format", "json")
    assert code == EXIT_OK
    [check] = json.loads(out)["checks"]
    assert check["status"] == "pass"
    assert ["2", "3"] in check["details"]["converse_counterexamples"]


def test_prove_unitify_demo_embedding_check():
    code, out, _ = run("prove", "unitify-demo", "thm-3")
    assert code == EXIT_OK and "[pass] thm-3" in out


def test_prove_m4z4_witness():
    path = str(resolve("data:m4z4_A.mat"))
    code, out, _ = run("prove", "m4z4", "--witness-mode", "--witness", path, "grp-absent", "--format", "json")
    assert code == EXIT_OK
    [check] = json.loads(out)["checks"]
    assert check["status"] == "pass"
    [stats] = check["details"]["scan"].values()
    assert stats["star_fixed_scanned"] == 4**10 and stats["certified"] == 0


def test_classify_m4z4_defaults_to_witness_mode():
    code, out, _ = run("classify", "m4z4", "--format", "json")
    d = json.loads(out)
    assert code == EXIT_OK and d["mode"] == "witness"
    assert d["verdicts"]["generalized_weakly_rickart"]["holds"] is False
    assert d["extras"]["catalog"]["matches"] is True


def test_prove_fail_sets_exit_code(tmp_path):
    w = tmp_path / "e12.mat"
    w.write_text("modulus 3\n0 1\n0 0\n")
    code, out, _ = run("prove", "m2z3", "--witness", str(w), "grp-absent")
    assert code == EXIT_ERROR and "[fail] grp-absent" in out


def test_witness_for_wrong_ring_is_rejected():
    path = str(resolve("data:m4z4_A.mat"))
    code, _, err = run("prove", "zmod4", "--witness", path, "grp-absent")
    assert code == EXIT_ERROR and "witness matrices need a matrix ring" in err


def test_too_large_exit_code_names_flag():
    code, _, err = run("classify", "matrix(zmod(4), 4)")
    assert code == EXIT_SIZE and "--max-scan" in err
    code, _, err = run("classify", "zmod(100)", "--max-scan", "50")
    assert code == EXIT_SIZE and "--max-scan" in err
    path = str(resolve("data:m4z4_A.mat"))
    code, _, err = run("classify", "m4z4", "--witness", path, "--max-star-scan", "10")
    assert code == EXIT_SIZE and "--max-star-scan" in err


def test_axiom_violation_exit_code(tmp_path):
    bad = tmp_path / "bad.ring"
    bad.write_text("size 2\nadd\n0 1\n1 0\nmul\n0 0\n0 1\nstar\n1 0\n")
    code, _, err = run("classify", f'cayley("{bad}")')
    assert code == EXIT_AXIOM and err.startswith("error: axiom violated")


def test_parse_error_has_line_and_column():
    code, _, err = run("classify", "matrix(zmod(3), ")
    assert code == EXIT_ERROR and err.startswith("error: parse error at 1:7:")
    code, _, err = run("classify", "zmod(3)\n+ 4")
    assert code == EXIT_ERROR and "parse error at 2:1:" in err
    code, _, err = run("classify", "matrix(zmod(3), )")
    assert code == EXIT_ERROR and "matrix takes 2 arguments" in err


def test_unknown_check_id_is_an_error():
    code, _, err = run("prove", "zmod4", "prop-0")
    assert code == EXIT_ERROR and "unknown check ids: prop-0" in err


def test_catalog_listing_order_and_contents():
    code, out, _ = run("catalog", "--format", "json")
    rows = json.loads(out)
    names = [r["name"] for r in rows]
    assert code == EXIT_OK and names == [e.name for e in catalog.ENTRIES]
    assert names[:4] == ["zmod4", "zmod12", "m2z3", "m4z4"]
    by = {r["name"]: r for r in rows}
    assert by["zmod4"]["expected"]["generalized_rickart"] and not by["zmod4"]["expected"]["rickart"]
    assert by["f2c2"]["expected"] == {"rickart": False, "generalized_rickart": True}
    assert "z4_even" in by["unitify-demo"]["expression"]
    assert by["m4z4"]["mode"] == "witness"
    text = run("catalog")[1]
    assert text.splitlines()[0].startswith("zmod4")


def test_hasse_command():
    code, out, _ = run("hasse", "zmod12")
    assert code == EXIT_OK and out.count("->") == 4


@pytest.mark.skipif(shutil.which("rickart") is None, reason="console script not installed")
def test_console_script_runs():
    proc = subprocess.run(["rickart", "classify", "zmod4", "--format", "json"], capture_output=True, text=True)
    assert proc.returncode == 0 and verdicts(proc.stdout)["generalized_rickart"] is True


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rickart.cli", "catalog"], capture_output=True, text=True)
    assert proc.returncode == 0 and "unitify-demo" in proc.stdout
