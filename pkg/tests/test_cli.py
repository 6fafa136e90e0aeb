"""Command-line surface: document shapes, exit codes, determinism.

Most tests drive main() in-process and parse the JSON it prints; one
subprocess check confirms the installed entry point works end to end.
"""

import json
import subprocess
import sys

import pytest

from blockcheb import __version__
from blockcheb.cli import main
from blockcheb.documents import build_document, to_bfile
from blockcheb.polyfamily import P_FAMILY


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _run_json(capsys, *argv):
    code, out, err = _run(capsys, *argv)
    assert err == ""
    return code, json.loads(out)


def test_installed_entry_point():
    proc = subprocess.run(["blockcheb", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == f"blockcheb {__version__}"


def test_triangle_json(capsys):
    code, payload = _run_json(capsys, "triangle", "--max-n", "4")
    assert code == 0
    assert payload["kind"] == "triangle"
    assert (payload["m"], payload["p"]) == (2, 2)
    assert payload["rows"][2] == {"n": 4, "coeffs": ["1", "0", "-5", "0", "4"]}


def test_triangle_csv(capsys):
    code, out, _ = _run(capsys, "triangle", "--max-n", "3", "--format", "csv")
    assert code == 0
    assert out.startswith("# blockcheb triangle m=2 p=2")
    assert out.splitlines()[1] == "2,0,0,1"


def test_triangle_deterministic(capsys):
    _, first, _ = _run(capsys, "triangle", "--max-n", "8")
    _, second, _ = _run(capsys, "triangle", "--max-n", "8")
    assert first == second


def test_export_bfile_stdout(capsys):
    code, out, _ = _run(capsys, "export", "--max-n", "5")
    assert code == 0
    assert out == to_bfile(build_document(P_FAMILY, 5))
    assert out.startswith("1 0\n2 0\n3 1\n")


def test_export_to_file(capsys, tmp_path):
    target = tmp_path / "u.bfile"
    code, out, _ = _run(capsys, "export", "--m", "0", "--p", "2",
                        "--max-n", "3", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8") == \
        "1 1\n2 0\n3 2\n4 -1\n5 0\n6 4\n7 0\n8 -4\n9 0\n10 8\n"


def test_triangle_cache_dir(capsys, tmp_path):
    code, payload = _run_json(capsys, "triangle", "--max-n", "5",
                              "--cache-dir", str(tmp_path))
    assert code == 0
    assert (tmp_path / "triangle_m2_p2.json").exists()
    assert payload["rows"][-1]["n"] == 5


def test_poly_pretty(capsys):
    code, payload = _run_json(capsys, "poly", "--n", "3")
    assert code == 0
    assert payload["pretty"] == "2x^3 - 2x"
    assert payload["coeffs"] == ["0", "-2", "0", "2"]


def test_eval_exact_zero(capsys):
    code, payload = _run_json(capsys, "eval", "--n", "6", "--x", "1")
    assert code == 0
    assert payload["exact"] == "0"
    assert payload["decimal"] == 0.0


def test_eval_exact_fraction(capsys):
    # --x=-1/2 because argparse reads a separate "-1/2" as a flag
    code, payload = _run_json(capsys, "eval", "--n", "6", "--x=-1/2")
    assert code == 0
    assert payload["exact"] == "3/4"
    assert payload["decimal"] == 0.75


def test_zeros_closed_form_labels(capsys):
    code, payload = _run_json(capsys, "zeros", "--n", "4")
    assert code == 0
    assert payload["method"] == "closed-form"
    assert [r["exact"] for r in payload["roots"]] == \
        ["-1", "-1/2", "1/2", "1"]
    assert [r["multiplicity"] for r in payload["roots"]] == [1, 1, 1, 1]


def test_zeros_numeric_fallback_below_closed_form(capsys):
    # The closed form starts at n = 3; the double root of row 2 comes
    # from the numeric route instead of an error.
    code, payload = _run_json(capsys, "zeros", "--n", "2")
    assert code == 0
    assert payload["method"] == "numeric"
    assert payload["roots"] == [{"decimal": 0.0, "multiplicity": 2}]


def test_zeros_numeric_method(capsys):
    code, payload = _run_json(capsys, "zeros", "--n", "5", "--method",
                              "numeric")
    assert code == 0
    assert payload["method"] == "numeric"
    assert len(payload["roots"]) == 5


def test_extrema_values(capsys):
    code, payload = _run_json(capsys, "extrema", "--n", "3")
    assert code == 0
    points = payload["points"]
    assert len(points) == 4
    assert points[0]["x"] == 1.0 and points[0]["value"] == 0.0
    assert points[1]["value"] == pytest.approx(-4 / (3 * 3 ** 0.5),
                                               abs=1e-12)
    assert points[2]["value"] == pytest.approx(4 / (3 * 3 ** 0.5),
                                               abs=1e-12)


def test_gram_band_summary(capsys):
    code, payload = _run_json(capsys, "gram", "--range", "3..6")
    assert code == 0
    assert payload["weight"] == -1
    assert payload["bandSummary"] == {"0": "1/4*pi", "2": "-1/8*pi"}
    diag = payload["bands"]["0"]
    assert diag["uniform"] is True
    assert diag["value"]["exact"] == "1/4*pi"
    assert all("numeric" in e for e in payload["entries"])


def test_gram_no_numeric(capsys):
    code, payload = _run_json(capsys, "gram", "--range", "3..5",
                              "--no-numeric")
    assert code == 0
    assert all("numeric" not in e for e in payload["entries"])


def test_verify_errata_suite(capsys):
    code, payload = _run_json(capsys, "verify", "--suite", "errata")
    assert code == 0
    assert [c["status"] for c in payload["checks"]] == \
        ["erratum-confirmed"] * 3


def test_verify_failing_suite_exit_code(capsys):
    code, payload = _run_json(capsys, "verify", "--suite", "constructions")
    assert code == 1
    statuses = {c["checkId"]: c["status"] for c in payload["checks"]}
    assert statuses["construction-four-way-p2"] == "pass"
    assert statuses["reduction-printed"] == "fail"


def test_oracle_command(capsys):
    code, payload = _run_json(capsys, "oracle", "--max-ground", "8")
    assert code == 0
    assert payload["checked"] == 843
    assert payload["mismatches"] == []


def test_config_errors_exit_2(capsys):
    code, out, err = _run(capsys, "eval", "--n", "1", "--x", "0")
    assert code == 2
    assert out == ""
    assert err.startswith("error:")
    code, _, err = _run(capsys, "gram", "--range", "35")
    assert code == 2
    assert "3..8" in err


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit):
        main([])
    assert "usage" in capsys.readouterr().err
