"""CLI records, formats, exit codes, and flag behavior."""
import json
import os
import shutil
import subprocess

import pytest

from sturmian import config, fibonacci, verify_max_period
from sturmian.cli import main

FIB_PREFIX_25 = "abaababaabaababaababaabaa"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    recs = [json.loads(line) for line in out.splitlines() if line.strip()]
    return code, recs


def run_tsv(capsys, *argv):
    code, out = run(capsys, *argv)
    lines = [line for line in out.splitlines() if line]
    header = lines[0].split("\t")
    rows = [dict(zip(header, line.split("\t"))) for line in lines[1:]]
    return code, rows


def test_psi_record(capsys):
    code, recs = run_json(capsys, "psi", "abba")
    assert code == 0 and len(recs) == 1
    rec = recs[0]
    assert rec["command"] == "psi"
    assert rec["status"] == "ok"
    assert rec["inputs"] == {"directive": "abba"}
    assert rec["result"]["word"] == "ababaababa"
    assert rec["result"]["length"] == "10"
    assert rec["result"]["period"] == "5"
    assert rec["result"]["bcount"] == "4"
    assert rec["result"]["intrep"] == "[0,1,1,1,1,2,1,1,1,1]"
    assert rec["result"]["directive_intrep"] == "[0,1,2,1]"


def test_psi_empty_directive(capsys):
    code, recs = run_json(capsys, "psi", "")
    assert code == 0
    assert recs[0]["result"]["word"] == ""
    assert recs[0]["result"]["intrep"] == "[]"


def test_psi_rejects_bad_letters(capsys):
    code, recs = run_json(capsys, "psi", "abc")
    assert code == 2
    assert recs[0]["status"] == "error"
    assert recs[0]["error_kind"] == "ValueError"
    assert "message" in recs[0]["result"]


def test_stream_record(capsys):
    code, recs = run_json(capsys, "stream", "|ab", "25")
    assert code == 0
    rec = recs[0]
    assert rec["inputs"] == {"spec": "|ab", "prefix_len": "25"}
    assert rec["result"]["prefix"] == FIB_PREFIX_25
    assert rec["result"]["length"] == "25"
    assert "note" not in rec["result"]


def test_stream_non_characteristic_note(capsys):
    code, recs = run_json(capsys, "stream", "ab|a", "6")
    assert code == 0
    assert recs[0]["result"]["prefix"] == "abaaba"
    assert "does not recur" in recs[0]["result"]["note"]
    assert "'b'" in recs[0]["result"]["note"]


def test_stream_parse_and_range_errors(capsys):
    code, recs = run_json(capsys, "stream", "ab", "5")
    assert code == 2 and recs[0]["error_kind"] == "ValueError"
    code, recs = run_json(capsys, "stream", "|ab", "-3")
    assert code == 2 and recs[0]["error_kind"] == "ValueError"


def test_christoffel_record(capsys):
    code, recs = run_json(capsys, "christoffel", "5", "12", "--factor")
    assert code == 0
    res = recs[0]["result"]
    assert res["word"] == "aaabaabaaabaabaab"
    assert res["length"] == "17"
    assert res["slope"] == "5/12"
    assert res["w1"] == "aaabaab"
    assert res["w2"] == "aaabaabaab"
    assert res["p_inv"] == "7"
    assert res["q_inv"] == "10"


def test_christoffel_errors(capsys):
    code, recs = run_json(capsys, "christoffel", "2", "4")
    assert code == 2 and recs[0]["error_kind"] == "ValueError"
    code, recs = run_json(capsys, "christoffel", "1", "0", "--factor")
    assert code == 2 and recs[0]["error_kind"] == "ValueError"


def test_arith_operations(capsys):
    code, recs = run_json(capsys, "arith", "intrep", "bbabaa")
    assert code == 0 and recs[0]["result"]["intrep"] == "[2,1,1,2]"
    code, recs = run_json(capsys, "arith", "continuant", "[1,2,2,2]")
    assert code == 0 and recs[0]["result"]["value"] == "17"
    code, recs = run_json(capsys, "arith", "cf", "[0,2,2,2]")
    assert code == 0
    res = recs[0]["result"]
    assert res["value"] == "5/12" and res["num"] == "5" and res["den"] == "12"
    assert res["convergents"] == "0/1 1/2 2/5 5/12"
    code, recs = run_json(capsys, "arith", "slope", "aabba")
    assert code == 0 and recs[0]["result"]["slope"] == "5/12"
    code, recs = run_json(capsys, "arith", "length", "aabba")
    assert code == 0 and recs[0]["result"]["value"] == "17"
    code, recs = run_json(capsys, "arith", "period", "aabba")
    assert code == 0 and recs[0]["result"]["value"] == "7"


def test_arith_errors(capsys):
    code, recs = run_json(capsys, "arith", "cf", "[1,0,2]")
    assert code == 2 and recs[0]["error_kind"] == "ValueError"
    code, recs = run_json(capsys, "arith", "continuant", "nope")
    assert code == 2 and recs[0]["error_kind"] == "ValueError"
    code, recs = run_json(capsys, "arith", "intrep", "xyz")
    assert code == 2 and recs[0]["error_kind"] == "ValueError"


def test_verify_word_theorem_both_modes(capsys):
    code, recs = run_json(capsys, "verify", "max-period", "--n-max", "5")
    assert code == 0
    assert [r["inputs"]["order"] for r in recs] == ["1", "2", "3", "4", "5"]
    for rec in recs:
        n = int(rec["inputs"]["order"])
        lib = verify_max_period(n, "arithmetic")
        assert rec["result"]["maximum"] == str(lib.maximum) == str(fibonacci(n - 1))
        assert rec["result"]["argmax"] == " ".join(lib.argmax)
        assert rec["result"]["check"] == "full"
        assert rec["result"]["agreement"] == "true"
        assert rec["result"]["passed"] == "true"
    row4 = recs[3]["result"]
    assert row4["maximum"] == "5"
    assert row4["argmax"] == "abab abba baab baba"
    assert row4["argmax_size"] == "4"


def test_verify_single_mode_rows(capsys):
    code, recs = run_json(
        capsys, "verify", "max-bcount", "--n-max", "6", "--mode", "materialized"
    )
    assert code == 0
    assert all(r["result"]["check"] == "materialized" for r in recs)
    code, recs = run_json(
        capsys, "verify", "max-length", "--n-max", "6", "--mode", "arithmetic"
    )
    assert code == 0
    assert recs[-1]["result"]["maximum"] == str(fibonacci(7) - 2)


def test_verify_sampled_above_materialized_bound(capsys):
    # Order 15 sits above the materialized enumeration bound, so the route
    # agreement there is spot-checked on sampled directives.
    code, recs = run_json(capsys, "verify", "max-length", "--n-max", "15")
    assert code == 0
    by_order = {r["inputs"]["order"]: r["result"] for r in recs}
    assert by_order["14"]["check"] == "full"
    assert by_order["15"]["check"] == "sampled"
    assert by_order["15"]["agreement"] == "true"
    assert by_order["15"]["maximum"] == str(fibonacci(16) - 2)


def test_verify_continuant_rows(capsys):
    code, recs = run_json(capsys, "verify", "continuant-max", "--n-max", "8")
    assert code == 0
    for rec in recs:
        n = int(rec["inputs"]["order"])
        assert rec["result"]["maximum"] == str(fibonacci(n + 1))
        assert rec["result"]["passed"] == "true"
    assert recs[2]["result"]["argmax"] == "[0,1,1] [1,1]"
    code, recs = run_json(capsys, "verify", "period-continuant-max", "--n-max", "8")
    assert code == 0
    for rec in recs:
        n = int(rec["inputs"]["order"])
        assert rec["result"]["maximum"] == str(fibonacci(n - 1))
        assert rec["result"]["argmax_size"] in ("2", "4")


def test_verify_scalar_theorems(capsys):
    code, recs = run_json(capsys, "verify", "fib-lemma", "--n-max", "5")
    assert code == 0 and len(recs) == 5
    assert all(r["result"]["passed"] == "true" for r in recs)
    code, recs = run_json(capsys, "verify", "harmonic", "--n-max", "8")
    assert code == 0
    assert recs[7]["result"]["period"] == str(fibonacci(7))
    assert recs[7]["result"]["modulus"] == str(fibonacci(9))
    code, recs = run_json(capsys, "verify", "central-count", "--n-max", "6")
    assert code == 0 and len(recs) == 7
    assert [r["result"]["count"] for r in recs] == ["1", "2", "2", "4", "2", "6", "4"]


def test_verify_streams(capsys):
    code, recs = run_json(capsys, "verify", "streams", "--n-max", "6")
    assert code == 0 and len(recs) == 6
    assert recs[0]["result"]["bcount"] == "-"
    assert recs[5]["result"]["bcount"] == str(fibonacci(5) - 1)
    assert all(r["result"]["passed"] == "true" for r in recs)


def test_verify_bound_exceeded(capsys):
    code, recs = run_json(
        capsys, "verify", "continuant-max", "--n-max", "23", "--bound", "5"
    )
    assert code == 2
    assert len(recs) == 7
    assert recs[-1]["error_kind"] == "BoundExceededError"
    assert all(r["status"] == "ok" for r in recs[:-1])
    code, recs = run_json(
        capsys, "verify", "max-period", "--n-max", "15", "--mode", "materialized"
    )
    assert code == 2
    assert recs[-1]["error_kind"] == "BoundExceededError"


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    import sturmian.oracle as oracle_mod

    monkeypatch.setattr(oracle_mod, "fib_lemma_holds_at", lambda n: False)
    code, recs = run_json(capsys, "verify", "fib-lemma", "--n-max", "3")
    assert code == 1
    assert all(r["result"]["passed"] == "false" for r in recs)
    assert all(r["status"] == "ok" for r in recs)


def test_tsv_matches_json(capsys):
    code_j, recs = run_json(capsys, "verify", "harmonic", "--n-max", "4")
    code_t, rows = run_tsv(
        capsys, "verify", "harmonic", "--n-max", "4", "--format", "tsv"
    )
    assert code_j == code_t == 0
    assert len(rows) == len(recs) == 4
    for rec, row in zip(recs, rows):
        assert row["command"] == rec["command"]
        assert row["status"] == rec["status"]
        for k, v in rec["inputs"].items():
            assert row[f"inputs.{k}"] == v
        for k, v in rec["result"].items():
            assert row[f"result.{k}"] == v


def test_tsv_error_record(capsys):
    code, rows = run_tsv(capsys, "christoffel", "2", "4", "--format", "tsv")
    assert code == 2
    assert rows[0]["status"] == "error"
    assert rows[0]["error_kind"] == "ValueError"


def test_elision_and_full(capsys):
    directive = "ab" * 8
    code, recs = run_json(capsys, "psi", directive)
    assert code == 0
    word = recs[0]["result"]["word"]
    assert len(word) == 120 and word.endswith("...")
    assert recs[0]["result"]["length"] == str(fibonacci(17) - 2)
    code, recs = run_json(capsys, "psi", directive, "--full")
    full_word = recs[0]["result"]["word"]
    assert len(full_word) == fibonacci(17) - 2
    assert full_word.startswith(word[:117])


def test_max_word_len_flag(capsys):
    code, recs = run_json(capsys, "stream", "|ab", "100", "--max-word-len", "20")
    assert code == 2
    assert recs[0]["error_kind"] == "MaterializationLimitError"
    # The override must not leak into the process after the invocation.
    assert config._override is None
    if "STURMIAN_MAX_WORD_LEN" not in os.environ:
        assert config.max_word_len() == config.DEFAULT_MAX_WORD_LEN
    code, recs = run_json(capsys, "stream", "|ab", "100")
    assert code == 0 and recs[0]["result"]["length"] == "100"


def test_usage_errors_exit_2(capsys):
    assert main(["psi"]) == 2
    assert main(["verify", "no-such-theorem"]) == 2
    assert main([]) == 2
    capsys.readouterr()


def test_console_entry_point():
    exe = shutil.which("sturmian")
    assert exe, "console script not installed"
    proc = subprocess.run(
        [exe, "verify", "harmonic", "--n-max", "4", "--format", "tsv"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    header = proc.stdout.splitlines()[0].split("\t")
    assert header[0] == "command"
    assert "result.passed" in header
