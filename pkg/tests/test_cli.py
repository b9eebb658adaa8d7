import json
import subprocess
import sys

import pytest

from m2alg.cli import main


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(args, capsys):
    code, out, err = run_cli(args, capsys)
    return code, json.loads(out), err


def test_structure_golden_2_1(capsys):
    code, record, _ = run_json(["structure", "2", "1"], capsys)
    assert code == 0
    assert record["schema_version"] == 1
    result = record["result"]
    assert result["reduced_basis"] == ["s + 1", "t - 1"]
    assert result["dimension"] == 1
    assert result["standard_monomials"] == ["1"]
    assert result["trivial"] is False


def test_structure_golden_4_3(capsys):
    code, record, _ = run_json(["structure", "4", "3"], capsys)
    assert code == 0
    result = record["result"]
    assert result["reduced_basis"] == ["s + 1", "t^3 - t^2 - 2*t + 1"]
    assert result["dimension"] == 3
    assert result["standard_monomials"] == ["1", "t", "t^2"]


def test_structure_infinite(capsys):
    code, record, _ = run_json(["structure", "1", "1"], capsys)
    assert code == 0
    assert record["result"]["dimension"] == "infinite"
    assert record["result"]["reduced_basis"] == ["t"]


def test_decide_golden(capsys):
    code, record, _ = run_json(["decide", "4", "3", "--field", "q"], capsys)
    assert code == 0
    assert record["result"]["verdict"] is False
    code, record, _ = run_json(
        ["decide", "2", "2", "--field", "fp", "--p", "3"], capsys
    )
    assert code == 0
    assert record["result"]["verdict"] is True


def test_decide_f2(capsys):
    code, record, _ = run_json(["decide", "2", "1", "--field", "f2"], capsys)
    assert code == 0
    assert record["result"]["verdict"] is True


def test_reduce_command(capsys):
    code, record, _ = run_json(["reduce", "2", "1", "x^2*y + y*x"], capsys)
    assert code == 0
    assert record["result"]["normal_form"] == "1"
    assert record["result"]["model_checked"] is True


def test_witness_command(capsys):
    code, record, _ = run_json(["witness", "2", "1"], capsys)
    assert code == 0
    assert record["result"]["relations_verified"] is True
    assert record["result"]["X"] == [["1", "-1"], ["1", "0"]]


def test_oracle_command(capsys):
    code, record, _ = run_json(["oracle", "2", "1", "--p", "2"], capsys)
    assert code == 0
    assert record["result"]["found"] is True
    assert record["result"]["verified"] is True
    assert record["result"]["x"] == [["0", "1"], ["1", "1"]]


def test_oracle_full_mode(capsys):
    code, record, _ = run_json(["oracle", "2", "2", "--p", "3", "--full"], capsys)
    assert code == 0
    assert record["result"]["details"]["full_agrees"] is True


def test_verify_command(capsys):
    code, record, _ = run_json(["verify", "2", "1", "--nmax", "2"], capsys)
    assert code == 0
    assert record["result"]["ok"] is True


def test_table_with_oracle(capsys):
    code, out, err = run_cli(
        ["table", "--field", "fp", "--p", "3", "--max", "6", "--oracle", "--threads", "1"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 36
    rows = [json.loads(line) for line in lines]
    assert all(row["agrees"] for row in rows)
    assert rows[0]["i"] == 1 and rows[0]["j"] == 1


def test_table_field_q(capsys):
    code, out, _ = run_cli(["table", "--field", "q", "--max", "5", "--threads", "1"], capsys)
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 25
    verdicts = {(r["i"], r["j"]): r["verdict"] for r in rows}
    assert verdicts[(4, 3)] is False
    assert verdicts[(1, 2)] is True


def test_table_deterministic(capsys):
    args = ["table", "--field", "fp", "--p", "3", "--max", "5", "--oracle", "--threads", "1"]
    _, out1, _ = run_cli(args, capsys)
    _, out2, _ = run_cli(args, capsys)
    assert out1 == out2


def test_table_threads_matches_serial(capsys):
    serial = ["table", "--field", "fp", "--p", "3", "--max", "6", "--threads", "1"]
    parallel = ["table", "--field", "fp", "--p", "3", "--max", "6", "--threads", "2"]
    _, out1, _ = run_cli(serial, capsys)
    _, out2, _ = run_cli(parallel, capsys)
    assert out1 == out2


def test_usage_errors_exit_2(capsys):
    for args in (
        ["structure", "4", "2"],
        ["decide", "1", "1", "--field", "fp"],  # missing --p
        ["decide", "1", "1", "--field", "fp", "--p", "9"],
        ["oracle", "1", "1", "--p", "8"],
        ["reduce", "2", "1", "x^"],
        ["decide", "0", "1"],
    ):
        with pytest.raises(SystemExit) as exc:
            main(args)
        assert exc.value.code == 2, args
        capsys.readouterr()


def test_verbose_writes_to_stderr(capsys):
    code, out, err = run_cli(["decide", "4", "3", "--verbose"], capsys)
    assert code == 0
    assert "member" in err
    json.loads(out)  # stdout stays pure JSON


def test_selftest_smoke(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "primes_enum": [3],
                "enum_max": 6,
                "z2_max": 8,
                "q_max": 10,
                "q_witness_max": 6,
                "structure_max_i": 3,
                "rewrite_pairs": [[1, 1], [2, 1]],
                "rewrite_words": 25,
                "rewrite_max_len": 7,
                "corollary_p3_max": 12,
                "pi_samples": 10,
            }
        )
    )
    code, record, err = run_json(["selftest", "--config", str(cfg)], capsys)
    assert code == 0
    assert record["result"]["ok"] is True
    assert all(c["ok"] for c in record["result"]["checks"])
    assert "PASS" in err


def test_cli_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "m2alg.cli", "decide", "4", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    record = json.loads(proc.stdout)
    assert record["result"]["verdict"] is False


def test_table_matches_documented_example(capsys):
    # the 24x24 sweep over Z_3 with oracle column: 576 rows, all agreeing
    code, out, _ = run_cli(
        ["table", "--field", "fp", "--p", "3", "--max", "24", "--oracle", "--threads", "1"],
        capsys,
    )
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 576
    assert all(row["agrees"] for row in rows)


def test_selftest_failure_exits_nonzero(capsys, monkeypatch):
    import m2alg.cli as cli_mod

    monkeypatch.setattr(
        cli_mod,
        "_selftest_checks",
        lambda cfg: [("always-fails", lambda: False), ("raises", _boom)],
    )
    code = main(["selftest"])
    captured = capsys.readouterr()
    assert code == 1
    assert "FAIL" in captured.err
    record = json.loads(captured.out)
    assert record["result"]["ok"] is False


def _boom():
    raise RuntimeError("synthetic failure")
