import json
import subprocess
import sys

import numpy as np
import pytest

from carlitz_cdu.carlitz import inverse_map, save_permutation
from carlitz_cdu.cli import main, parse_degrees
from carlitz_cdu.field import make_field
from carlitz_cdu.scan import (
    ScanConfig,
    TableResult,
    car3_grid,
    full_grid,
    parse_c,
    run_compute,
    run_table,
    run_verify,
)


def test_scan_config_validation():
    with pytest.raises(ValueError):
        ScanConfig(n=13)
    assert ScanConfig(n=13, allow_large=True).n == 13
    with pytest.raises(ValueError):
        ScanConfig(n=5, table_id=3)
    with pytest.raises(ValueError):
        ScanConfig(n=4, table_id=4)
    with pytest.raises(ValueError):
        ScanConfig(n=4, output_format="xml")
    with pytest.raises(ValueError):
        ScanConfig(n=4, jobs=0)


def test_table_result_formats():
    r = TableResult(1, 4, {"3": 32, "4": 164, "5": 0})
    assert r.to_csv() == "n,label,count\n4,3,32\n4,4,164\n4,5,0\n"
    assert json.loads(r.to_json()) == {"table_id": 1, "n": 4, "rows": {"3": 32, "4": 164, "5": 0}}


def test_table1_n4():
    res = run_table(ScanConfig(n=4))
    assert res.rows == {"3": 32, "4": 164, "5": 0}
    assert sum(res.rows.values()) == 14 * 14


@pytest.mark.parametrize("n", [4, 5, 6])
def test_grid_independent_of_jobs(n):
    F = make_field(n)
    els = range(2, F.order)
    serial = car3_grid(F, els, els, jobs=1)
    assert np.array_equal(serial, car3_grid(F, els, els, jobs=3))
    assert np.array_equal(serial, full_grid(F))
    assert run_table(ScanConfig(n=n, jobs=1)).to_csv() == run_table(ScanConfig(n=n, jobs=2)).to_csv()


def test_early_exit_caps_grid():
    F = make_field(5)
    els = range(2, F.order)
    capped = car3_grid(F, els, els, threshold=4)
    full = full_grid(F)
    assert np.array_equal(capped[full < 4], full[full < 4])
    assert np.all((capped[full >= 4] >= 4) & (capped[full >= 4] <= full[full >= 4]))


def test_table_rows_under_other_modulus():
    assert run_table(ScanConfig(n=4, modulus=0b11001)).rows == run_table(ScanConfig(n=4)).rows


def test_table3_n4_rows():
    res = run_table(ScanConfig(n=4, table_id=3))
    assert res.rows["value3"] == 4 and res.rows["corollary"] == 0
    assert res.rows["value3_pairs"] == 8


def test_parse_c():
    F = make_field(4)
    assert parse_c(F, "all") == list(range(2, 16))
    assert parse_c(F, "0x2") == [2]
    with pytest.raises(ValueError):
        parse_c(F, "0x10")


def test_run_compute_sources(tmp_path):
    F = make_field(4)
    reps = run_compute(F, gamma=0b0110, c="all")
    assert [r.c for r in reps] == list(range(2, 16))
    assert {r.max_count for r in reps} <= {3, 4}
    two = run_compute(make_field(2), gamma=0b10, c="all")
    assert [r.max_count for r in two] == [1, 1]
    path = tmp_path / "inv.txt"
    save_permutation(inverse_map(F), path)
    assert run_compute(F, sbox=str(path), c="0x2")[0].max_count == 3
    assert run_compute(F, coeffs=[1, 0, 0], c="0x2")[0].max_count == 3
    with pytest.raises(ValueError):
        run_compute(F, gamma=2, coeffs=[1, 0, 0])
    with pytest.raises(ValueError):
        run_compute(F, gamma=0x20)


def test_run_verify_domain_and_seed():
    assert run_verify("cf4", [5]) == []
    assert run_verify("rank_bound", [4], seed=3) == run_verify("rank_bound", [4], seed=3)
    with pytest.raises(ValueError):
        run_verify("nope", [4])
    with pytest.raises(ValueError):
        run_verify("inv", [4, 5], modulus=0x13)


def test_parse_degrees():
    assert parse_degrees("6") == [6]
    assert parse_degrees("4-8") == [4, 5, 6, 7, 8]
    assert parse_degrees("4,6,8-9") == [4, 6, 8, 9]


# -- the command line ---------------------------------------------------------------


def test_cli_table_csv(capsys):
    assert main(["table", "--n", "4", "--table", "1"]) == 0
    assert capsys.readouterr().out == "n,label,count\n4,3,32\n4,4,164\n4,5,0\n"


def test_cli_table_json(capsys):
    assert main(["table", "--n", "5", "--table", "2", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["rows"] == {"value3": 10, "corollary": 0}


def test_cli_verify_pass(capsys):
    assert main(["verify", "--suite", "inv", "--n", "4-5"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["# suite=inv n=4,5 verdicts=44 failed=0"]


def test_cli_verify_all_lines(capsys):
    assert main(["verify", "--suite", "cf4", "--n", "4", "--all"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 5 and all(l.endswith("PASS") for l in lines[:4])


def test_cli_verify_failure_exit(capsys):
    assert main(["verify", "--suite", "af4", "--n", "4"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "failed=0" not in out


def test_cli_compute_json(capsys):
    assert main(["compute", "--n", "4", "--gamma", "0x6", "--c", "0x2"]) == 0
    recs = json.loads(capsys.readouterr().out)
    assert len(recs) == 1 and recs[0]["c"] == "0x2" and recs[0]["complete"]


def test_cli_compute_csv_sbox(tmp_path, capsys):
    path = tmp_path / "inv.txt"
    save_permutation(inverse_map(make_field(4)), path)
    assert main(["compute", "--n", "4", "--sbox", str(path), "--c", "0x2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "c,max_count,witness_a,witness_b,spectrum"
    assert lines[1].startswith("0x2,3,")


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--n", "4", "--modulus", "0x11"],
        ["table", "--n", "5", "--table", "3"],
        ["table", "--n", "14"],
        ["compute", "--n", "4", "--gamma", "0x1"],
        ["compute", "--n", "4", "--sbox", "/nonexistent/file"],
        ["compute", "--n", "4", "--coeffs", "0,1,1"],
        ["verify", "--suite", "inv", "--n", "4,5", "--modulus", "0x13"],
    ],
)
def test_cli_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_cli_non_permutation_sbox(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("\n".join(["0x1"] + ["0x1"] + [hex(i) for i in range(2, 16)]))
    assert main(["compute", "--n", "4", "--sbox", str(path)]) == 2
    assert "0x1 repeated" in capsys.readouterr().err


def test_cli_argparse_error():
    with pytest.raises(SystemExit) as exc:
        main(["table"])
    assert exc.value.code == 2


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "carlitz_cdu", "table", "--n", "4"],
        capture_output=True, text=True, check=True,
    ).stdout
    assert out.splitlines()[1] == "4,3,32"
