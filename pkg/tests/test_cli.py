"""End-to-end CLI tests: output formats, exit codes, env handling."""
import csv
import io
import json

import pytest

from pslb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "16")
    assert code == 0
    header, rows = parse_csv(out)
    assert header[0] == "count"
    assert len(rows) == 10
    assert rows[5][6:8] == ["5760", "1485"]
    assert rows[0][2] == ""  # blank cell -> empty CSV field


def test_table_json_blanks_are_null(capsys):
    code, out, _ = run(capsys, "table", "16", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"][0][2] is None
    assert payload["rows"][5][2] == 30030


def test_table_text_format(capsys):
    code, out, _ = run(capsys, "--format", "text", "table", "9")
    assert code == 0
    assert "even_class" in out


def test_invalid_table_number_exits_1(capsys):
    code, _, err = run(capsys, "table", "99")
    assert code == 1
    assert "error" in err


def test_figure_outputs(capsys):
    code, out, _ = run(capsys, "figure", "1")
    assert code == 0
    _, rows = parse_csv(out)
    assert rows[-1][1] == "30030"
    code, out, _ = run(capsys, "figure", "2", "--fit")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["mod_3", "slope", "intercept"]
    slopes = {int(r[0]): float(r[1]) for r in rows}
    assert slopes[0] > 2 * slopes[1] and slopes[0] > 2 * slopes[2]


def test_signature_command(capsys):
    code, out, _ = run(capsys, "signature", "2291")
    assert code == 0
    _, rows = parse_csv(out)
    assert ["29", "0", "non-core"] in rows


def test_signature_explicit_seeds(capsys):
    code, out, _ = run(capsys, "signature", "13", "--seeds", "2,3,5,7,11,13,17,19")
    assert code == 0
    _, rows = parse_csv(out)
    assert [r[1] for r in rows] == ["1", "1", "3", "6", "2", "0", "13", "13"]


def test_census_command(capsys):
    code, out, _ = run(capsys, "census", "--inner", "2310", "--outer", "30030")
    assert code == 0
    _, rows = parse_csv(out)
    assert len(rows) == 13
    assert rows[-1][10] == "465"   # cumulative true twins
    assert rows[-1][11] == "2517"  # cumulative new composites


def test_census_rejects_non_primorial(capsys):
    code, _, err = run(capsys, "census", "--inner", "2000", "--outer", "30030")
    assert code == 1
    assert "not a primorial" in err


def test_budget_exit_code_2(capsys):
    code, _, err = run(capsys, "census", "--inner", "2310", "--outer", "30030",
                       "--sieve-budget", "100")
    assert code == 2
    assert "budget" in err


def test_env_budget(capsys, monkeypatch):
    monkeypatch.setenv("PSLB_SIEVE_BUDGET", "100")
    code, _, _ = run(capsys, "census", "--inner", "2310", "--outer", "30030")
    assert code == 2


def test_flag_overrides_env_budget(capsys, monkeypatch):
    monkeypatch.setenv("PSLB_SIEVE_BUDGET", "100")
    code, _, _ = run(capsys, "census", "--inner", "2310", "--outer", "30030",
                     "--sieve-budget", "510510")
    assert code == 0


def test_goldbach_commands(capsys):
    code, out, _ = run(capsys, "goldbach", "68", "--pairs")
    assert code == 0
    _, rows = parse_csv(out)
    assert rows == [["7", "61"], ["31", "37"]]

    code, out, _ = run(capsys, "goldbach", "68", "--filter")
    assert code == 0
    _, rows = parse_csv(out)
    assert [r[0] for r in rows] == ["7", "31"]

    code, out, _ = run(capsys, "goldbach", "68")
    assert code == 0
    _, rows = parse_csv(out)
    assert rows[0][:4] == ["68", "7", "61", "case-2a"]

    code, _, _ = run(capsys, "goldbach", "7")
    assert code == 1


def test_twins_count(capsys):
    code, out, _ = run(capsys, "twins", "--below", "30030", "--count")
    assert code == 0
    _, rows = parse_csv(out)
    assert rows == [["30030", "1484", "465"]]


def test_twins_listing(capsys):
    code, out, _ = run(capsys, "twins", "--below", "100")
    assert code == 0
    _, rows = parse_csv(out)
    assert ["29", "31"] in rows
    assert ["3", "5"] not in rows  # excluded: 5 is adjacent to a core seed zero


def test_audit_command(capsys):
    code, out, _ = run(capsys, "audit", "--scale", "small")
    assert code == 0
    _, rows = parse_csv(out)
    assert len(rows) == 18
    assert all(r[1] in ("pass", "pass-with-caveat") for r in rows)


def test_audit_single_claim(capsys):
    code, out, _ = run(capsys, "audit", "T3", "--scale", "small")
    assert code == 0
    _, rows = parse_csv(out)
    assert len(rows) == 1 and rows[0][0] == "T3"


def test_cache_round_trip(capsys, tmp_path):
    path = str(tmp_path / "cache.sieve")
    code, out, _ = run(capsys, "cache", "build", "--limit", "50000", "--out-path", path)
    assert code == 0
    code, out, _ = run(capsys, "cache", "verify", path)
    assert code == 0
    _, rows = parse_csv(out)
    assert rows[0][1:] == ["50000", "5133"]


def test_cache_verify_corrupt(capsys, tmp_path):
    path = tmp_path / "cache.sieve"
    path.write_bytes(b"JUNKJUNKJUNKJUNK")
    code, _, err = run(capsys, "cache", "verify", str(path))
    assert code == 1
    assert "magic" in err


def test_out_file(capsys, tmp_path):
    path = tmp_path / "t9.csv"
    code, _, _ = run(capsys, "table", "9", "--out", str(path))
    assert code == 0
    assert path.read_text().startswith("even_class")


def test_precision_flag(capsys):
    code, out, _ = run(capsys, "scaffold", "two", "--precision", "2")
    assert code == 0
    _, rows = parse_csv(out)
    assert rows[0][6] == "0.69"
