import io
import json
import subprocess
import sys

import pytest

from sylvester.cli import main, parse_s_values
from sylvester.oracle import dp_count
from sylvester.poly import poly_eval
from sylvester.waves import quasipoly_from_json


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "d, s, expected", [("1,2,3", "6", "7"), ("1", "100", "1"), ("2,4", "3", "0")]
)
def test_eval(d, s, expected):
    assert run("eval", "-d", d, "-s", s) == (0, expected + "\n")


def test_eval_check_and_range():
    code, out = run("eval", "-d", "1,2,3", "-s", "0..8", "--check")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 9
    assert lines[6] == "6: 7 MATCH"
    assert all(line.endswith("MATCH") for line in lines)


def test_eval_json():
    code, out = run("eval", "-d", "1,2", "-s", "4,5", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "generators": [1, 2],
        "values": [{"s": 4, "value": "3"}, {"s": 5, "value": "3"}],
    }


def test_eval_power_syntax():
    assert run("eval", "-d", "1", "-s", "10^6") == (0, "1\n")


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "-d", "0,2", "-s", "3"),
        ("eval", "-d", "a,b", "-s", "3"),
        ("eval", "-d", "1,2", "-s", "-3"),
        ("eval", "-d", "1,2", "-s", "5..2"),
        ("eval", "-d", "1,2"),
        ("verify", "-d", "1,2", "-H", "-1"),
        ("frobnicate",),
    ],
)
def test_usage_errors(argv, capsys):
    assert main(list(argv), out=io.StringIO()) == 2


def test_cap_error(capsys):
    code, _ = run("eval", "-d", "7,1,2,3", "-s", "3", "--cap", "100")
    assert code == 3
    assert "7^3" in capsys.readouterr().err


def test_quasipoly_json():
    code, out = run("quasipoly", "-d", "1,2")
    assert code == 0
    data = json.loads(out)
    assert data["period"] == 2
    assert data["classes"] == [["1", "1/2"], ["1/2", "1/2"]]
    assert run("quasipoly", "-d", "1")[1] == (
        '{"generators": [1], "period": 1, "degree_bound": 0, "classes": [["1"]]}\n'
    )


@pytest.mark.parametrize("d", ["1,2", "1,2,3", "2,4", "6,10,15", "1,1,2"])
def test_quasipoly_roundtrip_against_dp(d):
    code, out = run("quasipoly", "-d", d, "--waves")
    assert code == 0
    g, q, waves = quasipoly_from_json(json.loads(out))
    assert set(waves) == set(g.wave_indices())
    table = dp_count(200, g.d)
    for s in range(201):
        assert q(s) == table[s]
        assert sum(poly_eval(w.classes[s % w.period], s) for w in waves.values()) == table[s]


def test_quasipoly_text():
    code, out = run("quasipoly", "-d", "1,2", "--format", "text", "--waves")
    assert code == 0
    assert "s = 0 mod 2: 1/2*s + 1" in out
    assert "W_2, period 2" in out


@pytest.mark.parametrize(
    "d, H", [("1,2,3", "100"), ("2,4", "100"), ("1,2,3,4,5", "60"), ("1,1,2", "40")]
)
def test_verify_passes(d, H):
    code, out = run("verify", "-d", d, "-H", H)
    assert code == 0, out
    assert out.splitlines()[-1] == "OK: 0 failing check(s)"
    assert "FAIL" not in out


def test_verify_threads_deterministic():
    a = run("verify", "-d", "2,3,5", "-H", "80")
    b = run("verify", "-d", "2,3,5", "-H", "80", "--threads", "4")
    assert a == b
    assert a[0] == 0


def test_verify_reports_failure(monkeypatch):
    import sylvester.cli as cli

    real = cli.dp_count

    def broken(s_max, d):
        table = real(s_max, d)
        counts = list(table.counts)
        counts[7] += 1
        return type(table)(table.d, table.s_max, tuple(counts))

    monkeypatch.setattr(cli, "dp_count", broken)
    code, out = run("verify", "-d", "1,2", "-H", "20")
    assert code == 1
    assert "FAIL oracle" in out
    assert "counterexample: s=7 closed form 4 dp 5 series 4" in out


def test_deterministic_output():
    for argv in [("quasipoly", "-d", "2,3,5", "--waves"), ("eval", "-d", "1,2,3", "-s", "0..30")]:
        assert run(*argv) == run(*argv)


def test_bench(capsys):
    code, out = run("bench", "-d", "1,2,3", "-s", "10,1000,10^5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "s,closed_form_seconds,dp_seconds,agree"
    assert [line.split(",")[0] for line in lines[1:]] == ["10", "1000", "100000"]
    assert all(line.endswith(",true") for line in lines[1:])


def test_parse_s_values():
    assert parse_s_values("3") == [3]
    assert parse_s_values("2^3,0..2") == [8, 0, 1, 2]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sylvester", "eval", "-d", "1,2,3", "-s", "6"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "7\n"
