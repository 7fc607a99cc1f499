import csv
import io
import json

import pytest

from nodalsurf.cli import (SWEEP_COLUMNS, consensus_compare, main,
                           rows_to_csv, sweep_rows)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_json(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--d", "8", "--a", "4",
                           "--primes", "65521,32749")
    assert code == 0
    payload = json.loads(out)
    assert payload["consensus"] is True
    assert payload["divergent_fields"] == []
    assert len(payload["reports"]) == 2
    rep = payload["reports"][0]
    assert rep["length"] == 28 and rep["defect_d"] == 1
    assert rep["ci_1_4_dm1"] is True
    # canonical serialization: sorted keys, indent 2
    assert out == json.dumps(payload, sort_keys=True, indent=2) + "\n"


def test_analyze_deterministic(capsys):
    args = ("analyze", "--d", "9", "--a", "4", "--primes", "8191")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_analyze_out_file(tmp_path, capsys):
    dest = tmp_path / "r.json"
    code, out, _ = run_cli(capsys, "analyze", "--d", "8", "--a", "4",
                           "--primes", "8191", "--out", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["consensus"] is True


@pytest.mark.parametrize("argv", [
    ("analyze",),                                  # missing --d/--a
    ("analyze", "--d", "8", "--a", "5"),           # a > d/2
    ("analyze", "--d", "8", "--a", "4", "--format", "yaml"),
    ("no-such-command",),
    (),
])
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 1
    assert err.strip()


def test_consensus_divergence_exit_2(capsys, monkeypatch):
    import nodalsurf.cli as climod
    real = climod.analyze

    def doctored(d, a, p, seed, kmax=None):
        rep = real(d, a, p, seed, kmax)
        if p == 8191:
            rep = dict(rep)
            rep["defect_d"] += 1
        return rep

    monkeypatch.setattr(climod, "analyze", doctored)
    code, out, _ = run_cli(capsys, "analyze", "--d", "8", "--a", "4",
                           "--primes", "65521,32749,8191")
    assert code == 2
    payload = json.loads(out)
    assert payload["consensus"] is False
    assert "defect_d" in payload["divergent_fields"]
    assert payload["minority_primes"]["defect_d"] == [8191]


def test_consensus_compare_unit():
    a = {"prime": 3, "x": 1}
    b = {"prime": 5, "x": 1}
    c = {"prime": 7, "x": 2}
    assert consensus_compare([a, b]) == (True, [], {})
    ok, div, minority = consensus_compare([a, b, c])
    assert not ok and div == ["x"] and minority == {"x": [7]}


def test_sweep_csv_shape_and_determinism(capsys):
    args = ("sweep", "--d", "8-9", "--a", "4", "--primes", "65521,8191")
    code, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert code == 0 and out1 == out2
    rows = list(csv.reader(io.StringIO(out1)))
    assert tuple(rows[0]) == SWEEP_COLUMNS
    assert len(rows) == 1 + 2 * 2  # header + (d,prime) grid
    cols = {name: i for i, name in enumerate(rows[0])}
    body = rows[1:]
    keys = [(int(r[cols["d"]]), int(r[cols["prime"]])) for r in body]
    assert keys == sorted(keys)
    for r in body:
        assert r[cols["error"]] == ""
        assert r[cols["ci_1_4_dm1"]] in ("0", "1")


def test_sweep_rows_error_flagging():
    rows = sweep_rows(8, 8, 4, [4], 7)  # 4 is not prime
    assert len(rows) == 1 and rows[0]["error"].startswith("ValueError")
    assert "error" in rows_to_csv(rows)


def test_hilbert_command(tmp_path, capsys):
    ideal = tmp_path / "ci.ideal"
    ideal.write_text("ring n=3 p=65521\nx0\nx1^2\nx2^3\n")
    code, out, _ = run_cli(capsys, "hilbert", "--ideal", str(ideal),
                           "--kmax", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k h_I(k) B_k"
    table = {int(k): int(h) for k, h, _ in
             (ln.split() for ln in lines[1:10])}
    # CI(1,2,3): h = 1,3,5,6,6,...
    assert [table[k] for k in range(5)] == [1, 3, 5, 6, 6]
    assert "length 6" in out
    assert "defect 3 " not in out  # no defects for this CI past its socle


def test_hilbert_missing_file(capsys):
    code, _, err = run_cli(capsys, "hilbert", "--ideal", "/nonexistent.ideal")
    assert code == 1 and err.strip()


def test_pullback_check_command(capsys):
    code, out, _ = run_cli(capsys, "pullback-check", "--d", "8", "--a", "4",
                           "--t", "2", "--k", "8", "--kmax", "12",
                           "--primes", "8191")
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["betti_law_ok"] is True


def test_verify_only_single_check(capsys):
    code, out, _ = run_cli(capsys, "verify", "--only", "alexander")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_unknown_only(capsys):
    code, _, err = run_cli(capsys, "verify", "--only", "zzz-nope")
    assert code == 1 and err.strip()
