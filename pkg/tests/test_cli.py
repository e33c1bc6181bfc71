import json
import subprocess
import sys

import pytest

from delsarte.cli import main, parse_bound_csv, emit_bound_csv, parse_range, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("2,4..6") == [2, 4, 5, 6]
    assert parse_range("3") == [3]
    for bad in ("", "a", "5..2", "1,,2"):
        with pytest.raises(UsageError):
            parse_range(bad)


def test_bound_classical_text(capsys):
    code, out, _ = run(capsys, "bound", "--q", "2", "--n", "4", "--d", "3")
    assert code == 0
    assert out.splitlines()[1].split() == ["2", "4", "3", "classical", "2", "8/3"]


def test_bound_cw_json(capsys):
    code, out, _ = run(capsys, "bound", "--q", "2", "--n", "4", "--d", "4", "--w", "2",
                       "--method", "cw", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data[0]["bound"] == 2 and data[0]["w"] == 2


def test_bound_distance_n_gives_q(capsys):
    _, out, _ = run(capsys, "bound", "--q", "3", "--n", "5", "--d", "5", "--format", "csv")
    header, rows = parse_bound_csv(out)
    assert rows == [["3", "5", "5", "", "classical", "3", "3/1"]]
    assert emit_bound_csv(header, rows) == out


def test_bound_csv_range(capsys):
    _, out, _ = run(capsys, "bound", "--q", "2", "--n", "5", "--d", "2..4", "--method",
                    "improved", "--format", "csv")
    header, rows = parse_bound_csv(out)
    assert header == ["q", "n", "d", "w", "method", "bound", "real_optimum"]
    assert [r[2] for r in rows] == ["2", "3", "4"]


def test_bound_warning(capsys):
    code, out, _ = run(capsys, "bound", "--q", "6", "--n", "2", "--d", "2")
    assert code == 0 and "warning" in out and "prime power" in out


@pytest.mark.parametrize("argv", [
    ["bound", "--q", "2", "--n", "4"],
    ["bound", "--q", "2", "--n", "4", "--d", "3", "--method", "cw"],
    ["bound", "--q", "2", "--n", "4", "--d", "3", "--w", "2"],
    ["bound", "--q", "1", "--n", "4", "--d", "3"],
    ["bound", "--q", "2", "--n", "4", "--d", "9"],
    ["bound", "--q", "2", "--n", "4", "--d", "3", "--pivot-limit", "0"],
    ["verify", "--suite", "delsarte", "--q", "4"],
    ["verify", "--suite", "nope"],
    ["constants", "--q", "3", "--n", "4"],
    ["frobnicate"],
])
def test_invalid_parameters_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("delsarte: error:")


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "delsarte", "--samples", "20", "--seed", "3")
    assert code == 0 and out.endswith("PASS\n")
    code, out, _ = run(capsys, "verify", "--suite", "prop21", "--p", "2,3", "--j-max", "3",
                       "--format", "json")
    assert code == 0 and all(e["pass"] for e in json.loads(out))


def test_verify_failure_exit_1(capsys, monkeypatch):
    from delsarte import suites
    from delsarte.code_oracle import VerificationReport

    def broken(**kwargs):
        rep = VerificationReport()
        rep.add("fake", {"k": 1}, "==", 1, 2)
        return rep
    monkeypatch.setitem(suites.SUITES, "cw", broken)
    code, out, _ = run(capsys, "verify", "--suite", "cw")
    assert code == 1 and "FAILED fake" in out and out.endswith("FAIL\n")


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", "--q", "3", "--n", "4", "--w", "2", "--M", "3",
                       "--k", "1", "--format", "json")
    c = json.loads(out)[0]
    assert code == 0 and (c["T1"], c["T2"], c["T3"], c["T"]) == ("16", "0", "4", "20")


def test_kraw_tables(capsys):
    _, out, _ = run(capsys, "kraw", "--q", "3", "--n", "4", "--format", "csv")
    _, out2, _ = run(capsys, "constants", "--q", "3", "--n", "4", "--kraw", "--format", "csv")
    assert out == out2
    assert "\n3,4,2,1,6/1," in out
    _, out, _ = run(capsys, "kraw", "--q", "2", "--n", "4", "--format", "csv")
    assert "\n2,4,2,1,0/1," in out


def test_output_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["verify", "--suite", "cw", "--samples", "15", "--seed", "9",
                     "--format", "json", "--output", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert a.read_bytes() == b.read_bytes()


def test_no_binary_parity_flag(capsys):
    _, with_parity, _ = run(capsys, "bound", "--q", "2", "--n", "6", "--d", "2", "--w", "3",
                            "--method", "cw", "--format", "csv")
    _, without, _ = run(capsys, "bound", "--q", "2", "--n", "6", "--d", "2", "--w", "3",
                        "--method", "cw", "--no-binary-parity", "--format", "csv")
    assert int(parse_bound_csv(with_parity)[1][0][5]) <= int(parse_bound_csv(without)[1][0][5])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "delsarte", "bound", "--q", "2", "--n", "4",
                           "--d", "3", "--format", "json"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)[0]["bound"] == 2
