import io
import json
import os

import pytest

from dyckmotz.cli import main


def test_enumerate_text(capsys):
    assert main(["enumerate", "--family", "constrained", "--n", "3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["UUUDDD", "UUDUDD", "UUDDUD", "UDUDUD"]


def test_enumerate_csv(capsys):
    assert main(["enumerate", "--n", "2", "--format", "csv"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["index,path", "0,UUDD", "1,UDUD"]


def test_enumerate_json(capsys):
    assert main(["--format", "json", "enumerate", "--family", "motzkin",
                 "--n", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == ["UD", "FF"]


def test_map_forward_and_inverse(capsys):
    assert main(["map", "UUDUDD", "UUUDDD"]) == 0
    assert capsys.readouterr().out.splitlines() == ["FUD", "UFD"]
    assert main(["map", "--direction", "inverse", "FUD"]) == 0
    assert capsys.readouterr().out.splitlines() == ["UUDUDD"]


def test_map_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("UDUDUD\n\nUUDDUD\n"))
    assert main(["map"]) == 0
    assert capsys.readouterr().out.splitlines() == ["FFF", "UDF"]


def test_map_csv_keeps_input_column(capsys):
    assert main(["map", "--format", "csv", "UD"]) == 0
    assert capsys.readouterr().out.splitlines() == ["input,image", "UD,F"]


def test_map_rejects_bad_path(capsys):
    assert main(["map", "UDUUDD"]) == 2
    assert "dyckmotz:" in capsys.readouterr().err


def test_count(capsys):
    assert main(["count", "--pattern", "UF+D", "--path", "UFDUFFD"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["count", "--pattern", "delta", "--path", "FFFF",
                 "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 1


def test_count_rejects_bad_pattern(capsys):
    assert main(["count", "--pattern", "^UD$", "--path", "UD"]) == 2


def test_check_transport_single(capsys):
    assert main(["check-transport", "--rule", "DUD", "--max-n", "6"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("ok")
    assert "DUD" in out


def test_check_transport_all(capsys):
    assert main(["check-transport", "--all", "--max-n", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 15
    assert all(line.startswith("ok") for line in lines)


def test_check_transport_unknown_rule(capsys):
    assert main(["check-transport", "--rule", "FFF"]) == 2


def test_gf_csv(capsys):
    assert main(["gf", "--pattern", "UD", "--max-n", "4",
                 "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,k,count"
    assert "2,2,1" in lines  # only UDUD has two UD factors at semilength 2
    assert "4,4,1" in lines  # only UDUDUDUD has four


def test_gf_all_methods_agree(capsys):
    assert main(["gf", "--pattern", "DDU", "--method", "all",
                 "--max-n", "7"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# routes agree: closed, brute, fixed")


def test_gf_fixed_unavailable(capsys):
    assert main(["gf", "--pattern", "UUD", "--method", "fixed"]) == 2
    assert "no fixed-point system" in capsys.readouterr().err


def test_popularity_formats(capsys):
    assert main(["popularity", "--pattern", "UD", "--max-n", "5"]) == 0
    assert capsys.readouterr().out.strip() == "1, 3, 8, 22, 61"
    assert main(["popularity", "--pattern", "UD", "--max-n", "3",
                 "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines() == ["n,value", "1,1", "2,3", "3,8"]


def test_verify_text(capsys):
    assert main(["verify", "--max-n", "4"]) == 0
    out = capsys.readouterr().out
    assert "RESULT: OK" in out


def test_verify_json(capsys):
    assert main(["verify", "--max-n", "4", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] and report["max_n"] == 4


def test_verify_failure_exit_code(tmp_path, capsys):
    seed = tmp_path / "seed.txt"
    seed.write_text("dist dist:UD UD 3 0 999\n")
    assert main(["verify", "--max-n", "4", "--seed-tables", str(seed)]) == 1
    assert "RESULT: FAILED" in capsys.readouterr().out


def test_oeis_fetch_offline_embedded(capsys):
    assert main(["oeis-fetch", "A004148", "--offline"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "1 1"
    assert lines[4] == "5 8"


def test_oeis_fetch_offline_miss(capsys):
    assert main(["oeis-fetch", "A000001", "--offline"]) == 1
    assert "no cached b-file" in capsys.readouterr().err


def test_oeis_cache_env_var(capsys, monkeypatch, tmp_path):
    cache = tmp_path / "cachedir"
    os.makedirs(cache)
    (cache / "A000001.txt").write_text("0 5\n1 6\n")
    monkeypatch.setenv("DYCKMOTZ_OEIS_CACHE", str(cache))
    assert main(["oeis-fetch", "A000001", "--offline"]) == 0
    assert capsys.readouterr().out.splitlines() == ["0 5", "1 6"]


def test_bad_usage_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate"])  # --n is required
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
