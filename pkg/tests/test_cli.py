import io
import json

import pytest

from disktrees.cli import main


def test_map_worked_example(capsys):
    assert main(["map", "--name", "Phi",
                 "--input", "2 4 5 9 6 8 7 11 10 3 1"]) == 0
    assert capsys.readouterr().out.strip() == "2 1 4 3 5 9 11 10 6 8 7"


def test_map_stdin_batch(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("2 1\n1 2\n"))
    assert main(["map", "--name", "eta", "--input", "-"]) == 0
    assert capsys.readouterr().out.splitlines() == ["(. - .)", "(. + .)"]


def test_map_file_input(tmp_path, capsys):
    path = tmp_path / "perms.txt"
    path.write_text("2 1\n\n1 2\n")
    assert main(["map", "--name", "eta", "--file", str(path),
                 "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [item["output"] for item in data] == ["(. - .)", "(. + .)"]


def test_map_requires_input(capsys):
    assert main(["map", "--name", "eta"]) == 2
    assert "provide --input" in capsys.readouterr().err


def test_map_iterations(capsys):
    assert main(["map", "--name", "psi", "--input", "((. + .) + .)",
                 "--iterations", "2"]) == 0
    assert capsys.readouterr().out.strip() == "((. - .) - .)"


def test_stats_text_and_json(capsys):
    assert main(["stats", "--perm", "1 2 3"]) == 0
    out = capsys.readouterr().out
    assert "iar: 3" in out and "comp: 3" in out and "des: {}" in out

    assert main(["stats", "--tree", "((. - .) + .)", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["stats"]["top"] == 1 and data["stats"]["iom"] == 1

    assert main(["stats"]) == 2
    assert main(["stats", "--perm", "1 2", "--tree", "."]) == 2


def test_enumerate_formats(capsys):
    assert main(["enumerate", "--kind", "trees", "--n", "3",
                 "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 6

    assert main(["enumerate", "--kind", "perms", "--n", "3",
                 "--patterns", "321", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "item" and len(lines) == 6


def test_table_formats(capsys):
    assert main(["table", "--rows", "top", "--cols", "iom", "--n", "2",
                 "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines() == ["0,1", "1,0"]

    assert main(["table", "--rows", "top", "--cols", "iom", "--n", "6"]) == 0
    first = capsys.readouterr().out.splitlines()[0].split()
    assert first == ["76", "69", "34", "13", "4", "1"]

    assert main(["table", "--rows", "top", "--cols", "bogus", "--n", "3"]) == 2


def test_verify_single_and_json(capsys):
    assert main(["verify", "--suite", "matrix_golden"]) == 0
    assert "PASS matrix_golden" in capsys.readouterr().out

    assert main(["verify", "--suite", "counting_schroder", "--max-n", "5",
                 "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert isinstance(data, list) and data[0]["status"] == "pass"


def test_verify_list(capsys):
    assert main(["verify", "--list"]) == 0
    out = capsys.readouterr().out
    assert "thm_1_2" in out and "conjecture" in out


def test_verify_unknown_check(capsys):
    assert main(["verify", "--suite", "bogus"]) == 2


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--kind", "cats", "--n", "3"])
    assert exc.value.code == 2


def test_bad_object_exits_2(capsys):
    assert main(["map", "--name", "eta", "--input", "2 4 1 3"]) == 2
    assert "separable" in capsys.readouterr().err
