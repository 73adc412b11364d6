import json

import pytest

from kronconn import parse_graph
from kronconn.cli import main
from kronconn.fileio import write_graph_file
from kronconn.instances import complete, cycle, triangle_pendant


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.txt"
    write_graph_file(str(p), cycle(5))
    return str(p)


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.txt"
    write_graph_file(str(p), cycle(4))
    return str(p)


def test_kappa_command(c5_file, capsys):
    assert main(["kappa", c5_file]) == 0
    out = capsys.readouterr().out
    assert "kappa(G) = 2" in out
    assert "witness = {0, 2}" in out


def test_bnum_command(c5_file, capsys):
    assert main(["bnum", c5_file]) == 0
    out = capsys.readouterr().out
    assert "b(G) = 2" in out
    assert "X = {1, 4}" in out
    assert "component = {0}" in out


def test_formula_command(c5_file, capsys):
    assert main(["formula", c5_file]) == 0
    out = capsys.readouterr().out
    assert "kappa(G) = 2" in out
    assert "b(G) = 2" in out
    assert "min(2*kappa(G), b(G)) = 2" in out
    assert "product witness = {(1,b), (4,b)}" in out


def test_verify_command_bipartite(c4_file, capsys):
    assert main(["verify", c4_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["formula_value"] == 0
    assert doc["match"] is True
    assert doc["witness"]["vertices"] == []


def test_verify_command_with_oracle(c5_file, capsys):
    assert main(["verify", "--oracle", c5_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["oracle_value"] == 2
    assert doc["match"] is True and doc["witness_valid"] is True


def test_verify_deterministic_output(c5_file, capsys):
    main(["verify", c5_file])
    first = capsys.readouterr().out
    main(["verify", c5_file])
    second = capsys.readouterr().out
    assert first == second


def test_product_command(tmp_path, capsys):
    f1 = tmp_path / "k3.txt"
    f2 = tmp_path / "k2.txt"
    out = tmp_path / "prod.txt"
    write_graph_file(str(f1), complete(3))
    write_graph_file(str(f2), complete(2))
    assert main(["product", str(f1), str(f2), "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("#")
    assert "u*2+v" in text
    g = parse_graph(text)
    assert g.n == 6 and g.m == 6


def test_doublecover_command(tmp_path):
    f = tmp_path / "tp.txt"
    out = tmp_path / "cover.txt"
    write_graph_file(str(f), triangle_pendant())
    assert main(["doublecover", str(f), "-o", str(out)]) == 0
    text = out.read_text()
    assert "2*u+side" in text
    g = parse_graph(text)
    assert g.n == 8 and g.m == 8


def test_fuzz_command(capsys):
    argv = [
        "fuzz",
        "--trials", "5",
        "--nmin", "2",
        "--nmax", "6",
        "--p", "0.5",
        "--seed", "1",
    ]
    assert main(argv) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["trials"] == 5 and doc["mismatches"] == 0


def test_fuzz_deterministic(capsys):
    argv = [
        "fuzz", "--trials", "6", "--nmin", "2", "--nmax", "7",
        "--p", "0.3,0.7", "--seed", "5", "--oracle-limit", "8",
    ]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out
    assert first == second


def test_usage_errors(tmp_path, capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
    assert main(["kappa"]) == 2
    assert main(["kappa", str(tmp_path / "missing.txt")]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 0\n")
    assert main(["kappa", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "loop" in err


def test_fuzz_rejects_bad_probability_list(capsys):
    argv = [
        "fuzz", "--trials", "2", "--nmin", "2", "--nmax", "4",
        "--p", "0.5,zebra", "--seed", "1",
    ]
    assert main(argv) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "kronconn" in capsys.readouterr().out


def test_exit_code_logic_for_reports():
    from dataclasses import replace

    from kronconn.cli import _report_exit_code
    from kronconn import verify_instance

    good = verify_instance(cycle(5))
    assert _report_exit_code(good) == 0
    assert _report_exit_code(replace(good, match=False)) == 1
    assert _report_exit_code(replace(good, witness_valid=False)) == 1
