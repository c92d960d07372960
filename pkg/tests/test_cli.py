"""Command-line interface: subcommands, formats, exit codes."""

import pytest

from kinkeq.cli import main
from kinkeq.formats import parse_trace, serialize_matrix, serialize_trace
from kinkeq import SymMatrix, verify_trace
from kinkeq.worked_examples import five_to_minus_five_trace


@pytest.fixture
def matrix_file(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def test_inertia(matrix_file, capsys):
    path = matrix_file("g.sym", "sym 2\n5 3\n3 6\n")
    assert main(["inertia", path]) == 0
    assert capsys.readouterr().out.strip() == "2 0 0"


def test_det(matrix_file, capsys):
    path = matrix_file("g.sym", "sym 2\n5 3\n3 6\n")
    assert main(["det", path]) == 0
    assert capsys.readouterr().out.strip() == "21"


def test_det_rational(matrix_file, capsys):
    path = matrix_file("g.sym", "sym 1\n1/2\n")
    assert main(["det", path]) == 0
    assert capsys.readouterr().out.strip() == "1/2"


def test_reduce_stdout_verifies(matrix_file, capsys):
    path = matrix_file("g.sym", "sym 1\n5\n")
    assert main(["reduce", path, "--target", "neg"]) == 0
    trace = parse_trace(capsys.readouterr().out)
    assert verify_trace(trace).valid
    assert trace.end == SymMatrix.from_rows([[-5]])


def test_reduce_out_file(matrix_file, tmp_path, capsys):
    path = matrix_file("g.sym", "sym 2\n0 0\n0 -2\n")
    out = str(tmp_path / "trace.txt")
    assert main(["reduce", path, "--target", "pos-semi", "--out", out]) == 0
    with open(out, encoding="utf-8") as fh:
        trace = parse_trace(fh.read())
    assert verify_trace(trace).valid
    assert "end matrix" in capsys.readouterr().out


def test_reduce_singular_definite_is_usage_error(matrix_file, capsys):
    path = matrix_file("g.sym", "sym 1\n0\n")
    assert main(["reduce", path, "--target", "neg"]) == 2


def test_verify_valid(matrix_file, capsys):
    path = matrix_file("t.txt", serialize_trace(five_to_minus_five_trace()))
    assert main(["verify", path]) == 0
    assert capsys.readouterr().out.startswith("valid")


def test_verify_invalid_exit_1(matrix_file, capsys):
    text = serialize_trace(five_to_minus_five_trace()).replace("end -5", "end -7")
    path = matrix_file("t.txt", text)
    assert main(["verify", path]) == 1
    assert "INVALID" in capsys.readouterr().out


def test_stats(matrix_file, capsys):
    path = matrix_file("t.txt", serialize_trace(five_to_minus_five_trace()))
    assert main(["stats", path]) == 0
    out = capsys.readouterr().out
    assert "neg_kinks 1" in out and "pos_unkinks 1" in out and "congruences 2" in out


def test_stats_invalid_exit_1(matrix_file, capsys):
    text = serialize_trace(five_to_minus_five_trace()).replace("end -5", "end -7")
    path = matrix_file("t.txt", text)
    assert main(["stats", path]) == 1


def test_foursquares(capsys):
    assert main(["foursquares", "7"]) == 0
    assert capsys.readouterr().out.strip() == "2 1 1 1"


def test_foursquares_negative_is_error(capsys):
    assert main(["foursquares", "-3"]) == 2


def test_cct_search_found(matrix_file, capsys):
    path = matrix_file("g.sym", "sym 1\n2\n")
    assert main(["cct", "search", path]) == 0
    assert capsys.readouterr().out == "int 1 2\n1 1\n"


def test_cct_icct(matrix_file, capsys):
    path = matrix_file("c.int", "int 1 1\n1\n")
    assert main(["cct", "icct", path]) == 0
    trace = parse_trace(capsys.readouterr().out)
    assert verify_trace(trace).valid


def test_cct_reduce2(matrix_file, capsys):
    path = matrix_file("g.sym", "sym 2\n5 3\n3 6\n")
    assert main(["cct", "reduce2", path]) == 0
    out = capsys.readouterr().out
    assert out.startswith("sym 2\n5 2\n2 5\n")


def test_goeritz(matrix_file, capsys):
    path = matrix_file(
        "d.txt", "regions 4\n0 1 +\n1 2 +\n0 2 +\n0 2 +\n2 3 +\n0 3 +\n0 3 +\n"
    )
    assert main(["goeritz", path]) == 0
    assert capsys.readouterr().out == "sym 3\n2 -1 0\n-1 4 -1\n0 -1 3\n"


def test_qform(capsys):
    assert main(["qform", "5*x1^2 + 6*x1*x2 + 6*x2^2"]) == 0
    assert capsys.readouterr().out == "sym 2\n5 3\n3 6\n"


def test_qform_error_exit_2(capsys):
    assert main(["qform", "y^2"]) == 2


def test_report_blowup(matrix_file, capsys):
    path = matrix_file("g.sym", "sym 1\n1\n")
    assert main(["report", "blowup", path]) == 0
    assert "blow-up arithmetic report" in capsys.readouterr().out


def test_report_blowup_non_unimodular_exit_2(matrix_file, capsys):
    path = matrix_file("g.sym", "sym 1\n2\n")
    assert main(["report", "blowup", path]) == 2


def test_parse_error_exit_2(matrix_file, capsys):
    path = matrix_file("g.sym", "sym 2\n1 2\n3 4\n")
    assert main(["inertia", path]) == 2


def test_missing_file_exit_2(capsys):
    assert main(["inertia", "/nonexistent/file"]) == 2


def test_usage_error_exit_2(capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
