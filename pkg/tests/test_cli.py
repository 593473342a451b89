import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from shortrat.cli import InputError, main, parse_matrix, parse_polytope

CUBE = """6 4
1 -1 0 0
1 0 -1 0
1 0 0 -1
0 1 0 0
0 0 1 0
0 0 0 1
"""
EMPTY = "2 2\n-1 1\n0 -1\n"  # x >= 1 and x <= 0
SEGMENT = "2 2\n1 -1\n0 1\n"
SQUARE = "4 3\n1 -1 0\n1 0 -1\n0 1 0\n0 0 1\n"
TWISTED = "2 4\n1 1 1 1\n0 1 2 3\n"
ORTHANT = "3 3\n1 0 0\n0 1 0\n0 0 1\n"


@pytest.fixture
def write(tmp_path):
    def w(text, name="in.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return w


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_cube(write, capsys):
    assert run(capsys, "count", write(CUBE)) == (0, "8\n", "")


def test_count_empty(write, capsys):
    code, out, _ = run(capsys, "count", write(EMPTY))
    assert (code, out) == (2, "0\n")


def test_count_linearity_and_nonnegative(write, capsys):
    # x + y + z = 3, x, y, z >= 0
    text = "1 4\n3 -1 -1 -1\nlinearity 1 1\nnonnegative 3 1 2 3\n"
    assert run(capsys, "count", write(text))[:2] == (0, "10\n")


def test_count_unbounded_is_input_error(write, capsys):
    code, out, err = run(capsys, "count", write("1 2\n0 1\n"))
    assert code == 1 and "unbounded" in err and out == ""


def test_ehrhart_segment_and_square(write, capsys):
    code, out, _ = run(capsys, "ehrhart", write(SEGMENT), "--terms", "4")
    assert code == 0 and out == "1 / (1-t)^2\n1 2 3 4\n"
    code, out, _ = run(capsys, "ehrhart", write(SQUARE), "--terms", "4")
    assert out.splitlines()[1] == "1 4 9 16"


def test_hilbert_and_gorenstein_orthant(write, capsys):
    f = write(ORTHANT)
    assert run(capsys, "hilbert", f, "--terms", "3")[1] == "1 / (1-t)^3\n1 3 6\n"
    assert run(capsys, "gorenstein", f)[1] == "yes (1,1,1)\n"
    assert run(capsys, "gorenstein", write("2 2\n1 0\n1 3\n"))[1] == "no\n"


def test_genfun_roundtrip(write, capsys):
    from shortrat.genfun import ShortRatFun, expand
    code, out, _ = run(capsys, "genfun", write(SEGMENT))
    f = ShortRatFun.from_text(out)
    assert expand(f, (1,), (0,)) == {(0,): 1, (1,): 1}


def test_json_flag_positions(write, capsys):
    f = write(CUBE)
    a = run(capsys, "--json", "count", f)[1]
    b = run(capsys, "count", f, "--json")[1]
    assert a == b and json.loads(a) == {"count": 8}


def test_toric_count_and_nf(write, capsys):
    f = write(TWISTED)
    assert run(capsys, "toric", "count", f, "-D", "0")[1] == "1\n"
    code, out, _ = run(capsys, "toric", "count", f, "-D", "2", "--json", "--calibrate", "2")
    data = json.loads(out)
    assert data["off_diagonal"] == data["raw"] - data["diagonal"]
    assert ["box", "raw"] in data["calibrated"]
    code, out, _ = run(capsys, "toric", "nf", f, "--bound", "2", "--point", "1,0,1,0")
    assert (code, out) == (0, "(0,2,0,0)\n")


def test_toric_input_errors(write, capsys):
    f = write(TWISTED)
    assert run(capsys, "toric", "count", f)[0] == 1
    assert run(capsys, "toric", "nf", f, "--bound", "1")[0] == 1
    assert run(capsys, "toric", "nf", f, "--bound", "1", "--point", "1,2")[0] == 1
    assert run(capsys, "toric", "filter", f, "--bound", "1", "--order", write("1 0\n0 1\n", "o.txt"))[0] == 1


@pytest.mark.parametrize("text", [
    "", "x", "2 3\n1 2 3\n", "1 3\n1 a 2\n", "1 2\n1 1\nlinearity 2 1\n",
    "1 2\n1 1\nlinearity 1 5\n", "1 2\n1 1\nfoo 1 1\n", "-1 2\n", "1 1\n3\n",
])
def test_malformed_polytopes(write, capsys, text):
    code, out, err = run(capsys, "count", write(text))
    assert code == 1 and err.startswith("error:")


def test_missing_file(capsys):
    assert run(capsys, "count", "/nonexistent/file")[0] == 1


@settings(max_examples=60)
@given(st.text(alphabet="0123456789 -\nlinearitynonegv#", max_size=60))
def test_parser_never_crashes(text):
    for parse in (parse_polytope, parse_matrix):
        try:
            parse(text)
        except InputError:
            pass


def test_deterministic_output(write):
    f = write(SQUARE)
    cmds = [["genfun", f], ["ehrhart", f, "--json"], ["count", f]]
    for c in cmds:
        outs = {subprocess.run([sys.executable, "-m", "shortrat"] + c, capture_output=True).stdout
                for _ in range(2)}
        assert len(outs) == 1 and outs.pop()
