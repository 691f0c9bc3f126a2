"""Instance file format, path reconstruction, and the command-line interface."""

import json
import os

import pytest

from conftest import c4_instance, random_weights, theta_instance
from trackpaths.cli import main
from trackpaths.io import (
    ParseError,
    ReconstructionError,
    parse_instance,
    reconstruct_path,
    render_instance,
)

C4_TEXT = """\
# a four-cycle
p track 4 4
s 1
t 3
e 1 2
e 2 3
e 3 4
e 4 1
"""


def test_parse_c4():
    inst = parse_instance(C4_TEXT)
    assert inst.graph.n == 4 and inst.graph.m == 4
    assert (inst.s, inst.t) == (0, 2)
    assert inst.is_unit_weighted()


def test_parse_weights_and_render_roundtrip():
    text = C4_TEXT + "w 2 7\nw 4 3/2\n"
    inst = parse_instance(text)
    assert str(inst.weights[1]) == "7"
    assert str(inst.weights[3]) == "3/2"
    again = parse_instance(render_instance(inst))
    assert again == inst


def test_render_roundtrip_random():
    inst = random_weights(theta_instance(), seed=3)
    assert parse_instance(render_instance(inst)) == inst


def test_parse_errors_carry_line_numbers():
    bad = C4_TEXT.replace("e 4 1", "e 1 1")
    with pytest.raises(ParseError) as err:
        parse_instance(bad)
    assert "line" in str(err.value)
    for broken in (
        C4_TEXT.replace("p track 4 4", "p track 4 5"),
        C4_TEXT.replace("s 1\n", ""),
        C4_TEXT.replace("e 4 1", "e 4 9"),
        C4_TEXT + "e 1 2\n",
        C4_TEXT.replace("t 3", "t 1"),
    ):
        with pytest.raises(ParseError):
            parse_instance(broken)


def test_reconstruct_examples():
    inst = c4_instance()
    assert reconstruct_path(inst, {1}, [1]) == [0, 1, 2]
    assert reconstruct_path(inst, {1}, []) == [0, 3, 2]
    with pytest.raises(ReconstructionError):
        reconstruct_path(inst, set(), [])  # not a tracking set
    with pytest.raises(ReconstructionError):
        reconstruct_path(inst, {1}, [1, 1])  # no such path


@pytest.fixture()
def c4_file(tmp_path):
    f = tmp_path / "c4.txt"
    f.write_text(C4_TEXT)
    return str(f)


def test_cli_solve_exact(c4_file, capsys):
    assert main(["solve", c4_file, "--method", "exact"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["trackers"] == [2]
    assert out["size"] == 1 and out["valid"] is True
    assert out["weight"] == "1"


def test_cli_solve_all_methods(c4_file, capsys):
    for method in ("greedy", "bg"):
        assert main(["solve", c4_file, "--method", method]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["valid"] is True


def test_cli_eptas_needs_planar(c4_file, capsys, tmp_path):
    assert main(["solve", c4_file, "--method", "eptas", "--r", "9"]) == 2
    capsys.readouterr()
    assert (
        main(
            ["--declared-class", "planar", "solve", c4_file, "--method", "eptas", "--r", "9"]
        )
        == 0
    )
    assert json.loads(capsys.readouterr().out)["valid"] is True


def test_cli_verify(c4_file, capsys):
    assert main(["verify", c4_file, "--trackers", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["valid"] is True
    assert main(["verify", c4_file, "--trackers", "1"]) == 3
    report = json.loads(capsys.readouterr().out)
    assert report["valid"] is False and report["witness"]


def test_cli_reduce_and_kernel(c4_file, capsys):
    assert main(["reduce", c4_file]) == 0
    reduced = parse_instance(capsys.readouterr().out)
    assert reduced.graph.n == 4
    assert main(["kernel", c4_file, "--k", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["decision"] == "trivial_no"


def test_cli_reconstruct(c4_file, capsys):
    assert main(["reconstruct", c4_file, "--trackers", "2", "--sequence", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["path"] == [1, 2, 3]
    assert main(["reconstruct", c4_file, "--trackers", "2", "--sequence", "2,2"]) == 3


def test_cli_rdiv(c4_file, capsys):
    assert main(["rdiv", c4_file, "--r", "4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["r"] == 4 and out["regions"]


def test_cli_parse_failure_exit_code(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("p track 2 1\ns 1\nt 2\ne 1 1\n")
    assert main(["solve", str(f), "--method", "exact"]) == 2
    assert main(["solve", str(tmp_path / "absent.txt"), "--method", "exact"]) == 2


def test_cli_bench(tmp_path, capsys):
    out_csv = tmp_path / "bench.csv"
    rc = main(
        [
            "bench",
            "--corpus",
            "er:n=8,p=0.4,count=2;theta:arms=3,len=1",
            "--methods",
            "exact,greedy",
            "--out",
            str(out_csv),
        ]
    )
    assert rc == 0
    lines = out_csv.read_text().strip().splitlines()
    assert len(lines) == 1 + 3 * 2  # header + 3 instances x 2 methods
    header = lines[0].split(",")
    assert "method" in header and "status" in header
