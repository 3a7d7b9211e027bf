import io
import json

import pytest

from miura_forcing.cli import main
from miura_forcing.coloring import diagonal_coloring
from miura_forcing.core import CreaseId, GridSize
from miura_forcing.digraph import is_forcing
from miura_forcing.instance import InstanceDocument, serialize_instance


def run(args, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda args, stdin="": run(args, stdin, monkeypatch, capsys)


def test_gen_then_min_forcing(cli):
    code, doc, _ = cli(["gen", "--standard", "--rows", "4", "--cols", "6"])
    assert code == 0
    code, out, _ = cli(["min-forcing"], doc)
    assert code == 0 and json.loads(out)["size"] == 12


def test_diagonal_min_forcing(cli):
    _, doc, _ = cli(["gen", "--diagonal", "--rows", "3", "--cols", "4"])
    code, out, _ = cli(["min-forcing"], doc)
    assert json.loads(out)["size"] == 5


def test_verify_empty_1x2(cli, tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text('{"rows":1,"cols":2,"creases":[{"kind":"v","r":0,"c":0,"mv":1}]}')
    fs = tmp_path / "fs.json"
    fs.write_text("[]")
    code, out, _ = cli(["verify", "--input", str(inst), "--forcing-set", str(fs)])
    assert code == 1
    assert json.loads(out) == {"forcing": False, "witness_cycle": [{"kind": "v", "r": 0, "c": 0}]}


def test_verify_matches_library(cli, tmp_path):
    K = diagonal_coloring(GridSize(3, 3))
    inst = tmp_path / "inst.json"
    inst.write_text(serialize_instance(InstanceDocument.from_coloring(K)))
    _, out, _ = cli(["greedy", "--input", str(inst)])
    fs = tmp_path / "fs.json"
    fs.write_text(out)
    code, _, _ = cli(["verify", "--input", str(inst), "--forcing-set", str(fs)])
    assert code == 0
    F = {(e["kind"].upper(), e["r"], e["c"]) for e in json.loads(fs.read_text())["creases"]}
    assert is_forcing(K, [CreaseId(*e) for e in F])[0]


def test_domino_and_controlling(cli, tmp_path):
    code, out, _ = cli(["domino", "--rows", "3", "--cols", "3"])
    assert code == 0 and json.loads(out)["size"] == 5
    fs = tmp_path / "fs.json"
    fs.write_text(out)
    code, out, _ = cli(["controlling", "--rows", "3", "--cols", "3", "--forcing-set", str(fs)])
    assert code == 1 and not json.loads(out)["controlling"] and json.loads(out)["component"]


def test_complete(cli):
    code, out, _ = cli(["complete"], '{"rows":2,"cols":2,"creases":[{"kind":"v","r":0,"c":0,"mv":1}]}')
    assert code == 0 and len(json.loads(out)["creases"]) == 4
    bad = (
        '{"rows":3,"cols":3,"creases":[{"kind":"h","r":0,"c":0,"mv":-1},{"kind":"h","r":0,"c":1,"mv":1},'
        '{"kind":"v","r":0,"c":0,"mv":1},{"kind":"v","r":1,"c":0,"mv":1}]}'
    )
    code, out, _ = cli(["complete"], bad)
    assert code == 1 and json.loads(out)["nodes"] == [[1, 1]]


def test_enumerate(cli):
    code, out, _ = cli(["enumerate", "--rows", "2", "--cols", "2"])
    assert code == 0 and json.loads(out)["count"] == 6
    code, _, err = cli(["enumerate", "--rows", "5", "--cols", "5"])
    assert code == 2 and "allow_large" in err


def test_render_formats(cli):
    _, doc, _ = cli(["gen", "--standard", "--rows", "2", "--cols", "3"])
    code, out, _ = cli(["render", "--format", "ascii"], doc)
    assert code == 0 and out.splitlines()[0] == ".M.V."
    code, out, _ = cli(["render", "--format", "svg", "--alpha", "60"], doc)
    assert code == 0 and out.startswith("<?xml")
    code, _, _ = cli(["render", "--format", "svg", "--alpha", "90"], doc)
    assert code == 2


@pytest.mark.parametrize(
    "args, stdin",
    [
        (["min-forcing"], "not json"),
        (["render"], '{"rows":2,"cols":2,"creases":[{"kind":"h","r":1,"c":0,"mv":1}]}'),
        (["min-forcing"], '{"rows":2,"cols":2,"creases":[]}'),
        (["domino"], ""),
        (["gen", "--rows", "0", "--cols", "3"], ""),
    ],
)
def test_input_errors_exit_2(cli, args, stdin):
    code, _, err = cli(args, stdin)
    assert code == 2 and err.startswith("error:")


def test_usage_error_exit_2(cli):
    with pytest.raises(SystemExit) as exc:
        cli(["bogus"])
    assert exc.value.code == 2


def test_seeded_gen_reproducible(cli):
    a = cli(["gen", "--rows", "5", "--cols", "5", "--seed", "9"])[1]
    b = cli(["gen", "--rows", "5", "--cols", "5", "--seed", "9"])[1]
    assert a == b


def test_output_file(cli, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = cli(["gen", "--standard", "--rows", "2", "--cols", "2", "--output", str(target)])
    assert code == 0 and out == "" and json.loads(target.read_text())["rows"] == 2
