import json

import pytest

from dkh import BigradedAbelianGroup, dkh, fixture
from dkh.cli import main, render_grid


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_render_grid_unknot():
    text = render_grid(dkh(fixture("U0")))
    lines = text.splitlines()
    assert "j\\i" in lines[0] and lines[0].rstrip().endswith("0")
    assert [l.split("|")[0].strip() for l in lines[2:]] == ["1", "0", "-1", "-2"]
    assert all(l.split("|")[1].strip() == "Z" for l in lines[2:])


def test_render_grid_empty_and_torsion():
    assert render_grid(BigradedAbelianGroup()) == "0"
    text = render_grid(dkh(fixture("K21")))
    assert "Z_2" in text
    rows = [l.split("|")[0].strip() for l in text.splitlines()[2:]]
    assert rows == [str(j) for j in range(-1, -8, -1)]
    assert "Z^2" in render_grid(BigradedAbelianGroup({(0, 0): (2, ())}))


def test_dkh_fixture(capsys):
    rc, out, _ = run(capsys, "dkh", "--fixture", "K21")
    assert rc == 0 and "Z_2" in out


def test_dkh_json_roundtrip(capsys):
    rc, out, _ = run(capsys, "dkh", "O1- O2- U1- U2-", "--json")
    assert rc == 0
    assert BigradedAbelianGroup.from_json(json.loads(out)) == dkh(fixture("K21"))


def test_rasmussen_json(capsys):
    rc, out, _ = run(capsys, "rasmussen", "--fixture", "U0", "--json")
    data = json.loads(out)
    assert rc == 0 and (data["s1"], data["s2"]) == (0, 0)


def test_jones_oracle(capsys):
    rc, out, _ = run(capsys, "jones", "--fixture", "K21", "--oracle")
    assert rc == 0 and out.strip().endswith("agree")


def test_lee_ring_and_reduced(capsys, tmp_path):
    rc, out, _ = run(capsys, "lee", "--fixture", "TRP")
    assert rc == 0 and "rank 4" in out
    rc, out, _ = run(capsys, "dkh", "--fixture", "VH", "--ring", "q", "--json")
    assert rc == 0 and all(not g["torsion"] for g in json.loads(out)["groups"])
    rc, out, _ = run(capsys, "reduced", "--fixture", "TRP", "--basepoint", "2")
    assert rc == 0 and "Z" in out
    f = tmp_path / "k.txt"
    f.write_text("O1- O2- U1- U2-\n")
    rc, out, err = run(capsys, "dkh", "--file", str(f), "--dump-complex")
    assert rc == 0 and err.startswith("# variant=standard")


def test_classify(capsys):
    rc, out, _ = run(capsys, "classify", "--fixture", "K21", "--json")
    data = json.loads(out)
    assert rc == 0 and data["verdicts"]["slice"] == "obstructed"
    rc, out, _ = run(capsys, "classify", "--fixture", "VH")
    assert rc == 0 and out.startswith("non_classical: yes")


def test_cobordism(capsys, tmp_path):
    f = tmp_path / "p.txt"
    f.write_text("start: \nbirth\nsaddle 0:0 1:0\n")
    rc, out, _ = run(capsys, "cobordism", str(f), "--json")
    data = json.loads(out)
    assert rc == 0 and data["nonzero"] and data["counts"]["births"] == 1


@pytest.mark.parametrize("argv, code", [
    (["dkh"], 2),                                     # no diagram
    (["dkh", "O1+", "--fixture", "U0"], 2),           # two diagrams
    (["dkh", "--fixture", "NOPE"], 2),
    (["dkh", "O1+ X"], 2),                            # malformed code
    (["frobnicate"], 2),
    (["reduced", "--fixture", "TRP", "--basepoint", "a"], 2),
    (["rasmussen", "--fixture", "HOPF"], 1),          # not a knot
    (["dkh", "--fixture", "T43V", "--max-crossings", "2"], 1),
    (["cobordism", "/nonexistent/file"], 1),
])
def test_exit_codes(capsys, argv, code):
    rc, _, err = run(capsys, *argv)
    assert rc == code
    assert err


def test_inadmissible_is_a_computation_error(capsys):
    rc, _, err = run(capsys, "dkh", "U4- O3+ O4- O5- U1- O2+ O1- U3+ U5- U2+")
    assert rc == 1 and "d^2 != 0" in err


def test_run_alias(capsys):
    from dkh.cli import run as run_cli
    assert run_cli(["rasmussen", "--fixture", "TRP"]) == 0
    assert "s1 = 2" in capsys.readouterr().out
