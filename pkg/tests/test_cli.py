import json

import pytest

from turan2c.builtins import builtin
from turan2c.cli import main
from turan2c.fileio import from_dict, parse, serialize


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_builtin(capsys):
    code, out, _ = run(capsys, "classify", "--builtin", "T3")
    assert code == 0
    assert out.startswith("pi = 4/3")
    assert "hom into H8" in out


def test_classify_json_and_file(capsys, tmp_path):
    f = tmp_path / "k3.txt"
    f.write_text("vertices 3\nboth 1 2\nboth 2 3\nboth 1 3\n")
    code, out, _ = run(capsys, "classify", str(f), "--json")
    data = json.loads(out)
    assert code == 0 and data["pi"] == ">= 3/2" and not data["exact"]
    assert data["certificate"]["kind"] == "odd_cycle"


def test_classify_improper(capsys, tmp_path):
    f = tmp_path / "red.txt"
    f.write_text("vertices 2\nred 1 2\n")
    code, _, err = run(capsys, "classify", str(f))
    assert code == 3 and "error" in err
    code, out, err = run(capsys, "classify", str(f), "--allow-improper")
    assert code == 0 and "warning" in err and out.startswith("pi = 1")


def test_classify_usage(capsys):
    code, _, err = run(capsys, "classify")
    assert code == 2 and err


def test_hom_negative(capsys):
    code, out, _ = run(capsys, "hom", "builtin:H8", "builtin:T")
    assert code == 1 and "no homomorphism" in out


def test_hom_all_json(capsys):
    code, out, _ = run(capsys, "hom", "builtin:H8", "builtin:T2", "--all", "--json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 4 and len(data["homs"][0]) == 8


def test_hom_class_mismatch(capsys):
    code, _, err = run(capsys, "hom", "builtin:T", "builtin:H5")
    assert code == 3 and "mismatch" in err


def test_extremal(capsys):
    code, out, _ = run(capsys, "extremal", "--family", "builtin:K3", "--n", "4")
    assert code == 0 and out.strip() == "ex = 10"


def test_extremal_table_and_json(capsys, tmp_path):
    code, out, _ = run(capsys, "extremal", "--family", "builtin:T1", "--table", "3..5")
    assert code == 0 and len(out.strip().splitlines()) == 4
    f = tmp_path / "t1.txt"
    f.write_text(serialize(builtin("T1")))
    code, out, _ = run(capsys, "extremal", "--family", str(f), "--n", "4", "--mode", "exhaustive", "--json")
    data = json.loads(out)
    assert code == 0 and data["ex"] == 10 and data["mode"] == "exhaustive"
    assert from_dict(data["witness"]).edge_count == 10


def test_extremal_timeout(capsys):
    code, out, err = run(capsys, "extremal", "--family", "builtin:K3", "--n", "8", "--timeout", "0.05")
    assert code == 4 and "lower bound" in out and "timed out" in err


def test_extremal_usage_errors(capsys):
    assert run(capsys, "extremal", "--family", "builtin:K3")[0] == 2
    assert run(capsys, "extremal", "--family", "builtin:K3", "--table", "3-5")[0] == 2
    assert run(capsys, "extremal", "--family", "builtin:NOPE", "--n", "3")[0] == 3
    assert run(capsys, "extremal", "--family", "builtin:H5", "--n", "3")[0] == 3


def test_lagrangian_json(capsys):
    code, out, _ = run(capsys, "lagrangian", "builtin:GA", "--json")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"weights", "value", "residual", "starts_used"}
    assert abs(data["value"] - 4 / 3) < 1e-9


def test_lagrangian_bad_tol(capsys):
    assert run(capsys, "lagrangian", "builtin:GA", "--tol", "0")[0] == 2


def test_blowup_and_product(capsys):
    code, out, _ = run(capsys, "blowup", "builtin:GA", "--sizes", "2,1")
    g = parse(out)
    assert code == 0 and g.red == {(1, 2), (1, 3), (2, 3)}
    code, out, _ = run(capsys, "blowup", "builtin:GA", "--sizes", "2")
    assert code == 3
    code, out, _ = run(capsys, "product", "builtin:GA", "builtin:GB", "--json")
    assert code == 0 and from_dict(json.loads(out)).n == 4


def test_nonuniform_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "apex", "builtin:T")
    assert code == 0 and parse(out) == builtin("H5T")
    f = tmp_path / "h5t.txt"
    f.write_text(out)
    code, out, _ = run(capsys, "link", str(f), "--vertex", "5")
    assert code == 0 and parse(out) == builtin("T")
    code, out, _ = run(capsys, "suspend", "builtin:K3")
    assert code == 0 and parse(out).e3 == {(1, 2, 4), (1, 3, 4), (2, 3, 4)}
    code, out, _ = run(capsys, "subdivide", "builtin:H9", "--json")
    assert code == 0 and len(from_dict(json.loads(out)).e2) == 10
    # loop patterns are not {2,3}-graphs
    assert run(capsys, "subdivide", "builtin:H1")[0] == 3
    assert run(capsys, "apex", "builtin:H5")[0] == 3


def test_subdivide_output(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("vertices 3\ne2 1 2\ne3 1 2 3\n")
    code, out, _ = run(capsys, "subdivide", str(f))
    assert code == 0 and out == "vertices 4\ne2 1 4\ne2 2 4\ne3 1 2 3\n"


def test_builtin_command(capsys):
    code, out, _ = run(capsys, "builtin", "--list")
    assert code == 0 and "H9" in out.split()
    code, out, _ = run(capsys, "builtin", "--dump", "T")
    assert parse(out) == builtin("T")
    assert run(capsys, "builtin", "--dump", "X")[0] == 3
    assert run(capsys, "builtin")[0] == 2


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "classify", str(tmp_path / "missing.txt"))
    assert code == 3 and "error" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("vertices 2\nred 1 3\n")
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 3 and "line 2" in err


def test_unknown_command(capsys):
    assert run(capsys, "plot")[0] == 2


@pytest.mark.parametrize("name", ["T", "H9", "GA"])
def test_json_round_trip(capsys, name):
    _, out, _ = run(capsys, "builtin", "--dump", name, "--json")
    assert from_dict(json.loads(out)) == builtin(name)
