import json

from click.testing import CliRunner

from descentkit.cli import main

runner = CliRunner()


def _run(*args):
    return runner.invoke(main, list(args))


def _xi_json(n, char, comp, coeff="1"):
    return json.dumps(
        {
            "n": n,
            "field": {"char": char},
            "terms": [{"comp": list(comp), "coeff": coeff}],
        }
    )


def test_basis():
    r = _run("basis", "--n", "3")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data == {"n": 3, "dim": 4, "basis": [[1, 1, 1], [1, 2], [2, 1], [3]]}


def test_basis_rejects_out_of_range():
    assert _run("basis", "--n", "0").exit_code == 2
    assert _run("basis", "--n", "13").exit_code == 2


def test_multiply():
    r = _run(
        "multiply",
        "--lhs",
        _xi_json(3, 0, (2, 1)),
        "--rhs",
        _xi_json(3, 0, (2, 1)),
    )
    assert r.exit_code == 0
    data = json.loads(r.output)
    terms = {tuple(t["comp"]): t["coeff"] for t in data["terms"]}
    assert terms == {(1, 1, 1): "1", (2, 1): "1"}


def test_multiply_bad_json_is_usage_error():
    r = _run("multiply", "--lhs", "{not json", "--rhs", _xi_json(2, 0, (2,)))
    assert r.exit_code == 2


def test_multiply_cross_check_mismatch():
    r = _run(
        "multiply",
        "--n",
        "4",
        "--lhs",
        _xi_json(3, 0, (3,)),
        "--rhs",
        _xi_json(3, 0, (3,)),
    )
    assert r.exit_code == 2
    r = _run(
        "multiply",
        "--p",
        "5",
        "--lhs",
        _xi_json(3, 0, (3,)),
        "--rhs",
        _xi_json(3, 0, (3,)),
    )
    assert r.exit_code == 2


def test_theta():
    r = _run("theta", "--element", _xi_json(3, 0, (3,)))
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["values"] == {"111": "1", "21": "1", "3": "1"}


def test_radical():
    r = _run("radical", "--n", "4", "--p", "2")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["power_dims"][0] == len(data["basis"])
    assert data["nilpotency_index"] == 3
    assert data["power_dims"][-1] == 0


def test_field_flags_are_exclusive_and_required():
    assert _run("radical", "--n", "3").exit_code == 2
    assert _run("radical", "--n", "3", "--p", "2", "--char0").exit_code == 2
    assert _run("radical", "--n", "3", "--p", "4").exit_code == 2


def test_idempotents():
    r = _run("idempotents", "--n", "4", "--p", "2")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["verification"]["all"] is True
    assert set(data["set"]["members"]) == {"4", "31"}


def test_cartan_json_and_csv():
    r = _run("cartan", "--n", "4", "--p", "2")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["C_tilde"] and data["D"] and data["C"]
    r = _run("cartan", "--n", "3", "--p", "2", "--format", "csv")
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    assert lines[0] == ",21,3"
    assert len(lines) == 3  # header + one row per simple label


def test_cartan_char0():
    r = _run("cartan", "--n", "4", "--char0")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["field"] == {"char": 0}
    size = len(data["order"])
    assert all(data["C"][i][i] == 1 for i in range(size))


def test_cartan_verify_apw():
    r = _run("cartan", "--n", "5", "--p", "3", "--verify-apw")
    assert r.exit_code == 0
    assert json.loads(r.output)["ok"] is True
    r = _run("cartan", "--n", "5", "--char0", "--verify-apw")
    assert r.exit_code == 2


def test_quiver_json_dot_and_conflict():
    r = _run("quiver", "--n", "5", "--p", "2", "--json")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert "vertices" in data and "arrows" in data
    r = _run("quiver", "--n", "5", "--p", "2", "--dot")
    assert r.exit_code == 0
    assert r.output.startswith("digraph")
    assert _run("quiver", "--n", "5", "--p", "2", "--dot", "--json").exit_code == 2
    assert _run("quiver", "--n", "9", "--p", "2").exit_code == 2


def test_type():
    r = _run("type", "--n", "5", "--p", "3")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["type"] == "wild"
    r = _run("type", "--n", "4", "--char0")
    assert json.loads(r.output)["type"] == "finite"


def test_verify_bgr():
    r = _run("verify-bgr", "--n", "4", "--s", "1", "--p", "2")
    assert r.exit_code == 0
    assert json.loads(r.output)["ok"] is True
    assert _run("verify-bgr", "--n", "4", "--s", "5", "--p", "2").exit_code == 2


def test_conjecture():
    r = _run("conjecture", "--p", "2", "--n-max", "5")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["all_agree"] is True
    assert _run("conjecture", "--p", "2", "--n-max", "9").exit_code == 2


def test_fixtures_command():
    r = _run("fixtures", "--n-max", "5", "--only", "cartan")
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    assert all(l.startswith("PASS ") for l in lines[:-1])
    assert lines[-1].endswith("fixtures passed")


def test_output_is_deterministic():
    a = _run("quiver", "--n", "5", "--p", "2", "--json").output
    b = _run("quiver", "--n", "5", "--p", "2", "--json").output
    assert a == b
