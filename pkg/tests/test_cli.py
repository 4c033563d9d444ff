import json

import pytest

from conftest import FIXTURES
from skewlab.cli import main
from skewlab.io import load_instance


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "name,code",
    [("s2.json", 0), ("shift3.json", 0), ("swap-ab.json", 0), ("s2-broken.json", 2), ("malformed.json", 3),
     ("missing.json", 3)],
)
def test_validate_exit_codes(capsys, name, code):
    assert run(capsys, "validate", FIXTURES / name)[0] == code


def test_validate_reports_violations(capsys):
    code, out, _ = run(capsys, "validate", FIXTURES / "s2-broken.json", "--json")
    data = json.loads(out)
    assert code == 2 and not data["valid"] and data["violations"]


def test_check(capsys):
    code, out, _ = run(capsys, "check", FIXTURES / "shift3.json", "--json")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 9 and data["minimal"] and data["free"] and data["g_simple"]
    code, out, _ = run(capsys, "check", FIXTURES / "identity-ab.json", "--json")
    data = json.loads(out)
    assert not data["minimal"] and not data["free"]
    assert data["witnesses"]["invariant_subset"] in (["a"], ["b"])
    assert data["witnesses"]["fixed_point"]["t"] == "1"
    code, out, _ = run(capsys, "check", FIXTURES / "swap-ab.json")
    assert "dim = 4" in out and "free = true" in out


def test_check_rejects_invalid(capsys):
    assert run(capsys, "check", FIXTURES / "s2-broken.json")[0] == 3


@pytest.mark.parametrize(
    "name,code", [("s2.json", 0), ("swap-ab.json", 0), ("identity-on-a.json", 1), ("klein-two-points.json", 1),
                  ("z4-three-points.json", 0)],
)
def test_simplicity_exit_codes(capsys, name, code):
    c, out, _ = run(capsys, "simplicity", FIXTURES / name, "--json")
    data = json.loads(out)
    assert c == code and data["agree"]


def test_simplicity_text(capsys):
    code, out, _ = run(capsys, "simplicity", FIXTURES / "s2.json")
    assert "verdict: simple, agree=true" in out


def test_simplicity_rational(capsys):
    code, out, _ = run(capsys, "simplicity", FIXTURES / "swap-ab.json", "--field", "rational", "--method", "theorems")
    assert code == 0 and "theorem 1: skipped" in out
    assert run(capsys, "simplicity", FIXTURES / "swap-ab.json", "--field", "rational", "--method", "oracle")[0] == 4


def test_simplicity_guard(capsys, tmp_path):
    big = tmp_path / "shift5.json"
    assert run(capsys, "example", "shift", "--n", 5, "--out", big)[0] == 0
    code, _, err = run(capsys, "simplicity", big, "--method", "oracle")
    assert code == 4 and "guard" in err
    assert run(capsys, "simplicity", big, "--method", "theorems")[0] == 0


def test_example_matches_fixture(capsys):
    code, out, _ = run(capsys, "example", "shift", "--n", 2)
    assert code == 0 and out == (FIXTURES / "s2.json").read_text()


def test_example_round_trip(capsys, tmp_path):
    path = tmp_path / "s5.json"
    run(capsys, "example", "shift", "--n", 5, "--out", path)
    theta, _ = load_instance(path)
    assert theta.dimension == 25 and theta.validate().ok
    assert run(capsys, "validate", path)[0] == 0


def test_gen_round_trip(capsys, tmp_path):
    for seed in range(10):
        path = tmp_path / f"g{seed}.json"
        assert run(capsys, "gen", "--seed", seed, "--out", path)[0] == 0
        theta, _ = load_instance(path)
        assert theta.validate().ok and theta.dimension <= 12


def test_suite_empty(capsys):
    code, out, _ = run(capsys, "suite", "--random", 0)
    assert code == 0 and "disagreements: 0" in out


def test_suite_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert run(capsys, "suite", "--random", 15, "--seed", 4, "--json", "--out", p)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["counts"]["instances"] == 15 and data["disagreements"] == []


def test_bad_field_and_guard(capsys):
    assert run(capsys, "simplicity", FIXTURES / "s2.json", "--field", "gf4")[0] == 3
    assert run(capsys, "simplicity", FIXTURES / "s2.json", "--max-dim", 0)[0] == 3
