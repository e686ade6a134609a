import json

import pytest

from stackygit import ringspec
from stackygit.cli import run_command
from stackygit.invariants import catalog_ring


@pytest.fixture(scope="module")
def quintic_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("rings") / "quintic.ring"
    ringspec.dump(catalog_ring("quintic").ring, path)
    return str(path)


def test_decompose(quintic_file):
    result = run_command(["decompose", quintic_file])
    assert result.status == 0
    assert result.payload["coarse_weights"] == [1, 2, 3]
    assert result.payload["gerbe_index"] == 2
    assert result.payload["root"]["degree_on_canonical_stack"] == 9
    assert "P(1, 2, 3)" in result.markdown


def test_rigidify(quintic_file):
    result = run_command(["rigidify", quintic_file])
    assert result.status == 0
    assert result.payload["gerbe_index"] == 2
    weights = [g["weight"] for g in result.payload["rigidification"]["generators"]]
    assert weights == [2, 4, 6, 9]


def test_chart(quintic_file):
    result = run_command(["chart", quintic_file, "I12"])
    assert result.status == 0
    assert result.payload["automorphism_group"] == "mu_12"
    assert result.payload["residual_grading"] == [
        {"name": "I4", "degree": 4},
        {"name": "I8", "degree": 8},
        {"name": "I18", "degree": 6},
    ]


def test_stabilizer():
    result = run_command(["stabilizer", "x^5 + y^5"])
    assert result.status == 0
    assert result.payload["maximal_groups"] == ["D5"]
    assert result.payload["certificates"][0]["scalars"]


def test_stabilizer_nmax_flag():
    result = run_command(["stabilizer", "x^2*(x^3 + y^3)", "--nmax", "8"])
    assert result.status == 0
    assert result.payload["maximal_groups"] == ["C3"]


def test_ground_forms():
    result = run_command(["ground-forms", "I"])
    assert result.status == 0
    assert [f["nu"] for f in result.payload["forms"]] == [5, 3, 2]


def test_klein():
    result = run_command(["klein", "D3", "0", "0", "0", "2:3"])
    assert result.status == 0
    assert result.payload["semi_invariant"] is True
    assert result.payload["degree"] == 6


def test_locus_commands():
    for family in ("quintic", "sextic"):
        result = run_command(["locus", family])
        assert result.status == 0
        assert result.payload["counts"]["refuted"] == 0


def test_catalog():
    result = run_command(["catalog", "sextic"])
    assert result.status == 0
    weights = [g["weight"] for g in result.payload["ring"]["generators"]]
    assert weights == [2, 4, 6, 10, 15]


def test_error_paths_have_distinct_codes():
    codes = {}
    cases = {
        "missing-file": ["decompose", "/nonexistent/thing.ring"],
        "bad-form": ["stabilizer", "x + * y"],
        "bad-family": ["catalog", "octic"],
        "bad-group": ["ground-forms", "Q8"],
        "infinite-stab": ["stabilizer", "x^3*y^3"],
    }
    for name, argv in cases.items():
        result = run_command(argv)
        assert result.status == 2, name
        codes[name] = result.payload["error"]["code"]
    assert len(set(codes.values())) == len(codes)


def test_unknown_generator_error(quintic_file):
    result = run_command(["chart", quintic_file, "I9"])
    assert result.status == 2
    assert result.payload["error"]["code"] == "unknown-generator"


def test_json_is_deterministic():
    a = run_command(["locus", "quintic"]).json_text()
    b = run_command(["locus", "quintic"]).json_text()
    assert a == b
    json.loads(a)


def test_calibrate_quintic():
    result = run_command(["calibrate", "quintic", "--seed", "11"])
    assert result.status == 0
    assert result.payload["succeeded"] is True
