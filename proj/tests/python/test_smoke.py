"""Python smoke tests for the compiled module and (optionally) the CLI."""

import json
import os
import subprocess

import pytest

try:
    import lefschetz as lz
except ImportError:
    import _lefschetz as lz  # in-tree build: module on PYTHONPATH

FIXTURES = os.environ.get(
    "LEFSCHETZ_FIXTURES",
    os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"),
)


def read_fixture(name):
    with open(os.path.join(FIXTURES, name + ".json")) as f:
        return f.read()


def test_heisenberg_exact_equal():
    rep = lz.lefschetz(read_fixture("heisenberg"))
    assert rep["verdict"] == "EXACT_EQUAL"
    assert rep["fixed_point_count"] == 4
    assert rep["det_one_minus_fstar_g"] == "-4"
    assert rep["anosov_class"] == "GENERALIZED"
    # the common value is -sqrt2: coords (0, -1) over x^2 - 2
    assert rep["field"]["min_poly"] == ["-2", "0", "1"]
    for side in ("lhs_cohomology", "lhs_determinant", "rhs_fixed_point_sum"):
        assert rep[side]["coords"] == ["0", "-1"]
    assert rep["acceptability"]["acceptable"] is False


def test_catmap_value():
    rep = lz.lefschetz(read_fixture("catmap"))
    assert rep["verdict"] == "EXACT_EQUAL"
    assert rep["fixed_point_count"] == 1
    assert rep["field"]["min_poly"] == ["-5", "0", "1"]
    assert rep["lhs_determinant"]["coords"] == ["-1/2", "-1/2"]
    assert rep["acceptability"]["acceptable"] is True


def test_foliation_override_and_precision():
    rep = lz.lefschetz(read_fixture("circle-minus-one"), foliation="zero")
    assert rep["verdict"] == "EXACT_EQUAL"
    assert rep["fixed_point_count"] == 2
    rep = lz.lefschetz(read_fixture("torus3-plastic"), precision="1/1000000")
    assert rep["verdict"] == "INTERVAL_CONSISTENT"
    assert rep["mode"] == "interval"


def test_validate_and_analyze():
    v = lz.validate(read_fixture("heisenberg"))
    assert v["ok"] is True
    a = lz.analyze(read_fixture("heisenberg"))
    assert a["anosov_class"] == "GENERALIZED"
    assert a["central_series_dims"] == [3, 1]
    assert a["splitting"]["dims"] == {"unstable": 1, "stable": 1, "neutral": 1}
    assert a["acceptability"]["unstable"]["acceptable"] is False
    spectrum = a["splitting"]["spectrum"]
    assert sorted(e["class"] for e in spectrum) == ["inside", "on", "outside"]
    # quartic compositum carries the machine-checked irreducibility flag
    mixed = lz.analyze(read_fixture("torus4-mixed"))
    field = mixed["splitting"]["field"]
    assert len(field["min_poly"]) == 5
    assert field["irreducibility_validated"] is False


def test_betti():
    assert lz.betti(read_fixture("heisenberg")) == [1, 2, 2, 1]
    assert lz.betti(read_fixture("abelian-t3")) == [1, 3, 3, 1]


def test_kernels():
    assert lz.char_poly([["2", "1"], ["1", "1"]]) == ["1", "-3", "1"]
    cls = lz.classify_unit_circle(["1", "-3", "1"])
    assert cls == {"inside": 1, "on": 0, "outside": 1}
    u, d, v = lz.smith_normal_form([[2, 0], [0, 3]])
    assert d == [["1", "0"], ["0", "6"]]


def test_errors():
    with pytest.raises(lz.SpecParseError):
        lz.validate("{nope")
    with pytest.raises(lz.VerificationError):
        # identity endomorphism: eigenvalue one
        spec = json.loads(read_fixture("catmap"))
        spec["endomorphism"] = {"matrix": [["1", "0"], ["0", "1"]]}
        lz.lefschetz(json.dumps(spec))


@pytest.mark.skipif("LEFSCHETZ_CLI" not in os.environ, reason="CLI path not set")
def test_cli_roundtrip():
    cli = os.environ["LEFSCHETZ_CLI"]
    out = subprocess.run(
        [cli, "lefschetz", os.path.join(FIXTURES, "heisenberg.json"),
         "--format", "json"],
        capture_output=True, text=True, check=True)
    rep = json.loads(out.stdout)
    assert rep["verdict"] == "EXACT_EQUAL"
    assert rep["fixed_point_count"] == 4

    bad = subprocess.run([cli, "validate", "/nonexistent.json"],
                         capture_output=True, text=True)
    assert bad.returncode == 2


@pytest.mark.skipif("LEFSCHETZ_CLI" not in os.environ, reason="CLI path not set")
def test_cli_exit_codes(tmp_path):
    cli = os.environ["LEFSCHETZ_CLI"]

    # malformed JSON: exit 2, message carries the parser position
    broken = tmp_path / "broken.json"
    broken.write_text('{"lie_algebra": {"dim": 2,}')
    out = subprocess.run([cli, "validate", str(broken)],
                         capture_output=True, text=True)
    assert out.returncode == 2
    assert "parse error" in out.stderr

    # identity endomorphism: eigenvalue one, exit 1
    spec = json.loads(read_fixture("catmap"))
    spec["endomorphism"] = {"matrix": [["1", "0"], ["0", "1"]]}
    ident = tmp_path / "identity.json"
    ident.write_text(json.dumps(spec))
    out = subprocess.run([cli, "analyze", str(ident)],
                         capture_output=True, text=True)
    assert out.returncode == 1
    assert "EigenvalueOne" in out.stderr

    # every fixture round-trips through each subcommand deterministically
    for name in ("catmap", "circle-minus-one", "torus2-expanding"):
        path = os.path.join(FIXTURES, name + ".json")
        for sub in ("validate", "analyze", "betti"):
            a = subprocess.run([cli, sub, path, "--format", "json"],
                               capture_output=True, text=True, check=True)
            b = subprocess.run([cli, sub, path, "--format", "json"],
                               capture_output=True, text=True, check=True)
            assert a.stdout == b.stdout
