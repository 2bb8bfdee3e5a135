import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "docs" / "schemas"
CURVES = ROOT / "data" / "curves"
CLI = os.environ.get("QDESC_CLI", str(ROOT / "build" / "qdesc"))


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(*args, code=0):
    r = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, timeout=300)
    assert r.returncode == code, r.stdout + r.stderr
    return r.stdout


def check(name, *args):
    out = json.loads(run(*args))
    jsonschema.validate(out, schema(name))
    return out


@pytest.fixture(scope="module")
def groups(tmp_path_factory):
    d = tmp_path_factory.mktemp("groups")
    run("canonical", "--genus", 3, "--group-out", d / "sp6.json")
    run("canonical", "--genus", 3, "--even-form", "--group-out", d / "ev.json")
    (d / "g56.json").write_text(run("search-subgroup", "--order", 56, "--transitive", "--within", d / "ev.json"))
    for f in ("sp6.json", "ev.json"):
        jsonschema.validate(json.loads((d / f).read_text()), schema("group"))
    return d


def test_curve_files_match_schema():
    for f in sorted(CURVES.glob("*.json")):
        jsonschema.validate(json.loads(f.read_text()), schema("curve"))


def test_disc():
    out = check("disc", "disc", CURVES / "curve1.json")
    assert out["I27"] == "4727"
    assert [p["p"] for p in out["primes"]] == [29, 163]


def test_counts():
    assert check("count", "count", CURVES / "curve3.json", "--p", 7)["JPoints"] == "659"
    assert check("torsion", "torsion", CURVES / "curve1.json", "--primes", "3")["bound"] == "51"


def test_bitangent_pipeline():
    check("bitangents", "bitangents", CURVES / "curve2.json", "--p", 3)
    inc = check("incidence", "incidence", CURVES / "curve1.json", "--p", 5)
    assert inc["sigmaCount"] == 315
    assert inc["pairMultiplicity"] == [5, 5]
    assert inc["cycleTypeMatchesDdf"]
    gal = check("galois", "galois", CURVES / "curve1.json", "--primes", "3,5,7,11,13")
    assert gal["transitive"]


def test_canonical():
    out = check("canonical", "canonical", "--genus", 4)
    assert out["sigmaCount"] == out["sigmaExhaustive"] == 32130


def test_cohom_and_table(groups):
    out = check("cohom", "cohom", "--group", groups / "ev.json", "--module", "Rdual")
    assert (out["h1Dim"], out["sha1Bound"]) == (2, 0)
    t = check("table", "table", CURVES / "curve1.json", "--global", groups / "ev.json",
              "--local", f"2:{groups / 'g56.json'}:8", "--fake-dim", 0)
    assert t["places"][0]["W"] == 1
    assert t["bound"] == {"selmerDim": 0, "rank": 0, "usedKappa": True}
    lines = run("census", "--group", groups / "g56.json").splitlines()
    for line in lines:
        jsonschema.validate(json.loads(line), schema("census"))
    assert sum(json.loads(line)["count"] for line in lines) == 56


@pytest.mark.parametrize("args,code,err", [
    (["count"], 2, "usage"),
    (["disc", "no-such-file.json"], 2, "parse"),
    (["count", CURVES / "curve1.json", "--p", 29], 1, "domain"),
])
def test_errors(args, code, err):
    out = json.loads(run(*args, code=code))
    jsonschema.validate(out, schema("error"))
    assert out["code"] == err
