import json
import os
import subprocess
import sys

import pytest

from chernring.cli import main, parse_bundle_file, SpecInvariantError, UsageError
from golden_cases import (
    FORMATS,
    UNIVERSAL_CASES,
    VERIFY_ARGS,
    VERIFY_PATH,
    universal_args,
    universal_path,
)

REGEN = os.environ.get("CHERNRING_REGEN_GOLDEN") == "1"


def run(args, tmp_path):
    """Run the CLI in-process with ``--out``; return (exit code, output bytes)."""
    out = tmp_path / "out.txt"
    code = main(list(args) + ["--out", str(out)])
    return code, out.read_bytes() if out.exists() else b""


def cli(*args):
    return subprocess.run([sys.executable, "-m", "chernring", *args], capture_output=True)


@pytest.mark.parametrize("fmt", sorted(FORMATS))
@pytest.mark.parametrize("n,r", UNIVERSAL_CASES)
def test_universal_poly_golden(n, r, fmt, tmp_path):
    code, data = run(universal_args(n, r, fmt), tmp_path)
    assert code == 0
    path = universal_path(n, r, fmt)
    if REGEN:
        path.write_bytes(data)
    assert data == path.read_bytes()


def test_verify_golden(tmp_path):
    code, data = run(VERIFY_ARGS, tmp_path)
    assert code == 0
    if REGEN:
        VERIFY_PATH.write_bytes(data)
    assert data == VERIFY_PATH.read_bytes()
    doc = json.loads(data)
    assert doc["pass"] is True and doc["suite"] == "all"
    assert all({"id", "params", "pass"} <= set(c) for c in doc["cases"])


def test_stdout_matches_file_output(tmp_path):
    proc = cli("universal-poly", "--n", "1", "--r", "1", "--format", "latex")
    assert proc.returncode == 0
    assert proc.stdout == b"-t_1 + \\binom{t_0+1}{2} u_1\n"
    assert proc.stdout == universal_path(1, 1, "latex").read_bytes()


def test_small_polynomials_in_text():
    assert cli("universal-poly", "--n", "0", "--r", "1").stdout == b"t0\n"
    assert cli("universal-poly", "--n", "0", "--r", "2").stdout == b"-t0\n"


def test_pnr_table(tmp_path):
    code, data = run(["pnr-table", "--bound", "2"], tmp_path)
    assert code == 0
    assert data.decode().splitlines() == [
        "P[0,1] = t0",
        "P[1,1] = -t1 + (1/2 t0^2 + 1/2 t0) u1",
        "P[0,2] = -t0",
    ]


# -- exit-code contract -----------------------------------------------------


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--r", "5"],
        ["verify", "--n", "5"],
        ["verify", "--truncate", "11"],
        ["verify", "--r", "3", "--truncate", "2"],
        ["verify", "--suite", "nope"],
        ["universal-poly", "--n", "1"],
        ["universal-poly", "--n", "1", "--r", "0"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_two(args, capsys):
    assert main(args) == 2


def test_verify_failure_exits_one(monkeypatch, tmp_path):
    import chernring.cli as C
    from chernring.report import Report

    def failing(suite, n, r, N):
        rep = Report(suite)
        rep.add("forced", {"r": r}, False, "injected failure")
        return rep

    monkeypatch.setattr(C, "run_suite", failing)
    code, data = run(["verify", "--suite", "grr", "--format", "json"], tmp_path)
    assert code == 1
    doc = json.loads(data)
    assert doc["pass"] is False and doc["cases"][0]["first_failure"] == "injected failure"


@pytest.mark.parametrize("suite", ["prop8.1", "lemma8.2", "prop8.4", "cor7.7", "rrwd", "grr"])
def test_each_suite_passes(suite, tmp_path):
    code, data = run(["verify", "--suite", suite, "--n", "2", "--r", "2", "--truncate", "5"], tmp_path)
    assert code == 0, data.decode()
    assert data.decode().splitlines()[-1].startswith(f"{suite}: all passed")


def test_json_flag_alias(tmp_path):
    code, data = run(["verify", "--suite", "cor7.7", "--json"], tmp_path)
    assert code == 0 and json.loads(data)["suite"] == "cor7.7"


# -- bundle subcommand ------------------------------------------------------


def write_spec(tmp_path, doc):
    p = tmp_path / "spec.json"
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


LINE_AND_RANK_TWO = {
    "truncate": 3,
    "bundles": [
        {"name": "L", "rank": 1, "roots": [["x", 1]]},
        {"name": "V", "rank": 2, "chern": ["c1", "c2"]},
    ],
}


def test_bundle_chern_ch_todd(tmp_path):
    spec = write_spec(tmp_path, LINE_AND_RANK_TWO)
    code, data = run(["bundle", "ch", spec], tmp_path)
    assert code == 0
    assert data.decode().splitlines() == [
        "L: 1 + x + 1/2 x^2 + 1/6 x^3",
        "V: 2 + c1 + 1/2 c1^2 - c2 + 1/6 c1^3 - 1/2 c1*c2",
    ]
    code, data = run(["bundle", "todd", spec], tmp_path)
    assert data.decode().splitlines()[0] == "L: 1 + 1/2 x + 1/12 x^2"


def test_bundle_star(tmp_path):
    spec = write_spec(tmp_path, LINE_AND_RANK_TWO)
    code, data = run(["bundle", "star", spec], tmp_path)
    assert code == 0
    assert data == b"1 + 2 x + c1 + x^2 + x*c1 + c2\n"


def test_bundle_single_and_json(tmp_path):
    spec = write_spec(tmp_path, {"bundles": [{"name": "E", "rank": 2, "roots": [["a", 1], ["b", 1]]}]})
    code, data = run(["bundle", "chern", spec, "--truncate", "2"], tmp_path)
    assert data == b"1 + a + b + a*b\n"
    code, data = run(["bundle", "chern", spec, "--format", "json"], tmp_path)
    doc = json.loads(data)
    assert doc["results"][0]["rank"] == 2 and doc["truncate"] == 4


def test_virtual_roots(tmp_path):
    spec = write_spec(tmp_path, {"truncate": 2, "bundles": [{"rank": 0, "roots": [["a", 1], ["b", -1]]}]})
    code, data = run(["bundle", "chern", spec], tmp_path)
    assert code == 0 and data == b"1 + a - b - a*b + b^2\n"


@pytest.mark.parametrize(
    "doc",
    [
        "{not json",
        {"bundles": []},
        {"bundles": [{"rank": "two", "roots": []}]},
        {"bundles": [{"rank": 1}]},
        {"bundles": [{"rank": 1, "roots": [["x"]]}]},
        {"truncate": -1, "bundles": [{"rank": 0, "roots": []}]},
    ],
)
def test_malformed_spec_exits_two(doc, tmp_path):
    assert main(["bundle", "chern", write_spec(tmp_path, doc)]) == 2


def test_missing_file_exits_two(tmp_path):
    assert main(["bundle", "chern", str(tmp_path / "missing.json")]) == 2


def test_rank_inconsistency_exits_one(tmp_path):
    spec = write_spec(tmp_path, {"bundles": [{"rank": 2, "roots": [["x", 1]]}]})
    assert main(["bundle", "chern", spec]) == 1
    with pytest.raises(SpecInvariantError):
        parse_bundle_file(json.dumps({"bundles": [{"rank": 2, "roots": [["x", 1]]}]}))
    with pytest.raises(UsageError):
        parse_bundle_file("[]")
