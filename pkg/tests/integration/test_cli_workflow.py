"""Integration tests for complete command line runs."""

import hashlib
import json
import math

import pandas as pd
import pytest

from cli.commands import main


@pytest.mark.slow
def test_default_pdx_verify(tmp_path):
    """Test the default verification grid passes and writes a report with manifest."""
    out = tmp_path / "report.json"
    assert main(["pdx-verify", "--out", str(out)]) == 0

    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["passed"] is True
    assert report["max_deviation"] < 1e-6
    checks = {entry["check"] for entry in report["entries"]}
    assert {"free_symmetry", "free_first_crossing", "free_last_crossing", "free_first_last",
            "step_free_limit", "delta_assembly(a=1)"} <= checks

    manifest = json.loads((tmp_path / "report.json.manifest.json").read_text(encoding="utf-8"))
    assert manifest["sha256"] == hashlib.sha256(out.read_bytes()).hexdigest()


@pytest.mark.slow
def test_pdx_verify_with_lattice_oracle(tmp_path):
    """Test the step lattice-oracle check through the command line."""
    out = tmp_path / "oracle.json"
    code = main(["pdx-verify", "--model", "step", "--V", "1", "--x0", "1", "--T", "1",
                 "--lattice-oracle", "--out", str(out)])
    assert code == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert any(entry["check"] == "step_lattice_oracle(V=1)" for entry in report["entries"])


def test_off_lattice_oracle_query_fails(tmp_path):
    """Test endpoints that are not multiples of the unit fail the oracle check with exit 1."""
    out = tmp_path / "oracle.json"
    code = main(["pdx-verify", "--x0", "0.5", "--T", "1", "--lattice-oracle", "--out", str(out)])
    assert code == 1
    report = json.loads(out.read_text(encoding="utf-8"))
    failed = [entry for entry in report["entries"] if not entry["passed"]]
    assert [entry["check"] for entry in failed] == ["step_lattice_oracle(V=1)"]


def test_delta_converge_table(tmp_path):
    """Test the delta convergence table reports a slope near -1/2."""
    out = tmp_path / "converge.csv"
    assert main(["converge", "--model", "delta", "--a", "1", "--out", str(out)]) == 0
    table = pd.read_csv(out)
    assert table["slope"].iloc[0] == pytest.approx(-0.5, abs=0.2)
    assert table["row"].tolist() == ["sample", "sample", "sample", "extrapolated"]


def test_histogram_run(tmp_path):
    """Test exhaustive histograms for n = 1..6 are written as (class, count) blocks with exact totals."""
    out = tmp_path / "histogram.csv"
    argv = ["histogram"] + [arg for n in range(1, 7) for arg in ("--n", str(n))] + ["--out", str(out)]
    assert main(argv) == 0
    table = pd.read_csv(out)
    assert list(table.columns) == ["n", "statistic", "class", "count"]
    totals = table.groupby(["n", "statistic"])["count"].sum()
    for n in range(1, 7):
        below = table[(table["n"] == n) & (table["statistic"] == "below_time")]
        assert below["count"].nunique() == 1 and len(below) == n + 1
        assert totals[(n, "crossings")] == math.comb(2 * n, n)
