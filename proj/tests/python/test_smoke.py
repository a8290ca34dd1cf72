import json
import os
import subprocess

import pytest

import commalg


def test_two_chain_example():
    full = commalg.construct("bkml", n=8, m=1, l=5, k=2)
    witness = commalg.construct("bkml", n=8, m=1, l=5, k=2, witness=True)
    assert len(full["generators"]) == 7
    assert commalg.closure_dimension(full) == 9
    assert commalg.is_maximal_commutative(full)["maximal"] is True
    assert commalg.length_of_system(witness, full) == 3
    assert commalg.bound_check(witness)["nilpotency_index"] == 4
    assert commalg.li_chain(witness)["dims"] == [1, 5, 7, 9, 9]


def test_single_chain_example_over_gf7():
    full = commalg.construct("bkm", n=8, m=1, k=2, field="gf:7")
    assert full["field"] == "gf:7"
    assert commalg.centralizer_dimension(full) == 8
    assert commalg.dimension_formula("bkm", n=8, m=1, k=2) == 8


def test_verify_report():
    rep = commalg.verify("bkml", n=9, m=1, l=5, k=2, samples=5, seed=3)
    assert rep["passed"] is True
    assert rep["length_measured"] == 3
    assert rep["radical_N"] == 4
    assert "elapsed_ms" not in rep


def test_errors_surface_as_exceptions():
    with pytest.raises(commalg.CommalgError, match="l > m\\+k\\+1"):
        commalg.construct("bkml", n=8, m=1, l=4, k=2)
    with pytest.raises(commalg.CommalgError):
        commalg.closure_dimension({"n": 2, "field": "rational", "admit_empty_word": True, "generators": []})


def test_module_matches_cli(tmp_path):
    cli = os.environ.get("COMMALG_CLI")
    if not cli:
        pytest.skip("CLI path not provided")
    out = tmp_path / "w.json"
    subprocess.run([cli, "construct", "--family", "bkml", "--n", "8", "--m", "1", "--l", "5", "--k", "2",
                    "--witness", "--out", str(out)], check=True)
    from_cli = json.loads(out.read_text())
    assert from_cli == commalg.construct("bkml", n=8, m=1, l=5, k=2, witness=True)
