"""Smoke tests for the python bindings."""

import pytest

import aknsmf


def test_derived_coefficients():
    assert aknsmf.derive_h(1, 2, "qr") == "(-1/4)*q_1*r_1 + (1/4)*q^2*r^2"
    assert aknsmf.derive_h(1, 2) == "(-2i)*e2*f2 + (-1)*e1^2*f1^2"
    assert "q_d{2:1}" in aknsmf.derive_l(1, 2, "qr")


def test_flows_and_forms():
    assert aknsmf.derive_flow(1, "e1") == "(-2i)*e2"
    assert aknsmf.derive_flow(0, "f3") == "(2i)*f3"
    omega1 = aknsmf.derive_omega(1)
    assert "δ[e1]" in omega1 and "δ[f1]" in omega1


def test_verify_records():
    records = aknsmf.verify("rmatrix", max_time=2)
    assert records
    assert all(rec["status"] == "pass" for rec in records)
    assert {rec["check"] for rec in records} == {"rmatrix"}
    assert all("witness" not in rec for rec in records)


def test_cli_roundtrip():
    code, out, err = aknsmf.run_cli(["verify", "darboux", "--k", "2", "--format", "json"])
    assert code == 0
    assert out.endswith("\n")
    code_bad, _, err_bad = aknsmf.run_cli(["verify", "nonsense"])
    assert code_bad == 2
    assert "unknown check" in err_bad


def test_errors():
    with pytest.raises(aknsmf.EngineError):
        aknsmf.derive_flow(1, "x1")
