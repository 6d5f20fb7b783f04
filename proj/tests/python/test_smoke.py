import cmath

import pytest

zx = pytest.importorskip("zxcontract")

BELL = """
qubits 2
h 0
cnot 0 1
"""


def test_bell_amplitude_roundtrip():
    c = zx.parse_circuit(BELL)
    assert c.n_qubits == 2
    assert len(c) == 2
    r = zx.contract(c, steps=10)
    want = 1 / 2**0.5
    assert abs(r["amplitude"] - want) < 1e-12
    assert r["measured_cost"] == r["predicted_cost"]
    assert abs(zx.amplitude(c) - want) < 1e-12


def test_projector_forms_agree():
    c = zx.parse_circuit(BELL)
    assert zx.amplitude(c, "11") == zx.amplitude(c, [True, True])
    assert abs(zx.amplitude(c, "01")) < 1e-12


def test_grid_pipeline_matches_oracle():
    c = zx.random_grid_circuit(2, 3, 4, seed=7)
    r = zx.contract(c, seed=7, steps=20)
    want = zx.amplitude(c)
    assert cmath.isclose(r["amplitude"], want, abs_tol=1e-9)
    assert r["subtasks"] >= 1
    assert r["planned_on"] in ("split", "annealed", "hybrid")
    stages = [s["stage"] for s in r["stages"]]
    assert stages[:3] == ["zx", "graph-like", "hybrid"]


def test_plan_only_and_determinism():
    c = zx.random_grid_circuit(2, 2, 3, seed=1)
    a = zx.contract(c, seed=3, steps=8, contract=False, deterministic=True)
    b = zx.contract(c, seed=3, steps=8, contract=False, deterministic=True)
    assert "amplitude" not in a
    assert a["plan"] == b["plan"]
    assert a["anneal"]["rows"] == b["anneal"]["rows"]


def test_bad_inputs_raise():
    c = zx.parse_circuit(BELL)
    with pytest.raises(ValueError):
        zx.contract(c, x="0")
    with pytest.raises(ValueError):
        zx.contract(c, mode="sideways")
    with pytest.raises(RuntimeError):
        zx.parse_circuit("qubits 1\nwobble 0")
