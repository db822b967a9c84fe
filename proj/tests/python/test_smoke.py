import json
import os
import pathlib

import numpy as np
import pytest

import eqa

FIXTURES = pathlib.Path(os.environ.get("EQA_FIXTURE_DIR",
                                       pathlib.Path(__file__).resolve().parents[1] / "fixtures"))


def test_version_and_suites():
    assert eqa.__version__ == "0.1.0"
    assert "prop1" in eqa.suite_names()


def test_special_functions():
    assert eqa.theta(1.0, 0.3) == 0
    assert abs(eqa.tau(1.0, -0.3) - 1) < 1e-15
    x, q = 0.8 + 0.1j, -0.3
    assert abs(eqa.tau(x, q) * eqa.tau(1 / x, q) - 1) < 1e-12
    assert eqa.qpochhammer(0.5, []) == 0.5


def test_policy_and_errors():
    tight = eqa.TruncationPolicy(eps=1e-15)
    assert tight.eps == 1e-15
    with pytest.raises(eqa.EqaError):
        eqa.qpochhammer(0.5, [0.9995])
    with pytest.raises(eqa.EqaError):
        eqa.TruncationPolicy(eps=-1.0)
    with pytest.raises(eqa.EqaError):
        eqa.evaluate("no_such_function", x=1)


def test_rmatrix_is_numpy_and_unitary():
    r = eqa.r_matrix(0.1, -0.3, 1.3 + 0.2j)
    assert isinstance(r, np.ndarray) and r.shape == (4, 4)
    res = eqa.check_prop1(0.1, -0.3, 1.3 + 0.2j)
    assert set(res) == {"unitarity", "crossing", "antisymmetry"}
    assert max(res.values()) < 1e-9
    y = eqa.y_operator(0.1, -0.3, -2.0, 1.3 + 0.2j)
    assert np.max(np.abs(y - np.eye(4))) < 1e-9


def test_structure_functions():
    assert abs(eqa.f_poisson_series(1.5, 0.4) - eqa.f_poisson_tau(1.5, 0.4)) < 1e-10
    q = 0.6 * np.exp(0.3j)
    assert abs(eqa.y_exchange(2, 1.2 + 0.1j, q ** 2, q) - 1) < 1e-9
    assert abs(eqa.skao_comparison(0.2 + 0.1j, -0.3 + 0.15j, 1.3 + 0.2j) - 1) < 1e-8


def test_modes():
    rep = eqa.verify_prop2(0.4, 1, 10)
    assert rep["max_residual"] < 1e-8
    assert len(rep["rows"]) == 21
    coeffs = eqa.laurent_extract(0.4, 1, 3)
    assert set(coeffs) == set(range(-3, 4))


def test_run_suite_and_evaluate_match_cli_format():
    rep = eqa.run_suite({"suite": "prop1", "count": 5})
    assert rep["passed"] and len(rep["samples"]) == 5
    out = eqa.evaluate("kappa_inv", x2=1.96, p=0.1, q=-0.3)
    assert out["function"] == "kappa_inv"
    assert out["arguments"]["x2"] == "1.96"


def test_oracle_scalars():
    doc = json.loads((FIXTURES / "oracle.json").read_text())
    checked = 0
    for case in doc["cases"]:
        want = case["value"]
        if not (isinstance(want, list) and isinstance(want[0], str)):
            continue
        got = eqa.evaluate(case["function"], **case["args"])["value"]
        w = complex(float(want[0]), float(want[1]))
        g = complex(*got)
        assert abs(g - w) <= 1e-10 * abs(w) + 1e-300, case
        checked += 1
    assert checked > 20
