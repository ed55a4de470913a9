import numpy as np
import pytest

from pdmwell.errors import LambdaUndefined
from pdmwell.report import PRINTED, recompute, table1_rows
from pdmwell.validate import TOL_ENV, spectral_tolerance, validate_ordering


@pytest.fixture(scope="module")
def rows():
    return table1_rows()


def test_row_count(rows):
    assert len(rows) == len(PRINTED) == 9


def test_statuses(rows):
    assert [r.status for r in rows] == [
        "DISCREPANT", "UNDEFINED", "MATCH", "MATCH", "MATCH", "MATCH", "MATCH", "MATCH", "TYPO"]


def test_zhu_kroemer_energy_flag(rows):
    zk = rows[0]
    assert zk.lambda_ == 1.0
    assert zk.energy == pytest.approx(1.0)
    assert zk.energy_printed == 0.25
    assert "E0" in zk.note


def test_gora_williams_undefined(rows):
    gw = rows[1]
    assert not gw.heterojunction
    assert gw.lambda_ is None
    assert gw.energy is None


def test_new_ordering_row(rows):
    r = rows[4]
    assert (r.alpha, r.beta, r.lambda_, r.energy) == (-1.0, 1.0, 3.0, 5.0)
    assert r.admissible


def test_last_row_typo(rows):
    r = rows[-1]
    assert r.beta_printed == -2.0
    assert r.beta == -3.0
    assert r.lambda_ == 6.0 and r.energy == 0.0
    assert "violates" in r.note


def test_heterojunction_rows_all_heterojunction(rows):
    assert all(r.heterojunction for r in rows if r.status != "UNDEFINED")


def test_energy_scales_with_mu():
    r = recompute(PRINTED[4], mu=2.0)
    assert r.energy == pytest.approx(20.0)
    assert r.status == "MATCH"


def test_spectral_tolerance_env(monkeypatch):
    monkeypatch.delenv(TOL_ENV, raising=False)
    assert spectral_tolerance() == 1e-6
    monkeypatch.setenv(TOL_ENV, "3e-4")
    assert spectral_tolerance() == 3e-4


@pytest.fixture(scope="module")
def report_lambda_three():
    return validate_ordering(-1.0, 1.0, points=2001)


def test_validate_passes(report_lambda_three):
    r = report_lambda_three
    assert r.lambda_ == 3.0
    assert r.passed
    names = [c.name for c in r.checks]
    assert names[0] == "pct_closure_abs" and "reflection_abs_err" in names


def test_validate_fails_on_impossible_tolerance():
    r = validate_ordering(-1.0, 1.0, points=2001, tol=1e-14)
    assert not r.passed
    assert [c.name for c in r.checks if not c.passed] == ["q_space_rel_err"]


def test_validate_non_admissible_ordering():
    # lambda = 2: the ground state keeps a finite wall value, which agrees
    # with the non-admissible verdict, so every check passes
    r = validate_ordering(0.0, -1.0, points=2001)
    assert r.passed
    decay = [c for c in r.checks if c.name.startswith("ground_state_wall")][0]
    assert decay.passed


def test_validate_rejects_complex_lambda():
    with pytest.raises(LambdaUndefined):
        validate_ordering(0.0, 9.0)


def test_validate_no_levels():
    r = validate_ordering(-0.5, 0.0, points=2001)
    assert [c.name for c in r.checks] == ["pct_closure_abs", "reflection_abs_err"]
    assert r.passed
    assert np.isfinite([c.value for c in r.checks]).all()
