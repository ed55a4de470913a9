import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdmwell.errors import ConstraintViolation, InvalidScale, LambdaUndefined
from pdmwell.ordering import (
    Couplings,
    bound_state_count,
    classify,
    couplings,
    energy_levels,
    lambda_heterojunction,
    make_ordering,
    ordering_from,
)

reals = st.floats(-5, 5, allow_nan=False)


def test_make_ordering_valid():
    o = make_ordering(-0.5, 0.0, -0.5)
    assert o.heterojunction
    assert make_ordering(0.0, -1.0, 0.0).heterojunction
    assert not make_ordering(-1.0, 0.0, 0.0).heterojunction


def test_make_ordering_rejects_constraint_violation():
    with pytest.raises(ConstraintViolation):
        make_ordering(0.0, 0.0, 0.0)
    with pytest.raises(ConstraintViolation):
        make_ordering(-0.5, 0.0, -0.5 + 1e-9)


def test_ordering_from_derives_gamma():
    o = ordering_from(0.25, -1.5)
    assert o.gamma == 0.25
    assert o.heterojunction


def test_couplings_zhu_kroemer():
    c = couplings(-0.5, 0.0)
    assert c.g1 == 0.25
    assert c.g2 == 5 / 16
    assert c.lambda_ == 1.0
    assert c.shift_coefficient == pytest.approx(1.0)


def test_couplings_new_ordering():
    c = couplings(-1.0, 1.0)
    assert c.lambda_ == 3.0
    assert c.shift_coefficient == 9.0


def test_couplings_mustafa_mazharimousavi():
    c = couplings(-0.25, -0.5)
    assert (c.g1, c.g2, c.lambda_, c.shift_coefficient) == (0.0, 0.0, 1.0, 0.0)


def test_couplings_complex_lambda():
    c = couplings(0.0, 9.0)
    # 1 + 80 * 19/4 - 64 * (9 + 9/16) < 0
    assert c.discriminant < 0
    assert c.lambda_ is None
    with pytest.raises(LambdaUndefined):
        c.require_lambda()


@pytest.mark.parametrize("alpha, lam", [(0.5, 4.0), (-3 / 8, 0.5), (1.0, 6.0), (-1.0, 3.0)])
def test_lambda_heterojunction(alpha, lam):
    assert lambda_heterojunction(alpha) == lam


@pytest.mark.parametrize(
    "alpha, beta, lam, admissible, count",
    [
        (-0.5, 0.0, 1.0, False, 0),
        (0.0, -1.0, 2.0, False, 1),
        (0.75, -2.5, 5.0, True, 4),
        (1.0, -3.0, 6.0, True, 5),
        (0.0, 9.0, None, False, 0),
    ],
)
def test_classify(alpha, beta, lam, admissible, count):
    v = classify(alpha, beta)
    assert v.lambda_ == lam
    assert v.admissible is admissible
    assert v.bound_state_count == count


def test_bound_state_count_edges():
    assert bound_state_count(None) == 0
    assert bound_state_count(1.0) == 0
    assert bound_state_count(1.5) == 1
    assert bound_state_count(3.0) == 2
    assert bound_state_count(3.0 + 1e-14) == 2
    assert bound_state_count(3.01) == 3


def test_energy_levels_lambda_three():
    levels = energy_levels(couplings(-1.0, 1.0), 1.0)
    assert [lv.n for lv in levels] == [0, 1]
    assert [lv.reference_energy for lv in levels] == [-4.0, -1.0]
    assert [lv.target_energy for lv in levels] == [5.0, 8.0]


def test_energy_levels_table_zero():
    (e0, _) = energy_levels(couplings(0.25, -1.5), 1.0)
    assert e0.target_energy == 0.0


def test_energy_levels_empty_and_errors():
    assert energy_levels(couplings(-0.5, 0.0), 1.0) == []
    with pytest.raises(InvalidScale):
        energy_levels(couplings(-1.0, 1.0), 0.0)


def test_energy_levels_scale_with_mu():
    lv = energy_levels(couplings(0.5, -2.0), 2.0)
    assert [x.target_energy for x in lv] == [0.0, 20.0, 32.0]


@given(reals, reals)
def test_lambda_solves_its_quadratic(alpha, beta):
    c = couplings(alpha, beta)
    if c.lambda_ is None:
        assert c.discriminant < 0
        return
    lam = c.lambda_
    assert lam >= 0.5
    assert lam * (lam - 1) == pytest.approx(c.well_depth, abs=1e-10 * max(1.0, abs(c.well_depth)))


@given(reals)
def test_heterojunction_line_agrees_with_general_formula(alpha):
    lam = couplings(alpha, -1 - 2 * alpha).lambda_
    assert lam == pytest.approx(lambda_heterojunction(alpha), abs=1e-12 * max(1.0, lam))


@settings(deadline=None)
@given(reals, reals, st.floats(0.1, 10))
def test_shift_is_level_independent(alpha, beta, mu):
    c = couplings(alpha, beta)
    if c.lambda_ is None:
        return
    for lv in energy_levels(c, mu):
        assert lv.target_energy - lv.reference_energy == pytest.approx(
            mu ** 2 * c.shift_coefficient, abs=1e-9 * mu ** 2 * max(1.0, abs(c.shift_coefficient)))


@given(reals, reals)
def test_levels_strictly_increasing(alpha, beta):
    c = couplings(alpha, beta)
    if c.lambda_ is None:
        return
    energies = [lv.target_energy for lv in energy_levels(c, 1.0)]
    assert all(a < b for a, b in zip(energies, energies[1:]))


@given(reals, reals)
def test_verdict_depends_only_on_couplings(alpha, beta):
    c = couplings(alpha, beta)
    v = classify(alpha, beta)
    rebuilt = Couplings(c.g1, c.g2, c.lambda_, c.shift_coefficient)
    assert v.admissible == (rebuilt.lambda_ is not None and rebuilt.lambda_ > 2)
    assert v.bound_state_count == bound_state_count(rebuilt.lambda_)


def test_table_lambda_column():
    rows = [(-0.5, 0.0), (0.0, -1.0), (-0.25, -0.5), (-1.0, 1.0),
            (0.25, -1.5), (0.5, -2.0), (0.75, -2.5), (1.0, -3.0)]
    lams = [couplings(a, b).lambda_ for a, b in rows]
    assert lams == [1, 2, 1, 3, 3, 4, 5, 6]
    assert all(math.isclose(x, round(x), abs_tol=1e-12) for x in lams)
