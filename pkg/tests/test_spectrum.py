import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdmwell.errors import NoSuchLevel, OutsideDomain
from pdmwell.geometry import WellSpec
from pdmwell.ordering import couplings
from pdmwell.spectrum import (
    bound_states,
    boundary_check,
    count_sign_changes,
    ground_state_closed,
    ground_state_norm,
    make_bound_state,
    phi_n,
    psi_n,
    psi_n_direct,
    tabulate,
)

W1 = WellSpec(1.0)


def well(lam):
    """Heterojunction ordering with the requested strength."""
    alpha = (lam - 2.0) / 4.0
    return couplings(alpha, -1.0 - 2.0 * alpha)


def test_bound_state_lambda_three():
    s0 = make_bound_state(well(3), W1, 0)
    assert (s0.hyp_a, s0.hyp_b, s0.ref_energy, s0.parity) == (0.5, 2.5, -4.0, "even")
    s1 = make_bound_state(well(3), W1, 1)
    assert (s1.hyp_a, s1.hyp_b, s1.ref_energy, s1.parity) == (1.0, 2.0, -1.0, "odd")


def test_bound_state_lambda_two():
    s = make_bound_state(couplings(0.0, -1.0), W1, 0)
    assert s.ref_energy == -1.0
    with pytest.raises(NoSuchLevel):
        make_bound_state(couplings(0.0, -1.0), W1, 1)


def test_no_such_level():
    with pytest.raises(NoSuchLevel):
        make_bound_state(well(3), W1, -1)
    with pytest.raises(NoSuchLevel):
        make_bound_state(couplings(-0.5, 0.0), W1, 0)
    with pytest.raises(NoSuchLevel):
        make_bound_state(couplings(0.0, 9.0), W1, 0)


def test_target_energy_includes_shift():
    s = make_bound_state(couplings(-1.0, 1.0), WellSpec(0.5), 1)
    assert s.target_energy == pytest.approx(4 * 8.0)


def test_parity_at_origin():
    for s in bound_states(well(6), W1):
        if s.parity == "even":
            assert abs(phi_n(s, 0.0)) > 0.1
        else:
            assert phi_n(s, 0.0) == 0.0
            assert psi_n(s, W1, 0.0) == 0.0


def test_lambda_three_closed_shapes():
    q = np.array([0.5, 1.0, 2.0])
    s0, s1 = bound_states(well(3), W1)
    # normalization of sech^2 is sqrt(3/4), of sech*tanh is sqrt(3/2)
    assert np.allclose(phi_n(s0, q), math.sqrt(0.75) / np.cosh(q) ** 2, rtol=1e-12)
    assert np.allclose(phi_n(s1, q), math.sqrt(1.5) * np.tanh(q) / np.cosh(q), rtol=1e-12)


def residual(s, q, lam, mu, h):
    """-phi'' - lam(lam-1) mu^2 sech^2 phi - E phi with an 8th-order stencil."""
    w = [-1 / 560, 8 / 315, -1 / 5, 8 / 5, -205 / 72, 8 / 5, -1 / 5, 8 / 315, -1 / 560]
    d2 = sum(c * phi_n(s, q + (j - 4) * h) for j, c in enumerate(w)) / h ** 2
    well_term = lam * (lam - 1) * mu ** 2 / np.cosh(mu * q) ** 2
    return -d2 - well_term * phi_n(s, q) - s.ref_energy * phi_n(s, q)


@pytest.mark.parametrize("lam", [2.5, 3.0, 4.7, 6.0])
@pytest.mark.parametrize("L", [1.0, 0.5])
def test_reference_equation_residual(lam, L):
    w = WellSpec(L)
    q = np.linspace(-8 / w.mu, 8 / w.mu, 201)
    h = 0.02 / w.mu
    for s in bound_states(well(lam), w):
        r = residual(s, q, lam, w.mu, h)
        assert np.max(np.abs(r)) <= 1e-8 * w.mu ** 2.5


@pytest.mark.parametrize("lam", [3.0, 4.7, 6.0])
def test_orthonormal_in_q(lam):
    states = bound_states(well(lam), W1)
    q = np.linspace(-60, 60, 24001)
    phis = np.array([phi_n(s, q) for s in states])
    gram = np.trapezoid(phis[:, None] * phis[None], q, axis=-1)
    assert np.allclose(gram, np.eye(len(states)), atol=1e-9)


@pytest.mark.parametrize("lam", [3.0, 5.0, 6.0])
def test_two_position_space_paths_agree(lam):
    x = np.linspace(-0.999, 0.999, 101)
    for s in bound_states(well(lam), W1):
        a, b = psi_n(s, W1, x), psi_n_direct(s, W1, x)
        assert np.max(np.abs(a - b)) <= 1e-10 * np.max(np.abs(a))


@pytest.mark.parametrize("lam", [3.0, 6.0])
def test_node_counts_and_parity(lam):
    x = np.linspace(-0.995, 0.995, 2001)
    for s in bound_states(well(lam), W1):
        psi = psi_n(s, W1, x)
        assert count_sign_changes(psi) == s.n
        sign = 1 if s.parity == "even" else -1
        assert np.allclose(psi[::-1], sign * psi, rtol=1e-12, atol=1e-14)


def test_ground_state_norm_lambda_three():
    assert ground_state_norm(3.0, W1) == pytest.approx(math.sqrt(0.75), rel=1e-14)


def test_ground_state_closed_examples():
    x = np.linspace(-0.99, 0.99, 11)
    assert np.allclose(ground_state_closed(well(3), W1, x), math.sqrt(0.75) * np.sqrt(1 - x ** 2), rtol=1e-14)
    flat = ground_state_closed(couplings(0.0, -1.0), W1, x)
    assert np.allclose(flat, flat[0], rtol=1e-14)
    with pytest.raises(NoSuchLevel):
        ground_state_closed(couplings(-0.5, 0.0), W1, 0.0)
    with pytest.raises(OutsideDomain):
        ground_state_closed(well(3), W1, 1.0)


@pytest.mark.parametrize("lam", [2.5, 3.0, 4.7, 6.0])
@pytest.mark.parametrize("L", [1.0, 2.0])
def test_ground_state_reduces_to_closed_form(lam, L):
    w = WellSpec(L)
    x = np.linspace(-L, L, 103)[1:-1]
    s = make_bound_state(well(lam), w, 0)
    closed = ground_state_closed(well(lam), w, x)
    assert np.max(np.abs(psi_n_direct(s, w, x) - closed)) <= 1e-10 * np.max(closed)


def test_ground_state_vanishes_at_walls_lambda_three():
    s = make_bound_state(well(3), W1, 0)
    edge = 1 - 1e-6
    assert abs(psi_n(s, W1, edge)) < 2e-3 * psi_n(s, W1, 0.0)
    assert abs(psi_n(s, W1, -edge)) < 2e-3 * psi_n(s, W1, 0.0)


@pytest.mark.parametrize("lam, expected", [(3.0, True), (2.01, True), (2.0, False), (1.5, False)])
def test_boundary_check_ground_state(lam, expected):
    assert boundary_check(make_bound_state(well(lam), W1, 0), W1) is expected


def test_boundary_check_upper_levels():
    # psi_n ~ (1 - s^2)^((lam - 2 - n)/2) at the walls
    states = bound_states(well(6), W1)
    assert [boundary_check(s, W1) for s in states] == [True, True, True, True, False]


def test_count_sign_changes():
    assert count_sign_changes([1.0, 0.0, -1.0, 2.0]) == 2
    assert count_sign_changes([1.0, 1e-12, 1.0]) == 0
    assert count_sign_changes(np.sin(np.linspace(0.1, 10, 500))) == 3


def test_tabulate():
    s = make_bound_state(well(3), W1, 0)
    t = tabulate(s, W1, 101)
    assert t.space == "x" and t.values.shape == (101,)
    assert np.all(np.abs(t.abscissae) < 1)
    assert np.allclose(t.values, t.values[::-1], rtol=1e-13)
    t = tabulate(s, W1, 11, "q", q_max=3.0)
    assert t.abscissae[0] == -3.0 and t.abscissae[-1] == 3.0
    with pytest.raises(ValueError):
        tabulate(s, W1, 11, "k")


@settings(max_examples=30, deadline=None)
@given(st.floats(2.05, 7.0), st.floats(0.3, 3.0))
def test_normalization_property(lam, L):
    w = WellSpec(L)
    x = np.linspace(-L, L, 20001)[1:-1]
    for s in bound_states(well(lam), w):
        if s.decay <= 1.0:
            continue  # psi^2 too singular at the walls for a uniform rule
        # x-space weight is 1 since |psi|^2 dx = |phi|^2 dq
        total = np.trapezoid(psi_n(s, w, x) ** 2, x)
        assert total == pytest.approx(1.0, rel=1e-3)
