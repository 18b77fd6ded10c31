import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bmwtopo import ybe
from bmwtopo.bmw import b_matrix
from bmwtopo.linalg import basis_state, frobenius_distance

from oracles import embed_by_index, velocity_add_raw

angles = st.floats(-math.pi + 0.1, math.pi - 0.1)
phis = st.floats(0, 2 * math.pi, exclude_max=True)


@pytest.mark.parametrize("phi", [0.0, 1.0, 4.2])
def test_r_matrix_boundary_values(phi):
    assert frobenius_distance(ybe.r_matrix(0.0, phi), np.eye(4)) == 0
    assert frobenius_distance(ybe.r_matrix(math.pi / 2, phi), cmath.exp(-3j * math.pi / 4) * b_matrix(phi)) < 1e-12


@given(st.floats(-math.pi, math.pi), phis)
def test_r_matrix_unitary_and_inverse(theta, phi):
    r = ybe.r_matrix(theta, phi)
    assert frobenius_distance(r @ r.conj().T, np.eye(4)) < 1e-12
    assert frobenius_distance(r.conj().T, ybe.r_matrix(-theta, phi)) < 1e-12
    assert frobenius_distance(r @ ybe.r_matrix(-theta, phi), np.eye(4)) < 1e-12


@given(angles, phis)
def test_r_matrix_matches_closed_form(theta, phi):
    assert frobenius_distance(ybe.r_matrix(theta, phi), ybe.r_closed_form(theta, phi)) < 1e-12


@given(angles, angles, phis)
def test_r_matrix_one_parameter_group(t1, t3, phi):
    lhs = ybe.r_matrix(t1, phi) @ ybe.r_matrix(t3, phi)
    assert frobenius_distance(lhs, ybe.r_matrix(t1 + t3, phi)) < 1e-12


@pytest.mark.parametrize("theta,phi", [(0.0, 0.4), (math.pi / 2, 0.0), (math.pi, 0.0), (math.pi, 2.2), (-2.5, 1.0)])
def test_exponential_route(theta, phi):
    assert frobenius_distance(ybe.r_from_exponential(theta, phi, 30), ybe.r_matrix(theta, phi)) < 1e-10


def test_velocity_add_examples():
    assert ybe.velocity_add(math.pi / 2, math.pi / 2) == pytest.approx(math.pi / 2, abs=1e-15)
    assert ybe.velocity_add(0.8, 0.0) == pytest.approx(0.8, abs=1e-15)
    # literal tan-half formula; not plain angle addition
    assert ybe.velocity_add(0.3, 0.5) == pytest.approx(velocity_add_raw(0.3, 0.5), abs=1e-15)
    assert ybe.velocity_add(0.3, 0.5) == pytest.approx(0.7460955189276806, abs=1e-15)


@given(angles, angles)
def test_velocity_add_matches_raw_formula(t1, t3):
    assume(abs(1 + math.tan(t1 / 2) * math.tan(t3 / 2)) > 1e-3)
    t2 = ybe.velocity_add(t1, t3)
    assert -math.pi < t2 < math.pi
    expected = (math.tan(t1 / 2) + math.tan(t3 / 2)) / (1 + math.tan(t1 / 2) * math.tan(t3 / 2))
    assert math.tan(t2 / 2) == pytest.approx(expected, rel=1e-9, abs=1e-12)
    assert t2 == pytest.approx(velocity_add_raw(t1, t3), abs=1e-9)


def test_velocity_pole():
    with pytest.raises(ybe.VelocityPoleError):
        ybe.velocity_add(math.pi / 2, -math.pi / 2)


def test_ybe_examples():
    assert ybe.check_ybe(0.0, 0.0, 1.3).residual == 0
    assert ybe.check_ybe(math.pi / 2, math.pi / 2, 0.3).residual < 1e-12


def test_ybe_direct_evaluation_oracle():
    t1, t3, phi = 0.4, 1.1, 0.3
    t2 = velocity_add_raw(t1, t3)

    def r(i, t):
        return embed_by_index(ybe.r_matrix(t, phi), i, 3)

    lhs = r(1, t1) @ r(2, t2) @ r(1, t3)
    rhs = r(2, t3) @ r(1, t2) @ r(2, t1)
    assert frobenius_distance(lhs, rhs) < 1e-12
    # plain angle addition does not satisfy the equation
    bad = r(1, t1) @ r(2, t1 + t3) @ r(1, t3) - r(2, t3) @ r(1, t1 + t3) @ r(2, t1)
    assert np.linalg.norm(bad) > 0.1


@given(angles, angles, phis)
def test_ybe_random(t1, t3, phi):
    assume(abs(math.cos((t1 - t3) / 2)) > 1e-6)
    assert ybe.check_ybe(t1, t3, phi).passed


def test_entangled_basis_examples():
    basis = ybe.entangled_basis(0.0, 0.7)
    for k, bits in enumerate(("uu", "ud", "du", "dd")):
        np.testing.assert_allclose(basis.states[k], basis_state(bits), atol=1e-15)
    psi = ybe.entangled_basis(math.pi / 2, 0.0).states[0]
    np.testing.assert_allclose(psi, 0.5 * np.array([1, 1, 1, -1]), atol=1e-15)


@given(st.floats(-math.pi, math.pi), phis)
def test_entangled_basis_orthonormal_and_equally_entangled(theta, phi):
    basis = ybe.entangled_basis(theta, phi)
    assert frobenius_distance(basis.gram(), np.eye(4)) < 1e-12
    for s in basis.states:
        assert abs(ybe.concurrence(s) - math.sin(theta) ** 2) < 1e-12


def test_concurrence_examples():
    assert ybe.concurrence(basis_state("uu")) == 0
    bell = (basis_state("ud") - basis_state("du")) / math.sqrt(2)
    assert ybe.concurrence(bell) == pytest.approx(1, abs=1e-15)


def test_concurrence_rejects_unnormalized_and_wrong_size():
    with pytest.raises(ValueError, match="normalized"):
        ybe.concurrence([1, 1, 0, 0])
    with pytest.raises(ValueError):
        ybe.concurrence([1, 0])


def test_concurrence_maximum_only_at_braid_point():
    thetas = np.linspace(0, math.pi, 181)
    c = np.array([ybe.concurrence(ybe.entangled_basis(t, 0.3).states[1]) for t in thetas])
    assert int(np.argmax(c)) == 90
    assert c[90] == pytest.approx(1, abs=1e-12)
    assert np.all(np.delete(c, 90) < 1 - 1e-4)
