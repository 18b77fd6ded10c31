import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bmwtopo import bmw
from bmwtopo.linalg import basis_state, commutator, embed_two_site, frobenius_distance

from oracles import embed_by_index, gaussian_rank

W3 = cmath.exp(3j * math.pi / 4)
phis = st.floats(0, 2 * math.pi, exclude_max=True)


def test_constants_from_eigenvalues():
    c = bmw.CONSTANTS
    assert c.sigma == c.braid_eigenvalues[0]
    assert abs(c.w - (c.braid_eigenvalues[1] + c.braid_eigenvalues[2])) < 1e-15
    assert abs(c.w - math.sqrt(2) * 1j) < 1e-15
    assert abs(c.d - 2) < 1e-15
    assert abs(c.d - (1 - (c.sigma - 1 / c.sigma) / c.w)) < 1e-15


def test_spin_half_algebra():
    sp, sm, s3 = bmw.spin_half_ops()
    assert frobenius_distance(commutator(s3, sp), sp) == 0
    assert frobenius_distance(commutator(sp, sm), 2 * s3) == 0
    np.testing.assert_array_equal(sp @ np.array([0, 1]), [1, 0])
    np.testing.assert_array_equal(sm, sp.conj().T)


def test_spin1_pair_algebra():
    sp, sm, s3 = bmw.spin1_pair_ops()
    assert frobenius_distance(commutator(sp, sm), 2 * s3) < 1e-15
    assert frobenius_distance(commutator(s3, sp), sp) < 1e-15
    assert frobenius_distance(commutator(s3, sm), -sm) < 1e-15
    uu = basis_state("uu")
    np.testing.assert_array_equal(s3 @ uu, uu)


@pytest.mark.parametrize("phi", [0.0, 0.7, 2.0, 5.5])
def test_xy_ops(phi):
    x, y = bmw.xy_ops(phi)
    assert frobenius_distance(x + x.conj().T, np.zeros((4, 4))) < 1e-15
    assert frobenius_distance(y, 2 * x @ x + np.eye(4)) == 0
    assert frobenius_distance(y, y.conj().T) < 1e-15
    assert frobenius_distance(0.5 * (np.eye(4) - 2j * x - y), bmw.e_matrix(phi)) < 1e-12


def test_generators_printed_entries_at_zero():
    g = bmw.generators(0.0)
    assert abs(g.E[0, 3] - 0.5) < 1e-15
    assert abs(g.B[0, 0] - W3 / 2) < 1e-15
    assert abs(np.vdot(g.psi_d, g.psi_d) - 1) < 1e-15


@given(phis)
def test_generators_consistency(phi):
    g = bmw.generators(phi)
    x, y = bmw.xy_ops(phi)
    assert frobenius_distance(g.E, 0.5 * (np.eye(4) - 2j * x - y)) < 1e-12
    assert frobenius_distance(g.B, 0.5 * W3 * (np.eye(4) + 2 * x + y)) < 1e-12
    assert frobenius_distance(g.E, 2 * np.outer(g.psi_d, g.psi_d.conj())) < 1e-12
    assert abs(np.trace(g.E) - 2) < 1e-12
    assert frobenius_distance(g.B.conj().T @ g.B, np.eye(4)) < 1e-12
    np.testing.assert_array_equal(g.B_inv, g.B.conj().T)


def test_generators_reject_nonfinite():
    with pytest.raises(ValueError):
        bmw.generators(float("nan"))


def test_relations_example_and_specific_residuals():
    phi = 0.7
    reports = bmw.verify_bmw_relations(3, phi, 1e-12)
    assert reports and all(r.passed for r in reports), [str(r) for r in reports if not r.passed]
    # direct 8x8 arithmetic, independent of the report machinery
    g = bmw.generators(phi)
    e1 = embed_by_index(g.E, 1, 3)
    b1 = embed_by_index(g.B, 1, 3)
    assert frobenius_distance(e1 @ e1, 2 * e1) < 1e-12
    assert frobenius_distance(e1 @ b1, cmath.exp(5j * math.pi / 4) * e1) < 1e-12


def test_relation_names_cover_every_family():
    names = {r.name.split(" [")[0] for r in bmw.verify_bmw_relations(4, 0.1)}
    expected = {
        "B_i B_i^-1 = I",
        "B_i - B_i^-1 = w(I - E_i)",
        "E_i B_i = sigma E_i",
        "B_i E_i = sigma E_i",
        "E_i^2 = d E_i",
        "E_i E_j E_i = E_i",
        "B_i B_j B_i = B_j B_i B_j",
        "B_j B_i E_j = E_i E_j",
        "E_i B_j B_i = E_i E_j",
        "B_j E_i B_j = B_i^-1 E_j B_i^-1",
        "[B_i, B_j] = 0",
        "[E_i, B_j] = 0",
        "[E_i, E_j] = 0",
    }
    assert names == expected


def test_relations_need_three_sites():
    with pytest.raises(ValueError):
        bmw.verify_bmw_relations(2, 0.0)


@given(phis)
def test_relations_hold_for_random_phi(phi):
    assert all(r.passed for r in bmw.verify_bmw_relations(3, phi, 1e-12))


def test_temperley_lieb_subalgebra_alone():
    e = bmw.e_matrix(1.9)
    e1, e2 = embed_two_site(e, 1, 3), embed_two_site(e, 2, 3)
    assert frobenius_distance(e1 @ e2 @ e1, e1) < 1e-12
    assert frobenius_distance(e2 @ e1 @ e2, e2) < 1e-12
    assert frobenius_distance(e2 @ e2, 2 * e2) < 1e-12


def test_braid_spectrum_at_zero():
    reports = bmw.verify_braid_spectrum(0.0)
    assert all(r.passed for r in reports)
    assert reports[0].residual < 1e-12


@given(phis)
def test_braid_trace_is_phi_independent(phi):
    b = bmw.b_matrix(phi)
    assert abs(np.trace(b) - 2 * W3) < 1e-12
    l1, l2, l3 = bmw.CONSTANTS.braid_eigenvalues
    assert abs((l1 + 2 * l2 + l3) - 2 * W3) < 1e-15


@pytest.mark.parametrize("phi", [0.0, 0.3, 4.0])
def test_degeneracy_rank_by_elimination(phi):
    l1, l2, l3 = bmw.CONSTANTS.braid_eigenvalues
    b = bmw.b_matrix(phi)
    assert gaussian_rank(b - l2 * np.eye(4)) == 2
    assert gaussian_rank(b - l1 * np.eye(4)) == 3
    assert gaussian_rank(b - l3 * np.eye(4)) == 3
