"""Two-form coordinates, the split basis, and the two-to-one six map."""

import numpy as np
import pytest

from kahlerkit import cover_so33 as S6
from kahlerkit import forms as F
from kahlerkit.report import random_det1


def test_p_q_pinned():
    p = np.zeros((4, 4))
    p[0, 1] = 1.0
    p[1, 0] = -1.0
    q = S6.p_to_q(p)
    assert np.array_equal(q, [0.5, 0, 0, 0.5, 0, 0])
    assert S6.plucker_value(p) == 0.0
    p[2, 3] = 1.0
    p[3, 2] = -1.0
    q = S6.p_to_q(p)
    assert np.array_equal(q, [1.0, 0, 0, 0, 0, 0])
    assert S6.plucker_value(p) == 1.0
    assert S6.q_value(q) == 1.0


def test_p_q_round_trip_and_invariant():
    rng = np.random.default_rng(0)
    for _ in range(50):
        q0 = rng.uniform(-2, 2, 6)
        p = S6.q_to_p(q0)
        assert np.array_equal(p, -p.T)
        q = S6.p_to_q(p)
        assert np.max(np.abs(q - q0)) < 1e-14
        assert abs(S6.plucker_value(p) - S6.q_value(q)) < 1e-12
    with pytest.raises(ValueError):
        S6.p_to_q(np.ones((4, 4)))


def test_eta_basis_pinned():
    etas = S6.eta_basis()
    m01 = F.mask_of_indices((0, 1))
    m23 = F.mask_of_indices((2, 3))
    assert etas[0].coeff(m01) == 1.0 and etas[0].coeff(m23) == 1.0
    assert etas[3].coeff(m01) == 1.0 and etas[3].coeff(m23) == -1.0
    # eta_2 carries dx3^dx2... the reversed pair enters with a minus sign
    m02 = F.mask_of_indices((0, 2))
    m13 = F.mask_of_indices((1, 3))
    assert etas[1].coeff(m02) == 1.0 and etas[1].coeff(m13) == -1.0


def test_eta_gram():
    G, scale = S6.eta_gram()
    assert scale == 1.0
    assert np.array_equal(G, S6.J_SPLIT)


def test_six_map_identity_and_kernel():
    assert np.array_equal(S6.induced_six_map(np.eye(4)).matrix, np.eye(6))
    assert np.array_equal(S6.induced_six_map(-np.eye(4)).matrix, np.eye(6))
    rng = np.random.default_rng(1)
    for _ in range(25):
        G = random_det1(rng)
        assert np.array_equal(
            S6.induced_six_map(G).matrix, S6.induced_six_map(-G).matrix
        )


def test_six_map_form_preservation_and_homomorphism():
    rng = np.random.default_rng(2)
    for _ in range(25):
        G = random_det1(rng)
        sm = S6.induced_six_map(G)
        assert abs(sm.det - 1.0) < 1e-9
        assert sm.form_residual < 1e-9
        M = sm.matrix
        assert np.max(np.abs(M.T @ S6.J_SPLIT @ M - S6.J_SPLIT)) < 1e-9
    for _ in range(25):
        G1, G2 = random_det1(rng), random_det1(rng)
        lhs = S6.induced_six_map(G1 @ G2).matrix
        rhs = S6.induced_six_map(G1).matrix @ S6.induced_six_map(G2).matrix
        assert np.max(np.abs(lhs - rhs)) < 1e-9


def test_improper_flips_quadric():
    sm = S6.induced_six_map(np.diag([-1.0, 1.0, 1.0, 1.0]))
    assert sm.det == -1.0
    M = sm.matrix
    assert np.max(np.abs(M.T @ S6.J_SPLIT @ M + S6.J_SPLIT)) == 0.0


def test_general_determinant_scales_quadric():
    sm = S6.induced_six_map(np.diag([2.0, 1.0, 1.0, 1.0]))
    M = sm.matrix
    assert np.max(np.abs(M.T @ S6.J_SPLIT @ M - 2.0 * S6.J_SPLIT)) == 0.0
    assert sm.form_residual == 0.0


def test_dilation_grade_factors():
    assert S6.dilation_grade_check(2.0) == (1.0, 2.0, 4.0, 8.0, 16.0)
    assert S6.dilation_grade_check(1.0) == (1.0, 1.0, 1.0, 1.0, 1.0)
    factors = S6.dilation_grade_check(3.0)
    assert factors[2] == 9.0 and factors[4] == 81.0
    with pytest.raises(ValueError):
        S6.dilation_grade_check(-1.0)


def test_hodge_eigenspaces_on_eta():
    etas = S6.eta_basis()
    euc = F.euclidean_metric()
    for i, form in enumerate(etas):
        eig = 1.0 if i < 3 else -1.0
        assert (F.hodge_star(form, euc) - eig * form).norm() == 0.0
    mink = F.minkowski_metric()
    sign = F.MINKOWSKI_DOUBLE_STAR[2]
    for i, form in enumerate(etas):
        once = F.hodge_star(form, mink)
        partner = etas[(i + 3) % 6]
        # the split-signature star exchanges the triples up to sign
        ratio = None
        for mask in F.CANONICAL_MASKS:
            if partner.coeff(mask) != 0:
                ratio = once.coeff(mask) / partner.coeff(mask)
                break
        assert ratio is not None
        assert (once - ratio * partner).norm() < 1e-12
        twice = F.hodge_star(once, mink)
        assert (twice - sign * form).norm() == 0.0
