"""SL(4, R) acting on 2-forms: the six-coordinate quadric, the split
eta basis, and the two-to-one map onto the split orthogonal group in six
dimensions.

The quadratic form is the coefficient pairing picked out by wedging a
2-form with itself against the unit volume form; in the eta basis its
matrix is exactly diag(1, 1, 1, -1, -1, -1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from kahlerkit.covariance import form_action, grade_block, linear_map4
from kahlerkit.forms import NonhomogeneousForm, mask_of_indices

__all__ = [
    "J_SPLIT",
    "SixMap",
    "p_to_q",
    "q_to_p",
    "plucker_value",
    "q_value",
    "eta_basis",
    "eta_gram",
    "two_form_block",
    "induced_six_map",
    "dilation_grade_check",
]

J_SPLIT = np.diag([1.0, 1.0, 1.0, -1.0, -1.0, -1.0])

_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class SixMap:
    """6x6 real matrix over the eta basis (row action), with its source
    determinant and the recorded congruence residual against det * J."""

    matrix: np.ndarray
    det: float
    form_residual: float


def _check_antisymmetric(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (4, 4) or not np.array_equal(p, -p.T):
        raise ValueError("need an exactly antisymmetric 4x4 array")
    return p


def plucker_value(p) -> float:
    """The quadric invariant of a 2-form's coefficient array."""
    p = _check_antisymmetric(p)
    return float(p[0, 1] * p[2, 3] + p[0, 2] * p[3, 1] + p[0, 3] * p[1, 2])


def p_to_q(p) -> np.ndarray:
    """Six split coordinates: half sums and half differences of the
    complementary coefficient pairs."""
    p = _check_antisymmetric(p)
    return np.array(
        [
            (p[0, 1] + p[2, 3]) / 2.0,
            (p[0, 2] + p[3, 1]) / 2.0,
            (p[0, 3] + p[1, 2]) / 2.0,
            (p[0, 1] - p[2, 3]) / 2.0,
            (p[0, 2] - p[3, 1]) / 2.0,
            (p[0, 3] - p[1, 2]) / 2.0,
        ]
    )


def q_to_p(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    if q.shape != (6,):
        raise ValueError("need six coordinates")
    p = np.zeros((4, 4))
    p[0, 1] = q[0] + q[3]
    p[2, 3] = q[0] - q[3]
    p[0, 2] = q[1] + q[4]
    p[3, 1] = q[1] - q[4]
    p[0, 3] = q[2] + q[5]
    p[1, 2] = q[2] - q[5]
    p[1, 0] = -p[0, 1]
    p[3, 2] = -p[2, 3]
    p[2, 0] = -p[0, 2]
    p[1, 3] = -p[3, 1]
    p[3, 0] = -p[0, 3]
    p[2, 1] = -p[1, 2]
    return p


def q_value(q) -> float:
    q = np.asarray(q, dtype=float)
    return float(q @ J_SPLIT @ q)


def eta_basis():
    """The six split-basis 2-forms: sums and differences of the three
    complementary wedge pairs."""
    unit = np.zeros(6)
    out = []
    for i in range(6):
        q = unit.copy()
        q[i] = 1.0
        p = q_to_p(q)
        coeffs = {}
        for a, b in _PAIRS:
            if p[a, b] != 0:
                coeffs[mask_of_indices((a, b))] = p[a, b]
        out.append(NonhomogeneousForm.from_mask_coeffs(coeffs))
    return out


def _eta_change_matrix() -> np.ndarray:
    """H with row p = eta_p over the grade-2 mask slots (row action)."""
    H = np.zeros((6, 6))
    for row, form in enumerate(eta_basis()):
        for col, (a, b) in enumerate(_PAIRS):
            H[row, col] = form.coeff(mask_of_indices((a, b))).real
    return H


def _bilinear_plucker(pa: np.ndarray, pb: np.ndarray) -> float:
    return 0.5 * (plucker_value(pa + pb) - plucker_value(pa) - plucker_value(pb))


def eta_gram():
    """Gram matrix of the eta basis under the quadric pairing and the
    measured scale relating it to the split form."""
    etas = eta_basis()
    ps = []
    for form in etas:
        p = np.zeros((4, 4))
        for (a, b) in _PAIRS:
            val = form.coeff(mask_of_indices((a, b))).real
            p[a, b] = val
            p[b, a] = -val
        ps.append(p)
    G = np.array([[_bilinear_plucker(pa, pb) for pb in ps] for pa in ps])
    scale = G[0, 0]
    return G, float(scale)


def two_form_block(G) -> np.ndarray:
    """Grade-2 block of the form action over the mask slots (row action)."""
    return grade_block(form_action(_matrix_of(G)), 2).real


def _matrix_of(G) -> np.ndarray:
    from kahlerkit.covariance import LinearMap4

    if isinstance(G, LinearMap4):
        return G.matrix
    return np.asarray(G, dtype=float)


def induced_six_map(G) -> SixMap:
    """Restriction of the form action to 2-forms in the eta basis.

    Sign-blind in G; the congruence ``M^T J M = det(G) J`` is recorded as
    a residual, exact form preservation for unit determinant and a global
    sign flip for determinant minus one.
    """
    A = _matrix_of(G)
    lm = linear_map4(A)
    H = _eta_change_matrix()
    M = H @ two_form_block(A) @ np.linalg.inv(H)
    residual = float(np.max(np.abs(M.T @ J_SPLIT @ M - lm.det * J_SPLIT)))
    return SixMap(M, lm.det, residual)


def dilation_grade_check(lam: float):
    """Per-grade scaling factors of the form action of ``lam * identity``.

    Raises unless each grade block is exactly a scalar; returns the five
    factors (1, lam, lam^2, lam^3, lam^4).
    """
    if lam <= 0:
        raise ValueError("dilation factor must be positive")
    T = form_action(np.diag([lam] * 4))
    factors = []
    for k in range(5):
        block = grade_block(T, k)
        val = block[0, 0]
        if not np.array_equal(block, val * np.eye(block.shape[0])):
            raise ValueError(f"grade {k} block is not scalar")
        factors.append(float(val.real))
    off = T - np.diag(np.diag(T))
    if np.any(off != 0):
        raise ValueError("dilation action is not diagonal")
    return tuple(factors)
