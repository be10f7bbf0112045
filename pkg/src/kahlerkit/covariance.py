"""GL(4, R) action on the 16-dimensional form space, transported to 4x4
matrices through the gamma-product basis, with covariance testing, spin
representations, two-spinor routes, and operator-Schmidt factorization.

Convention for 16x16 operator arrays in this module and in
``kahlerkit.cover_so33``: an array ``T`` acts on coefficient row vectors,
``c_out = c_in @ T``, so ``T[J, K]`` is the K-component of the image of
basis element J and composition is the plain array product
``T_first @ T_second``.  Coefficients are indexed by the canonical
basis order of ``kahlerkit.forms``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from kahlerkit.blades import MINKOWSKI, spin_lift
from kahlerkit.forms import CANONICAL_MASKS, DIM, MASK_SLOT, mask_indices
from kahlerkit.matrices import (
    GammaRep,
    MINKOWSKI_DIAG,
    gamma_products,
    gamma_rep,
    plane_wave_solutions,
)
from kahlerkit._kernel import reorder_sign

__all__ = [
    "LinearMap4",
    "SpinorPair",
    "linear_map4",
    "minkowski_defect",
    "apply16",
    "form_action",
    "form_action_components",
    "grade_block",
    "chevalley_basis_matrix",
    "chevalley_map",
    "to_gamma_coords",
    "from_gamma_coords",
    "induced_matrix_action",
    "apply_induced",
    "spin_conjugation_action",
    "lorentz_spin_rep",
    "covariance_residual",
    "plane_product_coefficients",
    "two_spinor_action",
    "embed_two_spinor",
    "operator_schmidt",
    "schmidt_term_count",
    "rank_one_factor",
    "product_structure_check",
    "matrix_dirac_solution",
    "spoin_involution_probe",
]

_MINKOWSKI_G = np.diag(MINKOWSKI_DIAG)


def minkowski_defect(A) -> float:
    A = np.asarray(A, dtype=float)
    return float(np.max(np.abs(A @ _MINKOWSKI_G @ A.T - _MINKOWSKI_G)))


@dataclass(frozen=True)
class LinearMap4:
    """Invertible 4x4 real map with cached inverse and isometry flags."""

    matrix: np.ndarray
    inverse: np.ndarray = field(repr=False)
    det: float
    isometry_defect: float

    @property
    def is_isometry(self) -> bool:
        return self.isometry_defect <= 1e-9


def linear_map4(A) -> LinearMap4:
    A = np.asarray(A, dtype=float)
    if A.shape != (4, 4):
        raise ValueError(f"expected 4x4, got {A.shape}")
    det = float(np.linalg.det(A))
    if abs(det) < 1e-12:
        raise ValueError("matrix is singular")
    return LinearMap4(A.copy(), np.linalg.inv(A), det, minkowski_defect(A))


@dataclass(frozen=True)
class SpinorPair:
    psi: np.ndarray
    alpha: np.ndarray


def _matrix_of(A) -> np.ndarray:
    if isinstance(A, LinearMap4):
        return A.matrix
    return np.asarray(A, dtype=float)


def apply16(coeffs, T: np.ndarray) -> np.ndarray:
    """Apply a row-action operator array to a coefficient vector."""
    return np.asarray(coeffs, dtype=complex) @ T


def _minor_det(M: np.ndarray) -> float:
    """Cofactor-expansion determinant; exact on exact inputs up to 4x4."""
    n = M.shape[0]
    if n == 1:
        return M[0, 0]
    if n == 2:
        return M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    total = 0.0
    sign = 1.0
    for j in range(n):
        if M[0, j] != 0:
            sub = np.delete(np.delete(M, 0, axis=0), j, axis=1)
            total += sign * M[0, j] * _minor_det(sub)
        sign = -sign
    return total


def form_action(A) -> np.ndarray:
    """Induced action on the 16 basis forms, block diagonal over grades.

    On 1-forms the basis substitutes along the rows of A; on grade k the
    entries are the k-minors, so the array product is functorial:
    ``form_action(A @ B) == form_action(A) @ form_action(B)``.
    """
    A = _matrix_of(A)
    out = np.zeros((DIM, DIM), dtype=complex)
    for mj in CANONICAL_MASKS:
        rows = mask_indices(mj)
        for mk in CANONICAL_MASKS:
            if mk.bit_count() != mj.bit_count():
                continue
            cols = mask_indices(mk)
            if not rows:
                val = 1.0
            else:
                val = _minor_det(A[np.ix_(rows, cols)])
            if val != 0:
                out[MASK_SLOT[mj], MASK_SLOT[mk]] = val
    return out


def form_action_components(A) -> np.ndarray:
    """Companion array for the component transformation of antisymmetric
    tensors: inverse-matrix factors on every index."""
    A = _matrix_of(A)
    return form_action(np.linalg.inv(A))


def grade_block(T: np.ndarray, k: int) -> np.ndarray:
    from kahlerkit.forms import GRADE_SLOTS

    slots = GRADE_SLOTS[k]
    return T[np.ix_(slots, slots)]


def chevalley_basis_matrix(rep: GammaRep) -> np.ndarray:
    """P with row J = flattened gamma product for basis slot J."""
    P = np.zeros((DIM, DIM), dtype=complex)
    for slot, prod in enumerate(gamma_products(rep)):
        P[slot] = prod.reshape(-1)
    return P


def chevalley_map(rep: GammaRep) -> np.ndarray:
    """Row-action array taking flattened 4x4 matrices to basis coordinates.

    Inverse of the gamma-product rows; a valid representation always gives
    16 independent products, but the conditioning is guarded anyway.
    """
    P = chevalley_basis_matrix(rep)
    if np.linalg.matrix_rank(P, tol=1e-8) != DIM:
        raise ValueError("gamma products are linearly dependent")
    return np.linalg.inv(P)


def to_gamma_coords(M: np.ndarray, rep: GammaRep) -> np.ndarray:
    return np.asarray(M, dtype=complex).reshape(-1) @ chevalley_map(rep)


def from_gamma_coords(coeffs, rep: GammaRep) -> np.ndarray:
    return (np.asarray(coeffs, dtype=complex) @ chevalley_basis_matrix(rep)).reshape(4, 4)


def induced_matrix_action(G, rep: GammaRep) -> np.ndarray:
    """Form action conjugated into the matrix picture.

    The gamma-product basis is matched slot by slot with the form basis,
    so over these coordinates the conjugated array has the same entries as
    ``form_action``; the representation enters when acting on concrete
    matrices (``apply_induced``).
    """
    del rep
    return form_action(G)


def apply_induced(Gm: np.ndarray, M: np.ndarray, rep: GammaRep) -> np.ndarray:
    """Apply a basis-coordinate operator array to a concrete 4x4 matrix."""
    return from_gamma_coords(to_gamma_coords(M, rep) @ Gm, rep)


def spin_conjugation_action(S: np.ndarray, rep: GammaRep) -> np.ndarray:
    """Array of conjugation by S in the gamma-product basis; sign-blind."""
    S = np.asarray(S, dtype=complex)
    if abs(np.linalg.det(S)) < 1e-12:
        raise ValueError("S is singular")
    S_inv = np.linalg.inv(S)
    Em = chevalley_map(rep)
    out = np.zeros((DIM, DIM), dtype=complex)
    for slot, prod in enumerate(gamma_products(rep)):
        out[slot] = (S @ prod @ S_inv).reshape(-1) @ Em
    return out


def lorentz_spin_rep(L, rep: GammaRep, tol: float = 1e-9) -> np.ndarray:
    """4x4 spin element with ``S gamma^k S^-1 = sum_j L[k, j] gamma^j``.

    Built from the blade-algebra conjugation lift; the transpose converts
    between column-embedded vectors there and the row substitution here.
    Defined up to overall sign.
    """
    L = _matrix_of(L)
    h, _parity = spin_lift(L.T, MINKOWSKI, tol=tol)
    coeffs = np.zeros(DIM, dtype=complex)
    for mask, c in h.terms().items():
        coeffs[MASK_SLOT[mask]] = c
    S = from_gamma_coords(coeffs, rep)
    S_inv = np.linalg.inv(S)
    worst = 0.0
    for k in range(4):
        target = sum(L[k, j] * rep.gammas[j] for j in range(4))
        worst = max(worst, float(np.max(np.abs(S @ rep.gammas[k] @ S_inv - target))))
    if worst > max(tol, 1e-9) * 10:
        raise RuntimeError(f"spin representation residual too large: {worst:.3e}")
    return S


def _gamma_pair_coords(j: int, k: int) -> np.ndarray:
    """Basis coordinates of the product gamma^j gamma^k."""
    coeffs = np.zeros(DIM, dtype=complex)
    if j == k:
        coeffs[MASK_SLOT[0]] = MINKOWSKI_DIAG[j]
    else:
        mj, mk = 1 << j, 1 << k
        coeffs[MASK_SLOT[mj | mk]] = reorder_sign(mj, mk)
    return coeffs


def covariance_residual(G, rep: GammaRep) -> float:
    """How far the induced 16D map is from a Clifford homomorphism.

    Max over index pairs of the norm of image(gamma_j) image(gamma_k)
    minus image(gamma_j gamma_k); zero exactly on isometries.
    """
    Gm = induced_matrix_action(G, rep)
    images = [apply_induced(Gm, g, rep) for g in rep.gammas]
    worst = 0.0
    for j in range(4):
        for k in range(4):
            pair_image = from_gamma_coords(_gamma_pair_coords(j, k) @ Gm, rep)
            diff = images[j] @ images[k] - pair_image
            worst = max(worst, float(np.linalg.norm(diff)))
    return worst


def plane_product_coefficients(G, rep: GammaRep, axes=(1, 2)):
    """Scalar and bivector coordinates of image(gamma_a) image(gamma_b).

    For a transformation mixing only the two given axes, this exposes the
    grade leakage of the transported product: isometries give zero scalar
    part, shears do not.
    """
    a, b = axes
    Gm = induced_matrix_action(G, rep)
    img_a = apply_induced(Gm, rep.gammas[a], rep)
    img_b = apply_induced(Gm, rep.gammas[b], rep)
    coords = to_gamma_coords(img_a @ img_b, rep)
    mab = (1 << a) | (1 << b)
    return complex(coords[MASK_SLOT[0]]), complex(coords[MASK_SLOT[mab]])


# ---------------------------------------------------------------------------
# two-spinor route

_PAULI_BASIS = None


def _pauli_basis():
    global _PAULI_BASIS
    if _PAULI_BASIS is None:
        from kahlerkit.matrices import pauli_matrices

        sx, sy, sz = pauli_matrices()
        _PAULI_BASIS = (np.eye(2, dtype=complex), sx, sy, sz)
    return _PAULI_BASIS


def two_spinor_action(S: np.ndarray, tol: float = 1e-9) -> LinearMap4:
    """Vector transformation read off from X -> S X S+ on Hermitian X.

    X encodes (t, x, y, z) against (1, sigma_x, sigma_y, sigma_z); unit
    determinant makes the determinant of X, the Minkowski square, exactly
    invariant, and the result lands in the proper orthochronous component.
    """
    S = np.asarray(S, dtype=complex)
    if S.shape != (2, 2):
        raise ValueError("S must be 2x2")
    if abs(np.linalg.det(S) - 1.0) > tol:
        raise ValueError(f"det S = {np.linalg.det(S):.6g}, need 1")
    basis = _pauli_basis()
    L = np.empty((4, 4))
    for k, Bk in enumerate(basis):
        image = S @ Bk @ S.conj().T
        for j, Bj in enumerate(basis):
            val = 0.5 * np.trace(Bj @ image)
            if abs(val.imag) > 1e-10:
                raise ValueError("two-spinor image has a non-real component")
            L[j, k] = val.real
    return linear_map4(L)


def embed_two_spinor(S: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """4x4 block-diagonal spin element carrying the two-spinor map.

    The blocks are ((S+)^-1, S) against the chiral gamma split; this slot
    assignment is the one whose conjugation action on ``sum v_k gamma^k``
    realizes exactly the ``two_spinor_action`` transformation.
    """
    S = np.asarray(S, dtype=complex)
    if abs(np.linalg.det(S) - 1.0) > tol:
        raise ValueError(f"det S = {np.linalg.det(S):.6g}, need 1")
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = np.linalg.inv(S.conj().T)
    out[2:, 2:] = S
    return out


# ---------------------------------------------------------------------------
# operator-Schmidt machinery

def _flat_entry_map(Gm: np.ndarray, rep: GammaRep) -> np.ndarray:
    """Row-action array over flattened matrix entries for a basis-coordinate
    operator array."""
    P = chevalley_basis_matrix(rep)
    return np.linalg.inv(P) @ Gm @ P


def operator_schmidt(Gm: np.ndarray, rep: GammaRep, rel_cut: float = 1e-9):
    """Decompose a 16D map on 4x4 matrices into left/right multiply terms.

    Realigns the entrywise transfer matrix so a single product term
    becomes a rank-one block, then reads terms off the singular value
    decomposition.  Returns ``(terms, residual)`` where terms is a list of
    ``(left, right, weight)`` with unit-Frobenius factors and
    non-increasing weights; the reconstruction residual covers all terms
    above the relative cut.
    """
    W = _flat_entry_map(Gm, rep)
    K = W.T  # K[(a,b),(c,d)]: entry (c,d) of the input feeds entry (a,b)
    K4 = K.reshape(4, 4, 4, 4)
    realigned = K4.transpose(0, 2, 3, 1).reshape(16, 16)
    U, s, Vh = np.linalg.svd(realigned)
    terms = []
    for t in range(16):
        if s[t] <= rel_cut * s[0]:
            break
        terms.append((U[:, t].reshape(4, 4), Vh[t].reshape(4, 4), float(s[t])))
    rebuilt = np.zeros_like(realigned)
    for left, right, weight in terms:
        rebuilt += weight * np.outer(left.reshape(-1), right.reshape(-1))
    residual = float(np.linalg.norm(realigned - rebuilt))
    if residual > 1e-9 * max(1.0, float(s[0])):
        raise RuntimeError(f"operator-Schmidt reconstruction failed ({residual:.3e})")
    return terms, residual


def schmidt_term_count(Gm: np.ndarray, rep: GammaRep, rel_cut: float = 1e-9) -> int:
    terms, _ = operator_schmidt(Gm, rep, rel_cut)
    return len(terms)


def rank_one_factor(Psi: np.ndarray, rel_cut: float = 1e-9) -> SpinorPair:
    """Split a numerically rank-one matrix as an outer product.

    Gauge: unit-norm first factor with its first nonzero component real
    positive.  Rank two or more is refused.
    """
    Psi = np.asarray(Psi, dtype=complex)
    U, s, Vh = np.linalg.svd(Psi)
    if s[0] == 0 or s[1] >= rel_cut * s[0]:
        raise ValueError("matrix is not rank one")
    psi = U[:, 0]
    alpha = s[0] * Vh[0]
    lead = psi[np.flatnonzero(np.abs(psi) > 1e-12)[0]]
    phase = abs(lead) / lead
    psi = psi * phase
    alpha = alpha / phase
    if float(np.max(np.abs(Psi - np.outer(psi, alpha)))) > 1e-10 * max(1.0, s[0]):
        raise ValueError("outer-product reconstruction failed")
    return SpinorPair(psi, alpha)


def product_structure_check(L, R, psi, alpha) -> float:
    """Identity guard: left/right multiplication acts factorwise on
    outer products."""
    L = np.asarray(L, dtype=complex)
    R = np.asarray(R, dtype=complex)
    psi = np.asarray(psi, dtype=complex)
    alpha = np.asarray(alpha, dtype=complex)
    lhs = L @ np.outer(psi, alpha) @ R
    rhs = np.outer(L @ psi, R.T @ alpha)
    return float(np.linalg.norm(lhs - rhs))


def matrix_dirac_solution(p, m: float, alpha, rep: GammaRep) -> np.ndarray:
    """Matrix-valued momentum-space solution ``u alpha^T``.

    Every column is proportional to the same plane-wave spinor, so the
    matrix stays in the corresponding left ideal.
    """
    alpha = np.asarray(alpha, dtype=complex)
    if not np.any(alpha):
        raise ValueError("alpha must be nonzero")
    u = plane_wave_solutions(p, m, rep)[0]
    return np.outer(u, alpha)


# ---------------------------------------------------------------------------
# which anti-involution closes the two-spinor sandwich

_PAULI_MASK_MATS = None


def _pauli_blade_matrices():
    """Products of Pauli matrices indexed by masks over three generators."""
    global _PAULI_MASK_MATS
    if _PAULI_MASK_MATS is None:
        from kahlerkit.matrices import pauli_matrices

        sigmas = pauli_matrices()
        mats = {}
        for mask in range(8):
            prod = np.eye(2, dtype=complex)
            for i in range(3):
                if mask >> i & 1:
                    prod = prod @ sigmas[i]
            mats[mask] = prod
        _PAULI_MASK_MATS = mats
    return _PAULI_MASK_MATS


def spoin_involution_probe(samples, tol: float = 1e-8) -> str:
    """Measure which involution turns S into the sandwich partner.

    Each sample S in SL(2, C) is decomposed over the real blade basis of
    the three Pauli generators; for each involution the signed rebuild h'
    is tested against the requirement ``h'^-1 = S+`` that closes the
    two-spinor vector map.  Returns the unique involution kind that works
    for every sample.
    """
    mats = _pauli_blade_matrices()
    signs = {
        "grade_involution": lambda k: -1 if k % 2 else 1,
        "reversion": lambda k: -1 if (k * (k - 1) // 2) % 2 else 1,
        "clifford_conjugation": lambda k: -1 if (k * (k + 1) // 2) % 2 else 1,
    }
    alive = set(signs)
    for S in samples:
        S = np.asarray(S, dtype=complex)
        # blades pair with their duals under the trace form, so the real
        # part alone is the real-algebra coefficient
        coeffs = {
            mask: (np.trace(mat.conj().T @ S) / 2.0).real
            for mask, mat in mats.items()
        }
        rebuilt = sum(c * mats[mask] for mask, c in coeffs.items())
        if float(np.max(np.abs(rebuilt - S))) > 1e-9:
            raise ValueError("sample is outside the real blade span")
        for kind in list(alive):
            h_prime = sum(
                signs[kind](mask.bit_count()) * c * mats[mask]
                for mask, c in coeffs.items()
            )
            if float(np.max(np.abs(np.linalg.inv(h_prime) - S.conj().T))) > tol:
                alive.discard(kind)
    if len(alive) != 1:
        raise RuntimeError(f"involution probe is not decisive: {sorted(alive)}")
    return alive.pop()
