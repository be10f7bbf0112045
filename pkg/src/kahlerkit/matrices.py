"""Concrete matrix representations: Pauli tensor generators, fermionic
ladder operators, gamma matrices, and momentum-space Dirac solutions.

Everything is a plain complex numpy array.  The Minkowski metric used by
the gamma machinery is diag(1, -1, -1, -1); a plane wave carries momentum
p as the Fourier dual of each coordinate derivative, so the momentum-space
Dirac operator is ``sum_k p_k gamma^k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

__all__ = [
    "MINKOWSKI_DIAG",
    "GammaRep",
    "GeneratorSet",
    "RepresentationError",
    "MassShellError",
    "pauli_matrices",
    "euclid_generators",
    "jordan_wigner",
    "car_constant",
    "isotropic_generators",
    "gamma_rep",
    "change_rep",
    "weyl_to_standard_conjugator",
    "gamma_products",
    "dirac_momentum_matrix",
    "minkowski_product",
    "plane_wave_solutions",
    "pauli_system_check",
    "nullspace_full_pivot",
    "anticommutator",
]

MINKOWSKI_DIAG = (1.0, -1.0, -1.0, -1.0)

_I2 = np.eye(2, dtype=complex)
_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)
_LOWER = np.array([[0, 1], [0, 0]], dtype=complex)
_RAISE = np.array([[0, 0], [1, 0]], dtype=complex)


class RepresentationError(ValueError):
    """Generator relations fail, or an input is not a valid representation."""


class MassShellError(ValueError):
    """Momentum does not satisfy g(p, p) = m**2."""


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def _kron_chain(factors) -> np.ndarray:
    return reduce(np.kron, factors)


def pauli_matrices():
    """The three 2x2 Pauli matrices (sigma_x, sigma_y, sigma_z)."""
    return _SX.copy(), _SY.copy(), _SZ.copy()


@dataclass(frozen=True)
class GeneratorSet:
    """Square matrices meant to satisfy pairwise anticommutation relations.

    ``target_diag[k]`` is the expected scalar square of ``mats[k]``.
    """

    mats: tuple
    target_diag: tuple

    def __post_init__(self):
        dims = {m.shape for m in self.mats}
        if len(dims) != 1 or any(r != c for r, c in dims):
            raise RepresentationError("generators must be square and same size")

    def relation_residual(self) -> float:
        """Max deviation from {e_j, e_k} = 2 delta_jk target_diag[k] 1."""
        dim = self.mats[0].shape[0]
        worst = 0.0
        for j, a in enumerate(self.mats):
            for k, b in enumerate(self.mats):
                want = 2.0 * self.target_diag[k] * np.eye(dim) if j == k else 0.0
                worst = max(worst, float(np.max(np.abs(anticommutator(a, b) - want))))
        return worst


def euclid_generators(m: int, odd_extra: bool = False) -> GeneratorSet:
    """2m anticommuting square roots of +1 in M(2**m), Pauli tensor style.

    Pairs (sigma_x, sigma_y) sit in slot m-k-1 with a sigma_z tail of
    length k; with ``odd_extra`` the all-sigma_z generator is appended,
    extending the set to an odd count without spoiling the relations.
    """
    if not 1 <= m <= 3:
        raise RepresentationError(f"m must be 1..3, got {m}")
    gens = []
    for k in range(m):
        head = [_I2] * (m - k - 1)
        tail = [_SZ] * k
        gens.append(_kron_chain(head + [_SX] + tail))
        gens.append(_kron_chain(head + [_SY] + tail))
    if odd_extra:
        gens.append(_kron_chain([_SZ] * m))
    return GeneratorSet(tuple(gens), (1,) * len(gens))


def jordan_wigner(m: int):
    """Fermionic ladder operators on m modes as Pauli tensor strings.

    Returns ``(annihilators, creators)``.  The measured CAR constant c in
    ``{a_j, a_k+} = c delta_jk 1`` is 1 for this normalization; see
    ``car_constant``.
    """
    if not 1 <= m <= 3:
        raise RepresentationError(f"m must be 1..3, got {m}")
    lowers, raisers = [], []
    for k in range(m):
        head = [_I2] * (m - k - 1)
        tail = [_SZ] * k
        lowers.append(_kron_chain(head + [_LOWER] + tail))
        raisers.append(_kron_chain(head + [_RAISE] + tail))
    return (
        GeneratorSet(tuple(lowers), (0,) * m),
        GeneratorSet(tuple(raisers), (0,) * m),
    )


def car_constant(annihilators: GeneratorSet, creators: GeneratorSet) -> float:
    """Measured constant c with {a_j, a_k+} = c delta_jk 1 (exact check).

    Raises unless every cross anticommutator is exactly c delta I for a
    single real c.
    """
    mats_a, mats_c = annihilators.mats, creators.mats
    dim = mats_a[0].shape[0]
    c = None
    for j, a in enumerate(mats_a):
        for k, ad in enumerate(mats_c):
            acom = anticommutator(a, ad)
            if j != k:
                if np.any(acom != 0):
                    raise RepresentationError("cross CAR anticommutator not zero")
                continue
            val = acom[0, 0]
            if np.any(acom != val * np.eye(dim)) or val.imag != 0:
                raise RepresentationError("diagonal CAR anticommutator not scalar")
            if c is None:
                c = float(val.real)
            elif c != float(val.real):
                raise RepresentationError("CAR constant differs between modes")
    return c


def isotropic_generators(gens: GeneratorSet, m: int):
    """Split 2m Euclidean generators into nilpotent pairs.

    ``a_j = (e_j + i e_{m+j}) / 2`` and the conjugate combination; both
    halves then satisfy Grassmann relations.  Indexing pairs the first m
    generators with the last m.
    """
    if len(gens.mats) != 2 * m:
        raise RepresentationError(f"need 2m = {2 * m} generators, got {len(gens.mats)}")
    if gens.relation_residual() != 0.0:
        raise RepresentationError("input generators fail the Euclidean relations")
    a_set, a_star_set = [], []
    for j in range(m):
        a_set.append(0.5 * (gens.mats[j] + 1j * gens.mats[m + j]))
        a_star_set.append(0.5 * (gens.mats[j] - 1j * gens.mats[m + j]))
    return (
        GeneratorSet(tuple(a_set), (0,) * m),
        GeneratorSet(tuple(a_star_set), (0,) * m),
    )


@dataclass(frozen=True)
class GammaRep:
    """Four 4x4 matrices with {g^j, g^k} = 2 eta_jk, eta = diag(1,-1,-1,-1)."""

    gammas: tuple
    label: str = "custom"

    def __post_init__(self):
        if len(self.gammas) != 4 or any(g.shape != (4, 4) for g in self.gammas):
            raise RepresentationError("need four 4x4 matrices")
        worst = 0.0
        for j, a in enumerate(self.gammas):
            for k, b in enumerate(self.gammas):
                want = 2.0 * MINKOWSKI_DIAG[k] * np.eye(4) if j == k else 0.0
                worst = max(worst, float(np.max(np.abs(anticommutator(a, b) - want))))
        if worst > 1e-10:
            raise RepresentationError(f"gamma relations fail (residual {worst:.3e})")

    def relation_residual(self) -> float:
        worst = 0.0
        for j, a in enumerate(self.gammas):
            for k, b in enumerate(self.gammas):
                want = 2.0 * MINKOWSKI_DIAG[k] * np.eye(4) if j == k else 0.0
                worst = max(worst, float(np.max(np.abs(anticommutator(a, b) - want))))
        return worst


def _block(a, b, c, d) -> np.ndarray:
    return np.block([[a, b], [c, d]])


_ZERO2 = np.zeros((2, 2), dtype=complex)


@lru_cache(maxsize=None)
def gamma_rep(label: str = "weyl") -> GammaRep:
    """Weyl (chiral) or standard (Dirac) gamma matrices."""
    if label == "weyl":
        gammas = [_block(_ZERO2, _I2, _I2, _ZERO2)]
        for s in (_SX, _SY, _SZ):
            gammas.append(_block(_ZERO2, -s, s, _ZERO2))
    elif label == "standard":
        gammas = [_block(_I2, _ZERO2, _ZERO2, -_I2)]
        for s in (_SX, _SY, _SZ):
            gammas.append(_block(_ZERO2, s, -s, _ZERO2))
    else:
        raise RepresentationError(f"unknown gamma representation {label!r}")
    return GammaRep(tuple(gammas), label)


def change_rep(rep: GammaRep, B: np.ndarray) -> GammaRep:
    """Conjugate every gamma by B; relations are preserved automatically."""
    B = np.asarray(B, dtype=complex)
    if B.shape != (4, 4):
        raise RepresentationError("B must be 4x4")
    if abs(np.linalg.det(B)) < 1e-12:
        raise RepresentationError("B is singular")
    B_inv = np.linalg.inv(B)
    return GammaRep(tuple(B @ g @ B_inv for g in rep.gammas), "custom")


@lru_cache(maxsize=None)
def weyl_to_standard_conjugator() -> np.ndarray:
    """B with B gamma_weyl B^-1 = gamma_standard, solved from the
    intertwining equations rather than hard-coded."""
    weyl = gamma_rep("weyl").gammas
    std = gamma_rep("standard").gammas
    eye = np.eye(4, dtype=complex)
    rows = []
    for gw, gs in zip(weyl, std):
        # vec(B gw - gs B) = (gw^T kron I - I kron gs) vec(B)
        rows.append(np.kron(gw.T, eye) - np.kron(eye, gs))
    system = np.vstack(rows)
    _, sing, vh = np.linalg.svd(system)
    if sing[-1] > 1e-9 * sing[0]:
        raise RepresentationError("no intertwiner found")
    B = vh[-1].conj().reshape(4, 4)
    # fix scale and phase: unit operator norm, largest entry real positive
    B = B / np.linalg.norm(B, 2)
    lead = B.flat[int(np.argmax(np.abs(B)))]
    B = B * (abs(lead) / lead)
    return B


_MASK_ORDER_4 = sorted(
    range(16),
    key=lambda m: (m.bit_count(), tuple(i for i in range(4) if m >> i & 1)),
)


def gamma_products(rep: GammaRep):
    """All 16 ascending products of distinct gammas, canonical basis order
    (grade, then lexicographic index tuple); the empty product is 1."""
    out = []
    for mask in _MASK_ORDER_4:
        prod = np.eye(4, dtype=complex)
        for i in range(4):
            if mask >> i & 1:
                prod = prod @ rep.gammas[i]
        out.append(prod)
    return out


def minkowski_product(p, q) -> complex:
    p = np.asarray(p)
    q = np.asarray(q)
    return complex(sum(d * pi * qi for d, pi, qi in zip(MINKOWSKI_DIAG, p, q)))


def dirac_momentum_matrix(p, rep: GammaRep) -> np.ndarray:
    """Momentum-space Dirac operator ``sum_k p_k gamma^k``.

    Its square is g(p, p) times the identity, the momentum-space shadow of
    the wave-operator factorization.
    """
    p = np.asarray(p)
    return sum(pk * g for pk, g in zip(p, rep.gammas))


def nullspace_full_pivot(M: np.ndarray, rtol: float = 1e-9):
    """Null-space basis by Gaussian elimination with full pivoting.

    Deterministic at 4x4 scale; rank is decided relative to the largest
    pivot encountered.
    """
    A = np.asarray(M, dtype=complex).copy()
    rows, cols = A.shape
    col_perm = list(range(cols))
    pivots = []
    r = 0
    first_pivot = None
    while r < rows and r < cols:
        sub = np.abs(A[r:, r:])
        i, j = np.unravel_index(int(np.argmax(sub)), sub.shape)
        pivot = sub[i, j]
        if first_pivot is None:
            first_pivot = pivot
        if first_pivot == 0 or pivot <= rtol * first_pivot:
            break
        A[[r, r + i]] = A[[r + i, r]]
        A[:, [r, r + j]] = A[:, [r + j, r]]
        col_perm[r], col_perm[r + j] = col_perm[r + j], col_perm[r]
        pivots.append(r)
        A[r] = A[r] / A[r, r]
        for other in range(rows):
            if other != r and A[other, r] != 0:
                A[other] -= A[other, r] * A[r]
        r += 1
    rank = len(pivots)
    basis = []
    for free in range(rank, cols):
        vec = np.zeros(cols, dtype=complex)
        vec[free] = 1.0
        for pr in range(rank):
            vec[pr] = -A[pr, free]
        out = np.zeros(cols, dtype=complex)
        for pos, orig in enumerate(col_perm):
            out[orig] = vec[pos]
        basis.append(out / np.linalg.norm(out))
    return basis


def plane_wave_solutions(p, m: float, rep: GammaRep, tol: float = 1e-9):
    """Basis of the on-shell solution space of ``(sum p_k gamma^k - m) u = 0``.

    Requires g(p, p) = m**2 within a relative tolerance; the space is then
    two dimensional.
    """
    p = np.asarray(p)
    pp = minkowski_product(p, p)
    scale = max(1.0, abs(pp), abs(m) ** 2)
    if abs(pp - m**2) > tol * scale:
        raise MassShellError(
            f"momentum is off shell: g(p,p) = {pp:.6g}, m^2 = {m**2:.6g}"
        )
    op = dirac_momentum_matrix(p, rep) - m * np.eye(4)
    basis = nullspace_full_pivot(op)
    if len(basis) != 2:
        raise MassShellError(f"expected a 2-dimensional solution space, got {len(basis)}")
    return basis


def pauli_system_check(p, m: float, eta, xi):
    """Residual pair for the coupled two-spinor system and the 4x4 equation.

    With the chiral gammas the 4-component residual is the same two blocks
    reordered, so the two norms agree identically.
    """
    p = np.asarray(p)
    eta = np.asarray(eta, dtype=complex)
    xi = np.asarray(xi, dtype=complex)
    sx, sy, sz = pauli_matrices()
    p_dot_sigma = p[1] * sx + p[2] * sy + p[3] * sz
    r1 = (p[0] * _I2 + p_dot_sigma) @ eta - m * xi
    r2 = (p[0] * _I2 - p_dot_sigma) @ xi - m * eta
    pauli_residual = float(np.sqrt(np.linalg.norm(r1) ** 2 + np.linalg.norm(r2) ** 2))
    psi = np.concatenate([eta, xi])
    dirac = (dirac_momentum_matrix(p, gamma_rep("weyl")) - m * np.eye(4)) @ psi
    dirac_residual = float(np.linalg.norm(dirac))
    return pauli_residual, dirac_residual
