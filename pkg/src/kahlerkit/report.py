"""Verification suites: every library invariant as a seeded, tolerance
checked, individually addressable test.

A check is a pure function of a dedicated random generator; the
generator is derived from the run seed and the check id, so results do
not depend on execution order and a fixed seed reproduces the report
byte for byte.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, field

import numpy as np

from kahlerkit import blades, charts, covariance, cover_so33, forms, matrices

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_COUNTS",
    "RunConfig",
    "CheckResult",
    "SuiteResult",
    "SUITES",
    "run_suite",
    "suite_result_payload",
    "random_rotation",
    "random_boost",
    "random_lorentz",
    "random_nonisometry",
    "random_det1",
    "random_sl2",
]

DEFAULT_SEED = 7

DEFAULT_COUNTS = {
    "signatures": 20,
    "triples": 100,
    "pairs": 100,
    "lorentz": 25,
    "nonisometries": 25,
    "momenta": 100,
    "metrics": 100,
    "polys": 50,
    "radii": 100,
    "samples": 25,
}


@dataclass(frozen=True)
class RunConfig:
    """Seed, per-check tolerance overrides, and sample-count overrides."""

    seed: int = DEFAULT_SEED
    tolerances: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)

    def count(self, name: str) -> int:
        return int(self.counts.get(name, DEFAULT_COUNTS[name]))


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    anchor: str
    residual: float
    tolerance: float
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    seed: int
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _rng_for(seed: int, check_id: str) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed ^ zlib.crc32(check_id.encode())))


# ---------------------------------------------------------------------------
# samplers

def random_rotation(rng) -> np.ndarray:
    i, j = [(1, 2), (1, 3), (2, 3)][rng.integers(3)]
    phi = rng.uniform(0.0, 2.0 * math.pi)
    A = np.eye(4)
    A[i, i] = A[j, j] = math.cos(phi)
    A[i, j] = -math.sin(phi)
    A[j, i] = math.sin(phi)
    return A


def random_boost(rng, max_rapidity: float = 2.0) -> np.ndarray:
    k = int(rng.integers(1, 4))
    v = rng.uniform(0.0, max_rapidity)
    A = np.eye(4)
    A[0, 0] = A[k, k] = math.cosh(v)
    A[0, k] = A[k, 0] = math.sinh(v)
    return A


def random_lorentz(rng) -> np.ndarray:
    """Product of up to four random axis rotations and boosts (proper)."""
    A = np.eye(4)
    for _ in range(int(rng.integers(1, 5))):
        factor = random_rotation(rng) if rng.integers(2) else random_boost(rng)
        A = A @ factor
    return A


def random_nonisometry(rng) -> np.ndarray:
    """Entrywise uniform matrix, kept only when clearly non-isometric and
    well conditioned."""
    while True:
        A = rng.uniform(-1.0, 1.0, (4, 4))
        if covariance.minkowski_defect(A) > 0.1 and np.linalg.cond(A) < 1e3:
            return A


def random_det1(rng) -> np.ndarray:
    A = random_nonisometry(rng)
    A = A / abs(np.linalg.det(A)) ** 0.25
    if np.linalg.det(A) < 0:
        A[:, 0] = -A[:, 0]
    return A


def random_sl2(rng) -> np.ndarray:
    """Product of unit-determinant 2x2 rotation and boost factors."""
    sx, sy, sz = matrices.pauli_matrices()
    sigmas = (sx, sy, sz)
    S = np.eye(2, dtype=complex)
    for _ in range(int(rng.integers(1, 4))):
        s = sigmas[rng.integers(3)]
        if rng.integers(2):
            phi = rng.uniform(0.0, 2.0 * math.pi)
            S = S @ (math.cos(phi / 2) * np.eye(2) - 1j * math.sin(phi / 2) * s)
        else:
            v = rng.uniform(0.0, 2.0)
            S = S @ (math.cosh(v / 2) * np.eye(2) + math.sinh(v / 2) * s)
    return S


def _random_signature(rng, allow_degenerate=True) -> blades.Signature:
    n = int(rng.integers(1, 7))
    pool = (-1, 0, 1) if allow_degenerate else (-1, 1)
    return blades.Signature(tuple(int(pool[rng.integers(len(pool))]) for _ in range(n)))


def _random_multivector(rng, n: int, terms: int = 4) -> blades.Multivector:
    out = {}
    for _ in range(terms):
        mask = int(rng.integers(0, 1 << n))
        out[mask] = out.get(mask, 0) + complex(
            int(rng.integers(-3, 4)), int(rng.integers(-3, 4))
        )
    return blades.Multivector(out)


def _random_symmetric(rng) -> np.ndarray:
    A = rng.uniform(-2.0, 2.0, (4, 4))
    return (A + A.T) / 2.0


def _random_nondegenerate_metric(rng) -> forms.MetricTensor:
    while True:
        g = _random_symmetric(rng)
        if abs(np.linalg.det(g)) > 0.05:
            return forms.MetricTensor(g)


def _random_polyform(rng, degree: int = 3, terms: int = 5) -> forms.PolyForm:
    parts = {}
    for _ in range(terms):
        mask = int(rng.integers(0, 16))
        exps = tuple(int(e) for e in rng.integers(0, degree + 1, 4))
        if sum(exps) > degree:
            continue
        coeff = complex(int(rng.integers(-9, 10)), int(rng.integers(-9, 10)))
        poly = forms.Poly({exps: coeff})
        parts[mask] = parts[mask] + poly if mask in parts else poly
    return forms.PolyForm(parts)


def _shear_xy() -> np.ndarray:
    A = np.eye(4)
    A[1, 2] = 1.0
    return A


# ---------------------------------------------------------------------------
# clifford suite

def _check_anticommutator(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("signatures")):
        sig = _random_signature(rng)
        for j in range(sig.n):
            for k in range(sig.n):
                ej = blades.Multivector.basis_vector(j)
                ek = blades.Multivector.basis_vector(k)
                lhs = blades.geometric_product(ej, ek, sig) + blades.geometric_product(
                    ek, ej, sig
                )
                rhs = blades.Multivector.scalar(2 * sig.diag[k] if j == k else 0)
                if lhs != rhs:
                    worst = max(worst, (lhs - rhs).norm())
    return worst, ""


def _check_associativity(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("triples")):
        sig = _random_signature(rng)
        a = _random_multivector(rng, sig.n)
        b = _random_multivector(rng, sig.n)
        c = _random_multivector(rng, sig.n)
        left = blades.geometric_product(blades.geometric_product(a, b, sig), c, sig)
        right = blades.geometric_product(a, blades.geometric_product(b, c, sig), sig)
        worst = max(worst, (left - right).norm())
    return worst, ""


def _check_reversion(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("pairs")):
        sig = _random_signature(rng)
        a = _random_multivector(rng, sig.n)
        b = _random_multivector(rng, sig.n)
        lhs = blades.involute(blades.geometric_product(a, b, sig), "reversion")
        rhs = blades.geometric_product(
            blades.involute(b, "reversion"), blades.involute(a, "reversion"), sig
        )
        worst = max(worst, (lhs - rhs).norm())
    return worst, ""


def _check_grade_sum(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("samples")):
        n = int(rng.integers(1, 7))
        a = _random_multivector(rng, n, terms=6)
        total = blades.Multivector()
        for k in range(n + 1):
            total = total + blades.grade_project(a, k)
        worst = max(worst, (total - a).norm())
    return worst, ""


def _check_reflection(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("pairs")):
        sig = _random_signature(rng, allow_degenerate=False)
        while True:
            v = rng.uniform(-1.0, 1.0, sig.n)
            if abs(sum(vi * vi * d for vi, d in zip(v, sig.diag))) > 0.1:
                break
        x = rng.uniform(-1.0, 1.0, sig.n)
        mv_v = blades.Multivector.from_vector(v)
        mv_x = blades.Multivector.from_vector(x)
        sandwich = blades.reflect(mv_v, mv_x, sig)
        component = blades.Multivector.from_vector(
            blades.reflect_components(v, x, sig)
        )
        worst = max(worst, (sandwich - component).norm())
        twice = blades.reflect(mv_v, sandwich, sig)
        worst = max(worst, (twice - mv_x).norm())
    return worst, ""


def _check_spin_lift(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("lorentz")):
        A = random_lorentz(rng)
        h, parity = blades.spin_lift(A, blades.MINKOWSKI)
        if parity != "even":
            return 1.0, f"proper isometry lifted with parity {parity}"
        worst = max(worst, blades.versor_residual(h, A, blades.MINKOWSKI))
        worst = max(worst, blades.versor_residual(-h, A, blades.MINKOWSKI))
    return worst, ""


def _check_wedge_grassmann(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("pairs")):
        n = int(rng.integers(1, 7))
        sig = blades.Signature((0,) * n)
        a = _random_multivector(rng, n)
        b = _random_multivector(rng, n)
        lhs = blades.wedge_product(a, b)
        rhs = blades.geometric_product(a, b, sig)
        worst = max(worst, (lhs - rhs).norm())
    return worst, ""


# ---------------------------------------------------------------------------
# matrixrep suite

def _check_euclid_relations(rng, cfg):
    worst = 0.0
    for m in (1, 2, 3):
        for odd in (False, True):
            worst = max(worst, matrices.euclid_generators(m, odd).relation_residual())
    return worst, ""


def _check_car(rng, cfg):
    measured = set()
    worst = 0.0
    for m in (1, 2, 3):
        low, high = matrices.jordan_wigner(m)
        worst = max(worst, low.relation_residual(), high.relation_residual())
        measured.add(matrices.car_constant(low, high))
        a_set, a_star = matrices.isotropic_generators(matrices.euclid_generators(m), m)
        worst = max(worst, a_set.relation_residual(), a_star.relation_residual())
        measured.add(matrices.car_constant(a_set, a_star))
    if len(measured) != 1:
        return 1.0, f"inconsistent constants {sorted(measured)}"
    return worst, f"measured anticommutator constant c = {measured.pop():g}"


def _check_gamma_independent(rng, cfg):
    worst = 0.0
    for label in ("weyl", "standard"):
        P = covariance.chevalley_basis_matrix(matrices.gamma_rep(label))
        worst = max(worst, 16.0 - np.linalg.matrix_rank(P, tol=1e-8))
    return worst, ""


def _check_momentum_square(rng, cfg):
    rep = matrices.gamma_rep("weyl")
    worst = 0.0
    for _ in range(cfg.count("momenta")):
        p = rng.uniform(-2.0, 2.0, 4)
        D = matrices.dirac_momentum_matrix(p, rep)
        pp = matrices.minkowski_product(p, p)
        worst = max(worst, float(np.max(np.abs(D @ D - pp * np.eye(4)))))
    return worst, ""


def _check_onshell(rng, cfg):
    worst = 0.0
    for label in ("weyl", "standard"):
        rep = matrices.gamma_rep(label)
        for _ in range(cfg.count("samples")):
            m = rng.uniform(0.2, 2.0)
            spatial = rng.uniform(-2.0, 2.0, 3)
            p0 = math.sqrt(m * m + float(spatial @ spatial))
            p = np.array([p0, *spatial])
            basis = matrices.plane_wave_solutions(p, m, rep)
            if len(basis) != 2:
                return 1.0, f"null space dimension {len(basis)}"
            D = matrices.dirac_momentum_matrix(p, rep)
            for u in basis:
                worst = max(worst, float(np.linalg.norm((D - m * np.eye(4)) @ u)))
            onshell = (D + m * np.eye(4)) @ (D - m * np.eye(4))
            worst = max(worst, float(np.max(np.abs(onshell))))
    return worst, ""


def _check_change_rep(rng, cfg):
    worst = 0.0
    rep = matrices.gamma_rep("weyl")
    for _ in range(cfg.count("samples")):
        while True:
            B = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
            if np.linalg.cond(B) < 100:
                break
        worst = max(worst, matrices.change_rep(rep, B).relation_residual())
    B = matrices.weyl_to_standard_conjugator()
    moved = matrices.change_rep(rep, B)
    std = matrices.gamma_rep("standard")
    for g_moved, g_std in zip(moved.gammas, std.gammas):
        worst = max(worst, float(np.max(np.abs(g_moved - g_std))))
    closed = np.kron(np.array([[1, 1], [1, -1]]) / math.sqrt(2.0), np.eye(2))
    phase_fixed = B / B.flat[int(np.argmax(np.abs(B)))] * closed.flat[0]
    worst = max(worst, float(np.max(np.abs(phase_fixed - closed))))
    return worst, ""


def _check_pauli_blocks(rng, cfg):
    worst_eq = 0.0
    for _ in range(cfg.count("samples")):
        p = rng.uniform(-2.0, 2.0, 4)
        m = rng.uniform(0.0, 2.0)
        eta = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-1, 1, 2)
        xi = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-1, 1, 2)
        pauli_res, dirac_res = matrices.pauli_system_check(p, m, eta, xi)
        worst_eq = max(worst_eq, abs(pauli_res - dirac_res))
    # solutions solve both systems at once
    m = 1.3
    p = np.array([math.sqrt(m * m + 1.0), 1.0, 0.0, 0.0])
    for u in matrices.plane_wave_solutions(p, m, matrices.gamma_rep("weyl")):
        pauli_res, dirac_res = matrices.pauli_system_check(p, m, u[:2], u[2:])
        worst_eq = max(worst_eq, pauli_res, dirac_res)
    return worst_eq, ""


# ---------------------------------------------------------------------------
# exterior suite

def _check_gamma_anticommutator(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("metrics")):
        g = forms.MetricTensor(_random_symmetric(rng), degenerate_allowed=True)
        ops = forms.gamma_check_ops(g)
        for i in range(4):
            for j in range(4):
                acom = ops[i] @ ops[j] + ops[j] @ ops[i]
                want = -2.0 * g.entries[i, j] * np.eye(16)
                worst = max(worst, float(np.max(np.abs(acom - want))))
    return worst, ""


def _check_grassmann_degenerate(rng, cfg):
    zero = forms.MetricTensor(np.zeros((4, 4)), degenerate_allowed=True)
    wedges, contractions = forms.delta_ops(zero)
    ops = forms.gamma_check_ops(zero)
    worst = 0.0
    for i in range(4):
        worst = max(worst, float(np.max(np.abs(ops[i] - wedges[i]))))
        worst = max(worst, float(np.max(np.abs(ops[i] @ ops[i]))))
        worst = max(worst, float(np.max(np.abs(contractions[i]))))
    return worst, ""


def _check_delta_relations(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("samples")):
        g = forms.MetricTensor(_random_symmetric(rng), degenerate_allowed=True)
        wedges, contractions = forms.delta_ops(g)
        for ops in (wedges, contractions):
            for i in range(4):
                for j in range(4):
                    worst = max(
                        worst,
                        float(np.max(np.abs(ops[i] @ ops[j] + ops[j] @ ops[i]))),
                    )
    return worst, ""


def _check_dirac_kahler_square(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("metrics")):
        g = forms.MetricTensor(_random_symmetric(rng), degenerate_allowed=True)
        k = rng.uniform(-2.0, 2.0, 4)
        D = forms.dirac_kahler_symbol(k, g)
        kk = float(k @ g.entries @ k)
        worst = max(worst, float(np.max(np.abs(D @ D + kk * np.eye(16)))))
        lap = forms.laplace_beltrami_symbol(k, g)
        worst = max(worst, float(np.max(np.abs(lap + D @ D))))
    return worst, ""


def _check_d_squared(rng, cfg):
    for _ in range(cfg.count("polys")):
        omega = _random_polyform(rng)
        if not forms.exterior_d(forms.exterior_d(omega)).is_zero():
            return 1.0, "d(d(omega)) has surviving terms"
    return 0.0, ""


def _check_hodge_defining(rng, cfg):
    # matching grades: the full equation; mixed grades: the wedge cannot
    # reach the top grade, matching the vanishing pairing
    worst = 0.0
    for g in (forms.euclidean_metric(), forms.minkowski_metric()):
        volume = forms.NonhomogeneousForm.basis(15)
        for ma in forms.CANONICAL_MASKS:
            fa = forms.NonhomogeneousForm.basis(ma)
            for mb in forms.CANONICAL_MASKS:
                fb = forms.NonhomogeneousForm.basis(mb)
                lhs = forms.wedge(fa, forms.hodge_star(fb, g))
                rhs = forms.form_inner(fa, fb, g) * volume
                if ma.bit_count() == mb.bit_count():
                    worst = max(worst, (lhs - rhs).norm())
                else:
                    worst = max(worst, (lhs.grade_part(4) - rhs).norm())
    return worst, ""


def _check_double_star(rng, cfg):
    euc = forms.double_star_signs(forms.euclidean_metric())
    mink = forms.double_star_signs(forms.minkowski_metric())
    ok_euc = tuple(int(s.real) for s in euc) == forms.EUCLIDEAN_DOUBLE_STAR
    ok_mink = tuple(int(s.real) for s in mink) == forms.MINKOWSKI_DOUBLE_STAR
    law = all(int(s.real) == (-1) ** (p * (4 - p)) for p, s in enumerate(euc))
    residual = 0.0 if (ok_euc and ok_mink and law) else 1.0
    return residual, (
        f"euclidean {forms.EUCLIDEAN_DOUBLE_STAR}, "
        f"split-signature {forms.MINKOWSKI_DOUBLE_STAR}"
    )


def _check_laplace_grades(rng, cfg):
    worst = 0.0
    mixes = 0.0
    for _ in range(cfg.count("samples")):
        g = forms.MetricTensor(_random_symmetric(rng), degenerate_allowed=True)
        k = rng.uniform(-2.0, 2.0, 4)
        lap = forms.laplace_beltrami_symbol(k, g)
        D = forms.dirac_kahler_symbol(k, g)
        for ka in range(5):
            rows = forms.GRADE_SLOTS[ka]
            for kb in range(5):
                if ka == kb:
                    continue
                cols = forms.GRADE_SLOTS[kb]
                worst = max(worst, float(np.max(np.abs(lap[np.ix_(rows, cols)]))))
                mixes = max(mixes, float(np.max(np.abs(D[np.ix_(rows, cols)]))))
    if mixes == 0.0:
        return 1.0, "first-order symbol unexpectedly preserves grade"
    return worst, ""


def _check_codifferential(rng, cfg):
    details = []
    worst = 0.0
    for name, g in (("euclidean", forms.euclidean_metric()),
                    ("split", forms.minkowski_metric())):
        table = forms.codifferential_sign_table(g)
        details.append(f"{name} sign table {table[1:]}")
    x0 = forms.Poly.coordinate(0)
    omega = forms.PolyForm({0: x0 * x0})
    g = forms.euclidean_metric()
    lap = forms.algebraic_codifferential(forms.exterior_d(omega), g)
    expected = forms.PolyForm({0: forms.Poly.constant(2.0)})
    if lap != expected:
        worst = 1.0
    via_hodge = forms.hodge_codifferential(forms.exterior_d(omega), g)
    if (via_hodge + expected).is_zero() or (via_hodge - expected).is_zero():
        pass
    else:
        worst = 1.0
    return worst, "; ".join(details)


# ---------------------------------------------------------------------------
# covariance suite

def _check_functoriality(rng, cfg):
    rep = matrices.gamma_rep("weyl")
    worst = 0.0
    for _ in range(cfg.count("lorentz")):
        G1 = random_lorentz(rng) if rng.integers(2) else random_nonisometry(rng)
        G2 = random_nonisometry(rng) if rng.integers(2) else random_lorentz(rng)
        lhs = covariance.induced_matrix_action(G1 @ G2, rep)
        rhs = covariance.induced_matrix_action(G1, rep) @ covariance.induced_matrix_action(
            G2, rep
        )
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst, ""


def _check_lorentz_covariance(rng, cfg):
    rep = matrices.gamma_rep("weyl")
    worst = 0.0
    for _ in range(cfg.count("lorentz")):
        worst = max(worst, covariance.covariance_residual(random_lorentz(rng), rep))
    return worst, ""


def _check_nonisometry_covariance(rng, cfg):
    rep = matrices.gamma_rep("weyl")
    smallest = math.inf
    for _ in range(cfg.count("nonisometries")):
        smallest = min(
            smallest, covariance.covariance_residual(random_nonisometry(rng), rep)
        )
    margin = 1e-3
    return max(0.0, margin - smallest), f"smallest residual {smallest:.6g}"


def _check_worked_planes(rng, cfg):
    rep = matrices.gamma_rep("weyl")
    worst = 0.0
    for _ in range(cfg.count("samples")):
        a = rng.uniform(-2.0, 2.0, (2, 2))
        G = np.eye(4)
        G[1:3, 1:3] = a
        scalar, bivec = covariance.plane_product_coefficients(G, rep, axes=(1, 2))
        want_scalar = -(a[0, 0] * a[1, 0] + a[0, 1] * a[1, 1])
        want_bivec = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
        worst = max(worst, abs(scalar - want_scalar), abs(bivec - want_bivec))

        b = rng.uniform(-2.0, 2.0, (2, 2))
        G = np.eye(4)
        G[0:2, 0:2] = b
        scalar, bivec = covariance.plane_product_coefficients(G, rep, axes=(0, 1))
        want_scalar = b[0, 0] * b[1, 0] - b[0, 1] * b[1, 1]
        want_bivec = b[0, 0] * b[1, 1] - b[1, 0] * b[0, 1]
        worst = max(worst, abs(scalar - want_scalar), abs(bivec - want_bivec))

    phi = rng.uniform(0, 2 * math.pi)
    rot = np.eye(4)
    rot[1, 1] = rot[2, 2] = math.cos(phi)
    rot[1, 2] = -math.sin(phi)
    rot[2, 1] = math.sin(phi)
    scalar, _ = covariance.plane_product_coefficients(rot, rep, axes=(1, 2))
    worst = max(worst, abs(scalar))
    boost = random_boost(rng)
    axis = int(np.flatnonzero(np.abs(boost[0, 1:]) > 0)[0]) + 1
    scalar, _ = covariance.plane_product_coefficients(boost, rep, axes=(0, axis))
    worst = max(worst, abs(scalar))
    shear_scalar, shear_bivec = covariance.plane_product_coefficients(
        _shear_xy(), rep, axes=(1, 2)
    )
    worst = max(worst, abs(shear_scalar + 1.0), abs(shear_bivec - 1.0))
    return worst, "unit shear scalar leakage -1"


def _check_grade_leakage(rng, cfg):
    rep = matrices.gamma_rep("weyl")
    worst = 0.0
    for axes in ((1, 2), (0, 1)):
        for _ in range(cfg.count("samples")):
            block = rng.uniform(-2.0, 2.0, (2, 2))
            G = np.eye(4)
            G[np.ix_(axes, axes)] = block
            Gm = covariance.induced_matrix_action(G, rep)
            a, b = axes
            img_a = covariance.apply_induced(Gm, rep.gammas[a], rep)
            img_b = covariance.apply_induced(Gm, rep.gammas[b], rep)
            pair = covariance.from_gamma_coords(
                covariance.apply16(
                    covariance._gamma_pair_coords(a, b), Gm
                ),
                rep,
            )
            coords = covariance.to_gamma_coords(img_a @ img_b - pair, rep)
            for slot, mask in enumerate(forms.CANONICAL_MASKS):
                if mask.bit_count() > 0:
                    worst = max(worst, abs(coords[slot]))
    return worst, ""


def _check_spin_route(rng, cfg):
    rep = matrices.gamma_rep("weyl")
    worst = 0.0
    for _ in range(cfg.count("lorentz")):
        L = random_lorentz(rng)
        S = covariance.lorentz_spin_rep(L, rep)
        lhs = covariance.spin_conjugation_action(S, rep)
        rhs = covariance.induced_matrix_action(L, rep)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
        flipped = covariance.spin_conjugation_action(-S, rep)
        worst = max(worst, float(np.max(np.abs(flipped - lhs))))
    return worst, ""


def _check_schmidt(rng, cfg):
    rep = matrices.gamma_rep("weyl")
    worst = 0.0
    for _ in range(cfg.count("samples")):
        L = random_lorentz(rng)
        Gm = covariance.induced_matrix_action(L, rep)
        terms, residual = covariance.operator_schmidt(Gm, rep)
        worst = max(worst, residual)
        if len(terms) != 1:
            return 1.0, f"isometry map needed {len(terms)} terms"
        S = covariance.lorentz_spin_rep(L, rep)
        left, right, _w = terms[0]
        align = left.reshape(-1) @ S.conj().reshape(-1)
        worst = max(
            worst,
            float(np.max(np.abs(left - align / abs(align) * S / np.linalg.norm(S)))),
        )
        del right
    shear = covariance.induced_matrix_action(_shear_xy(), rep)
    shear_terms, residual = covariance.operator_schmidt(shear, rep)
    worst = max(worst, residual)
    if len(shear_terms) < 2:
        return 1.0, "shear map compressed to one term"
    L_M = covariance.induced_matrix_action(random_lorentz(rng), rep)
    composed, _ = covariance.operator_schmidt(shear @ L_M, rep)
    if len(composed) != len(shear_terms):
        return 1.0, "term count changed under isometry composition"
    return worst, f"shear term count {len(shear_terms)}"


def _check_two_spinor(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("lorentz")):
        S = random_sl2(rng)
        lm = covariance.two_spinor_action(S)
        if lm.det < 0.5 or lm.matrix[0, 0] < 1.0 - 1e-10:
            return 1.0, "image left the proper orthochronous component"
        worst = max(worst, abs(lm.det - 1.0))
        for _ in range(4):
            v = rng.uniform(-2.0, 2.0, 4)
            image = lm.matrix @ v
            worst = max(
                worst,
                abs(
                    matrices.minkowski_product(image, image)
                    - matrices.minkowski_product(v, v)
                ),
            )
        big = covariance.embed_two_spinor(S)
        rep = matrices.gamma_rep("weyl")
        for k in range(4):
            lhs = big @ rep.gammas[k] @ np.linalg.inv(big)
            rhs = sum(lm.matrix[j, k] * rep.gammas[j] for j in range(4))
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst, ""


def _check_rank_one(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("samples")):
        psi = rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4)
        alpha = rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4)
        pair = covariance.rank_one_factor(np.outer(psi, alpha))
        rebuilt = np.outer(pair.psi, pair.alpha)
        worst = max(worst, float(np.max(np.abs(rebuilt - np.outer(psi, alpha)))))
        L = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
        R = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
        worst = max(worst, covariance.product_structure_check(L, R, psi, alpha))
    try:
        covariance.rank_one_factor(np.eye(4, dtype=complex))
        return 1.0, "full-rank matrix factored as rank one"
    except ValueError:
        pass
    return worst, ""


def _check_matrix_dirac(rng, cfg):
    rep = matrices.gamma_rep("weyl")
    worst = 0.0
    for _ in range(cfg.count("samples")):
        m = rng.uniform(0.3, 2.0)
        spatial = rng.uniform(-2.0, 2.0, 3)
        p = np.array([math.sqrt(m * m + float(spatial @ spatial)), *spatial])
        alpha = rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4)
        Psi = covariance.matrix_dirac_solution(p, m, alpha, rep)
        D = matrices.dirac_momentum_matrix(p, rep)
        worst = max(worst, float(np.max(np.abs((D - m * np.eye(4)) @ Psi))))
        column = np.zeros((4, 4), dtype=complex)
        column[:, 0] = rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4)
        M = rng.uniform(-1, 1, (4, 4)) + 1j * rng.uniform(-1, 1, (4, 4))
        moved = M @ column
        if np.any(moved[:, 1:] != 0):
            return 1.0, "column support leaked under left multiplication"
    return worst, ""


def _check_spoin(rng, cfg):
    samples = [random_sl2(rng) for _ in range(cfg.count("samples"))]
    winner = covariance.spoin_involution_probe(samples)
    return 0.0, f"sandwich closes with {winner}"


# ---------------------------------------------------------------------------
# so33 suite

def _check_kernel(rng, cfg):
    for _ in range(cfg.count("samples")):
        G = random_det1(rng)
        a = cover_so33.induced_six_map(G).matrix
        b = cover_so33.induced_six_map(-G).matrix
        if not np.array_equal(a, b):
            return 1.0, "sign of the source leaked into the six by six map"
    return 0.0, ""


def _check_six_homomorphism(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("samples")):
        G1, G2 = random_det1(rng), random_det1(rng)
        lhs = cover_so33.induced_six_map(G1 @ G2).matrix
        rhs = cover_so33.induced_six_map(G1).matrix @ cover_so33.induced_six_map(G2).matrix
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst, ""


def _check_form_preservation(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("samples")):
        worst = max(worst, cover_so33.induced_six_map(random_det1(rng)).form_residual)
    time_reflection = np.diag([-1.0, 1.0, 1.0, 1.0])
    sm = cover_so33.induced_six_map(time_reflection)
    worst = max(worst, sm.form_residual)
    if sm.det != -1.0:
        return 1.0, "time reflection determinant is not -1"
    return worst, "improper maps flip the quadric sign"


def _check_plucker(rng, cfg):
    worst = 0.0
    for _ in range(cfg.count("samples")):
        upper = rng.uniform(-2.0, 2.0, 6)
        p = cover_so33.q_to_p(upper)  # arbitrary antisymmetric array
        q = cover_so33.p_to_q(p)
        worst = max(worst, float(np.max(np.abs(cover_so33.q_to_p(q) - p))))
        worst = max(worst, abs(cover_so33.plucker_value(p) - cover_so33.q_value(q)))
    single = np.zeros((4, 4))
    single[0, 1] = 1.0
    single[1, 0] = -1.0
    q = cover_so33.p_to_q(single)
    want = np.array([0.5, 0, 0, 0.5, 0, 0])
    worst = max(worst, float(np.max(np.abs(q - want))))
    return worst, ""


def _check_eta_gram(rng, cfg):
    G, scale = cover_so33.eta_gram()
    if scale == 0:
        return 1.0, "degenerate scale"
    residual = float(np.max(np.abs(G - scale * cover_so33.J_SPLIT)))
    return residual, f"gram matrix = {scale:g} * diag(1,1,1,-1,-1,-1)"


def _check_dilation(rng, cfg):
    factors = cover_so33.dilation_grade_check(2.0)
    if factors != (1.0, 2.0, 4.0, 8.0, 16.0):
        return 1.0, f"factors {factors}"
    lam = float(rng.uniform(0.5, 3.0))
    got = cover_so33.dilation_grade_check(lam)
    worst = max(abs(g - lam**k) for k, g in enumerate(got))
    return worst, "doubling scales the five grades by 1, 2, 4, 8, 16"


def _check_hodge_split(rng, cfg):
    etas = cover_so33.eta_basis()
    worst = 0.0
    euc = forms.euclidean_metric()
    for i, form in enumerate(etas):
        eig = 1.0 if i < 3 else -1.0
        diff = forms.hodge_star(form, euc) - eig * form
        worst = max(worst, diff.norm())
    mink = forms.minkowski_metric()
    star2_sign = forms.MINKOWSKI_DOUBLE_STAR[2]
    for i, form in enumerate(etas):
        once = forms.hodge_star(form, mink)
        partner = etas[(i + 3) % 6]
        # the split-metric star exchanges the two triples
        overlap = sum(
            abs(once.coeff(mask)) for mask in forms.CANONICAL_MASKS
            if mask.bit_count() == 2 and abs(partner.coeff(mask)) == 0
        )
        worst = max(worst, overlap)
        twice = forms.hodge_star(once, mink)
        worst = max(worst, (twice - star2_sign * form).norm())
    return worst, ""


# ---------------------------------------------------------------------------
# schwarzschild suite

def _sample_radii(cfg):
    return charts.log_spaced(1.01, 1e3, cfg.count("radii"))


def _points(radii):
    return [(0.3, float(r), 1.1, 0.4) for r in radii]


def _check_pull_polar_ef(rng, cfg):
    ef, transform = charts.ef_chart()
    res = charts.pullback_check(charts.polar_chart(), ef, transform, _points(_sample_radii(cfg)))
    return res, ""


def _check_pull_polar_mixed(rng, cfg):
    res = charts.pullback_check(
        charts.polar_chart(), charts.mixed_chart(), charts.polar_to_mixed(),
        _points(_sample_radii(cfg)),
    )
    return res, ""


def _check_rotated_frame(rng, cfg):
    radii = np.concatenate([[0.5, 0.75, 1.0], _sample_radii(cfg)])
    worst = max(charts.rotated_frame_check(float(r)) for r in radii)
    angle_worst = 0.0
    for r in radii:
        ang = charts.theta_of_r(float(r))
        angle_worst = max(angle_worst, abs(math.sin(ang) ** 2 + math.cos(ang) ** 2 - 1.0))
    worst = max(worst, angle_worst, abs(charts.theta_of_r(0.5) - math.pi / 2))
    return worst, ""


def _check_pull_mixed_sync(rng, cfg):
    res = charts.pullback_check(
        charts.mixed_chart(), charts.synchronous_chart(), charts.mixed_to_synchronous(),
        _points(_sample_radii(cfg)),
    )
    return res, ""


def _check_pull_l_branch(rng, cfg):
    worst = 0.0
    for sign in (1, -1):
        ls = [sign * math.sqrt(2.0 * r - 1.0) for r in _sample_radii(cfg)]
        res = charts.pullback_check(
            charts.l_chart(), charts.wormhole_chart(sign), charts.l_to_branch(sign),
            _points(ls),
        )
        worst = max(worst, res)
    return worst, ""


def _check_jacobians(rng, cfg):
    worst = 0.0
    sample = [(0.3, r, 1.1, 0.4) for r in (1.5, 2.0, 3.0, 10.0, 100.0)]
    _, polar_ef = charts.ef_chart()
    for transform in (polar_ef, charts.polar_to_mixed(), charts.mixed_to_synchronous()):
        worst = max(worst, charts.jacobian_fd_check(transform, sample))
    l_sample = [(0.3, l, 1.1, 0.4) for l in (0.5, 1.5, 3.0, 10.0)]
    worst = max(worst, charts.jacobian_fd_check(charts.l_to_branch(1), l_sample))
    return worst, ""


def _check_null_slopes(rng, cfg):
    worst = 0.0
    mixed = charts.mixed_chart()
    for r in np.concatenate([[0.6, 0.9, 1.0], _sample_radii(cfg)]):
        slopes = charts.radial_null_slopes(mixed, float(r))
        got = sorted([slopes.k_plus, slopes.k_minus], reverse=True)
        want = sorted(charts.mixed_null_closed(float(r)), reverse=True)
        for g_root, w_root in zip(got, want):
            if math.isfinite(g_root) and math.isfinite(w_root):
                worst = max(worst, abs(g_root - w_root) / max(1.0, w_root**2))
            elif math.isfinite(g_root) != math.isfinite(w_root):
                return 1.0, "finite root paired with a diverging one"
    polar = charts.polar_chart()
    for r in (1.5, 2.0, 5.0, 1e3):
        slopes = charts.radial_null_slopes(polar, r)
        want_plus, want_minus = charts.polar_null_closed(r)
        worst = max(worst, abs(slopes.k_plus - want_plus), abs(slopes.k_minus - want_minus))
    # far away both slopes approach +-1 with a sqrt(2/r) tail, and their
    # product is exactly -1 at every radius
    for r in (1e3, 1e4, 1e5):
        far = charts.radial_null_slopes(mixed, r)
        envelope = 1.1 * math.sqrt(2.0 / r)
        if abs(far.k_plus - 1.0) > envelope or abs(far.k_minus + 1.0) > envelope:
            return 1.0, f"slopes at r={r:g} fall outside the flattening envelope"
        worst = max(worst, abs(far.k_plus * far.k_minus + 1.0))
    horizon = charts.radial_null_slopes(mixed, 1.0)
    if horizon.k_plus != 0.0:
        return 1.0, f"finite horizon root is {horizon.k_plus}, not 0"
    near = [charts.radial_null_slopes(mixed, 1.0 + eps).k_minus for eps in (1e-2, 1e-4, 1e-6)]
    if not (near[0] > near[1] > near[2]):
        return 1.0, "ingoing root does not diverge toward the horizon"
    return worst, "one slope stays finite at the horizon, the other diverges"


def _check_sync_roundtrip(rng, cfg):
    worst = 0.0
    for r in charts.log_spaced(1.01, 1e3, 50):
        tau = float(rng.uniform(-1.0, 1.0))
        R = tau + charts.sync_offset(float(r))
        worst = max(worst, abs(charts.r_of_sync(tau, R) - float(r)))
    for r in np.linspace(0.51, 0.99, 9):
        R = charts.sync_offset(float(r))
        worst = max(worst, abs(charts.r_of_sync(0.0, R, branch="interior") - float(r)))
    return worst, ""


def _check_tau_R(rng, cfg):
    worst = 0.0
    step = 1e-6
    for r in (1.5, 2.0, 3.0, 5.0, 20.0):
        u = math.sqrt(2.0 * r - 1.0)
        tau_hi, R_hi = charts.tau_R(0.0, r + step)
        tau_lo, R_lo = charts.tau_R(0.0, r - step)
        dtau = (tau_hi - tau_lo) / (2 * step)
        dR = (R_hi - R_lo) / (2 * step)
        worst = max(worst, abs(dtau + u / (r - 1.0)))
        worst = max(worst, abs(dR - r * r / ((r - 1.0) * u)))
    tau1, R1 = charts.tau_R(1.0, 3.0)
    tau0, R0 = charts.tau_R(0.0, 3.0)
    worst = max(worst, abs((tau1 - tau0) - 1.0), abs((R1 - R0) - 1.0))
    return worst, ""


def _check_family(rng, cfg):
    worst = 0.0
    tau_off, R_off = charts.family_transform(charts.UNIT_F, 2.0, 3.0)
    want = charts.tortoise(3.0) - charts.tortoise(2.0)
    worst = max(worst, abs(tau_off - want), abs(R_off - want))
    tau_off, R_off = charts.family_transform(charts.MIXED_F, 2.0, 3.0)
    tau3, R3 = charts.tau_R(0.0, 3.0)
    tau2, R2 = charts.tau_R(0.0, 2.0)
    worst = max(worst, abs(tau_off - (tau2 - tau3)), abs(R_off - (R3 - R2)))
    zero = charts.family_transform(charts.MIXED_F, 2.0, 2.0)
    worst = max(worst, abs(zero[0]), abs(zero[1]))
    return worst, ""


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    suite: str
    anchor: str
    tolerance: float
    fn: object


CHECKS = [
    CheckSpec("clifford.anticommutator", "clifford",
              "generator anticommutation closes on the diagonal signature", 0.0,
              _check_anticommutator),
    CheckSpec("clifford.associativity", "clifford",
              "geometric product associativity", 1e-12, _check_associativity),
    CheckSpec("clifford.reversion_antihomomorphism", "clifford",
              "reversion reverses products", 0.0, _check_reversion),
    CheckSpec("clifford.grade_projection_sum", "clifford",
              "grade projections resolve the identity", 0.0, _check_grade_sum),
    CheckSpec("clifford.reflection_formula", "clifford",
              "sandwich reflection matches the componentwise formula", 1e-12,
              _check_reflection),
    CheckSpec("clifford.spin_lift_conjugation", "clifford",
              "isometries are implemented by conjugation with a versor", 1e-9,
              _check_spin_lift),
    CheckSpec("clifford.wedge_grassmann_match", "clifford",
              "wedge equals the degenerate-signature product", 0.0,
              _check_wedge_grassmann),

    CheckSpec("matrixrep.euclid_relations", "matrixrep",
              "Pauli tensor generators square to one and anticommute", 0.0,
              _check_euclid_relations),
    CheckSpec("matrixrep.car_constants", "matrixrep",
              "ladder operators satisfy canonical anticommutation with measured c",
              0.0, _check_car),
    CheckSpec("matrixrep.gamma_products_independent", "matrixrep",
              "the sixteen gamma products span the matrix algebra", 0.0,
              _check_gamma_independent),
    CheckSpec("matrixrep.momentum_square", "matrixrep",
              "momentum-space operator squares to the metric square", 1e-11,
              _check_momentum_square),
    CheckSpec("matrixrep.onshell_solutions", "matrixrep",
              "on-shell solution space is two dimensional", 1e-10, _check_onshell),
    CheckSpec("matrixrep.change_rep_relations", "matrixrep",
              "conjugated representations keep the relations", 1e-12,
              _check_change_rep),
    CheckSpec("matrixrep.pauli_system_blocks", "matrixrep",
              "two-spinor system and four-spinor equation are the same blocks",
              1e-12, _check_pauli_blocks),

    CheckSpec("exterior.gamma_anticommutator", "exterior",
              "wedge-minus-contraction operators close on the metric", 1e-10,
              _check_gamma_anticommutator),
    CheckSpec("exterior.grassmann_degenerate", "exterior",
              "zero metric reduces to exactly nilpotent wedges", 0.0,
              _check_grassmann_degenerate),
    CheckSpec("exterior.delta_relations", "exterior",
              "wedges and contractions each anticommute among themselves", 1e-12,
              _check_delta_relations),
    CheckSpec("exterior.dirac_kahler_square", "exterior",
              "first-order symbol squares to minus the metric square", 1e-10,
              _check_dirac_kahler_square),
    CheckSpec("exterior.d_squared_zero", "exterior",
              "exterior derivative is exactly nilpotent", 0.0, _check_d_squared),
    CheckSpec("exterior.hodge_defining", "exterior",
              "duality map satisfies the wedge-pairing definition", 0.0,
              _check_hodge_defining),
    CheckSpec("exterior.double_star_signs", "exterior",
              "double duality signs per grade", 0.0, _check_double_star),
    CheckSpec("exterior.laplace_grade_preserving", "exterior",
              "second-order symbol preserves grade, first-order does not", 1e-12,
              _check_laplace_grades),
    CheckSpec("exterior.codifferential_sign_table", "exterior",
              "duality route matches the contraction route up to recorded signs",
              0.0, _check_codifferential),

    CheckSpec("covariance.functoriality", "covariance",
              "induced sixteen-dimensional action composes functorially", 1e-8,
              _check_functoriality),
    CheckSpec("covariance.lorentz_residual", "covariance",
              "isometries respect the transported product", 1e-9,
              _check_lorentz_covariance),
    CheckSpec("covariance.nonisometry_residual", "covariance",
              "non-isometries break the transported product", 0.0,
              _check_nonisometry_covariance),
    CheckSpec("covariance.worked_plane_formulas", "covariance",
              "plane transformations reproduce the closed coefficient formulas",
              1e-12, _check_worked_planes),
    CheckSpec("covariance.grade_leakage", "covariance",
              "product defect leaks only into lower grades", 1e-12,
              _check_grade_leakage),
    CheckSpec("covariance.spin_route_agreement", "covariance",
              "conjugation route equals the induced route on isometries", 1e-8,
              _check_spin_route),
    CheckSpec("covariance.schmidt_counts", "covariance",
              "isometries factor into one left-right term, shears into more",
              1e-9, _check_schmidt),
    CheckSpec("covariance.two_spinor_proper", "covariance",
              "unit-determinant two-spinor maps give proper orthochronous images",
              1e-8, _check_two_spinor),
    CheckSpec("covariance.rank_one_factorization", "covariance",
              "outer products are recovered up to gauge", 1e-10, _check_rank_one),
    CheckSpec("covariance.matrix_dirac", "covariance",
              "matrix solutions stay in the single-column left ideal", 1e-10,
              _check_matrix_dirac),
    CheckSpec("covariance.spoin_involution", "covariance",
              "which involution closes the two-spinor sandwich", 0.0, _check_spoin),

    CheckSpec("so33.kernel_sign_blind", "so33",
              "plus and minus source map to the same six by six matrix", 0.0,
              _check_kernel),
    CheckSpec("so33.homomorphism", "so33",
              "six by six maps compose like their sources", 1e-9,
              _check_six_homomorphism),
    CheckSpec("so33.form_preservation", "so33",
              "unit determinant preserves the split quadric", 1e-9,
              _check_form_preservation),
    CheckSpec("so33.plucker_match", "so33",
              "quadric invariant equals the split sum of squares", 1e-12,
              _check_plucker),
    CheckSpec("so33.eta_gram", "so33",
              "split basis diagonalizes the quadric with recorded scale", 0.0,
              _check_eta_gram),
    CheckSpec("so33.dilation_grades", "so33",
              "dilations scale each grade by its power", 1e-12, _check_dilation),
    CheckSpec("so33.hodge_split", "so33",
              "duality eigenspaces align with the split triples", 1e-12,
              _check_hodge_split),

    CheckSpec("schwarzschild.pullback_polar_ef", "schwarzschild",
              "static chart pulls back from the advancing null chart", 1e-9,
              _check_pull_polar_ef),
    CheckSpec("schwarzschild.pullback_polar_mixed", "schwarzschild",
              "static chart pulls back from the skew chart", 1e-9,
              _check_pull_polar_mixed),
    CheckSpec("schwarzschild.rotated_frame", "schwarzschild",
              "tilted-frame squares expand to the skew components", 1e-12,
              _check_rotated_frame),
    CheckSpec("schwarzschild.pullback_mixed_synchronous", "schwarzschild",
              "skew chart pulls back from the diagonal chart", 1e-9,
              _check_pull_mixed_sync),
    CheckSpec("schwarzschild.pullback_l_branch", "schwarzschild",
              "throat chart pulls back from each branch", 1e-9,
              _check_pull_l_branch),
    CheckSpec("schwarzschild.jacobians_fd", "schwarzschild",
              "closed-form Jacobians match central differences", 1e-6,
              _check_jacobians),
    CheckSpec("schwarzschild.null_closed_forms", "schwarzschild",
              "light-cone slopes match the closed forms and flatten far away",
              1e-10, _check_null_slopes),
    CheckSpec("schwarzschild.synchronous_roundtrip", "schwarzschild",
              "radius recovery by root finding", 1e-10, _check_sync_roundtrip),
    CheckSpec("schwarzschild.tau_R_derivatives", "schwarzschild",
              "reparametrization derivatives by central differences", 1e-6,
              _check_tau_R),
    CheckSpec("schwarzschild.family_quadrature", "schwarzschild",
              "quadrature of the embedding family matches closed forms", 1e-9,
              _check_family),
]

SUITES = ("clifford", "matrixrep", "exterior", "covariance", "so33", "schwarzschild")


def run_suite(suite: str, cfg: RunConfig = RunConfig()) -> SuiteResult:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    for spec in CHECKS:
        if spec.suite != suite:
            continue
        tol = float(cfg.tolerances.get(spec.check_id, spec.tolerance))
        rng = _rng_for(cfg.seed, spec.check_id)
        residual, detail = spec.fn(rng, cfg)
        results.append(
            CheckResult(
                check_id=spec.check_id,
                anchor=spec.anchor,
                residual=float(residual),
                tolerance=tol,
                passed=residual <= tol,
                detail=detail,
            )
        )
    results.sort(key=lambda c: c.check_id)
    return SuiteResult(suite=suite, seed=cfg.seed, checks=tuple(results))


def suite_result_payload(results) -> dict:
    """JSON-ready payload for one or more suite results."""
    suites = []
    for res in results:
        suites.append(
            {
                "suite": res.suite,
                "seed": res.seed,
                "passed": res.passed,
                "checks": [
                    {
                        "id": c.check_id,
                        "anchor": c.anchor,
                        "status": "pass" if c.passed else "fail",
                        "residual": c.residual,
                        "tolerance": c.tolerance,
                        "detail": c.detail,
                    }
                    for c in res.checks
                ],
            }
        )
    return {"suites": suites, "passed": all(r.passed for r in results)}
