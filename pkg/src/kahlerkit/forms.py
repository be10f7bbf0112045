"""Exterior forms on four coordinates: wedge, Hodge star, exterior
derivative, algebraic codifferential, and the grade-mixing first-order
operator whose square is minus the form Laplacian.

The 16 basis forms are indexed by subsets of {0,1,2,3}; the canonical
order is by grade, then lexicographically by index tuple.  Every 16x16
operator matrix in this module acts on coefficient column vectors
(``M @ coeffs``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Mapping

import numpy as np

from kahlerkit._kernel import reorder_sign

__all__ = [
    "N_COORDS",
    "DIM",
    "CANONICAL_MASKS",
    "MASK_SLOT",
    "mask_indices",
    "mask_of_indices",
    "FormIndex",
    "NonhomogeneousForm",
    "MetricTensor",
    "Poly",
    "PolyForm",
    "DegenerateMetricError",
    "alternate",
    "wedge",
    "tensor_of_form",
    "form_of_tensor",
    "form_inner",
    "hodge_star",
    "hodge_matrix",
    "double_star_signs",
    "EUCLIDEAN_DOUBLE_STAR",
    "MINKOWSKI_DOUBLE_STAR",
    "exterior_d",
    "delta_ops",
    "gamma_check_ops",
    "dirac_kahler_symbol",
    "laplace_beltrami_symbol",
    "hodge_codifferential",
    "algebraic_codifferential",
    "codifferential_sign_table",
    "minkowski_metric",
    "euclidean_metric",
]

N_COORDS = 4
DIM = 1 << N_COORDS


def mask_indices(mask: int) -> tuple:
    return tuple(i for i in range(N_COORDS) if mask >> i & 1)


def mask_of_indices(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


CANONICAL_MASKS = tuple(
    sorted(range(DIM), key=lambda m: (m.bit_count(), mask_indices(m)))
)
MASK_SLOT = {m: i for i, m in enumerate(CANONICAL_MASKS)}
GRADE_SLOTS = {
    k: tuple(i for i, m in enumerate(CANONICAL_MASKS) if m.bit_count() == k)
    for k in range(N_COORDS + 1)
}
VOLUME_MASK = DIM - 1


class DegenerateMetricError(ValueError):
    """Operation needs an invertible metric on 1-forms."""


@dataclass(frozen=True)
class FormIndex:
    """Basis form label: ascending subset of the four coordinate slots."""

    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < DIM:
            raise ValueError(f"mask {self.mask} out of range")

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def indices(self) -> tuple:
        return mask_indices(self.mask)

    @property
    def slot(self) -> int:
        return MASK_SLOT[self.mask]


class NonhomogeneousForm:
    """Dense 16-component form; coefficients in canonical basis order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            self.coeffs = np.zeros(DIM, dtype=complex)
        else:
            arr = np.asarray(coeffs, dtype=complex)
            if arr.shape != (DIM,):
                raise ValueError(f"need {DIM} coefficients, got {arr.shape}")
            self.coeffs = arr.copy()
        self.coeffs.flags.writeable = False

    @classmethod
    def basis(cls, mask: int) -> "NonhomogeneousForm":
        out = np.zeros(DIM, dtype=complex)
        out[MASK_SLOT[mask]] = 1.0
        return cls(out)

    @classmethod
    def from_mask_coeffs(cls, mapping: Mapping) -> "NonhomogeneousForm":
        out = np.zeros(DIM, dtype=complex)
        for mask, c in mapping.items():
            out[MASK_SLOT[int(mask)]] += c
        return cls(out)

    def coeff(self, mask: int) -> complex:
        return complex(self.coeffs[MASK_SLOT[mask]])

    def mask_coeffs(self) -> dict:
        return {
            m: complex(self.coeffs[i])
            for i, m in enumerate(CANONICAL_MASKS)
            if self.coeffs[i] != 0
        }

    def grade_part(self, k: int) -> "NonhomogeneousForm":
        out = np.zeros(DIM, dtype=complex)
        for slot in GRADE_SLOTS[k]:
            out[slot] = self.coeffs[slot]
        return NonhomogeneousForm(out)

    def __add__(self, other):
        return NonhomogeneousForm(self.coeffs + other.coeffs)

    def __sub__(self, other):
        return NonhomogeneousForm(self.coeffs - other.coeffs)

    def __neg__(self):
        return NonhomogeneousForm(-self.coeffs)

    def __mul__(self, scalar):
        return NonhomogeneousForm(self.coeffs * scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, NonhomogeneousForm) and bool(
            np.array_equal(self.coeffs, other.coeffs)
        )

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def __repr__(self):
        parts = []
        for i, m in enumerate(CANONICAL_MASKS):
            if self.coeffs[i] != 0:
                label = "^".join(f"dx{j}" for j in mask_indices(m)) or "1"
                parts.append(f"{self.coeffs[i]:g}*{label}")
        return "NonhomogeneousForm(" + (" + ".join(parts) or "0") + ")"


@dataclass(frozen=True)
class MetricTensor:
    """Symmetric real metric on 1-forms; degenerate only when allowed."""

    entries: np.ndarray
    degenerate_allowed: bool = False

    def __post_init__(self):
        g = np.asarray(self.entries, dtype=float)
        if g.shape != (N_COORDS, N_COORDS):
            raise ValueError("metric must be 4x4")
        if not np.array_equal(g, g.T):
            raise ValueError("metric must be exactly symmetric")
        if not self.degenerate_allowed and abs(np.linalg.det(g)) < 1e-12:
            raise DegenerateMetricError("metric is singular")
        g = g.copy()
        g.flags.writeable = False
        object.__setattr__(self, "entries", g)

    @property
    def is_degenerate(self) -> bool:
        return abs(np.linalg.det(self.entries)) < 1e-12


def minkowski_metric() -> MetricTensor:
    return MetricTensor(np.diag([1.0, -1.0, -1.0, -1.0]))


def euclidean_metric() -> MetricTensor:
    return MetricTensor(np.eye(4))


# ---------------------------------------------------------------------------
# tensors and alternation

def alternate(T: np.ndarray) -> np.ndarray:
    """Antisymmetrize a (0, s) tensor with the 1/s! normalization."""
    T = np.asarray(T, dtype=complex)
    s = T.ndim
    if s > N_COORDS:
        raise ValueError(f"rank {s} exceeds {N_COORDS}")
    if s <= 1:
        return T.copy()
    if any(dim != N_COORDS for dim in T.shape):
        raise ValueError("each axis must have length 4")
    out = np.zeros_like(T)
    for perm in permutations(range(s)):
        sign = 1
        for i in range(s):
            for j in range(i + 1, s):
                if perm[i] > perm[j]:
                    sign = -sign
        out += sign * np.transpose(T, perm)
    return out / _factorial(s)


def _factorial(s: int) -> int:
    out = 1
    for i in range(2, s + 1):
        out *= i
    return out


def tensor_of_form(form: NonhomogeneousForm, grade: int) -> np.ndarray:
    """Grade component as an antisymmetric (0, grade) tensor.

    The basis form for indices J has tensor entries sign(pi)/grade! on the
    permutations of J, matching the alternation normalization.
    """
    shape = (N_COORDS,) * grade if grade else ()
    out = np.zeros(shape, dtype=complex)
    if grade == 0:
        return np.asarray(form.coeff(0))
    fact = _factorial(grade)
    for mask, c in form.mask_coeffs().items():
        if mask.bit_count() != grade:
            continue
        idx = mask_indices(mask)
        for perm in permutations(idx):
            sign = 1
            for i in range(grade):
                for j in range(i + 1, grade):
                    if perm[i] > perm[j]:
                        sign = -sign
            out[perm] += sign * c / fact
    return out


def form_of_tensor(T: np.ndarray) -> NonhomogeneousForm:
    """Read an antisymmetric (0, s) tensor back as a homogeneous form."""
    T = np.asarray(T, dtype=complex)
    s = T.ndim
    if s == 0:
        return NonhomogeneousForm.from_mask_coeffs({0: complex(T)})
    fact = _factorial(s)
    out = {}
    for mask in CANONICAL_MASKS:
        if mask.bit_count() != s:
            continue
        idx = mask_indices(mask)
        out[mask] = T[idx] * fact
    return NonhomogeneousForm.from_mask_coeffs(out)


# ---------------------------------------------------------------------------
# wedge and metric structure

def wedge(a: NonhomogeneousForm, b: NonhomogeneousForm) -> NonhomogeneousForm:
    out = np.zeros(DIM, dtype=complex)
    for ma, ca in a.mask_coeffs().items():
        for mb, cb in b.mask_coeffs().items():
            if ma & mb:
                continue
            out[MASK_SLOT[ma ^ mb]] += reorder_sign(ma, mb) * ca * cb
    return NonhomogeneousForm(out)


def _gram_det(mask_a: int, mask_b: int, g: np.ndarray) -> complex:
    ia, ib = mask_indices(mask_a), mask_indices(mask_b)
    if len(ia) != len(ib):
        return 0.0
    if not ia:
        return 1.0
    sub = g[np.ix_(ia, ib)]
    return complex(np.linalg.det(sub))


def form_inner(a: NonhomogeneousForm, b: NonhomogeneousForm, g: MetricTensor) -> complex:
    """Gram-determinant pairing, zero across grades, extended bilinearly."""
    if g.is_degenerate:
        raise DegenerateMetricError("inner product needs a nondegenerate metric")
    total = 0j
    for ma, ca in a.mask_coeffs().items():
        for mb, cb in b.mask_coeffs().items():
            if ma.bit_count() != mb.bit_count():
                continue
            total += ca * cb * _gram_det(ma, mb, g.entries)
    return complex(total)


def hodge_matrix(g: MetricTensor) -> np.ndarray:
    """16x16 matrix of the duality map defined by wedge-against-volume.

    Solves ``basis_I wedge (star basis_J) = <basis_I, basis_J> Omega`` with
    the unit-coefficient top form as the volume.
    """
    if g.is_degenerate:
        raise DegenerateMetricError("duality map needs a nondegenerate metric")
    S = np.zeros((DIM, DIM), dtype=complex)
    for mj in CANONICAL_MASKS:
        col = MASK_SLOT[mj]
        for mi in CANONICAL_MASKS:
            if mi.bit_count() != mj.bit_count():
                continue
            comp = VOLUME_MASK ^ mi
            val = _gram_det(mi, mj, g.entries) * reorder_sign(mi, comp)
            if val != 0:
                S[MASK_SLOT[comp], col] += val
    return S


def hodge_star(a: NonhomogeneousForm, g: MetricTensor) -> NonhomogeneousForm:
    return NonhomogeneousForm(hodge_matrix(g) @ a.coeffs)


def double_star_signs(g: MetricTensor) -> tuple:
    """Per-grade sign of applying the duality map twice (must be scalar)."""
    S = hodge_matrix(g)
    SS = S @ S
    signs = []
    for k in range(N_COORDS + 1):
        slots = GRADE_SLOTS[k]
        block = SS[np.ix_(slots, slots)]
        val = block[0, 0]
        if not np.allclose(SS[:, slots][np.setdiff1d(range(DIM), slots)], 0, atol=1e-12):
            raise ValueError("double star is not grade preserving")
        if not np.allclose(block, val * np.eye(len(slots)), atol=1e-12):
            raise ValueError("double star is not scalar on a grade")
        signs.append(complex(val))
    return tuple(signs)


EUCLIDEAN_DOUBLE_STAR = (1, -1, 1, -1, 1)
MINKOWSKI_DOUBLE_STAR = (-1, 1, -1, 1, -1)


# ---------------------------------------------------------------------------
# polynomial coefficients

class Poly:
    """Sparse polynomial in x0..x3: exponent 4-tuple -> complex coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping = ()):
        clean = {}
        for exps, c in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != N_COORDS or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps}")
            c = complex(c)
            if c != 0:
                clean[exps] = clean.get(exps, 0j) + c
        self.terms = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def constant(cls, value) -> "Poly":
        return cls({(0, 0, 0, 0): value})

    @classmethod
    def coordinate(cls, i: int) -> "Poly":
        exps = [0] * N_COORDS
        exps[i] = 1
        return cls({tuple(exps): 1.0})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0j) + c
        return Poly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0j) - c
        return Poly(out)

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Poly({e: c * other for e, c in self.terms.items()})
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0j) + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def diff(self, i: int) -> "Poly":
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == 0:
                continue
            new = list(exps)
            new[i] -= 1
            out[tuple(new)] = out.get(tuple(new), 0j) + exps[i] * c
        return Poly(out)

    def eval(self, point) -> complex:
        total = 0j
        for exps, c in self.terms.items():
            val = c
            for xi, e in zip(point, exps):
                val *= xi**e
            total += val
        return complex(total)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({self.terms!r})"


class PolyForm:
    """Form with sparse polynomial coefficients, one per basis mask."""

    __slots__ = ("parts",)

    def __init__(self, parts: Mapping = ()):
        clean = {}
        for mask, poly in dict(parts).items():
            mask = int(mask)
            if mask not in MASK_SLOT:
                raise ValueError(f"bad mask {mask}")
            if not isinstance(poly, Poly):
                poly = Poly.constant(poly)
            if poly:
                existing = clean.get(mask)
                clean[mask] = existing + poly if existing else poly
        self.parts = {m: p for m, p in clean.items() if p}

    def __add__(self, other):
        out = dict(self.parts)
        for m, p in other.parts.items():
            out[m] = out[m] + p if m in out else p
        return PolyForm(out)

    def __sub__(self, other):
        out = dict(self.parts)
        for m, p in other.parts.items():
            out[m] = out[m] - p if m in out else -p
        return PolyForm(out)

    def __mul__(self, scalar):
        return PolyForm({m: p * scalar for m, p in self.parts.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PolyForm) and self.parts == other.parts

    def __bool__(self):
        return bool(self.parts)

    def is_zero(self) -> bool:
        return not self.parts

    def eval_at(self, point) -> NonhomogeneousForm:
        return NonhomogeneousForm.from_mask_coeffs(
            {m: p.eval(point) for m, p in self.parts.items()}
        )

    def grades(self) -> set:
        return {m.bit_count() for m in self.parts}

    def __repr__(self):
        return f"PolyForm({self.parts!r})"


def exterior_d(omega: PolyForm) -> PolyForm:
    """Exterior derivative: total differential of every coefficient,
    wedged in from the left.  Applying it twice gives exactly zero."""
    out = {}
    for mask, poly in omega.parts.items():
        for i in range(N_COORDS):
            bit = 1 << i
            if mask & bit:
                continue
            dp = poly.diff(i)
            if not dp:
                continue
            target = mask | bit
            term = dp * reorder_sign(bit, mask)
            out[target] = out[target] + term if target in out else term
    return PolyForm(out)


# ---------------------------------------------------------------------------
# grade-shift operators and first-order symbols

def _wedge_op(i: int) -> np.ndarray:
    """Matrix of left wedge by the i-th coordinate 1-form."""
    out = np.zeros((DIM, DIM), dtype=complex)
    bit = 1 << i
    for mask in CANONICAL_MASKS:
        if mask & bit:
            continue
        out[MASK_SLOT[mask | bit], MASK_SLOT[mask]] = reorder_sign(bit, mask)
    return out


def _contract_op(i: int, g: np.ndarray) -> np.ndarray:
    """Matrix of the metric contraction lowering the grade by one.

    Removes each factor in turn with an alternating sign and a metric
    coefficient against slot i.
    """
    out = np.zeros((DIM, DIM), dtype=complex)
    for mask in CANONICAL_MASKS:
        idx = mask_indices(mask)
        for pos, j in enumerate(idx):
            coeff = ((-1) ** pos) * g[i, j]
            if coeff != 0:
                out[MASK_SLOT[mask & ~(1 << j)], MASK_SLOT[mask]] += coeff
    return out


def delta_ops(g: MetricTensor):
    """The four wedge operators and their four metric contractions.

    The metric may be degenerate here; contractions use the entries
    directly.
    """
    wedges = tuple(_wedge_op(i) for i in range(N_COORDS))
    contractions = tuple(_contract_op(i, g.entries) for i in range(N_COORDS))
    return wedges, contractions


def gamma_check_ops(g: MetricTensor):
    """Wedge-minus-contraction operators; their anticommutators close on
    -2 g as 16x16 matrices."""
    wedges, contractions = delta_ops(g)
    return tuple(w - c for w, c in zip(wedges, contractions))


def dirac_kahler_symbol(k, g: MetricTensor) -> np.ndarray:
    """First-order symbol ``sum_i k_i (wedge_i - contract_i)``.

    Squares to minus the metric square of k times the identity.
    """
    ops = gamma_check_ops(g)
    k = np.asarray(k)
    return sum(ki * op for ki, op in zip(k, ops))


def laplace_beltrami_symbol(k, g: MetricTensor) -> np.ndarray:
    """Symbol of the form Laplacian, assembled from the grade-shift pair.

    Equals minus the square of the first-order symbol and preserves grade.
    """
    wedges, contractions = delta_ops(g)
    k = np.asarray(k)
    d_sym = sum(ki * w for ki, w in zip(k, wedges))
    dstar_sym = sum(ki * c for ki, c in zip(k, contractions))
    return d_sym @ dstar_sym + dstar_sym @ d_sym


# ---------------------------------------------------------------------------
# codifferential on polynomial forms

def _require_unit_diagonal(g: MetricTensor):
    d = np.diag(g.entries)
    if not np.array_equal(g.entries, np.diag(d)) or any(v not in (-1.0, 1.0) for v in d):
        raise ValueError("this operation needs a constant diagonal +-1 metric")


def _apply_matrix_polyform(M: np.ndarray, omega: PolyForm) -> PolyForm:
    out = {}
    for mask, poly in omega.parts.items():
        col = MASK_SLOT[mask]
        for row in range(DIM):
            val = M[row, col]
            if val == 0:
                continue
            target = CANONICAL_MASKS[row]
            term = poly * val
            out[target] = out[target] + term if target in out else term
    return PolyForm(out)


def hodge_codifferential(omega: PolyForm, g: MetricTensor) -> PolyForm:
    """Grade-lowering derivative built as duality, exterior derivative,
    duality, with the dimension-four overall sign (-1).

    Agrees with the algebraic contraction route grade by grade up to the
    measured sign table; see ``codifferential_sign_table``.
    """
    _require_unit_diagonal(g)
    S = hodge_matrix(g)
    return _apply_matrix_polyform(S, exterior_d(_apply_matrix_polyform(S, omega))) * (-1)


def algebraic_codifferential(omega: PolyForm, g: MetricTensor) -> PolyForm:
    """Contraction route: ``sum_i contract_i (d omega / d x_i)``."""
    _, contractions = delta_ops(g)
    out = PolyForm()
    for i in range(N_COORDS):
        di = PolyForm({m: p.diff(i) for m, p in omega.parts.items() if p.diff(i)})
        if di:
            out = out + _apply_matrix_polyform(contractions[i], di)
    return out


def codifferential_sign_table(g: MetricTensor) -> tuple:
    """Measured per-grade sign relating the duality route to the
    contraction route on probe forms (None where both vanish)."""
    _require_unit_diagonal(g)
    signs = [None] * (N_COORDS + 1)
    for mask in CANONICAL_MASKS:
        grade = mask.bit_count()
        if grade == 0:
            continue
        i = mask_indices(mask)[0]
        probe = PolyForm({mask: Poly.coordinate(i)})
        via_hodge = hodge_codifferential(probe, g)
        via_algebra = algebraic_codifferential(probe, g)
        if via_hodge.is_zero() and via_algebra.is_zero():
            continue
        diff_plus = via_hodge - via_algebra
        diff_minus = via_hodge + via_algebra
        if diff_plus.is_zero():
            sign = 1
        elif diff_minus.is_zero():
            sign = -1
        else:
            raise ValueError("routes differ by more than a sign")
        if signs[grade] is None:
            signs[grade] = sign
        elif signs[grade] != sign:
            raise ValueError(f"sign not uniform on grade {grade}")
    return tuple(signs)
