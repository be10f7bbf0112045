"""Exact Clifford and Grassmann algebra over basis blades.

A ``Signature`` fixes n generators (n <= 6) with a diagonal quadratic
form: ``diag[k]`` is literally the square of generator k, each entry one
of +1, -1, 0 (all zero gives the Grassmann algebra).  A ``Multivector``
is a sparse map from basis blades (bitmasks) to complex coefficients.
Products reduce to sign bookkeeping, so integer inputs stay exact.

Conventions: for grade-1 elements v, w the product satisfies
``v w + w v = 2 b(v, w)`` with ``b(v, w) = sum_k v_k w_k diag[k]``.
Callers wanting the opposite metric-sign tradition negate ``diag``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from kahlerkit._kernel import blade_product, mul_terms, reorder_sign

__all__ = [
    "Signature",
    "Blade",
    "Multivector",
    "BladeError",
    "NullVectorError",
    "LiftError",
    "geometric_product",
    "wedge_product",
    "grade_project",
    "involute",
    "reflect",
    "reflect_components",
    "spin_lift",
    "versor_residual",
    "metric_transform",
]

MAX_GENERATORS = 6


class BladeError(ValueError):
    """Blade index outside the signature, or malformed input."""


class NullVectorError(ValueError):
    """Reflection through a vector with vanishing square."""


class LiftError(RuntimeError):
    """No conjugation element found for the requested isometry."""


@dataclass(frozen=True)
class Signature:
    """Diagonal signature: ``diag[k]`` is the square of generator k."""

    diag: tuple

    def __post_init__(self):
        diag = tuple(int(d) for d in self.diag)
        if not 1 <= len(diag) <= MAX_GENERATORS:
            raise BladeError(f"need 1..{MAX_GENERATORS} generators, got {len(diag)}")
        if any(d not in (-1, 0, 1) for d in diag):
            raise BladeError("signature entries must be -1, 0 or +1")
        object.__setattr__(self, "diag", diag)

    @property
    def n(self) -> int:
        return len(self.diag)

    @property
    def is_degenerate(self) -> bool:
        return any(d == 0 for d in self.diag)

    def matrix(self) -> np.ndarray:
        """The bilinear form b as a diagonal matrix."""
        return np.diag(np.asarray(self.diag, dtype=float))


MINKOWSKI = Signature((1, -1, -1, -1))
EUCLIDEAN4 = Signature((1, 1, 1, 1))
GRASSMANN4 = Signature((0, 0, 0, 0))


@dataclass(frozen=True)
class Blade:
    """Basis blade: ascending product of distinct generators, as a bitmask."""

    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << MAX_GENERATORS):
            raise BladeError(f"mask {self.mask} out of range")

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Blade":
        mask = 0
        for i in indices:
            bit = 1 << i
            if mask & bit:
                raise BladeError(f"repeated index {i}")
            mask |= bit
        return cls(mask)

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def indices(self) -> tuple:
        return tuple(i for i in range(MAX_GENERATORS) if self.mask >> i & 1)

    def __repr__(self):
        if not self.mask:
            return "Blade(1)"
        return "Blade(" + "".join(f"e{i}" for i in self.indices) + ")"


def _as_terms(obj) -> dict:
    if isinstance(obj, Multivector):
        return obj._terms
    if isinstance(obj, (int, float, complex)):
        return {0: complex(obj)} if obj != 0 else {}
    raise TypeError(f"cannot interpret {type(obj).__name__} as a multivector")


class Multivector:
    """Sparse complex element of the blade algebra.  Immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping = ()):
        clean = {}
        for key, value in dict(terms).items():
            mask = key.mask if isinstance(key, Blade) else int(key)
            if not 0 <= mask < (1 << MAX_GENERATORS):
                raise BladeError(f"mask {mask} out of range")
            c = complex(value)
            if c != 0:
                clean[mask] = clean.get(mask, 0j) + c
        self._terms = {m: c for m, c in clean.items() if c != 0}

    @classmethod
    def scalar(cls, value) -> "Multivector":
        return cls({0: value})

    @classmethod
    def basis_vector(cls, i: int) -> "Multivector":
        return cls({1 << i: 1.0})

    @classmethod
    def from_vector(cls, components) -> "Multivector":
        """Embed a coordinate vector as a grade-1 element."""
        return cls({1 << i: c for i, c in enumerate(components)})

    def terms(self) -> dict:
        """Blade-mask to coefficient map (a copy)."""
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, blade) -> complex:
        mask = blade.mask if isinstance(blade, Blade) else int(blade)
        return self._terms.get(mask, 0j)

    def grades(self) -> set:
        return {m.bit_count() for m in self._terms}

    def max_index(self) -> int:
        top = 0
        for m in self._terms:
            top |= m
        return top.bit_length()

    def vector_components(self, n: int) -> np.ndarray:
        """Grade-1 coordinates; raises unless the element is pure grade 1."""
        if self._terms and self.grades() != {1}:
            raise BladeError("not a grade-1 element")
        return np.array([self._terms.get(1 << i, 0j) for i in range(n)])

    def norm(self) -> float:
        """Coefficient 2-norm (basis-dependent bookkeeping norm)."""
        return math.sqrt(sum(abs(c) ** 2 for c in self._terms.values()))

    def __add__(self, other):
        out = dict(self._terms)
        for m, c in _as_terms(other).items():
            out[m] = out.get(m, 0j) + c
        return Multivector(out)

    __radd__ = __add__

    def __sub__(self, other):
        out = dict(self._terms)
        for m, c in _as_terms(other).items():
            out[m] = out.get(m, 0j) - c
        return Multivector(out)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Multivector({m: -c for m, c in self._terms.items()})

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, float, complex)):
            return NotImplemented
        return Multivector({m: c * scalar for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, float, complex)):
            other = Multivector.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "Multivector(0)"
        parts = []
        for m, c in self.items():
            label = "".join(f"e{i}" for i in range(MAX_GENERATORS) if m >> i & 1) or "1"
            parts.append(f"{c:g}*{label}" if label != "1" else f"{c:g}")
        return "Multivector(" + " + ".join(parts) + ")"


def _check_fits(a: Multivector, sig: Signature):
    if a.max_index() > sig.n:
        raise BladeError(
            f"blade uses generator index >= n={sig.n}: {a!r}"
        )


def geometric_product(a: Multivector, b: Multivector, sig: Signature) -> Multivector:
    """Clifford product; generators anticommute and square to ``diag[k]``."""
    _check_fits(a, sig)
    _check_fits(b, sig)
    out = mul_terms(a.items(), b.items(), sig.diag)
    return Multivector(out)


def wedge_product(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product: the all-zero-signature Clifford product."""
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if ma & mb:
                continue
            m = ma ^ mb
            out[m] = out.get(m, 0j) + reorder_sign(ma, mb) * ca * cb
    return Multivector(out)


def grade_project(a: Multivector, k: int) -> Multivector:
    if not 0 <= k <= MAX_GENERATORS:
        raise BladeError(f"grade {k} out of range")
    return Multivector({m: c for m, c in a._terms.items() if m.bit_count() == k})


_INVOLUTION_SIGNS = {
    "grade_involution": lambda k: -1 if k % 2 else 1,
    "reversion": lambda k: -1 if (k * (k - 1) // 2) % 2 else 1,
    "clifford_conjugation": lambda k: -1 if (k * (k + 1) // 2) % 2 else 1,
}


def involute(a: Multivector, kind: str) -> Multivector:
    """Grade involution, reversion, or their composition."""
    try:
        sign = _INVOLUTION_SIGNS[kind]
    except KeyError:
        raise ValueError(f"unknown involution {kind!r}") from None
    return Multivector({m: sign(m.bit_count()) * c for m, c in a._terms.items()})


def _bilinear(u, v, sig: Signature):
    return sum(ui * vi * d for ui, vi, d in zip(u, v, sig.diag))


def reflect_components(v, x, sig: Signature):
    """Reflection of x through the hyperplane orthogonal to v, componentwise.

    ``x - 2 b(x,v)/b(v,v) v``; the b-ratio is insensitive to negating diag,
    so one formula covers both metric-sign traditions.
    """
    v = np.asarray(v)
    x = np.asarray(x)
    bvv = _bilinear(v, v, sig)
    if bvv == 0:
        raise NullVectorError("reflection vector has zero square")
    return x - (2 * _bilinear(x, v, sig) / bvv) * v


def reflect(v: Multivector, x: Multivector, sig: Signature) -> Multivector:
    """Reflection as a Clifford sandwich.

    For this encoding the sandwich ``v x v^-1`` is minus the componentwise
    reflection for every diagonal signature, so the sign is fixed here
    rather than per convention.
    """
    if v.grades() not in ({1}, set()):
        raise BladeError("reflection vector must be grade 1")
    vv = geometric_product(v, v, sig)
    bvv = vv.coeff(0)
    if vv != Multivector.scalar(bvv) or bvv == 0:
        raise NullVectorError("reflection vector must be grade 1 with v*v != 0")
    v_inv = v * (1.0 / bvv)
    sandwich = geometric_product(geometric_product(v, x, sig), v_inv, sig)
    return -sandwich


def metric_transform(A, g) -> np.ndarray:
    """Metric after a change of generators: ``A g A^T``."""
    A = np.asarray(A, dtype=float)
    g = np.asarray(g, dtype=float)
    if A.shape[0] != A.shape[1] or A.shape != g.shape:
        raise ValueError(f"dimension mismatch: A {A.shape}, g {g.shape}")
    return A @ g @ A.T


def _reflection_matrix(v: np.ndarray, sig: Signature) -> np.ndarray:
    n = sig.n
    R = np.empty((n, n))
    for k in range(n):
        R[:, k] = reflect_components(v, np.eye(n)[k], sig)
    return R


def _peel_reflections(work: np.ndarray, remaining: list, sig: Signature, tol: float):
    """Cartan-Dieudonne peeling with null-pivot fallback and pivot permutation.

    Returns the reflection vectors in application order, or None.
    """
    if not remaining:
        return []
    n = sig.n
    for pos, k in enumerate(remaining):
        x = np.eye(n)[k]
        y = work[:, k]
        candidates = []
        if np.allclose(y, x, atol=tol):
            candidates.append([])
        diff = y - x
        if abs(_bilinear(diff, diff, sig)) > tol:
            candidates.append([diff])
        summ = y + x
        if abs(_bilinear(summ, summ, sig)) > tol:
            # two reflections: through y+x onto -x, then through x onto x
            candidates.append([summ, x])
        rest = remaining[:pos] + remaining[pos + 1:]
        for seq in candidates:
            new_work = work
            for vec in seq:
                new_work = _reflection_matrix(vec, sig) @ new_work
            tail = _peel_reflections(new_work, rest, sig, tol)
            if tail is not None:
                return seq + tail
    return None


def spin_lift(A, sig: Signature, tol: float = 1e-9):
    """Clifford element implementing an isometry by conjugation.

    Returns ``(h, parity)`` with ``h e_k h^-1 = iota(A e_k)`` for every
    generator and parity "even" iff det A = +1.  ``-h`` is equally valid.
    Improper isometries are absorbed with the pseudoscalar, which only
    works in even dimension.
    """
    if sig.is_degenerate:
        raise LiftError("spin lift needs a nondegenerate signature")
    A = np.asarray(A, dtype=float)
    n = sig.n
    if A.shape != (n, n):
        raise ValueError(f"expected {n}x{n} matrix, got {A.shape}")
    g = sig.matrix()
    defect = float(np.max(np.abs(A @ g @ A.T - g)))
    if defect > tol:
        raise LiftError(f"input is not an isometry (defect {defect:.3e})")

    seq = _peel_reflections(A.copy(), list(range(n)), sig, tol)
    if seq is None:
        raise LiftError("no reflection decomposition found")
    residual_to_identity = A.copy()
    for vec in seq:
        residual_to_identity = _reflection_matrix(vec, sig) @ residual_to_identity
    if not np.allclose(residual_to_identity, np.eye(n), atol=1e3 * tol):
        raise LiftError("reflection peeling did not reach the identity")

    h = Multivector.scalar(1.0)
    for vec in seq:
        scale = math.sqrt(abs(_bilinear(vec, vec, sig).real))
        h = geometric_product(h, Multivector.from_vector(vec / scale), sig)

    parity = "even" if len(seq) % 2 == 0 else "odd"
    if parity == "odd":
        if n % 2:
            raise LiftError("improper isometry has no conjugation lift in odd dimension")
        h = geometric_product(Multivector({(1 << n) - 1: 1.0}), h, sig)

    # determinism: make the dominant coefficient real positive
    lead = max(h.items(), key=lambda mc: (abs(mc[1]), -mc[0]))
    if lead[1].real < 0:
        h = -h
    return h, parity


def versor_residual(h: Multivector, A, sig: Signature) -> float:
    """Max deviation of ``h e_k h^-1`` from the embedded column ``A e_k``."""
    A = np.asarray(A, dtype=float)
    hh = geometric_product(h, involute(h, "reversion"), sig)
    h_norm2 = hh.coeff(0)
    dust = (hh - Multivector.scalar(h_norm2)).norm()
    if h_norm2 == 0 or dust > 1e-6 * abs(h_norm2):
        raise LiftError("versor is not invertible via reversion")
    h_inv = involute(h, "reversion") * (1.0 / h_norm2)
    worst = 0.0
    for k in range(sig.n):
        image = geometric_product(
            geometric_product(h, Multivector.basis_vector(k), sig), h_inv, sig
        )
        target = Multivector.from_vector(A[:, k])
        worst = max(worst, (image - target).norm())
    return worst
