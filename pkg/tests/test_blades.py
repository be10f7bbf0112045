"""Blade algebra: pinned examples, algebraic laws, and a matrix oracle.

The independent oracle represents generators by Pauli tensor matrices
(scaled by i where a generator squares to -1) and compares multivector
products against literal matrix products.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kahlerkit import blades as B
from kahlerkit import matrices as M

MINK = B.MINKOWSKI
e = B.Multivector.basis_vector


# ---------------------------------------------------------------------------
# matrix-representation oracle

def _generator_matrices(diag):
    """Matrices g_k with g_k^2 = diag[k] and pairwise anticommutation."""
    n = len(diag)
    m = (n + 1) // 2
    base = M.euclid_generators(m, odd_extra=bool(n % 2)).mats
    return [base[k] * (1j if diag[k] == -1 else 1.0) for k in range(n)]


def _to_matrix(mv, gens):
    dim = gens[0].shape[0]
    out = np.zeros((dim, dim), dtype=complex)
    for mask, c in mv.items():
        prod = np.eye(dim, dtype=complex)
        for i in range(len(gens)):
            if mask >> i & 1:
                prod = prod @ gens[i]
        out += c * prod
    return out


@pytest.mark.parametrize("seed", range(8))
def test_geometric_product_matches_matrix_oracle(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 7))
    diag = tuple(int(d) for d in rng.choice([-1, 1], n))
    sig = B.Signature(diag)
    gens = _generator_matrices(diag)
    for _ in range(20):
        a = _random_mv(rng, n)
        b = _random_mv(rng, n)
        prod = B.geometric_product(a, b, sig)
        lhs = _to_matrix(prod, gens)
        rhs = _to_matrix(a, gens) @ _to_matrix(b, gens)
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def _random_mv(rng, n, terms=4):
    out = {}
    for _ in range(terms):
        mask = int(rng.integers(0, 1 << n))
        out[mask] = out.get(mask, 0) + complex(
            int(rng.integers(-3, 4)), int(rng.integers(-3, 4))
        )
    return B.Multivector(out)


# ---------------------------------------------------------------------------
# pinned examples

def test_minkowski_time_generator_squares_to_one():
    assert B.geometric_product(e(0), e(0), MINK) == B.Multivector.scalar(1)


def test_anticommuting_generators():
    e12 = B.geometric_product(e(1), e(2), MINK)
    e21 = B.geometric_product(e(2), e(1), MINK)
    assert e12 == B.Multivector({0b110: 1})
    assert e21 == -e12


def test_mixed_product_example():
    out = B.geometric_product(e(1) + e(2), e(2), MINK)
    assert out == B.Multivector({0: -1, 0b110: 1})
    assert B.grade_project(out, 0) == B.Multivector.scalar(-1)


def test_wedge_examples():
    assert not B.wedge_product(e(1), e(1))
    assert B.wedge_product(e(1), e(2)) == B.Multivector({0b110: 1})
    assert B.wedge_product(e(1) + e(2), e(2)) == B.Multivector({0b110: 1})


def test_grade_projection_examples():
    mv = B.Multivector({0: 1, 0b10: 1, 0b110: 1})
    assert B.grade_project(mv, 1) == B.Multivector({0b10: 1})
    assert B.grade_project(B.Multivector.scalar(3), 0) == B.Multivector.scalar(3)
    with pytest.raises(B.BladeError):
        B.grade_project(mv, 9)


def test_involution_examples():
    assert B.involute(e(1), "clifford_conjugation") == -e(1)
    e12 = B.Multivector({0b110: 1})
    assert B.involute(e12, "reversion") == -e12
    e123 = B.Multivector({0b1110: 1})
    assert B.involute(e123, "grade_involution") == -e123
    with pytest.raises(ValueError):
        B.involute(e12, "transpose")


def test_clifford_conjugation_is_composition():
    rng = np.random.default_rng(3)
    for _ in range(20):
        n = int(rng.integers(1, 7))
        a = _random_mv(rng, n, terms=6)
        both = B.involute(B.involute(a, "grade_involution"), "reversion")
        assert B.involute(a, "clifford_conjugation") == both


def test_blade_index_out_of_signature():
    sig = B.Signature((1, -1))
    with pytest.raises(B.BladeError):
        B.geometric_product(e(3), e(0), sig)


# ---------------------------------------------------------------------------
# reflections

def test_reflection_pinned_cases():
    sig = B.EUCLIDEAN4
    assert B.reflect(e(1), e(1), sig) == -e(1)
    assert B.reflect(e(1), e(2), sig) == e(2)
    v = e(1) + e(2)
    assert B.reflect(v, e(1), sig) == -e(2)


def test_reflection_null_vector_rejected():
    v = e(0) + e(1)  # null for the Lorentz signature
    with pytest.raises(B.NullVectorError):
        B.reflect(v, e(2), MINK)


def test_reflection_matches_components_and_involutes():
    rng = np.random.default_rng(11)
    for _ in range(100):
        n = int(rng.integers(2, 7))
        diag = tuple(int(d) for d in rng.choice([-1, 1], n))
        sig = B.Signature(diag)
        while True:
            v = rng.uniform(-1, 1, n)
            if abs(sum(x * x * d for x, d in zip(v, diag))) > 0.1:
                break
        x = rng.uniform(-1, 1, n)
        got = B.reflect(B.Multivector.from_vector(v), B.Multivector.from_vector(x), sig)
        want = B.Multivector.from_vector(B.reflect_components(v, x, sig))
        assert (got - want).norm() < 1e-12
        again = B.reflect(B.Multivector.from_vector(v), got, sig)
        assert (again - B.Multivector.from_vector(x)).norm() < 1e-12


# ---------------------------------------------------------------------------
# laws via hypothesis

_small_mv = st.dictionaries(
    st.integers(0, 15),
    st.complex_numbers(
        min_magnitude=0, max_magnitude=3, allow_nan=False, allow_infinity=False
    ).map(lambda z: complex(round(z.real), round(z.imag))),
    max_size=4,
)
_sig4 = st.tuples(*[st.sampled_from([-1, 0, 1])] * 4).map(B.Signature)


@settings(max_examples=80, deadline=None)
@given(_small_mv, _small_mv, _small_mv, _sig4)
def test_associativity_and_distributivity(da, db, dc, sig):
    a, b, c = B.Multivector(da), B.Multivector(db), B.Multivector(dc)
    left = B.geometric_product(B.geometric_product(a, b, sig), c, sig)
    right = B.geometric_product(a, B.geometric_product(b, c, sig), sig)
    assert left == right
    spread = B.geometric_product(a, b + c, sig)
    parts = B.geometric_product(a, b, sig) + B.geometric_product(a, c, sig)
    assert spread == parts


@settings(max_examples=60, deadline=None)
@given(_small_mv, _small_mv, _sig4)
def test_reversion_antihomomorphism(da, db, sig):
    a, b = B.Multivector(da), B.Multivector(db)
    lhs = B.involute(B.geometric_product(a, b, sig), "reversion")
    rhs = B.geometric_product(
        B.involute(b, "reversion"), B.involute(a, "reversion"), sig
    )
    assert lhs == rhs


# ---------------------------------------------------------------------------
# spin lifts

def test_spin_lift_identity():
    h, parity = B.spin_lift(np.eye(4), MINK)
    assert parity == "even"
    assert h == B.Multivector.scalar(1)


def test_spin_lift_rotation_closed_form():
    phi = 0.8
    A = np.eye(4)
    A[1, 1] = A[2, 2] = math.cos(phi)
    A[1, 2] = math.sin(phi)
    A[2, 1] = -math.sin(phi)
    h, parity = B.spin_lift(A, MINK)
    assert parity == "even"
    expected = B.Multivector({0: math.cos(phi / 2), 0b110: -math.sin(phi / 2)})
    assert min((h - expected).norm(), (h + expected).norm()) < 1e-12
    assert B.versor_residual(h, A, MINK) < 1e-12


def test_spin_lift_boost_closed_form():
    v = 1.1
    A = np.eye(4)
    A[0, 0] = A[1, 1] = math.cosh(v)
    A[0, 1] = A[1, 0] = math.sinh(v)
    h, parity = B.spin_lift(A, MINK)
    assert parity == "even"
    expected = B.Multivector({0: math.cosh(v / 2), 0b11: -math.sinh(v / 2)})
    assert min((h - expected).norm(), (h + expected).norm()) < 1e-12


def test_spin_lift_improper_isometry():
    T = np.diag([-1.0, 1.0, 1.0, 1.0])
    h, parity = B.spin_lift(T, MINK)
    assert parity == "odd"
    assert B.versor_residual(h, T, MINK) < 1e-12


def test_spin_lift_rejects_non_isometry():
    shear = np.eye(4)
    shear[1, 2] = 1.0
    with pytest.raises(B.LiftError):
        B.spin_lift(shear, MINK)


def test_spin_lift_so33_signature():
    # six-generator split signature exercises the null-pivot fallback paths
    sig = B.Signature((1, 1, 1, -1, -1, -1))
    rng = np.random.default_rng(5)
    for _ in range(5):
        A = np.eye(6)
        for _ in range(3):
            i, j = rng.choice(6, 2, replace=False)
            g = np.diag(sig.diag)
            plane = np.eye(6)
            if g[i, i] * g[j, j] > 0:
                c, s = math.cos(0.7), math.sin(0.7)
                plane[i, i] = plane[j, j] = c
                plane[i, j] = -s
                plane[j, i] = s
            else:
                c, s = math.cosh(0.6), math.sinh(0.6)
                plane[i, i] = plane[j, j] = c
                plane[i, j] = plane[j, i] = s
            A = A @ plane
        h, parity = B.spin_lift(A, sig)
        assert parity == "even"
        assert B.versor_residual(h, A, sig) < 1e-9


# ---------------------------------------------------------------------------
# metric transform

def test_metric_transform_examples():
    g = np.diag([1.0, -1.0, -1.0, -1.0])
    assert np.array_equal(B.metric_transform(np.eye(4), g), g)
    A = np.diag([2.0, 1.0, 1.0, 1.0])
    assert np.array_equal(B.metric_transform(A, g), np.diag([4.0, -1.0, -1.0, -1.0]))
    v = 0.9
    boost = np.eye(4)
    boost[0, 0] = boost[1, 1] = math.cosh(v)
    boost[0, 1] = boost[1, 0] = math.sinh(v)
    assert np.max(np.abs(B.metric_transform(boost, g) - g)) < 1e-12
    with pytest.raises(ValueError):
        B.metric_transform(np.eye(3), g)
