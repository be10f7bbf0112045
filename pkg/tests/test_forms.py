"""Exterior calculus: alternation against the tensor route, duality
against hand signs for diagonal metrics, polynomial derivative against
sympy, and both codifferential routes."""

import numpy as np
import pytest
import sympy

from kahlerkit import forms as F
from kahlerkit._kernel import reorder_sign

EUC = F.euclidean_metric()
MINK = F.minkowski_metric()


def test_canonical_order():
    masks = F.CANONICAL_MASKS
    assert masks[0] == 0
    assert masks[1:5] == (1, 2, 4, 8)
    grade2 = [F.mask_indices(m) for m in masks[5:11]]
    assert grade2 == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert masks[15] == 15


# ---------------------------------------------------------------------------
# alternation and wedge

def test_alternate_examples():
    T = np.zeros((4, 4))
    T[0, 1] = 1.0  # e0 (x) e1
    out = F.alternate(T)
    want = np.zeros((4, 4))
    want[0, 1] = 0.5
    want[1, 0] = -0.5
    assert np.array_equal(out, want)
    sym = np.ones((4, 4))
    assert np.max(np.abs(F.alternate(sym))) == 0.0
    anti = T - T.T
    assert np.max(np.abs(F.alternate(anti) - anti)) < 1e-15
    with pytest.raises(ValueError):
        F.alternate(np.zeros((4,) * 5))


def test_form_tensor_round_trip():
    rng = np.random.default_rng(0)
    for grade in range(5):
        coeffs = {}
        for m in F.CANONICAL_MASKS:
            if m.bit_count() == grade:
                coeffs[m] = complex(rng.integers(-3, 4), rng.integers(-3, 4))
        form = F.NonhomogeneousForm.from_mask_coeffs(coeffs)
        T = F.tensor_of_form(form, grade)
        back = F.form_of_tensor(T)
        assert (back - form.grade_part(grade)).norm() < 1e-12


def test_wedge_matches_tensor_alternation():
    # mask arithmetic against the alternation of tensor products
    rng = np.random.default_rng(1)
    for _ in range(20):
        ga, gb = int(rng.integers(1, 3)), int(rng.integers(1, 3))
        fa = _random_homogeneous(rng, ga)
        fb = _random_homogeneous(rng, gb)
        via_masks = F.wedge(fa, fb).grade_part(ga + gb)
        Ta, Tb = F.tensor_of_form(fa, ga), F.tensor_of_form(fb, gb)
        via_tensors = F.form_of_tensor(F.alternate(np.tensordot(Ta, Tb, axes=0)))
        assert (via_masks - via_tensors).norm() < 1e-12


def _random_homogeneous(rng, grade):
    coeffs = {
        m: complex(rng.integers(-2, 3))
        for m in F.CANONICAL_MASKS
        if m.bit_count() == grade
    }
    return F.NonhomogeneousForm.from_mask_coeffs(coeffs)


def test_wedge_examples_and_graded_commutativity():
    dx = [F.NonhomogeneousForm.basis(1 << i) for i in range(4)]
    assert F.wedge(dx[0], dx[1]) == -F.wedge(dx[1], dx[0])
    assert F.wedge(dx[0], dx[0]).norm() == 0.0
    spread = F.wedge(dx[0] + dx[1], dx[2] + dx[3])
    want = F.NonhomogeneousForm.from_mask_coeffs(
        {0b0101: 1, 0b1001: 1, 0b0110: 1, 0b1010: 1}
    )
    assert spread == want
    rng = np.random.default_rng(2)
    for r in range(3):
        for s in range(3):
            fa, fb = _random_homogeneous(rng, r), _random_homogeneous(rng, s)
            assert (F.wedge(fa, fb) - (-1) ** (r * s) * F.wedge(fb, fa)).norm() == 0.0


# ---------------------------------------------------------------------------
# inner product and duality

def test_form_inner_examples():
    dx0 = F.NonhomogeneousForm.basis(1)
    assert F.form_inner(dx0, dx0, MINK) == 1.0
    f01 = F.NonhomogeneousForm.basis(0b11)
    assert F.form_inner(f01, f01, MINK) == -1.0
    f12 = F.NonhomogeneousForm.basis(0b110)
    assert F.form_inner(dx0, f12, MINK) == 0.0
    with pytest.raises(F.DegenerateMetricError):
        F.form_inner(dx0, dx0, F.MetricTensor(np.zeros((4, 4)), degenerate_allowed=True))


def test_hodge_star_diagonal_hand_signs():
    # independent route: for diagonal metrics the dual of a basis form is
    # the complementary form times the metric product and reordering sign
    for g, diag in ((EUC, (1, 1, 1, 1)), (MINK, (1, -1, -1, -1))):
        for mask in F.CANONICAL_MASKS:
            comp = 0b1111 ^ mask
            factor = 1.0
            for i in F.mask_indices(mask):
                factor *= diag[i]
            want = F.NonhomogeneousForm.from_mask_coeffs(
                {comp: factor * reorder_sign(mask, comp)}
            )
            got = F.hodge_star(F.NonhomogeneousForm.basis(mask), g)
            assert (got - want).norm() == 0.0


def test_hodge_pinned_example():
    got = F.hodge_star(F.NonhomogeneousForm.basis(0b0011), EUC)
    assert got == F.NonhomogeneousForm.basis(0b1100)


def test_hodge_defining_relation_all_pairs():
    volume = F.NonhomogeneousForm.basis(15)
    for g in (EUC, MINK):
        for ma in F.CANONICAL_MASKS:
            fa = F.NonhomogeneousForm.basis(ma)
            for mb in F.CANONICAL_MASKS:
                fb = F.NonhomogeneousForm.basis(mb)
                lhs = F.wedge(fa, F.hodge_star(fb, g))
                rhs = F.form_inner(fa, fb, g) * volume
                if ma.bit_count() == mb.bit_count():
                    assert (lhs - rhs).norm() == 0.0
                else:
                    assert (lhs.grade_part(4) - rhs).norm() == 0.0


def test_double_star_signs():
    euc = F.double_star_signs(EUC)
    assert tuple(int(s.real) for s in euc) == F.EUCLIDEAN_DOUBLE_STAR
    for p, s in enumerate(euc):
        assert s == (-1) ** (p * (4 - p))
    mink = F.double_star_signs(MINK)
    assert tuple(int(s.real) for s in mink) == F.MINKOWSKI_DOUBLE_STAR
    assert int(mink[2].real) == -1


def test_nondiagonal_hodge_defining_relation():
    rng = np.random.default_rng(3)
    for _ in range(10):
        g = rng.uniform(-2, 2, (4, 4))
        g = (g + g.T) / 2
        if abs(np.linalg.det(g)) < 0.05:
            continue
        metric = F.MetricTensor(g)
        volume = F.NonhomogeneousForm.basis(15)
        for ma in F.CANONICAL_MASKS[:8]:
            fa = F.NonhomogeneousForm.basis(ma)
            for mb in F.CANONICAL_MASKS:
                if ma.bit_count() != mb.bit_count():
                    continue
                fb = F.NonhomogeneousForm.basis(mb)
                lhs = F.wedge(fa, F.hodge_star(fb, metric))
                rhs = F.form_inner(fa, fb, metric) * volume
                assert (lhs - rhs).norm() < 1e-12


# ---------------------------------------------------------------------------
# polynomial forms

def test_poly_diff_against_sympy():
    rng = np.random.default_rng(4)
    xs = sympy.symbols("x0 x1 x2 x3")
    for _ in range(10):
        terms = {}
        for _ in range(5):
            exps = tuple(int(e) for e in rng.integers(0, 3, 4))
            terms[exps] = terms.get(exps, 0) + int(rng.integers(-5, 6))
        poly = F.Poly(terms)
        expr = sum(
            c * sympy.prod(x**e for x, e in zip(xs, exps))
            for exps, c in poly.terms.items()
        )
        for i in range(4):
            want = sympy.Poly(sympy.diff(expr, xs[i]), *xs).as_dict()
            got = {e: c for e, c in poly.diff(i).terms.items()}
            want_c = {tuple(k): complex(v) for k, v in want.items()}
            assert got == want_c


def test_exterior_d_examples():
    x0 = F.Poly.coordinate(0)
    d = F.exterior_d(F.PolyForm({0: x0}))
    assert d == F.PolyForm({1: F.Poly.constant(1.0)})
    d2 = F.exterior_d(F.PolyForm({0b10: x0}))
    assert d2 == F.PolyForm({0b11: F.Poly.constant(1.0)})
    x1 = F.Poly.coordinate(1)
    dd = F.exterior_d(F.exterior_d(F.PolyForm({0b100: x0 * x1})))
    assert dd.is_zero()


def test_exterior_d_nilpotent_on_random_integer_forms():
    rng = np.random.default_rng(5)
    for _ in range(50):
        parts = {}
        for _ in range(5):
            mask = int(rng.integers(0, 16))
            exps = tuple(int(e) for e in rng.integers(0, 4, 4))
            if sum(exps) > 3:
                continue
            poly = F.Poly({exps: complex(int(rng.integers(-9, 10)))})
            parts[mask] = parts[mask] + poly if mask in parts else poly
        omega = F.PolyForm(parts)
        assert F.exterior_d(F.exterior_d(omega)).is_zero()


def _polyform_wedge(a: F.PolyForm, b: F.PolyForm) -> F.PolyForm:
    out = {}
    for ma, pa in a.parts.items():
        for mb, pb in b.parts.items():
            if ma & mb:
                continue
            m = ma ^ mb
            term = pa * pb * reorder_sign(ma, mb)
            out[m] = out[m] + term if m in out else term
    return F.PolyForm(out)


def test_leibniz_rule():
    rng = np.random.default_rng(6)
    for r in range(3):
        parts_a = {}
        for m in F.CANONICAL_MASKS:
            if m.bit_count() == r:
                exps = tuple(int(e) for e in rng.integers(0, 2, 4))
                parts_a[m] = F.Poly({exps: complex(int(rng.integers(-3, 4)))})
        omega = F.PolyForm(parts_a)
        theta = F.PolyForm(
            {1 << int(rng.integers(0, 4)): F.Poly.coordinate(int(rng.integers(0, 4)))}
        )
        lhs = F.exterior_d(_polyform_wedge(omega, theta))
        rhs = _polyform_wedge(F.exterior_d(omega), theta) + (
            _polyform_wedge(omega, F.exterior_d(theta)) * ((-1) ** r)
        )
        assert lhs == rhs


# ---------------------------------------------------------------------------
# grade-shift operators

def test_delta_ops_examples():
    wedges, contractions = F.delta_ops(MINK)
    scalar = np.zeros(16, dtype=complex)
    scalar[0] = 1.0
    image = wedges[0] @ scalar
    assert image[F.MASK_SLOT[1]] == 1.0 and np.count_nonzero(image) == 1
    dx0 = np.zeros(16, dtype=complex)
    dx0[F.MASK_SLOT[1]] = 1.0
    back = contractions[0] @ dx0
    assert back[0] == 1.0 and np.count_nonzero(back) == 1
    for i in range(4):
        assert np.count_nonzero(contractions[i] @ scalar) == 0


def test_gamma_check_ops_metric_closure():
    rng = np.random.default_rng(7)
    for _ in range(100):
        g = rng.uniform(-2, 2, (4, 4))
        g = (g + g.T) / 2
        metric = F.MetricTensor(g, degenerate_allowed=True)
        ops = F.gamma_check_ops(metric)
        for i in range(4):
            for j in range(4):
                acom = ops[i] @ ops[j] + ops[j] @ ops[i]
                assert np.max(np.abs(acom + 2 * g[i, j] * np.eye(16))) < 1e-10


def test_gamma_check_degenerate_and_offdiagonal():
    zero = F.MetricTensor(np.zeros((4, 4)), degenerate_allowed=True)
    wedges, _ = F.delta_ops(zero)
    ops = F.gamma_check_ops(zero)
    for i in range(4):
        assert np.array_equal(ops[i], wedges[i])
        assert np.max(np.abs(ops[i] @ ops[i])) == 0.0
    g = np.zeros((4, 4))
    g[0, 1] = g[1, 0] = 0.5
    ops = F.gamma_check_ops(F.MetricTensor(g, degenerate_allowed=True))
    acom = ops[0] @ ops[1] + ops[1] @ ops[0]
    assert np.max(np.abs(acom + np.eye(16))) == 0.0


def test_symbol_identities():
    mink_k = np.array([1.0, 0, 0, 0])
    D = F.dirac_kahler_symbol(mink_k, MINK)
    assert np.max(np.abs(D @ D + np.eye(16))) == 0.0
    lap = F.laplace_beltrami_symbol(mink_k, MINK)
    assert np.array_equal(lap, np.eye(16))
    rng = np.random.default_rng(8)
    for _ in range(50):
        g = rng.uniform(-2, 2, (4, 4))
        g = (g + g.T) / 2
        metric = F.MetricTensor(g, degenerate_allowed=True)
        k = rng.uniform(-2, 2, 4)
        D = F.dirac_kahler_symbol(k, metric)
        kk = float(k @ g @ k)
        assert np.max(np.abs(D @ D + kk * np.eye(16))) < 1e-10
        lap = F.laplace_beltrami_symbol(k, metric)
        assert np.max(np.abs(lap + D @ D)) < 1e-10
        for ka in range(5):
            for kb in range(5):
                if ka == kb:
                    continue
                block = lap[np.ix_(F.GRADE_SLOTS[ka], F.GRADE_SLOTS[kb])]
                assert np.max(np.abs(block)) < 1e-12
    null_k = np.array([1.0, 1.0, 0.0, 0.0])
    Dn = F.dirac_kahler_symbol(null_k, MINK)
    assert np.max(np.abs(Dn @ Dn)) < 1e-14
    zero = F.MetricTensor(np.zeros((4, 4)), degenerate_allowed=True)
    assert np.max(np.abs(F.laplace_beltrami_symbol(null_k, zero))) == 0.0


# ---------------------------------------------------------------------------
# codifferential

def test_codifferential_examples():
    x0 = F.Poly.coordinate(0)
    assert F.hodge_codifferential(F.PolyForm({0: F.Poly.constant(2.0)}), EUC).is_zero()
    via_hodge = F.hodge_codifferential(F.PolyForm({1: x0}), EUC)
    assert via_hodge == F.PolyForm({0: F.Poly.constant(-1.0)})
    via_algebra = F.algebraic_codifferential(F.PolyForm({1: x0}), EUC)
    assert via_algebra == F.PolyForm({0: F.Poly.constant(1.0)})
    with pytest.raises(ValueError):
        F.hodge_codifferential(F.PolyForm({1: x0}), F.MetricTensor(np.diag([2.0, 1, 1, 1])))


def test_codifferential_sign_tables_stable():
    assert F.codifferential_sign_table(EUC) == (None, -1, -1, -1, -1)
    assert F.codifferential_sign_table(MINK) == (None, 1, 1, 1, 1)


def test_laplacian_on_quadratic():
    x0 = F.Poly.coordinate(0)
    omega = F.PolyForm({0: x0 * x0})
    d_omega = F.exterior_d(omega)
    via_algebra = F.algebraic_codifferential(d_omega, EUC)
    assert via_algebra == F.PolyForm({0: F.Poly.constant(2.0)})
    via_hodge = F.hodge_codifferential(d_omega, EUC)
    assert via_hodge == F.PolyForm({0: F.Poly.constant(-2.0)})
