"""Schwarzschild charts: pinned components, pullback chains, quadrature
against closed forms, and light-cone slopes."""

import math

import numpy as np
import pytest

from kahlerkit import charts as CH


def _points(radii, theta=1.1):
    return [(0.3, float(r), theta, 0.4) for r in radii]


RADII = CH.log_spaced(1.01, 1e3, 100)


def test_polar_components_pinned():
    g = CH.metric_polar(2.0)
    assert g[0, 0] == 0.5
    assert g[1, 1] == -2.0
    g = CH.metric_polar(1e3, theta=math.pi / 2)
    assert abs(g[0, 0] - 1.0) <= 1e-3  # the deviation is exactly 1/r
    assert g[2, 2] == -1e6
    for bad in (0.0, 1.0, -2.0):
        with pytest.raises(CH.ChartDomainError):
            CH.metric_polar(bad)


def test_tortoise():
    assert CH.tortoise(2.0) == 2.0
    r = 3.5
    step = 1e-6
    fd = (CH.tortoise(r + step) - CH.tortoise(r - step)) / (2 * step)
    assert abs(fd - r / (r - 1.0)) < 1e-6
    with pytest.raises(CH.ChartDomainError):
        CH.tortoise(1.0)


def test_ef_chart_pinned_and_pullback():
    ef, transform = CH.ef_chart()
    g = ef.components((0.0, 1.0, math.pi / 2, 0.0))
    assert g[0, 0] == 0.0  # horizon regular, vanishing vv component
    assert g[0, 1] == -1.0
    residual = CH.pullback_check(CH.polar_chart(), ef, transform, _points(RADII))
    assert residual < 1e-9


def test_mixed_chart_pinned_and_pullback():
    mixed = CH.mixed_chart()
    g = mixed.components((0.0, 1.0, math.pi / 2, 0.0))
    assert g[0, 0] == 0.0 and g[0, 1] == 1.0
    g = mixed.components((0.0, 0.5, math.pi / 2, 0.0))
    assert g[0, 0] == -1.0 and g[0, 1] == 0.0
    residual = CH.pullback_check(
        CH.polar_chart(), mixed, CH.polar_to_mixed(), _points(RADII)
    )
    assert residual < 1e-9
    with pytest.raises(CH.ChartDomainError):
        mixed.at((0.0, 0.4, 1.0, 0.0))


def test_tau_R_derivatives_and_linearity():
    for r in (1.5, 3.0, 5.0, 50.0):
        u = math.sqrt(2 * r - 1)
        step = 1e-6
        tau_hi, R_hi = CH.tau_R(0.0, r + step)
        tau_lo, R_lo = CH.tau_R(0.0, r - step)
        assert abs((tau_hi - tau_lo) / (2 * step) + u / (r - 1.0)) < 1e-6
        assert abs((R_hi - R_lo) / (2 * step) - r * r / ((r - 1.0) * u)) < 1e-6
    # pinned values at r = 3: u = sqrt(5)
    step = 1e-6
    tau_hi, R_hi = CH.tau_R(0.0, 3.0 + step)
    tau_lo, R_lo = CH.tau_R(0.0, 3.0 - step)
    assert abs((tau_hi - tau_lo) / (2 * step) + math.sqrt(5) / 2) < 1e-6
    assert abs((R_hi - R_lo) / (2 * step) - 9 / (2 * math.sqrt(5))) < 1e-6
    tau1, _ = CH.tau_R(1.0, 3.0)
    tau0, _ = CH.tau_R(0.0, 3.0)
    assert tau1 - tau0 == 1.0
    with pytest.raises(CH.ChartDomainError):
        CH.tau_R(0.0, 1.0)


def test_theta_and_rotated_frame():
    assert CH.theta_of_r(0.5) == math.pi / 2
    assert CH.theta_of_r(1e6) < 1e-3
    rng = np.random.default_rng(0)
    for r in 0.5 + 10 ** rng.uniform(-2, 3, 50):
        ang = CH.theta_of_r(float(r))
        assert abs(math.sin(ang) ** 2 + math.cos(ang) ** 2 - 1.0) < 1e-15
        assert abs(math.sin(ang) - 1.0 / math.sqrt(2 * r)) < 1e-12
        assert CH.rotated_frame_check(float(r)) < 1e-12
    with pytest.raises(CH.ChartDomainError):
        CH.theta_of_r(0.3)


def test_family_transform_against_closed_forms():
    want = CH.tortoise(3.0) - CH.tortoise(2.0)
    tau_off, R_off = CH.family_transform(CH.UNIT_F, 2.0, 3.0)
    assert abs(tau_off - want) < 1e-9
    assert abs(R_off - want) < 1e-9
    assert want == pytest.approx(1.0 + math.log(2.0))
    tau3, R3 = CH.tau_R(0.0, 3.0)
    tau2, R2 = CH.tau_R(0.0, 2.0)
    tau_off, R_off = CH.family_transform(CH.MIXED_F, 2.0, 3.0)
    assert abs(tau_off - (tau2 - tau3)) < 1e-9
    assert abs(R_off - (R3 - R2)) < 1e-9
    assert CH.family_transform(CH.MIXED_F, 2.0, 2.0) == (0.0, 0.0)
    with pytest.raises(CH.ChartDomainError):
        CH.family_transform(CH.UNIT_F, 0.5, 2.0)


def test_synchronous_chart():
    # round trip radius recovery
    rng = np.random.default_rng(1)
    for r in CH.log_spaced(1.01, 1e3, 50):
        tau = float(rng.uniform(-1, 1))
        R = tau + CH.sync_offset(float(r))
        assert abs(CH.r_of_sync(tau, R) - float(r)) < 1e-10
    for r in np.linspace(0.51, 0.99, 9):
        R = CH.sync_offset(float(r))
        assert abs(CH.r_of_sync(0.0, R, branch="interior") - float(r)) < 1e-10
    # pinned component at recovered r = 2
    sync = CH.synchronous_chart()
    R = CH.sync_offset(2.0)
    g = sync.components((0.0, R, math.pi / 2, 0.0))
    assert abs(g[0, 0] - 2.0) < 1e-11
    assert abs(g[1, 1] + 3.0 / 2.0) < 1e-11
    residual = CH.pullback_check(
        CH.mixed_chart(), sync, CH.mixed_to_synchronous(), _points(RADII)
    )
    assert residual < 1e-9
    with pytest.raises(CH.ChartDomainError):
        CH.r_of_sync(0.0, 10.0)  # offset above the exterior range


def test_wormhole_and_l_chart():
    lch = CH.l_chart()
    g0 = lch.components((0.0, 0.0, math.pi / 2, 0.0))
    assert g0[0, 0] == -1.0 and g0[0, 1] == 0.0
    assert g0[2, 2] == -0.25 and g0[1, 1] == 0.0
    for l in (1.0, -1.0):
        g = lch.components((0.0, l, math.pi / 2, 0.0))
        assert g[0, 0] == 0.0  # horizon from either side
    for sign in (1, -1):
        ls = [sign * math.sqrt(2 * r - 1) for r in RADII]
        residual = CH.pullback_check(
            lch, CH.wormhole_chart(sign), CH.l_to_branch(sign), _points(ls)
        )
        assert residual < 1e-9
    residual = CH.pullback_check(
        lch, CH.wormhole_chart(1), CH.l_to_branch(1), _points([0.5, 1.5, 3.0])
    )
    assert residual < 1e-12
    # branch flip mirrors the cross term
    gp = CH.wormhole_chart(1).components((0.0, 2.0, math.pi / 2, 0.0))
    gm = CH.wormhole_chart(-1).components((0.0, 2.0, math.pi / 2, 0.0))
    assert gp[0, 1] == -gm[0, 1] and gp[0, 0] == gm[0, 0]
    # l -> -l on the throat chart swaps which branch pulls back
    g_pos = lch.components((0.0, 1.3, math.pi / 2, 0.0))
    g_neg = lch.components((0.0, -1.3, math.pi / 2, 0.0))
    assert np.array_equal(g_pos, g_neg)  # single global chart, even in l


def test_jacobians_against_finite_differences():
    sample = _points([1.5, 2.0, 3.0, 10.0, 100.0])
    _, polar_ef = CH.ef_chart()
    for transform in (polar_ef, CH.polar_to_mixed(), CH.mixed_to_synchronous()):
        assert CH.jacobian_fd_check(transform, sample) < 1e-6
    l_sample = _points([0.5, 1.5, 3.0, 10.0])
    assert CH.jacobian_fd_check(CH.l_to_branch(1), l_sample) < 1e-6


def test_pullback_check_negative_control():
    ef, transform = CH.ef_chart()
    broken = CH.ChartTransform(
        source=transform.source,
        target=transform.target,
        forward=transform.forward,
        jacobian=lambda x: transform.jacobian(x) + 0.5 * np.eye(4),
        domain=transform.domain,
    )
    residual = CH.pullback_check(CH.polar_chart(), ef, broken, _points([2.0]))
    assert residual > 0.1


def test_identity_transform_zero_residual():
    polar = CH.polar_chart()
    ident = CH.ChartTransform(
        source="polar",
        target="polar",
        forward=lambda x: np.asarray(x, dtype=float),
        jacobian=lambda x: np.eye(4),
        domain=lambda x: x[1] > 1,
    )
    assert CH.pullback_check(polar, polar, ident, _points([2.0, 5.0])) == 0.0


def test_null_slopes_polar_and_mixed():
    polar = CH.polar_chart()
    slopes = CH.radial_null_slopes(polar, 2.0)
    assert slopes.k_plus == 2.0 and slopes.k_minus == -2.0
    mixed = CH.mixed_chart()
    s2 = CH.radial_null_slopes(mixed, 2.0)
    assert abs(s2.k_plus - (2.0 - math.sqrt(3.0))) < 1e-12
    assert abs(s2.k_minus + (2.0 + math.sqrt(3.0))) < 1e-12
    for r in np.concatenate([[0.6, 0.9], RADII]):
        got = sorted(
            [CH.radial_null_slopes(mixed, float(r)).k_plus,
             CH.radial_null_slopes(mixed, float(r)).k_minus],
            reverse=True,
        )
        want = sorted(CH.mixed_null_closed(float(r)), reverse=True)
        for g_root, w_root in zip(got, want):
            assert abs(g_root - w_root) / max(1.0, w_root**2) < 1e-10
    # horizon: regularized closed form gives exactly zero, the other diverges
    assert CH.mixed_null_closed(1.0)[0] == 0.0
    assert CH.radial_null_slopes(mixed, 1.0).k_plus == 0.0
    diverging = [CH.radial_null_slopes(mixed, 1.0 + e).k_minus for e in (1e-2, 1e-5)]
    assert diverging[1] < diverging[0] < -100


def test_null_slope_products_and_flattening():
    mixed = CH.mixed_chart()
    for r in (10.0, 100.0, 1e3, 1e5):
        s = CH.radial_null_slopes(mixed, r)
        assert abs(s.k_plus * s.k_minus + 1.0) < 1e-12
        envelope = math.sqrt(2.0 / r) + 3.0 / r
        assert abs(s.k_plus - 1.0) < envelope
        assert abs(s.k_minus + 1.0) < envelope


def test_chart_registry():
    registry = CH.chart_registry()
    assert set(registry) == {
        "polar", "ef", "mixed", "synchronous", "wormhole-plus", "wormhole-minus", "l",
    }
    for chart in registry.values():
        assert len(chart.coords) == 4
