"""Closed-form Schwarzschild charts with the horizon radius scaled to 1.

Charts: static polar (t, r), advancing null (v, r), the skewed horizon
regular chart (tau, r), its diagonal synchronous partner (tau, R), and
the global throat chart (tau, l) with r = (l**2 + 1) / 2 joining two
asymptotically flat branches.  Every chart carries the same angular
sector -r**2 (dtheta**2 + sin(theta)**2 dphi**2).

Transforms come with closed-form Jacobians; radial light-cone slopes
solve the null condition for k = d(time)/d(radial).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad

__all__ = [
    "ChartMetric",
    "ChartTransform",
    "FRFunction",
    "NullSlopes",
    "ChartDomainError",
    "metric_polar",
    "polar_chart",
    "tortoise",
    "ef_chart",
    "UNIT_F",
    "MIXED_F",
    "SYNC_LL_F",
    "family_transform",
    "tau_R",
    "mixed_chart",
    "polar_to_mixed",
    "theta_of_r",
    "rotated_frame_components",
    "rotated_frame_check",
    "sync_offset",
    "r_of_sync",
    "synchronous_chart",
    "mixed_to_synchronous",
    "wormhole_chart",
    "l_chart",
    "l_to_branch",
    "pullback_check",
    "jacobian_fd_check",
    "radial_null_slopes",
    "mixed_null_closed",
    "polar_null_closed",
    "chart_registry",
    "log_spaced",
]


class ChartDomainError(ValueError):
    """Point outside a chart's domain (horizon, origin, wrong branch)."""


@dataclass(frozen=True)
class ChartMetric:
    """Named chart: coordinate labels, component evaluator, domain test.

    Points are 4-sequences in the chart's own coordinates; axis 0 is the
    time-like label and axis 1 the radial one for light-cone purposes.
    ``excluded_radii`` lists interior radial values the chart cannot cross.
    """

    name: str
    coords: tuple
    components: Callable[[Sequence[float]], np.ndarray]
    domain: Callable[[Sequence[float]], bool]
    excluded_radii: tuple = ()

    def at(self, point) -> np.ndarray:
        if not self.domain(point):
            raise ChartDomainError(f"{tuple(point)} outside domain of chart {self.name}")
        g = self.components(point)
        return g


@dataclass(frozen=True)
class ChartTransform:
    """Coordinate map between charts with its closed-form Jacobian."""

    source: str
    target: str
    forward: Callable[[Sequence[float]], np.ndarray]
    jacobian: Callable[[Sequence[float]], np.ndarray]
    domain: Callable[[Sequence[float]], bool]


@dataclass(frozen=True)
class FRFunction:
    """Radial weight f(r) selecting a member of the embedding family."""

    name: str
    fn: Callable[[float], float]

    def __call__(self, r: float) -> float:
        return self.fn(r)


@dataclass(frozen=True)
class NullSlopes:
    """Radial light-cone slopes d(time)/d(radial) at one radius."""

    chart: str
    r: float
    k_plus: float
    k_minus: float


def _angular(g: np.ndarray, r: float, theta: float):
    g[2, 2] = -r * r
    g[3, 3] = -r * r * math.sin(theta) ** 2


# ---------------------------------------------------------------------------
# static polar chart

def metric_polar(r: float, theta: float = math.pi / 2) -> np.ndarray:
    if r <= 0 or r == 1:
        raise ChartDomainError(f"polar chart singular at r = {r}")
    g = np.zeros((4, 4))
    g[0, 0] = (r - 1.0) / r
    g[1, 1] = -r / (r - 1.0)
    _angular(g, r, theta)
    return g


def polar_chart() -> ChartMetric:
    return ChartMetric(
        name="polar",
        coords=("t", "r", "theta", "phi"),
        components=lambda x: metric_polar(x[1], x[2]),
        domain=lambda x: x[1] > 0 and x[1] != 1,
        excluded_radii=(1.0,),
    )


def tortoise(r: float) -> float:
    """Stretched radius r + ln(r - 1); derivative r / (r - 1)."""
    if r <= 1:
        raise ChartDomainError(f"tortoise coordinate needs r > 1, got {r}")
    return r + math.log(r - 1.0)


def ef_chart():
    """Advancing null chart (v, r) and the transform from polar, v = t + tortoise."""
    def components(x):
        r, theta = x[1], x[2]
        if r <= 0:
            raise ChartDomainError(f"need r > 0, got {r}")
        g = np.zeros((4, 4))
        g[0, 0] = (r - 1.0) / r
        g[0, 1] = g[1, 0] = -1.0
        _angular(g, r, theta)
        return g

    chart = ChartMetric(
        name="ef",
        coords=("v", "r", "theta", "phi"),
        components=components,
        domain=lambda x: x[1] > 0,
    )

    def forward(x):
        t, r, theta, phi = x
        return np.array([t + tortoise(r), r, theta, phi])

    def jacobian(x):
        r = x[1]
        J = np.eye(4)
        J[0, 1] = r / (r - 1.0)
        return J

    transform = ChartTransform(
        source="polar",
        target="ef",
        forward=forward,
        jacobian=jacobian,
        domain=lambda x: x[1] > 1,
    )
    return chart, transform


# ---------------------------------------------------------------------------
# the embedding family and the skew chart

UNIT_F = FRFunction("unit", lambda r: 1.0)
MIXED_F = FRFunction("skew", lambda r: math.sqrt(2.0 * r - 1.0) / r)
SYNC_LL_F = FRFunction("inverse-sqrt", lambda r: 1.0 / math.sqrt(r))


def family_transform(f: FRFunction, r_ref: float, r: float):
    """Quadrature offsets for the time and radial reparametrizations.

    Integrates r' f / (r' - 1) and r' / ((r' - 1) f) from r_ref to r with
    adaptive quadrature; refuses intervals containing the r = 1 pole.
    """
    lo, hi = min(r_ref, r), max(r_ref, r)
    if lo <= 1.0 <= hi and lo != hi:
        raise ChartDomainError("integrand pole at r = 1 inside the interval")
    if lo == hi:
        return 0.0, 0.0
    tau_val, tau_err = quad(
        lambda s: s * f(s) / (s - 1.0), r_ref, r, epsabs=1e-12, epsrel=1e-12, limit=200
    )
    R_val, R_err = quad(
        lambda s: s / ((s - 1.0) * f(s)), r_ref, r, epsabs=1e-12, epsrel=1e-12, limit=200
    )
    if max(tau_err, R_err) > 1e-10:
        raise RuntimeError(f"quadrature did not converge ({tau_err:.2e}, {R_err:.2e})")
    return float(tau_val), float(R_val)


def _u(r: float) -> float:
    if r < 0.5:
        raise ChartDomainError(f"need r >= 1/2, got {r}")
    return math.sqrt(2.0 * r - 1.0)


def _log_term(u: float) -> float:
    # |.| handles the interior branch u < 1; diverges at the horizon u = 1
    return math.log(abs((u + 1.0) / (u - 1.0)))


def tau_R(t: float, r: float):
    """Closed-form time and radial reparametrization of the skew family.

    tau = t - 2 u + log|(u+1)/(u-1)| and
    R = t + (r+4)/3 u - log|(u+1)/(u-1)| with u = sqrt(2r - 1); their
    radial derivatives are -u/(r-1) and r**2/((r-1) u).
    """
    if r == 1:
        raise ChartDomainError("logarithm diverges at r = 1")
    u = _u(r)
    log_term = _log_term(u)
    tau = t - 2.0 * u + log_term
    R = t + (r + 4.0) / 3.0 * u - log_term
    return tau, R


def mixed_chart() -> ChartMetric:
    """Skew chart (tau, r): horizon regular, defined down to r = 1/2."""
    def components(x):
        r, theta = x[1], x[2]
        u = _u(r)
        a = (r - 1.0) / r
        g = np.zeros((4, 4))
        g[0, 0] = a
        g[1, 1] = -a
        g[0, 1] = g[1, 0] = u / r
        _angular(g, r, theta)
        return g

    return ChartMetric(
        name="mixed",
        coords=("tau", "r", "theta", "phi"),
        components=components,
        domain=lambda x: x[1] >= 0.5,
    )


def polar_to_mixed() -> ChartTransform:
    """tau = t - (2u - log|(u+1)/(u-1)|); valid off the horizon, checked
    on the exterior."""
    def forward(x):
        t, r, theta, phi = x
        tau, _ = tau_R(t, r)
        return np.array([tau, r, theta, phi])

    def jacobian(x):
        r = x[1]
        J = np.eye(4)
        J[0, 1] = -_u(r) / (r - 1.0)
        return J

    return ChartTransform(
        source="polar",
        target="mixed",
        forward=forward,
        jacobian=jacobian,
        domain=lambda x: x[1] > 1,
    )


def theta_of_r(r: float) -> float:
    """Frame tilt angle: sin = 1/sqrt(2r), so pi/2 at the inner edge and
    0 at infinity."""
    u = _u(r)  # validates r >= 1/2
    del u
    return math.asin(1.0 / math.sqrt(2.0 * r))


def rotated_frame_components(r: float, theta: float = math.pi / 2) -> np.ndarray:
    """Expand the tilted-frame squares directly into metric components."""
    ang = theta_of_r(r)
    c, s = math.cos(ang), math.sin(ang)
    g = np.zeros((4, 4))
    g[0, 0] = c * c - s * s
    g[1, 1] = s * s - c * c
    g[0, 1] = g[1, 0] = 2.0 * c * s
    _angular(g, r, theta)
    return g


def rotated_frame_check(r: float) -> float:
    """Componentwise residual between the tilted-frame expansion and the
    skew chart."""
    expanded = rotated_frame_components(r)
    direct = mixed_chart().components((0.0, r, math.pi / 2, 0.0))
    return float(np.max(np.abs(expanded - direct)))


# ---------------------------------------------------------------------------
# synchronous partner

def sync_offset(r: float) -> float:
    """Closed-form R - tau on the diagonalizing branch: (2 - r) u / 3.

    The log terms of the two reparametrizations cancel in this member of
    the family, leaving a rational-in-u offset with derivative -(r-1)/u.
    """
    return (2.0 - r) * _u(r) / 3.0


_MONOTONE_CHECKED = set()


def _assert_branch_monotone(branch: str):
    if branch in _MONOTONE_CHECKED:
        return
    rs = (
        np.linspace(1.0 + 1e-6, 50.0, 200)
        if branch == "exterior"
        else np.linspace(0.5 + 1e-9, 1.0 - 1e-6, 200)
    )
    vals = [sync_offset(float(r)) for r in rs]
    diffs = np.diff(vals)
    if branch == "exterior" and not np.all(diffs < 0):
        raise RuntimeError("offset is not decreasing on the exterior branch")
    if branch == "interior" and not np.all(diffs > 0):
        raise RuntimeError("offset is not increasing on the interior branch")
    _MONOTONE_CHECKED.add(branch)


def r_of_sync(tau: float, R: float, branch: str = "exterior", tol: float = 1e-12) -> float:
    """Invert R - tau = sync_offset(r) by bisection plus secant polish."""
    _assert_branch_monotone(branch)
    target = R - tau
    if branch == "exterior":
        lo, hi = 1.0 + 1e-14, 2.0
        if target >= sync_offset(lo):
            raise ChartDomainError("point is outside the exterior branch")
        while sync_offset(hi) > target:
            hi *= 2.0
            if hi > 1e12:
                raise ChartDomainError("radius out of range")
    elif branch == "interior":
        lo, hi = 0.5, 1.0 - 1e-14
        if not sync_offset(lo) <= target <= sync_offset(hi):
            raise ChartDomainError("point is outside the interior branch")
    else:
        raise ValueError(f"unknown branch {branch!r}")

    increasing = sync_offset(hi) > sync_offset(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        val = sync_offset(mid)
        if (val < target) == increasing:
            lo = mid
        else:
            hi = mid
        if hi - lo < tol * max(1.0, abs(mid)):
            break
    r0, r1 = lo, hi
    f0, f1 = sync_offset(r0) - target, sync_offset(r1) - target
    for _ in range(8):
        if f1 == f0:
            break
        r2 = r1 - f1 * (r1 - r0) / (f1 - f0)
        if not (min(lo, hi) <= r2 <= max(lo, hi)):
            break
        r0, f0 = r1, f1
        r1, f1 = r2, sync_offset(r2) - target
        if abs(f1) < 1e-15:
            break
    return r1


def synchronous_chart(branch: str = "exterior") -> ChartMetric:
    """Diagonal chart (tau, R) with the radius recovered by root finding.

    Components: g_tt = r/(r-1), g_RR = -(2r-1)/(r (r-1)); singular at the
    horizon, which is why the chart splits into branches.
    """
    def components(x):
        tau, R, theta = x[0], x[1], x[2]
        r = r_of_sync(tau, R, branch)
        g = np.zeros((4, 4))
        g[0, 0] = r / (r - 1.0)
        g[1, 1] = -(2.0 * r - 1.0) / (r * (r - 1.0))
        _angular(g, r, theta)
        return g

    def domain(x):
        try:
            r_of_sync(x[0], x[1], branch)
        except ChartDomainError:
            return False
        return True

    return ChartMetric(
        name="synchronous",
        coords=("tau", "R", "theta", "phi"),
        components=components,
        domain=domain,
    )


def mixed_to_synchronous() -> ChartTransform:
    """R = tau + (2 - r) u / 3; degenerates at the horizon (zero column)."""
    def forward(x):
        tau, r, theta, phi = x
        return np.array([tau, tau + sync_offset(r), theta, phi])

    def jacobian(x):
        r = x[1]
        J = np.eye(4)
        J[1, 0] = 1.0
        J[1, 1] = -(r - 1.0) / _u(r)
        return J

    return ChartTransform(
        source="mixed",
        target="synchronous",
        forward=forward,
        jacobian=jacobian,
        domain=lambda x: x[1] > 1,
    )


# ---------------------------------------------------------------------------
# wormhole gluing

def wormhole_chart(sign: int) -> ChartMetric:
    """Skew chart with a chosen cross-term sign; the two signs are the two
    asymptotically flat branches glued at r = 1/2."""
    if sign not in (1, -1):
        raise ValueError("branch sign must be +1 or -1")

    def components(x):
        r, theta = x[1], x[2]
        u = _u(r)
        a = (r - 1.0) / r
        g = np.zeros((4, 4))
        g[0, 0] = a
        g[1, 1] = -a
        g[0, 1] = g[1, 0] = sign * u / r
        _angular(g, r, theta)
        return g

    return ChartMetric(
        name="wormhole-plus" if sign == 1 else "wormhole-minus",
        coords=("tau", "r", "theta", "phi"),
        components=components,
        domain=lambda x: x[1] >= 0.5,
    )


def l_chart() -> ChartMetric:
    """Global throat chart (tau, l) with r = (l**2 + 1)/2.

    All components are rational in l, regular through l = 0; positive l
    matches the plus branch, negative l the minus branch.
    """
    def components(x):
        l, theta = x[1], x[2]
        r = (l * l + 1.0) / 2.0
        a = (l * l - 1.0) / (l * l + 1.0)
        g = np.zeros((4, 4))
        g[0, 0] = a
        g[1, 1] = -a * l * l
        g[0, 1] = g[1, 0] = 2.0 * l * l / (l * l + 1.0)
        _angular(g, r, theta)
        return g

    return ChartMetric(
        name="l",
        coords=("tau", "l", "theta", "phi"),
        components=components,
        domain=lambda x: True,
    )


def l_to_branch(sign: int) -> ChartTransform:
    """(tau, l) -> (tau, r = (l**2 + 1)/2) onto the matching branch."""
    if sign not in (1, -1):
        raise ValueError("branch sign must be +1 or -1")

    def forward(x):
        tau, l, theta, phi = x
        return np.array([tau, (l * l + 1.0) / 2.0, theta, phi])

    def jacobian(x):
        J = np.eye(4)
        J[1, 1] = x[1]
        return J

    return ChartTransform(
        source="l",
        target="wormhole-plus" if sign == 1 else "wormhole-minus",
        forward=forward,
        jacobian=jacobian,
        domain=lambda x: sign * x[1] > 0,
    )


# ---------------------------------------------------------------------------
# verification plumbing

def pullback_check(source: ChartMetric, target: ChartMetric,
                   transform: ChartTransform, points) -> float:
    """Max residual of g_source = J^T g_target(T(x)) J over the points."""
    worst = 0.0
    for point in points:
        if not transform.domain(point):
            raise ChartDomainError(f"{tuple(point)} outside transform domain")
        g_src = source.at(point)
        J = transform.jacobian(point)
        g_tgt = target.at(transform.forward(point))
        worst = max(worst, float(np.max(np.abs(g_src - J.T @ g_tgt @ J))))
    return worst


def jacobian_fd_check(transform: ChartTransform, points, step: float = 1e-6) -> float:
    """Max deviation of the closed-form Jacobian from central differences."""
    worst = 0.0
    for point in points:
        point = np.asarray(point, dtype=float)
        J = transform.jacobian(point)
        for b in range(4):
            dp = np.zeros(4)
            dp[b] = step
            col = (transform.forward(point + dp) - transform.forward(point - dp)) / (2 * step)
            worst = max(worst, float(np.max(np.abs(col - J[:, b]))))
    return worst


def _stable_quadratic(a2: float, a1: float, a0: float):
    """Roots of a2 k**2 + a1 k + a0 = 0, descending, inf for a lost root."""
    if a2 == 0.0:
        if a1 == 0.0:
            raise ChartDomainError("null condition is degenerate at this radius")
        finite = -a0 / a1
        lost = math.inf if a1 < 0 else -math.inf
        return max(finite, lost), min(finite, lost)
    disc = a1 * a1 - 4.0 * a2 * a0
    if disc < 0:
        raise ChartDomainError("no real null directions here")
    sq = math.sqrt(disc)
    if disc == 0.0:
        k = -a1 / (2.0 * a2)
        return k, k
    q = -0.5 * (a1 + math.copysign(sq, a1)) if a1 != 0 else 0.5 * sq
    r1, r2 = q / a2, (a0 / q if q != 0 else -a1 / a2)
    return max(r1, r2), min(r1, r2)


def radial_null_slopes(chart: ChartMetric, r: float, theta: float = math.pi / 2) -> NullSlopes:
    """Light-cone slopes k = d(time)/d(radial) at fixed angles.

    Solves g_tt k**2 + 2 g_tr k + g_rr = 0; each finite root is verified
    against the null condition.
    """
    point = (0.0, r, theta, 0.0)
    g = chart.at(point)
    k_plus, k_minus = _stable_quadratic(g[0, 0], 2.0 * g[0, 1], g[1, 1])
    for k in (k_plus, k_minus):
        if math.isfinite(k):
            resid = abs(g[0, 0] * k * k + 2.0 * g[0, 1] * k + g[1, 1])
            if resid / max(1.0, k * k) > 1e-10:
                raise RuntimeError(f"null root fails the cone condition ({resid:.3e})")
    return NullSlopes(chart.name, float(r), float(k_plus), float(k_minus))


def mixed_null_closed(r: float):
    """Closed-form skew-chart slopes; the plus root is written as
    (r-1)/(r+u), regular through the horizon."""
    u = _u(r)
    k_plus = (r - 1.0) / (r + u)
    k_minus = -(r + u) / (r - 1.0) if r != 1.0 else -math.inf
    return k_plus, k_minus


def polar_null_closed(r: float):
    k = r / (r - 1.0)
    return abs(k), -abs(k)


def chart_registry() -> dict:
    ef, _ = ef_chart()
    return {
        "polar": polar_chart(),
        "ef": ef,
        "mixed": mixed_chart(),
        "synchronous": synchronous_chart(),
        "wormhole-plus": wormhole_chart(1),
        "wormhole-minus": wormhole_chart(-1),
        "l": l_chart(),
    }


def log_spaced(lo: float, hi: float, n: int) -> np.ndarray:
    if lo <= 0 or hi <= lo:
        raise ValueError("need 0 < lo < hi")
    return np.exp(np.linspace(math.log(lo), math.log(hi), n))
