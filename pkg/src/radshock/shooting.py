"""Heteroclinic shooting for the profile field B#(psi, eps) psi' = F(psi, q).

A shot starts a small offset along the unstable eigenvector of the upstream
saddle and integrates with an adaptive embedded Runge-Kutta pair until it is
captured at the downstream rest point, escapes, hits the singular locus of
the dissipation matrix, or exhausts the pseudo-time budget.  The sampled
trajectory is then scanned for extrema and sign changes in three coordinate
systems, which is how oscillatory (spiraling) profiles are detected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import solve_ivp

from .equilibria import EquilibriumPair, rest_points
from .errors import (
    NotASaddle,
    ParamsOutOfOmega,
    QOutOfRange,
    SingularBsharp,
    TooFewSamples,
)
from .model import GodunovState, Kinematics, b_sharp, kinematics

# Capture requires the field norm to drop below this fraction of the largest
# field norm seen along the shot; a radius test alone can false-positive on
# slow spirals passing near the rest point.
_RESIDUAL_FACTOR = 1e-6

_JACOBIAN_STEP = 1e-6

# Integration stops (verdict Escaped) if the state comes this close to the
# boundary of the admissible cone psi0 > |psi1|.
_BOUNDARY_MARGIN = 1e-9

COORDINATE_SYSTEMS = ("psi", "theta_v", "u_v")


@dataclass(frozen=True)
class ShootOptions:
    """Shooting controls; lengths are relative to |psi_minus - psi_plus|."""

    offset: float = 1e-7
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    capture_radius: float = 1e-8
    escape_radius: float = 1e2
    max_pseudo_time: float = 1e6

    def __post_init__(self):
        for name in ("offset", "rel_tol", "abs_tol", "capture_radius",
                     "escape_radius", "max_pseudo_time"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")
        if not self.capture_radius < self.escape_radius:
            raise ValueError("capture_radius must be smaller than escape_radius")


class ProfileVerdict(str, Enum):
    CONVERGED_TO_PLUS = "ConvergedToPlus"
    ESCAPED = "Escaped"
    STALLED = "Stalled"
    HIT_SINGULAR_LOCUS = "HitSingularLocus"


@dataclass(frozen=True)
class ComponentCounts:
    """Strict local extrema and sign changes of (component - its limit)."""

    extrema: int
    sign_changes: int


@dataclass(frozen=True)
class OscillationReport:
    """Per-coordinate-system oscillation counts along a trajectory.

    `systems` maps each coordinate system name to a tuple of per-component
    counts, ordered (psi0, psi1) / (theta, v) / (u, v).  A system is flagged
    oscillatory when any of its components changes sign at least twice
    around its limit value.
    """

    systems: dict[str, tuple[ComponentCounts, ComponentCounts]]
    oscillatory_by_system: dict[str, bool]
    oscillatory: bool


@dataclass
class ProfileResult:
    times: np.ndarray
    states: np.ndarray
    verdict: ProfileVerdict
    oscillation: OscillationReport
    psi_minus: GodunovState
    psi_plus: GodunovState
    eps: float
    q_tilde: float

    @property
    def samples(self) -> list[tuple[float, GodunovState, Kinematics]]:
        out = []
        for t, (p0, p1) in zip(self.times, self.states):
            st = GodunovState(float(p0), float(p1))
            out.append((float(t), st, kinematics(st)))
        return out

    def kinematics_array(self) -> np.ndarray:
        """Columns (theta, u, v) for every sample."""
        return _kinematics_columns(self.states)


def _kinematics_columns(states: np.ndarray) -> np.ndarray:
    p0 = states[:, 0]
    p1 = states[:, 1]
    theta = (p0 * p0 - p1 * p1) ** -0.5
    return np.column_stack([theta, theta * p0, theta * p1])


def _raw_field(y0: float, y1: float, eps: float, q0: float, q1: float) -> tuple[float, float]:
    # Hot path shared by the integrator and its events: pure floats, no
    # validation.  Clamps keep trial evaluations finite just outside the
    # admissible cone; events stop the integration before they matter.
    s = y0 * y0 - y1 * y1
    if s < 1e-300:
        s = 1e-300
    th2 = 1.0 / s
    th = math.sqrt(th2)
    u = th * y0
    v = th * y1
    t4 = th2 * th2
    f0 = -(4.0 / 3.0) * t4 * v * u + q0
    f1 = t4 * ((4.0 / 3.0) * v * v + 1.0 / 3.0) - q1
    u2 = u * u
    v2 = v * v
    uv = u * v
    c2 = 9.0 * eps / (4.0 - eps)
    b00 = eps * u2 * v2 - 16.0 * u2 * v2 - c2 * (u2 + v2) ** 2
    b01 = -eps * u2 * uv + 4.0 * uv * (4.0 * v2 + 1.0) + 2.0 * c2 * (u2 + v2) * uv
    b11 = eps * u2 * u2 - (4.0 * v2 + 1.0) ** 2 - 4.0 * c2 * u2 * v2
    det = b00 * b11 - b01 * b01
    if det == 0.0:
        det = -1e-300
    return (b11 * f0 - b01 * f1) / det, (b00 * f1 - b01 * f0) / det


def vector_field(psi: GodunovState, eps: float, q_tilde: float) -> np.ndarray:
    """Profile field B#^-1 F at one state, via the closed-form 2x2 inverse."""
    if q_tilde <= 0.0:
        raise QOutOfRange(f"q_tilde must be positive, got {q_tilde}")
    kin = kinematics(psi)
    b = b_sharp(kin, eps)
    det = b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]
    if abs(det) < 1e-12 * float((b * b).sum()):
        raise SingularBsharp(
            f"dissipation matrix singular near v^2 = {kin.v**2} at eps = {eps}"
        )
    f0, f1 = _raw_field(psi.psi0, psi.psi1, eps, q_tilde**-0.5, 1.0)
    return np.array([f0, f1])


def field_jacobian(
    psi: GodunovState, eps: float, q_tilde: float, step: float = _JACOBIAN_STEP
) -> np.ndarray:
    """Central finite-difference Jacobian of the profile field."""
    q0 = q_tilde**-0.5
    y = (psi.psi0, psi.psi1)
    jac = np.empty((2, 2))
    for i in range(2):
        dp = [0.0, 0.0]
        dp[i] = step
        fp = _raw_field(y[0] + dp[0], y[1] + dp[1], eps, q0, 1.0)
        fm = _raw_field(y[0] - dp[0], y[1] - dp[1], eps, q0, 1.0)
        jac[0, i] = (fp[0] - fm[0]) / (2.0 * step)
        jac[1, i] = (fp[1] - fm[1]) / (2.0 * step)
    return jac


def unstable_direction(eps: float, q_tilde: float) -> np.ndarray:
    """Unit eigenvector of the saddle's positive eigenvalue, aimed downstream.

    The sign is fixed so the vector points toward the attractor side, which
    makes the kinematic velocity decrease along it.
    """
    pair = rest_points(q_tilde)
    jac = field_jacobian(pair.psi_minus, eps, q_tilde)
    det = jac[0, 0] * jac[1, 1] - jac[0, 1] * jac[1, 0]
    if not det < 0.0:
        raise NotASaddle(
            f"eigenvalue product {det} not negative at psi_minus({q_tilde}), eps={eps}"
        )
    tr = jac[0, 0] + jac[1, 1]
    lam_pos = 0.5 * (tr + math.sqrt(tr * tr - 4.0 * det))
    cand_a = np.array([jac[0, 1], lam_pos - jac[0, 0]])
    cand_b = np.array([lam_pos - jac[1, 1], jac[1, 0]])
    vec = cand_a if np.linalg.norm(cand_a) >= np.linalg.norm(cand_b) else cand_b
    vec = vec / np.linalg.norm(vec)
    toward_plus = pair.psi_plus.as_array() - pair.psi_minus.as_array()
    if float(vec @ toward_plus) < 0.0:
        vec = -vec
    return vec


def _count_extrema(x: np.ndarray, floor: float) -> int:
    # Turning points with hysteresis: a direction reversal only counts once
    # the excursion beats the noise floor.
    count = 0
    direction = 0
    ref = x[0]
    for val in x[1:]:
        if direction == 0:
            if val > ref + floor:
                direction, ref = 1, val
            elif val < ref - floor:
                direction, ref = -1, val
        elif direction > 0:
            if val > ref:
                ref = val
            elif val < ref - floor:
                count += 1
                direction, ref = -1, val
        else:
            if val < ref:
                ref = val
            elif val > ref + floor:
                count += 1
                direction, ref = 1, val
    return count


def _count_sign_changes(dev: np.ndarray, floor: float) -> int:
    kept = dev[np.abs(dev) > floor]
    if kept.size < 2:
        return 0
    signs = np.sign(kept)
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def oscillation_report(states: np.ndarray, psi_plus: GodunovState) -> OscillationReport:
    """Extrema and sign-change counts of a trajectory in three coordinate systems.

    `states` is an (n, 2) array of psi samples, n >= 3.  Limits are taken at
    psi_plus.  The noise floor per component is 1e-10 times its range.
    """
    arr = np.asarray(states, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 3:
        raise TooFewSamples(f"need an (n >= 3, 2) sample array, got shape {arr.shape}")
    kin_cols = _kinematics_columns(arr)
    lim = kinematics(psi_plus)
    tracks = {
        "psi": ((arr[:, 0], psi_plus.psi0), (arr[:, 1], psi_plus.psi1)),
        "theta_v": ((kin_cols[:, 0], lim.theta), (kin_cols[:, 2], lim.v)),
        "u_v": ((kin_cols[:, 1], lim.u), (kin_cols[:, 2], lim.v)),
    }
    systems: dict[str, tuple[ComponentCounts, ComponentCounts]] = {}
    flags: dict[str, bool] = {}
    for name, comps in tracks.items():
        counts = []
        for series, limit in comps:
            amp = float(series.max() - series.min())
            floor = 1e-10 * amp
            counts.append(
                ComponentCounts(
                    extrema=_count_extrema(series, floor),
                    sign_changes=_count_sign_changes(series - limit, floor),
                )
            )
        systems[name] = (counts[0], counts[1])
        flags[name] = any(c.sign_changes >= 2 for c in counts)
    return OscillationReport(
        systems=systems,
        oscillatory_by_system=flags,
        oscillatory=any(flags.values()),
    )


def _integrate(
    y_start: np.ndarray,
    eps: float,
    q_tilde: float,
    pair: EquilibriumPair,
    scale: float,
    opts: ShootOptions,
) -> tuple[ProfileVerdict, np.ndarray, np.ndarray]:
    q0 = q_tilde**-0.5
    psi_plus = pair.psi_plus.as_array()
    r_cap = opts.capture_radius * scale
    r_esc = opts.escape_radius * scale
    sing_level = (1.0 - eps) / (8.0 + eps)

    def rhs(_t, y):
        return _raw_field(y[0], y[1], eps, q0, 1.0)

    def field_norm(y):
        f0, f1 = _raw_field(y[0], y[1], eps, q0, 1.0)
        return math.hypot(f0, f1)

    def ev_capture(_t, y):
        return math.hypot(y[0] - psi_plus[0], y[1] - psi_plus[1]) - r_cap

    def ev_escape(_t, y):
        return math.hypot(y[0] - psi_plus[0], y[1] - psi_plus[1]) - r_esc

    def ev_singular(_t, y):
        s = y[0] * y[0] - y[1] * y[1]
        v_sq = y[1] * y[1] / s if s > 0.0 else math.inf
        return v_sq - sing_level

    def ev_boundary(_t, y):
        return y[0] - abs(y[1]) - _BOUNDARY_MARGIN

    for ev, direction in (
        (ev_capture, -1), (ev_escape, 1), (ev_singular, -1), (ev_boundary, -1)
    ):
        ev.terminal = True
        ev.direction = direction

    f_ref = field_norm(y_start)
    res_scale = 1.0
    capture_armed = True

    ts = [np.array([0.0])]
    ys = [y_start.reshape(2, 1)]
    t_cur, y_cur = 0.0, y_start
    verdict = None
    while verdict is None:
        res_threshold = _RESIDUAL_FACTOR * f_ref * res_scale

        def ev_residual(_t, y, thr=res_threshold):
            return field_norm(y) - thr

        ev_residual.terminal = True
        ev_residual.direction = -1

        events = [ev_residual, ev_escape, ev_singular, ev_boundary]
        if capture_armed:
            events.append(ev_capture)
        sol = solve_ivp(
            rhs,
            (t_cur, opts.max_pseudo_time),
            y_cur,
            method="RK45",
            rtol=opts.rel_tol,
            atol=opts.abs_tol,
            events=events,
        )
        if sol.t.size > 1:
            ts.append(sol.t[1:])
            ys.append(sol.y[:, 1:])
            f_ref = max(f_ref, max(field_norm(sol.y[:, j]) for j in range(1, sol.t.size)))
        if sol.status == 0:
            verdict = ProfileVerdict.STALLED
        elif sol.status < 0:
            # Step underflow.  The field's only blow-up set is the singular
            # locus, which can be reached asymptotically without the crossing
            # event ever firing; diagnose by the final squared velocity.
            y_end = sol.y[:, -1]
            s = y_end[0] * y_end[0] - y_end[1] * y_end[1]
            v_sq = y_end[1] * y_end[1] / s if s > 0.0 else math.inf
            if abs(v_sq - sing_level) <= 1e-5 * (1.0 + sing_level):
                verdict = ProfileVerdict.HIT_SINGULAR_LOCUS
            else:
                verdict = ProfileVerdict.STALLED
        elif sol.t_events[1].size:
            verdict = ProfileVerdict.ESCAPED
        elif sol.t_events[2].size:
            verdict = ProfileVerdict.HIT_SINGULAR_LOCUS
        elif sol.t_events[3].size:
            verdict = ProfileVerdict.ESCAPED
        else:
            # Radius or residual event.  Event locations carry interpolation
            # slop of order rel_tol, so "near" allows a 0.1% margin.
            y_end = sol.y[:, -1]
            near = math.hypot(*(y_end - psi_plus)) <= r_cap * 1.001
            quiet = field_norm(y_end) <= _RESIDUAL_FACTOR * f_ref
            if near and quiet:
                verdict = ProfileVerdict.CONVERGED_TO_PLUS
            else:
                # False alarm.  Resuming exactly on the firing radius would
                # re-trigger the capture event with no progress, so disarm it
                # and let the residual event (approached monotonically from
                # above) take over; a residual false alarm instead halves its
                # own threshold.  The pseudo-time budget stays the backstop.
                t_cur, y_cur = sol.t[-1], y_end
                if capture_armed and sol.t_events[4].size:
                    capture_armed = False
                else:
                    res_scale *= 0.5
    times = np.concatenate(ts)
    states = np.concatenate(ys, axis=1).T
    return verdict, times, states


def shoot(eps: float, q_tilde: float, opts: ShootOptions | None = None) -> ProfileResult:
    """Shoot the unstable manifold of the saddle toward the attractor.

    Returns the sampled trajectory, a convergence verdict and the oscillation
    report.  If the preferred eigenvector orientation escapes, the opposite
    one is tried before reporting; non-convergence is a verdict, not an error.
    """
    if opts is None:
        opts = ShootOptions()
    if not (0.0 < eps <= 1.0 and 0.75 < q_tilde < 1.0):
        raise ParamsOutOfOmega(f"({eps}, {q_tilde}) outside (0,1] x (3/4,1)")
    pair = rest_points(q_tilde)
    direction = unstable_direction(eps, q_tilde)
    psi_minus = pair.psi_minus.as_array()
    scale = float(np.linalg.norm(psi_minus - pair.psi_plus.as_array()))
    first: ProfileResult | None = None
    for sign in (1.0, -1.0):
        start = psi_minus + sign * opts.offset * scale * direction
        verdict, times, states = _integrate(start, eps, q_tilde, pair, scale, opts)
        report = (
            oscillation_report(states, pair.psi_plus)
            if states.shape[0] >= 3
            else OscillationReport(systems={}, oscillatory_by_system={}, oscillatory=False)
        )
        result = ProfileResult(
            times=times,
            states=states,
            verdict=verdict,
            oscillation=report,
            psi_minus=pair.psi_minus,
            psi_plus=pair.psi_plus,
            eps=eps,
            q_tilde=q_tilde,
        )
        if verdict is ProfileVerdict.CONVERGED_TO_PLUS:
            return result
        if first is None:
            first = result
        if verdict is not ProfileVerdict.ESCAPED:
            break
    return first
