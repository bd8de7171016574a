"""Node/focus classification of the downstream rest point over (eps, q_tilde).

The attractor type is decided by the sign of a cubic polynomial P(z, eps)
evaluated at z = v_plus^2: negative means complex eigenvalues (focus),
positive means real ones (node).  The zero set of that sign, pulled back
through the downstream-velocity map, consists of two separatrix curves
q1(eps) and q2(eps) that split the parameter square into a focus band
between them and node regions below and above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .equilibria import q_of_vplus, v_plus_squared
from .errors import (
    EpsilonAboveHat,
    EpsilonOutOfRange,
    InternalInconsistency,
    ParamsOutOfOmega,
    RootFindingFailure,
    SingularBsharp,
)
from .model import GodunovState, b_sharp, kinematics, lin_matrix

# Points closer than this (in q_tilde) to a separatrix get the curve label;
# strict sign classification inside the band is floating-point noise.
SEPARATRIX_BAND = 1e-10

# Below this gap between the upper two roots the plain trigonometric/Newton
# route can no longer resolve the pair (its condition number exceeds the
# separation); switch to the discriminant-based splitting.
_CLUSTER_GAP = 1e-4

# Critical dissipation value: the middle root crosses 1/8 here and the upper
# separatrix reaches the infinite-amplitude boundary q_tilde = 1.
_SQRT6 = math.sqrt(6.0)
_EPS_HAT = (2.0 / 3.0) * (3.0 * _SQRT6 - 2.0 * math.sqrt(16.0 - 6.0 * _SQRT6) - 4.0)


class RegionLabel(str, Enum):
    NODE_BELOW = "NodeBelow"
    FOCUS = "Focus"
    NODE_ABOVE = "NodeAbove"
    SEPARATRIX_1 = "Separatrix1"
    SEPARATRIX_2 = "Separatrix2"


@dataclass(frozen=True)
class CubicRoots:
    """Sorted real roots w1 < w2 < w3 of P(., eps) for eps in (0, 1]."""

    w1: float
    w2: float
    w3: float
    eps: float


def p_coefficients(eps: float) -> tuple[float, float, float, float]:
    """Coefficients (a0, a1, a2, a3) of P(z, eps) = a3 z^3 + ... + a0."""
    if not 0.0 <= eps <= 1.0:
        raise EpsilonOutOfRange(f"eps must lie in [0, 1], got {eps}")
    a0 = eps * ((4.0 * eps - 20.0) * eps + 16.0)
    a1 = (((eps - 16.0) * eps + 84.0) * eps - 112.0) * eps + 16.0
    a2 = (((2.0 * eps - 20.0) * eps - 24.0) * eps + 160.0) * eps - 64.0
    a3 = (eps * eps + 16.0) * eps * eps + 64.0
    return a0, a1, a2, a3


def p_eval(z: float, eps: float) -> float:
    """P(z, eps) by nested multiplication."""
    a0, a1, a2, a3 = p_coefficients(eps)
    return ((a3 * z + a2) * z + a1) * z + a0


def _p_scale(z: float, eps: float) -> float:
    """Magnitude of the terms entering P(z, eps); conditioning reference."""
    a0, a1, a2, a3 = p_coefficients(eps)
    az = abs(z)
    return ((abs(a3) * az + abs(a2)) * az + abs(a1)) * az + abs(a0)


def epsilon_hat() -> float:
    """Critical dissipation value, (2/3)(3 sqrt(6) - 2 sqrt(16 - 6 sqrt(6)) - 4)."""
    return _EPS_HAT


def discriminant_tail(eps: float) -> float:
    """Quintic factor of the cubic discriminant; positive on (0, 1)."""
    return ((((-4.0 * eps + 179.0) * eps - 844.0) * eps + 880.0) * eps - 32.0) * eps + 64.0


def cubic_discriminant(eps: float) -> float:
    """Discriminant of P(., eps) in factored form, 1296 eps^5 (4-eps)^3 * tail."""
    return 1296.0 * eps**5 * (4.0 - eps) ** 3 * discriminant_tail(eps)


def _trig_roots(a0: float, a1: float, a2: float, a3: float) -> list[float]:
    # Monic reduction z^3 + b z^2 + c z + d, depressed with z = t - b/3.
    b = a2 / a3
    c = a1 / a3
    d = a0 / a3
    p = c - b * b / 3.0
    q = d - b * c / 3.0 + 2.0 * b**3 / 27.0
    if p >= 0.0:
        # Three real roots force p < 0; reaching this means rounding collapsed
        # a degenerate configuration.  Return the triple root candidate.
        t = -q ** (1.0 / 3.0) if q >= 0.0 else (-q) ** (1.0 / 3.0)
        return sorted([t - b / 3.0] * 3)
    m = 2.0 * math.sqrt(-p / 3.0)
    arg = 3.0 * q / (p * m)
    arg = min(1.0, max(-1.0, arg))
    phi = math.acos(arg)
    ts = [m * math.cos((phi - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    return sorted(t - b / 3.0 for t in ts)


def _newton_polish(w: float, coeffs: tuple[float, float, float, float]) -> float:
    a0, a1, a2, a3 = coeffs
    for _ in range(8):
        pw = ((a3 * w + a2) * w + a1) * w + a0
        dpw = (3.0 * a3 * w + 2.0 * a2) * w + a1
        if dpw == 0.0:
            break
        step = pw / dpw
        w_next = w - step
        if w_next == w:
            break
        w = w_next
    return w


def _split_cluster(
    w1: float, eps: float, coeffs: tuple[float, float, float, float]
) -> tuple[float, float]:
    """Resolve the near-degenerate upper root pair from exact invariants.

    The pair midpoint comes from the root sum -a2/a3 - w1 and the gap from
    the factored discriminant, sep^2 = disc / (a3^4 (w3-w1)^2 (w2-w1)^2).
    Both are cancellation-free, so the pair is recovered to full precision
    even when the roots are only ~eps^(5/2) apart.
    """
    a0, a1, a2, a3 = coeffs
    mid = 0.5 * (-a2 / a3 - w1)
    gap = mid - w1
    root_disc = math.sqrt(max(cubic_discriminant(eps), 0.0))
    sep = root_disc / (a3 * a3 * gap * gap)
    # One correction step: (w3-w1)(w2-w1) = gap^2 - (sep/2)^2.
    sep = root_disc / (a3 * a3 * (gap * gap - 0.25 * sep * sep))
    return mid - 0.5 * sep, mid + 0.5 * sep


def cubic_roots(eps: float) -> CubicRoots:
    """Three real roots of P(., eps), sorted ascending and residual-polished.

    Closed-form trigonometric solve followed by Newton polishing; when the
    upper pair is closer than the polishing route can resolve, it is split
    via the factored discriminant instead (see `_split_cluster`).
    """
    if not 0.0 < eps <= 1.0:
        raise EpsilonOutOfRange(f"eps must lie in (0, 1], got {eps}")
    coeffs = p_coefficients(eps)
    a0, a1, a2, a3 = coeffs
    raw = _trig_roots(a0, a1, a2, a3)
    w1 = _newton_polish(raw[0], coeffs)
    if raw[2] - raw[1] < _CLUSTER_GAP:
        w2, w3 = _split_cluster(w1, eps, coeffs)
    else:
        w2 = _newton_polish(raw[1], coeffs)
        w3 = _newton_polish(raw[2], coeffs)
    if not w1 < w2 < w3:
        raise RootFindingFailure(f"root ordering lost at eps={eps}: {w1}, {w2}, {w3}")
    tol = 1e-10 * max(1.0, abs(a3))
    for w in (w1, w2, w3):
        res = ((a3 * w + a2) * w + a1) * w + a0
        if abs(res) > tol:
            raise RootFindingFailure(f"|P({w}, {eps})| = {abs(res)} above {tol}")
    return CubicRoots(w1=w1, w2=w2, w3=w3, eps=eps)


def separatrix_q1(eps: float) -> float:
    """Lower separatrix q1(eps) = q_of_vplus(w3(eps)), defined on (0, 1]."""
    if not 0.0 < eps <= 1.0:
        raise EpsilonOutOfRange(f"eps must lie in (0, 1], got {eps}")
    return q_of_vplus(cubic_roots(eps).w3)


def separatrix_q2(eps: float) -> float:
    """Upper separatrix q2(eps) = q_of_vplus(w2(eps)), defined on (0, eps_hat)."""
    if not 0.0 < eps <= 1.0:
        raise EpsilonOutOfRange(f"eps must lie in (0, 1], got {eps}")
    if eps >= _EPS_HAT:
        raise EpsilonAboveHat(
            f"upper separatrix undefined for eps = {eps} >= {_EPS_HAT}"
        )
    return q_of_vplus(cubic_roots(eps).w2)


def _curves(roots: CubicRoots) -> tuple[float, float | None]:
    q1 = q_of_vplus(roots.w3)
    q2 = q_of_vplus(roots.w2) if roots.w2 > 0.125 else None
    return q1, q2


def _label_from_curves(q_tilde: float, q1: float, q2: float | None) -> RegionLabel:
    if abs(q_tilde - q1) <= SEPARATRIX_BAND:
        return RegionLabel.SEPARATRIX_1
    if q2 is not None and abs(q_tilde - q2) <= SEPARATRIX_BAND:
        return RegionLabel.SEPARATRIX_2
    if q_tilde < q1:
        return RegionLabel.NODE_BELOW
    if q2 is not None and q_tilde > q2:
        return RegionLabel.NODE_ABOVE
    return RegionLabel.FOCUS


def _classify_checked(
    eps: float, q_tilde: float, q1: float, q2: float | None
) -> tuple[RegionLabel, float]:
    """Curve-comparison label cross-checked against the sign of P(v+^2, eps)."""
    label = _label_from_curves(q_tilde, q1, q2)
    z = v_plus_squared(q_tilde)
    pval = p_eval(z, eps)
    if label in (RegionLabel.SEPARATRIX_1, RegionLabel.SEPARATRIX_2):
        return label, pval
    if abs(pval) > 1e-10 * max(1.0, _p_scale(z, eps)):
        focus_by_sign = pval < 0.0
        if focus_by_sign != (label is RegionLabel.FOCUS):
            raise InternalInconsistency(
                f"separatrix route says {label.value} but P({z}, {eps}) = {pval}"
            )
    return label, pval


def classify(eps: float, q_tilde: float) -> RegionLabel:
    """Region label of (eps, q_tilde) in the parameter square.

    Computes both characterizations (sign of P at v_plus^2 and position
    relative to the separatrix curves) and raises InternalInconsistency if
    they disagree outside the tie band.
    """
    if not (0.0 < eps <= 1.0 and 0.75 < q_tilde < 1.0):
        raise ParamsOutOfOmega(f"({eps}, {q_tilde}) outside (0,1] x (3/4,1)")
    q1, q2 = _curves(cubic_roots(eps))
    label, _ = _classify_checked(eps, q_tilde, q1, q2)
    return label


def local_spectrum(psi: GodunovState, eps: float) -> tuple[complex, complex]:
    """Eigenvalues of B#(psi, eps)^-1 A(psi) via the 2x2 trace/det formulas.

    The pair is sorted by (real, imag).  Signs and the real/complex split
    match the true profile linearization at rest points, which differs from
    this matrix only by the positive factor (4/3) theta^5.
    """
    kin = kinematics(psi)
    b = b_sharp(kin, eps)
    a = lin_matrix(kin)
    det_b = b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]
    frob_sq = float((b * b).sum())
    if abs(det_b) < 1e-12 * frob_sq:
        raise SingularBsharp(f"|det B#| = {abs(det_b)} below 1e-12 * ||B#||^2")
    tr = (
        b[1, 1] * a[0, 0] - b[0, 1] * a[1, 0] - b[1, 0] * a[0, 1] + b[0, 0] * a[1, 1]
    ) / det_b
    det = (a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]) / det_b
    disc = tr * tr - 4.0 * det
    if disc >= 0.0:
        s = math.sqrt(disc)
        lo, hi = 0.5 * (tr - s), 0.5 * (tr + s)
        return complex(lo, 0.0), complex(hi, 0.0)
    s = math.sqrt(-disc)
    return complex(0.5 * tr, -0.5 * s), complex(0.5 * tr, 0.5 * s)
