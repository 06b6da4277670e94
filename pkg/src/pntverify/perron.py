"""Truncated Perron integrals and the contour function f(r).

The vertical-line integral

    I(x, k, T) = (1/2 pi i) int_{k-iT}^{k+iT} x^s/s log zeta(s) ds
               = (1/pi) int_0^T Re[x^{k+it}/(k+it) log zeta(k+it)] dt

is computed on composite 8-point Gauss-Legendre panels.  The integrand
oscillates like x^{it}, period 2 pi/log x, so panels are at most
min(0.25, 0.5/log x) wide.

f(r) is evaluated through the deformed path for int e^u/u du: the real
ray (-U, -eps], a half circle of radius eps on one side of the origin,
then the segment [eps, r log x].
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, GeometryError
from .quadrature import PanelLayout, QuadratureResult, integrate_breakpoints
from .zeta import (
    DEFAULT_ACCURACY,
    ZetaAccuracy,
    track_branch,
    zeta_line_panels,
    zeta_many,
)

GL_ORDER = 8
_PATH_ORDER = 16


def default_k(x: float) -> float:
    return 1.0 + 1.0 / math.log(x)


def max_panel_width(log_y: float) -> float:
    if log_y == 0:
        return 0.25
    return min(0.25, 0.5 / abs(log_y))


@dataclass(frozen=True)
class LineIntegralSpec:
    """x, k, T for I(x, k, T).  ``step`` fixes the panel width; otherwise the
    width rule is used, and with ``adaptive_eps`` set the width is halved
    until the step-halving estimate falls below it."""

    x: float
    T: float
    k: float | None = None
    step: float | None = None
    adaptive_eps: float | None = None
    k_value: float = field(init=False, repr=False)

    def __post_init__(self):
        if not self.x > 2:
            raise DomainError(f"x must exceed 2, got {self.x}")
        if not self.T >= 2:
            raise DomainError(f"T must be >= 2, got {self.T}")
        k = default_k(self.x) if self.k is None else float(self.k)
        if not k > 1:
            raise DomainError(f"k must exceed 1, got {k}")
        if self.step is not None and not self.step > 0:
            raise ValueError("step must be positive")
        object.__setattr__(self, "k_value", k)

    def layout(self) -> PanelLayout:
        w = self.step if self.step is not None else max_panel_width(math.log(self.x))
        return PanelLayout.covering(0.0, self.T, w, GL_ORDER)


def _log_zeta_on_layout(k: float, lay: PanelLayout, acc: ZetaAccuracy):
    """Tracked log zeta(k + it) at the layout nodes (t >= 0)."""
    z = zeta_line_panels(k, lay.width, lay.npanels, lay.offsets, acc, t0=lay.start).ravel()
    t = lay.nodes().ravel()
    z0 = complex(zeta_many([complex(k, 0.0)], acc)[0])
    pts = np.concatenate([[complex(k, 0.0)], k + 1j * t])
    vals = np.concatenate([[z0], z])
    logs = track_branch(pts, vals, complex(math.log(z0.real), 0.0), acc)
    refinements = int(np.count_nonzero(np.abs(np.log(vals[1:] / vals[:-1])) >= math.pi / 2))
    return t.reshape(lay.npanels, lay.order), logs[1:].reshape(lay.npanels, lay.order), refinements


def _folded_value(x: float, k: float, lay: PanelLayout, acc: ZetaAccuracy):
    t, logs, nref = _log_zeta_on_layout(k, lay, acc)
    s = k + 1j * t
    integrand = (np.exp(s * math.log(x)) / s * logs).real
    return float(lay.integrate(integrand)) / math.pi, nref


def vertical_integral(spec: LineIntegralSpec, acc: ZetaAccuracy = DEFAULT_ACCURACY) -> QuadratureResult:
    """I(x, k, T), folded onto [0, T] by conjugate symmetry.

    Returns the value on the halved-step rule; ``est_error`` is its
    difference from the unhalved rule.
    """
    lay = spec.layout()
    coarse, nref_c = _folded_value(spec.x, spec.k_value, lay, acc)
    fine_lay = lay.halved()
    fine, nref_f = _folded_value(spec.x, spec.k_value, fine_lay, acc)
    while spec.adaptive_eps is not None and abs(fine - coarse) > spec.adaptive_eps:
        if fine_lay.width < 1e-4:
            break
        coarse, nref_c = fine, nref_f
        fine_lay = fine_lay.halved()
        fine, nref_f = _folded_value(spec.x, spec.k_value, fine_lay, acc)
    return QuadratureResult(
        value=fine,
        nodes=fine_lay.size,
        est_error=abs(fine - coarse),
        branch_refinements=nref_c + nref_f,
    )


def vertical_integral_full_line(spec: LineIntegralSpec, acc: ZetaAccuracy = DEFAULT_ACCURACY) -> complex:
    """I(x, k, T) over [-T, T] without folding; zeta on t < 0 is evaluated
    directly and tracked separately from t = 0."""
    lay = spec.layout()
    k, x = spec.k_value, spec.x
    total = 0j
    for direction in (1.0, -1.0):
        t = direction * lay.nodes().ravel()
        pts = k + 1j * t
        z0 = complex(zeta_many([complex(k, 0.0)], acc)[0])
        vals = np.concatenate([[z0], zeta_many(pts, acc)])
        logs = track_branch(
            np.concatenate([[complex(k, 0.0)], pts]), vals,
            complex(math.log(z0.real), 0.0), acc,
        )[1:]
        integrand = np.exp(pts * math.log(x)) / pts * logs
        total += lay.integrate(integrand.reshape(lay.npanels, lay.order))
    return total / (2 * math.pi)


def kernel_h(y: float, k: float, T: float) -> float:
    """(1/2 pi i) int_{k-iT}^{k+iT} y^s/s ds on the same panel rule."""
    if not y > 0:
        raise DomainError(f"y must be positive, got {y}")
    if y == 1:
        raise DomainError("kernel is singular at y = 1 (|log y| = 0)")
    if not k > 1:
        raise DomainError(f"k must exceed 1, got {k}")
    if not T > 0:
        raise DomainError(f"T must be positive, got {T}")
    ly = math.log(y)
    lay = PanelLayout.covering(0.0, T, max_panel_width(ly), GL_ORDER)
    s = k + 1j * lay.nodes()
    return float(lay.integrate((np.exp(s * ly) / s).real)) / math.pi


def step_h(y: float) -> float:
    if y == 1:
        raise DomainError("h(1) is undefined")
    return 1.0 if y > 1 else 0.0


# --- the contour function f ------------------------------------------------

def _ray_length(target_eps: float) -> float:
    # smallest U with e^-U / U < target_eps
    u = max(1.0, -math.log(target_eps))
    while math.exp(-u) / u >= target_eps:
        u += 1.0
    return u


def _negative_ray(eps: float, U: float) -> float:
    # u = -e^v turns int_{-U}^{-eps} e^u/u du into -int_{log eps}^{log U} exp(-e^v) dv
    a, b = math.log(eps), math.log(U)
    n = max(1, math.ceil((b - a) / 0.5))
    return -float(integrate_breakpoints(lambda v: np.exp(-np.exp(v)), np.linspace(a, b, n + 1), _PATH_ORDER))


def arc_contribution(eps: float, sign: int) -> complex:
    """int e^u/u du over the half circle |u| = eps from -eps to eps, passing
    above the origin for sign = +1 and below for sign = -1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    # u = eps e^{i theta}, e^u/u du = i exp(u) dtheta, theta: sign*pi -> 0
    f = lambda th: 1j * np.exp(eps * np.exp(1j * th))
    return -complex(integrate_breakpoints(f, np.linspace(0.0, sign * math.pi, 5), _PATH_ORDER))


def _segment(eps: float, z: complex) -> complex:
    """int e^u/u du on the straight segment from eps to z."""
    d = z - eps
    length = abs(d)
    # panels graded geometrically away from the start (distance eps from 0)
    breaks = [0.0]
    step = eps / 2
    while breaks[-1] < length:
        breaks.append(min(length, breaks[-1] + min(step, 1.0)))
        step *= 2
    tau = np.array(breaks) / length
    f = lambda s: np.exp(eps + s * d) / (eps + s * d) * d
    return complex(integrate_breakpoints(f, tau, _PATH_ORDER))


def _f_at(z_end: complex, sign: int, eps_arc: float, target_eps: float) -> complex:
    U = _ray_length(target_eps)
    return _negative_ray(eps_arc, U) + arc_contribution(eps_arc, sign) + _segment(eps_arc, z_end)


def _check_arc(eps_arc: float, scale: float) -> None:
    if not eps_arc > 0:
        raise GeometryError("eps_arc must be positive")
    if eps_arc >= min(1.0, scale) / 4:
        raise GeometryError(f"eps_arc={eps_arc} must be below min(1, eta log x)/4 = {min(1.0, scale) / 4}")


def default_eps_arc(x: float, eta: float) -> float:
    return min(1.0, eta * math.log(x)) / 8


def f_path(x: float, eta: float, sign: int, eps_arc: float | None = None,
           target_eps: float = 1e-12) -> complex:
    """f(1 + sign*i*eta) by quadrature along the deformed path."""
    if not x > 2:
        raise DomainError(f"x must exceed 2, got {x}")
    if not eta > 0:
        raise DomainError(f"eta must be positive, got {eta}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if eps_arc is None:
        eps_arc = default_eps_arc(x, eta)
    _check_arc(eps_arc, eta * math.log(x))
    return _f_at(complex(1.0, sign * eta) * math.log(x), sign, eps_arc, target_eps)


def principal_averages(x: float, eta_sequence) -> list[complex]:
    return [(f_path(x, e, 1) + f_path(x, e, -1)) / 2 for e in eta_sequence]


def _extrapolate_to_zero(h2: np.ndarray, vals: np.ndarray) -> float:
    # Neville: interpolating polynomial in eta^2, evaluated at 0
    p = list(vals)
    n = len(p)
    for m in range(1, n):
        for i in range(n - m):
            p[i] = (h2[i + m] * p[i] - h2[i] * p[i + 1]) / (h2[i + m] - h2[i])
    return float(p[0])


def f1_principal(x: float, eta_sequence) -> float:
    """Richardson limit of (f(1+i eta) + f(1-i eta))/2 as eta -> 0.

    The average is even in eta, so extrapolation runs in eta^2.
    """
    etas = np.asarray(list(eta_sequence), dtype=float)
    if etas.size < 3:
        raise ValueError("need at least three eta values")
    if np.any(etas <= 0) or np.any(np.diff(etas) >= 0):
        raise ValueError("eta_sequence must be strictly decreasing positives")
    avgs = principal_averages(x, etas)
    worst = max(abs(a.imag) for a in avgs)
    if worst >= 1e-8:
        raise ArithmeticError(f"principal-value averages not real: |Im| = {worst:.2e}")
    return _extrapolate_to_zero(etas**2, np.array([a.real for a in avgs]))


def finite_difference_f(x: float, r0: complex, h: float, eps_arc: float | None = None) -> complex:
    """(f(r0 + h) - f(r0 - h)) / 2h with the endpoint shifted along the reals."""
    r0 = complex(r0)
    eta = abs(r0.imag)
    if r0 == 0 or eta == 0:
        raise DomainError("r0 must lie off the real axis")
    if not 0 < h < min(1.0, eta) / 4:
        raise DomainError(f"step h={h} too large relative to Im r0 = {eta}")
    sign = 1 if r0.imag > 0 else -1
    lx = math.log(x)
    if eps_arc is None:
        eps_arc = default_eps_arc(x, eta)
    _check_arc(eps_arc, eta * lx)
    fp = _f_at((r0 + h) * lx, sign, eps_arc, 1e-14)
    fm = _f_at((r0 - h) * lx, sign, eps_arc, 1e-14)
    return (fp - fm) / (2 * h)
