"""Logarithmic and exponential integrals.

li(x) is the principal value of int_0^x dt/log t, evaluated as Ei(log x)
with Ei(u) = gamma + log|u| + sum_{n>=1} u^n / (n n!).  The complex
version keeps the same excision of the real-axis singularity, which is
what li(x^{1 +- i eta}) means in the contour lemma: continuous from both
half-planes onto the positive real axis.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import DomainError

EULER_GAMMA = 0.57721566490153286061
_SERIES_TOL = 1e-17
_MAX_TERMS = 2000


def _ein_series(z: complex) -> complex:
    """sum_{n>=1} z^n / (n n!), each part summed with math.fsum."""
    term = z  # z^n / n!
    incs = []
    peak = 0.0
    for n in range(1, _MAX_TERMS):
        inc = term / n
        incs.append(inc)
        peak = max(peak, abs(inc))
        if n > abs(z) and abs(inc) <= _SERIES_TOL * peak:
            break
        term *= z / (n + 1)
    else:
        raise ArithmeticError(f"Ei series did not converge at z = {z}")
    return complex(math.fsum(c.real for c in incs), math.fsum(c.imag for c in incs))


def _e1_continued_fraction(u: float) -> float:
    """E1(u) for u >= 1 by the modified Lentz algorithm."""
    tiny = 1e-300
    b = u + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 1000):
        a = -i * i
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h * math.exp(-u)


def ei_real(u: float) -> float:
    """Principal-value exponential integral Ei(u), u != 0."""
    if u == 0:
        raise DomainError("Ei(0) diverges")
    if u < -2.0:
        # the alternating series cancels badly for large negative u
        return -_e1_continued_fraction(-u)
    return EULER_GAMMA + math.log(abs(u)) + _ein_series(complex(u)).real


def li_real(x: float) -> float:
    """Principal-value logarithmic integral li(x), x >= 0, x != 1."""
    if x < 0:
        raise DomainError(f"li(x) needs x >= 0, got {x}")
    if x == 0:
        return 0.0
    if x == 1:
        raise DomainError("li(1) diverges")
    return ei_real(math.log(x))


def ei_complex(z: complex, branch_sign: int = 1) -> complex:
    """gamma + log z + sum z^n/(n n!) with the real-axis excision.

    Off the real axis and on the positive real axis the principal log is
    used, so the value is continuous from both sides there.  On the
    negative real axis ``branch_sign`` says which side of the cut z is
    taken on (+1 above, -1 below).
    """
    z = complex(z)
    if z == 0:
        raise DomainError("Ei(0) is singular")
    if branch_sign not in (1, -1):
        raise ValueError("branch_sign must be +1 or -1")
    if z.imag == 0 and z.real < 0:
        log_z = complex(math.log(-z.real), branch_sign * math.pi)
    else:
        log_z = cmath.log(z)
    return EULER_GAMMA + log_z + _ein_series(z)


def li_complex_power(x: float, eta: float, sign: int) -> complex:
    """li(x^{1 + sign*i*eta}) on the excised branch."""
    if not x > 1:
        raise DomainError(f"need x > 1, got {x}")
    if not eta > 0:
        raise DomainError(f"need eta > 0, got {eta}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return ei_complex(complex(1.0, sign * eta) * math.log(x), sign)


def li_array(x) -> np.ndarray:
    return np.array([li_real(float(v)) for v in np.atleast_1d(x)])
