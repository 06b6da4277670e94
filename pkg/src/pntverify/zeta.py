"""Riemann zeta by Euler-Maclaurin summation and branch-tracked log zeta.

    zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{j=1..nu} B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(1-s-2j)

The branch of log zeta is the one that is real on the real axis to the
right of 1 (where it equals the Dirichlet series sum a_n n^-s).  Anywhere
else it is obtained by continuation along a path; the principal logarithm
is only used for increments between nearby nodes.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numba
import numpy as np

from .errors import BranchTrackingError, NearZeroError, OutOfRegionError, PoleError

TWO_PI = 2.0 * math.pi


def _bernoulli(nmax: int) -> list[Fraction]:
    # sum_{k=0}^{n} binom(n+1, k) B_k = 0, B_0 = 1
    b = [Fraction(1)]
    for n in range(1, nmax + 1):
        acc = sum((math.comb(n + 1, k) * b[k] for k in range(n)), Fraction(0))
        b.append(-acc / (n + 1))
    return b


BERNOULLI = _bernoulli(30)
# B_2j / (2j)! for j = 1..15
_EM_COEFFS = np.array(
    [float(BERNOULLI[2 * j] / math.factorial(2 * j)) for j in range(1, 16)]
)


@dataclass(frozen=True)
class ComplexPoint:
    sigma: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and math.isfinite(self.t)):
            raise ValueError(f"non-finite point {self.sigma} + {self.t}i")

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.t)

    @classmethod
    def of(cls, s) -> "ComplexPoint":
        if isinstance(s, ComplexPoint):
            return s
        s = complex(s)
        return cls(s.real, s.imag)


@dataclass(frozen=True)
class ZetaAccuracy:
    """Truncation parameters.  ``cutoff_n=None`` picks N from |t| per point."""

    cutoff_n: int | None = None
    bernoulli_terms: int = 8
    target_eps: float = 1e-10

    def __post_init__(self):
        if self.cutoff_n is not None and self.cutoff_n < 2:
            raise ValueError("cutoff_n must be >= 2")
        if not 1 <= self.bernoulli_terms <= 15:
            raise ValueError("bernoulli_terms must lie in [1, 15]")
        if not self.target_eps > 0:
            raise ValueError("target_eps must be positive")

    def cutoff(self, t: float) -> int:
        if self.cutoff_n is None:
            return max(16, math.ceil(1.3 * abs(t)))
        if self.cutoff_n < max(10, math.ceil(abs(t))):
            raise ValueError(
                f"cutoff_n={self.cutoff_n} too small for |t|={abs(t):g}; "
                f"need >= {max(10, math.ceil(abs(t)))}"
            )
        return self.cutoff_n

    def cutoffs(self, t: np.ndarray) -> np.ndarray:
        t = np.abs(np.asarray(t, dtype=float))
        if self.cutoff_n is None:
            return np.maximum(16, np.ceil(1.3 * t)).astype(np.int64)
        need = np.maximum(10, np.ceil(t))
        if np.any(self.cutoff_n < need):
            raise ValueError(f"cutoff_n={self.cutoff_n} too small for |t|={t.max():g}")
        return np.full(t.shape, self.cutoff_n, dtype=np.int64)


DEFAULT_ACCURACY = ZetaAccuracy()


@dataclass(frozen=True)
class BranchLog:
    value: complex  # log zeta(at) on the tracked branch
    winding: int  # (Im value - Arg zeta) / 2 pi
    at: ComplexPoint


def _check_point(s: complex) -> None:
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if not s.real > 0:
        raise OutOfRegionError(f"Re s = {s.real} <= 0 is outside the validated region")


def _em_tail(s: np.ndarray, n_cut: np.ndarray, nu: int) -> np.ndarray:
    """Everything after the head sum sum_{n<N} n^-s, vectorised over points."""
    logn = np.log(n_cut.astype(float))
    n_pow = np.exp(-s * logn)  # N^-s
    tail = n_pow * n_cut / (s - 1.0) + 0.5 * n_pow
    inv_n2 = 1.0 / (n_cut.astype(float) ** 2)
    # rising factorial s(s+1)...(s+2j-2) times N^(-s-2j+1)
    term = s * n_pow / n_cut
    corr = np.zeros_like(s)
    for j in range(1, nu + 1):
        corr = corr + _EM_COEFFS[j - 1] * term
        term = term * (s + 2 * j - 1) * (s + 2 * j) * inv_n2
    return tail + corr


@numba.njit(cache=True)
def _head_points(sig, tt, cut):
    """sum_{n<N_i} n^-s_i with Kahan compensation, arbitrary points."""
    m = sig.shape[0]
    out_re = np.zeros(m)
    out_im = np.zeros(m)
    for i in range(m):
        sr = 0.0
        si = 0.0
        cr = 0.0
        ci = 0.0
        for n in range(1, cut[i]):
            ln = math.log(n)
            amp = math.exp(-sig[i] * ln)
            ang = tt[i] * ln
            yr = amp * math.cos(ang) - cr
            yi = -amp * math.sin(ang) - ci
            zr = sr + yr
            zi = si + yi
            cr = (zr - sr) - yr
            ci = (zi - si) - yi
            sr = zr
            si = zi
        out_re[i] = sr
        out_im[i] = si
    return out_re, out_im


@numba.njit(cache=True)
def _head_panels(sigma, t0, width, offsets, cut, reseed):
    """Head sums at nodes t0 + p*width + offsets[j] on the line Re s = sigma.

    For fixed n the phase factor n^(-i t) across panels is a geometric
    sequence, advanced by one complex multiply per panel and recomputed
    exactly every ``reseed`` panels to bound drift.  ``cut`` must be
    nondecreasing in (p, j) order.
    """
    npan, m = cut.shape
    sr = np.zeros((npan, m))
    si = np.zeros((npan, m))
    cr = np.zeros((npan, m))
    ci = np.zeros((npan, m))
    oc = np.empty(m)
    os_ = np.empty(m)
    nmax = 0
    for p in range(npan):
        for j in range(m):
            if cut[p, j] > nmax:
                nmax = cut[p, j]
    p0 = 0
    for n in range(1, nmax):
        while p0 < npan and cut[p0, m - 1] <= n:
            p0 += 1
        if p0 == npan:
            break
        ln = math.log(n)
        amp = math.exp(-sigma * ln)
        for j in range(m):
            oc[j] = math.cos(offsets[j] * ln)
            os_[j] = -math.sin(offsets[j] * ln)
        rr = math.cos(width * ln)
        ri = -math.sin(width * ln)
        er = 0.0
        ei = 0.0
        for p in range(p0, npan):
            if (p - p0) % reseed == 0:
                ang = (t0 + p * width) * ln
                er = amp * math.cos(ang)
                ei = -amp * math.sin(ang)
            else:
                tmp = er * rr - ei * ri
                ei = er * ri + ei * rr
                er = tmp
            for j in range(m):
                if cut[p, j] > n:
                    yr = er * oc[j] - ei * os_[j] - cr[p, j]
                    yi = er * os_[j] + ei * oc[j] - ci[p, j]
                    zr = sr[p, j] + yr
                    zi = si[p, j] + yi
                    cr[p, j] = (zr - sr[p, j]) - yr
                    ci[p, j] = (zi - si[p, j]) - yi
                    sr[p, j] = zr
                    si[p, j] = zi
    return sr, si


def zeta_many(s, acc: ZetaAccuracy = DEFAULT_ACCURACY) -> np.ndarray:
    """Vectorised :func:`zeta_em` over an array of complex points."""
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    if np.any(s == 1):
        raise PoleError("zeta has a pole at s = 1")
    if np.any(~(s.real > 0)):
        bad = s[~(s.real > 0)][0]
        raise OutOfRegionError(f"Re s = {bad.real} <= 0 is outside the validated region")
    cut = acc.cutoffs(s.imag)
    out = _em_points(s, cut, acc.bernoulli_terms)
    if acc.cutoff_n is None:
        # raise N where the first omitted correction exceeds target_eps
        for _ in range(8):
            est = np.abs(_em_next_term(s, cut, acc.bernoulli_terms))
            bad = est > acc.target_eps * np.abs(out)
            if not bad.any():
                break
            cut = np.where(bad, 2 * cut, cut)
            out[bad] = _em_points(s[bad], cut[bad], acc.bernoulli_terms)
    return out


def _em_points(s, cut, nu):
    hr, hi = _head_points(s.real.copy(), s.imag.copy(), cut)
    return hr + 1j * hi + _em_tail(s, cut, nu)


def _em_next_term(s, n_cut, nu):
    # B_{2nu+2}/(2nu+2)! s(s+1)...(s+2nu) N^(-s-2nu-1)
    term = s * np.exp(-(s + 1) * np.log(n_cut.astype(float)))
    for i in range(1, 2 * nu + 1):
        term = term * (s + i) / n_cut
    return float(BERNOULLI[2 * nu + 2] / math.factorial(2 * nu + 2)) * term


def zeta_em(s, acc: ZetaAccuracy = DEFAULT_ACCURACY) -> complex:
    """zeta(s) for Re s > 0, s != 1."""
    s = ComplexPoint.of(s).s
    _check_point(s)
    return complex(zeta_many([s], acc)[0])


def zeta_line_panels(
    sigma: float,
    width: float,
    npanels: int,
    offsets: np.ndarray,
    acc: ZetaAccuracy = DEFAULT_ACCURACY,
    t0: float = 0.0,
) -> np.ndarray:
    """zeta(sigma + i t) at t = t0 + p*width + offsets[j], shape (npanels, m).

    Requires t0 >= 0 and offsets in [0, width] so the cutoff grows with the
    node index; nodes on the negative axis follow from conjugation.
    """
    _check_point(complex(sigma, 0.5))
    offsets = np.asarray(offsets, dtype=float)
    if t0 < 0 or offsets.min() < 0 or offsets.max() > width:
        raise ValueError("panel nodes must be nonnegative and sorted")
    t = t0 + np.arange(npanels)[:, None] * width + offsets[None, :]
    cut = acc.cutoffs(t)
    cut = np.maximum.accumulate(cut.ravel()).reshape(cut.shape)
    hr, hi = _head_panels(float(sigma), float(t0), float(width), offsets, cut, 256)
    s = sigma + 1j * t
    return hr + 1j * hi + _em_tail(s, cut, acc.bernoulli_terms)


# --- branch tracking -------------------------------------------------------

NODE_BUDGET = 2**20
REFINE_STEP = math.pi / 2
ZERO_THRESHOLD = 1e-8


def _log_step(za: complex, zb: complex) -> complex:
    return cmath.log(zb / za)


def track_branch(
    points: np.ndarray,
    values: np.ndarray,
    start_log: complex,
    acc: ZetaAccuracy = DEFAULT_ACCURACY,
    zero_threshold: float = ZERO_THRESHOLD,
    budget: int = NODE_BUDGET,
) -> np.ndarray:
    """Continue log zeta along the polyline through ``points``.

    ``values`` are zeta at ``points``; ``start_log`` is the known branch value
    at ``points[0]``.  Any step whose principal increment |log(z_b/z_a)|
    reaches pi/2 is bisected (fresh zeta evaluations) until every sub-step
    is small; the increments are then summed.  Returns the log values.
    """
    points = np.asarray(points, dtype=complex)
    values = np.asarray(values, dtype=complex)
    mod = np.abs(values)
    if np.any(mod < zero_threshold):
        i = int(np.argmax(mod < zero_threshold))
        raise NearZeroError(complex(points[i]), float(mod[i]))
    steps = np.log(values[1:] / values[:-1])
    bad = np.flatnonzero(np.abs(steps) >= REFINE_STEP)
    used = len(points)
    for i in bad:
        inc, used = _refined_increment(
            complex(points[i]), complex(points[i + 1]),
            complex(values[i]), complex(values[i + 1]),
            acc, zero_threshold, budget, used,
        )
        steps[i] = inc
    out = np.empty(len(points), dtype=complex)
    out[0] = start_log
    # imaginary parts accumulate; real part is log|zeta| exactly
    out[1:] = start_log + np.cumsum(steps)
    out.real = np.log(mod)
    return out


def _refined_increment(a, b, za, zb, acc, zero_threshold, budget, used):
    stack = [(a, b, za, zb)]
    total = 0j
    while stack:
        a, b, za, zb = stack.pop()
        d = _log_step(za, zb)
        if abs(d) < REFINE_STEP:
            total += d
            continue
        used += 1
        if used > budget:
            raise BranchTrackingError(
                f"node budget {budget} exhausted refining near s = {a}"
            )
        if abs(b - a) < 1e-14 * max(1.0, abs(a)):
            raise BranchTrackingError(f"step collapsed near s = {a}")
        m = 0.5 * (a + b)
        zm = complex(zeta_many([m], acc)[0])
        if abs(zm) < zero_threshold:
            raise NearZeroError(m, abs(zm))
        # second half pushed first so the first half is consumed first
        stack.append((m, b, zm, zb))
        stack.append((a, m, za, zm))
    return total, used


def _as_branch_logs(points, values, logs) -> list[BranchLog]:
    out = []
    for p, z, lg in zip(points, values, logs):
        wind = round((lg.imag - cmath.phase(z)) / TWO_PI)
        out.append(BranchLog(complex(lg), int(wind), ComplexPoint(p.real, p.imag)))
    return out


def log_zeta_line(
    k: float, t_grid: Sequence[float], acc: ZetaAccuracy = DEFAULT_ACCURACY
) -> list[BranchLog]:
    """Branch-tracked log zeta(k + i t) over an increasing grid starting at 0."""
    if not k > 1:
        raise OutOfRegionError(f"log_zeta_line needs k > 1, got {k}")
    t = np.asarray(t_grid, dtype=float)
    if t.size == 0 or t[0] != 0 or np.any(np.diff(t) <= 0):
        raise ValueError("t_grid must be increasing and start at 0")
    pts = k + 1j * t
    vals = zeta_many(pts, acc)
    # on the real axis the branch is the real logarithm
    start = complex(math.log(vals[0].real), 0.0)
    logs = track_branch(pts, vals, start, acc)
    return _as_branch_logs(pts, vals, logs)


def log_zeta_path(
    path: Sequence, acc: ZetaAccuracy = DEFAULT_ACCURACY, max_step: float = 0.1,
    zero_threshold: float = ZERO_THRESHOLD,
) -> list[BranchLog]:
    """log zeta along a polyline whose first vertex has Re s = 2.

    Each edge is sampled at spacing <= ``max_step``; returned BranchLogs are
    at the vertices only.  At the anchor the principal logarithm is exact
    because |log zeta(2 + it)| <= log zeta(2) < pi.
    """
    verts = [ComplexPoint.of(p).s for p in path]
    if not verts:
        raise ValueError("empty path")
    if verts[0].real != 2:
        raise ValueError("path must be anchored at a point with Re s = 2")
    for v in verts:
        _check_point(v)
    dense = [verts[0]]
    vertex_idx = [0]
    for a, b in zip(verts[:-1], verts[1:]):
        nseg = max(1, math.ceil(abs(b - a) / max_step))
        for i in range(1, nseg + 1):
            dense.append(a + (b - a) * i / nseg)
        vertex_idx.append(len(dense) - 1)
    pts = np.array(dense)
    vals = zeta_many(pts, acc)
    logs = track_branch(pts, vals, cmath.log(vals[0]), acc, zero_threshold)
    idx = np.array(vertex_idx)
    return _as_branch_logs(pts[idx], vals[idx], logs[idx])


def log_zeta_dense_path(
    pts: np.ndarray, acc: ZetaAccuracy = DEFAULT_ACCURACY,
    zero_threshold: float = ZERO_THRESHOLD,
) -> tuple[np.ndarray, np.ndarray]:
    """(zeta, log zeta) at every given point; pts[0] must have Re s = 2."""
    pts = np.asarray(pts, dtype=complex)
    if pts[0].real != 2:
        raise ValueError("path must be anchored at a point with Re s = 2")
    vals = zeta_many(pts, acc)
    return vals, track_branch(pts, vals, cmath.log(vals[0]), acc, zero_threshold)
