"""Empirical remainders of the Perron representation of pi(x).

For half-odd x and k = 1 + 1/log x:

    r1 = J(x)  - I(x, k, T)     bounded by x^k/(T(k-1)) + x log x/T + x/(T|x-N|)
    r2 = pi(x) - I(x, k, T)     bounded by x log x/T + sqrt(x) log log x
    r3 = I(x, k, T) - li(x)     bounded by x log^2 T exp(-A log x / log T)

r1 and r2 are kept as exact rationals (the float integral converted
exactly), so r2 - r1 = pi - J holds with no rounding.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, IllConditionedError, PNTError
from .logint import li_real
from .perron import LineIntegralSpec, default_k, vertical_integral
from .primes import PrimeTable, count_pi, riemann_j, sieve_primes
from .serialize import dumps_array, dumps_csv
from .zeta import DEFAULT_ACCURACY, ZetaAccuracy, log_zeta_dense_path

CSV_COLUMNS = [
    "x", "N", "k", "T", "pi", "j_num", "j_den", "li", "integral",
    "r1", "r2", "r3", "bound_r1", "bound_r2", "bound_r3", "regime",
]

DEFAULT_A = 0.1


@dataclass(frozen=True)
class Calibration:
    """Ceilings on the empirical constants hidden in the O-bounds."""

    remainder_ceiling: float = 10.0
    kernel_ceiling: float = 5.0


@dataclass(frozen=True)
class RemainderRecord:
    x: float
    N_nearest: int
    k: float
    T: float
    pi_x: int
    j_x: Fraction
    li_x: float
    integral: float
    r1_exact: Fraction
    r2_exact: Fraction
    r3_emp: float
    bound_r1: float
    bound_r2: float
    bound_r3: float
    regime: str

    @property
    def r1_emp(self) -> float:
        return float(self.r1_exact)

    @property
    def r2_emp(self) -> float:
        return float(self.r2_exact)

    def row(self) -> dict:
        return {
            "x": float(self.x), "N": self.N_nearest, "k": self.k, "T": float(self.T),
            "pi": self.pi_x, "j_num": self.j_x.numerator, "j_den": self.j_x.denominator,
            "li": self.li_x, "integral": self.integral,
            "r1": self.r1_emp, "r2": self.r2_emp, "r3": self.r3_emp,
            "bound_r1": self.bound_r1, "bound_r2": self.bound_r2, "bound_r3": self.bound_r3,
            "regime": self.regime,
        }


@dataclass(frozen=True)
class SweepConfig:
    x_grid: Sequence[float]
    t_mode: str = "fixed"  # "fixed" or "policy"
    T: float | None = 2000.0
    A: float = DEFAULT_A
    out_format: str = "csv"
    calibration: Calibration = field(default_factory=Calibration)

    def __post_init__(self):
        if self.t_mode not in ("fixed", "policy"):
            raise ValueError(f"t_mode must be 'fixed' or 'policy', got {self.t_mode!r}")
        if self.t_mode == "fixed" and (self.T is None or not self.T >= 2):
            raise ValueError("fixed t_mode needs T >= 2")
        if not 0 < self.A <= 1:
            raise ValueError(f"A must lie in (0, 1], got {self.A}")
        if self.out_format not in ("csv", "json"):
            raise ValueError(f"out_format must be csv or json, got {self.out_format!r}")
        for x in self.x_grid:
            if not x > 2:
                raise ValueError(f"grid entries must exceed 2, got {x}")


@dataclass(frozen=True)
class FitResult:
    c_hat: float
    residual: float
    points_used: int


class SweepError(PNTError):
    def __init__(self, x: float, cause: Exception):
        self.x = x
        super().__init__(f"sweep failed at x = {x}: {cause}")


def is_half_odd(x) -> bool:
    y = 2 * Fraction(x)
    return y.denominator == 1 and y.numerator % 2 == 1


def half_odd(v: float) -> float:
    """Snap to the half-odd number floor(v) + 1/2."""
    return math.floor(v) + 0.5


def policy_T(x: float) -> float:
    """T = exp(sqrt(log x))."""
    if not x > math.e:
        raise DomainError(f"policy_T needs x > e, got {x}")
    return math.exp(math.sqrt(math.log(x)))


def bound_r1(x: float, k: float, T: float, N: int) -> float:
    return x**k / (T * (k - 1)) + x * math.log(x) / T + x / (T * abs(x - N))


def bound_r2(x: float, T: float) -> float:
    return x * math.log(x) / T + math.sqrt(x) * math.log(math.log(x))


def bound_r3(x: float, T: float, A: float) -> float:
    lt = math.log(T)
    return x * lt * lt * math.exp(-A * math.log(x) / lt)


def _regime(mode: str, b2: float, x: float, li_x: float) -> str:
    # the bound is useless once it exceeds the second-order term of li
    signal = li_x - x / math.log(x)
    return f"{mode}+bound_exceeds_signal" if b2 > signal else mode


def _table_for(x: float, table: PrimeTable | None) -> PrimeTable:
    if table is not None and table.covers(x):
        return table
    return sieve_primes(max(2, math.floor(x)))


def measure_remainders(
    x: float, T: float, A: float = DEFAULT_A, table: PrimeTable | None = None,
    acc: ZetaAccuracy = DEFAULT_ACCURACY, mode: str = "fixed",
) -> RemainderRecord:
    if not is_half_odd(x) or not x > 2:
        raise DomainError(f"x must be a half-odd number above 2, got {x}")
    table = _table_for(x, table)
    k = default_k(x)
    N = math.floor(x)  # |x - N| = 1/2; ties resolved downward
    pi_x = count_pi(x, table)
    j_x = riemann_j(x, table).exact
    li_x = li_real(x)
    integral = vertical_integral(LineIntegralSpec(x=x, T=T), acc).value
    exact_int = Fraction(integral)
    b2 = bound_r2(x, T)
    return RemainderRecord(
        x=x, N_nearest=N, k=k, T=T, pi_x=pi_x, j_x=j_x, li_x=li_x,
        integral=integral,
        r1_exact=j_x - exact_int,
        r2_exact=pi_x - exact_int,
        r3_emp=integral - li_x,
        bound_r1=bound_r1(x, k, T, N),
        bound_r2=b2,
        bound_r3=bound_r3(x, T, A),
        regime=_regime(mode, b2, x, li_x),
    )


def sweep(cfg: SweepConfig, table: PrimeTable | None = None,
          acc: ZetaAccuracy = DEFAULT_ACCURACY) -> list[RemainderRecord]:
    """One record per grid entry, in grid order."""
    if len(cfg.x_grid) == 0:
        raise ValueError("x_grid is empty")
    table = _table_for(max(cfg.x_grid), table)
    out = []
    for x in cfg.x_grid:
        try:
            T = policy_T(x) if cfg.t_mode == "policy" else cfg.T
            out.append(measure_remainders(x, T, cfg.A, table, acc, cfg.t_mode))
        except Exception as e:
            raise SweepError(x, e) from e
    return out


def emit(records: Sequence[RemainderRecord], out_format: str = "csv") -> str:
    rows = [r.row() for r in records]
    if out_format == "csv":
        return dumps_csv(CSV_COLUMNS, rows)
    if out_format == "json":
        return dumps_array(rows) + "\n"
    raise ValueError(f"unknown format {out_format!r}")


def read_csv_points(text: str) -> list[tuple[float, int, float]]:
    """(x, pi, li) triples from CSV emitted by :func:`emit`."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [(float(r["x"]), int(r["pi"]), float(r["li"])) for r in reader]


def envelope_factors(rec: RemainderRecord) -> tuple[float, float]:
    """|r1|/bound_r1 and |r2|/bound_r2: the empirical O-constants."""
    return abs(rec.r1_emp) / rec.bound_r1, abs(rec.r2_emp) / rec.bound_r2


def direct_points(xs: Iterable[float], table: PrimeTable | None = None) -> list[tuple[float, int, float]]:
    xs = list(xs)
    table = _table_for(max(xs), table)
    return [(x, count_pi(x, table), li_real(x)) for x in xs]


def pnt_envelope(x: float, c: float = 1.0) -> float:
    return x * math.exp(-c * math.sqrt(math.log(x)))


def fit_c(data) -> FitResult:
    """Least-squares slope of log(|pi - li|/x) against -sqrt(log x).

    ``data`` is a sequence of RemainderRecords or of (x, pi, li) triples.
    Points with x < 100 or pi == li are dropped.
    """
    pts = []
    for d in data:
        if isinstance(d, RemainderRecord):
            pts.append((float(d.x), d.pi_x, d.li_x))
        else:
            x, p, l = d
            pts.append((float(x), p, float(l)))
    pts = [(x, p, l) for x, p, l in pts if x >= 100 and p != l]
    if len(pts) < 3:
        raise ValueError(f"fit_c needs at least 3 usable points, got {len(pts)}")
    x = np.array([p[0] for p in pts])
    diff = np.array([abs(p[1] - p[2]) for p in pts])
    u = -np.sqrt(np.log(x))
    if np.ptp(u) < 1e-9:
        raise IllConditionedError("abscissae -sqrt(log x) have no spread")
    y = np.log(diff / x)
    design = np.column_stack([u, np.ones_like(u)])
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    resid = float(np.sqrt(np.mean((design @ coef - y) ** 2)))
    return FitResult(c_hat=float(coef[0]), residual=resid, points_used=len(pts))


def scan_partial_r(T: float, A: float = DEFAULT_A, acc: ZetaAccuracy = DEFAULT_ACCURACY,
                   step: float = 0.05) -> float:
    """max |log zeta(s)| / log|t| over the left leg Re s = 1 - A/log T, 2 <= |t| <= T.

    Each half of the leg is reached from the anchor 2 +- 2i by a horizontal
    run, then followed vertically; log zeta is continued along the way.
    """
    if not T >= 10:
        raise DomainError(f"scan needs T >= 10, got {T}")
    if not A > 0:
        raise DomainError(f"A must be positive, got {A}")
    sigma = 1.0 - A / math.log(T)
    if not sigma > 0.9:
        raise DomainError(f"1 - A/log T = {sigma:.4f} leaves the validated strip (> 0.9)")
    n_h = max(2, math.ceil((2.0 - sigma) / step))
    n_v = max(2, math.ceil((T - 2.0) / step))
    worst = 0.0
    for direction in (1.0, -1.0):
        horiz = np.linspace(2.0, sigma, n_h + 1) + 1j * 2.0 * direction
        vert = sigma + 1j * direction * np.linspace(2.0, T, n_v + 1)
        pts = np.concatenate([horiz, vert[1:]])
        _, logs = log_zeta_dense_path(pts, acc)
        leg = logs[len(horiz) - 1:]
        ratio = np.abs(leg) / np.log(np.abs(vert.imag))
        if not np.all(np.isfinite(ratio)):
            raise ArithmeticError("non-finite ratio on the left leg")
        worst = max(worst, float(ratio.max()))
    return worst
