"""Independent reference computations used only by the tests.

Nothing here imports the code under test.
"""
import math
from fractions import Fraction

import mpmath
import numpy as np
from scipy import integrate
from scipy.special import exp1


def trial_division_primes(limit):
    out = []
    for n in range(2, limit + 1):
        r = math.isqrt(n)
        for p in out:
            if p > r:
                out.append(n)
                break
            if n % p == 0:
                break
        else:
            out.append(n)
    return out


def trial_division_mask(lo, hi, small_primes):
    """Boolean primality of lo..hi (inclusive) by trial division with
    ``small_primes``, which must cover sqrt(hi); vectorised over n."""
    n = np.arange(lo, hi + 1, dtype=np.int64)
    mask = n >= 2
    for p in small_primes:
        if p * p > hi:
            break
        mask &= (n % p != 0) | (n == p)
    return mask


def brute_j(x, primes):
    """Sum of 1/k over p^k <= x by a double loop over p and k."""
    total = Fraction(0)
    for p in primes:
        if p > x:
            break
        q, k = p, 1
        while q <= x:
            total += Fraction(1, k)
            q *= p
            k += 1
    return total


def zeta_direct(s, m=2_000_000):
    """sum_{n<=M} n^-s plus the midpoint tail integral int_{M+1/2}^inf t^-s dt."""
    n = np.arange(1, m + 1, dtype=float)
    head = math.fsum(n**-s)
    return head + (m + 0.5) ** (1 - s) / (s - 1)


def li_quadrature(x):
    """Principal value of int_0^x dt/log t.

    1/log t - 1/(t-1) is bounded near t = 1, and PV int_0^x dt/(t-1) = log|x-1|.
    """
    g = lambda t: 1.0 / math.log(t) - 1.0 / (t - 1.0) if t not in (0.0, 1.0) else (
        0.5 if t == 1.0 else 1.0)
    pts = [1.0] if 0 < 1 < x else None
    val, _ = integrate.quad(g, 0.0, x, points=pts, limit=500, epsabs=1e-13, epsrel=1e-13)
    return val + math.log(abs(x - 1.0))


def ei_path_quadrature(z, sign, eps=0.05, U=60.0):
    """int e^u/u du from -U to z, passing the origin on a half circle of
    radius eps above (sign=+1) or below (-1); mpmath adaptive quadrature."""
    f = lambda u: mpmath.exp(u) / u
    ray = mpmath.quad(f, [-U, -10, -1, -eps])
    arc = mpmath.quad(lambda th: 1j * mpmath.exp(eps * mpmath.exp(1j * th)),
                      [sign * mpmath.pi, 0])
    seg = mpmath.quad(f, [eps, z])
    return complex(ray + arc + seg)


def truncated_kernel(y, k, T):
    """(1/2 pi i) int_{k-iT}^{k+iT} y^s/s ds by QUADPACK's oscillatory rule."""
    u = math.log(y)
    a, _ = integrate.quad(lambda t: k / (k * k + t * t), 0, T, weight="cos", wvar=u, limit=4000)
    b, _ = integrate.quad(lambda t: t / (k * k + t * t), 0, T, weight="sin", wvar=u, limit=4000)
    return y**k / math.pi * (a + b)


def perron_prediction(x, T, primes, nmax):
    """sum_n a_n h_T(x/n) over prime powers n < nmax: the exact value of the
    truncated Perron integral up to the omitted tail n >= nmax."""
    k = 1 + 1 / math.log(x)
    total = 0.0
    for p in primes:
        if p >= nmax:
            break
        q, m = p, 1
        while q < nmax:
            total += truncated_kernel(x / q, k, T) / m
            q *= p
            m += 1
    return total


def prime_sum_log_zeta(k, primes):
    """sum_p sum_m 1/(m p^{mk}) = -sum_p log(1 - p^-k) over the given primes."""
    p = np.asarray(primes, dtype=float)
    return math.fsum(-np.log1p(-(p**-k)))


def prime_tail_estimate(k, P, mmax=8):
    """int_P^inf sum_m t^{-mk}/(m log t) dt: prime-density estimate of the omitted tail."""
    return sum(exp1((m * k - 1) * math.log(P)) / m for m in range(1, mmax + 1))


def prime_tail_bound(k, P):
    """Rigorous: sum_{p>P} -log(1-p^-k) <= sum_{n>P} n^-k/(1-P^-k) <= P^{1-k}/((k-1)(1-P^-k))."""
    return P ** (1 - k) / ((k - 1) * (1 - P**-k))


def siegel_zero_bracket(lo, hi, steps=60):
    """Locate a sign change of Hardy's Z(t) (mpmath) by coarse scan + bisection."""
    ts = np.linspace(lo, hi, steps + 1)
    zs = [float(mpmath.siegelz(t)) for t in ts]
    for a, b, za, zb in zip(ts[:-1], ts[1:], zs[:-1], zs[1:]):
        if za * zb < 0:
            for _ in range(60):
                m = 0.5 * (a + b)
                zm = float(mpmath.siegelz(m))
                if za * zm <= 0:
                    b, zb = m, zm
                else:
                    a, za = m, zm
            return 0.5 * (a + b)
    return None
