"""Fit |pi(x) - li(x)| ~ x exp(-c sqrt(log x)) on half-odd points up to 10^7."""
from pntverify import harness
from pntverify.primes import sieve_primes


def main():
    xs = [10**e + 0.5 for e in range(2, 8)]
    pts = harness.direct_points(xs, sieve_primes(10**7 + 1))
    for x, p, l in pts:
        print(f"x={x:<12.1f} pi={p:<8d} li={l:<16.6f} |pi-li|/envelope={abs(p - l) / harness.pnt_envelope(x):.4f}")
    fit = harness.fit_c(pts)
    print(f"c_hat={fit.c_hat:.4f} rms residual={fit.residual:.4f} points={fit.points_used}")


if __name__ == "__main__":
    main()
