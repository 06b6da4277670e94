"""|I(x, k, T) - J(x)| as T doubles, against the x log x / T envelope."""
import math

from pntverify.perron import LineIntegralSpec, vertical_integral
from pntverify.primes import riemann_j, sieve_primes


def main(xs=(10.5, 100.5), Ts=(625.0, 1250.0, 2500.0, 5000.0)):
    table = sieve_primes(1000)
    print(f"{'x':>7} {'T':>7} {'integral':>14} {'|I-J|':>10} {'x log x/T':>10} {'ratio':>7}")
    for x in xs:
        J = float(riemann_j(x, table).exact)
        for T in Ts:
            r = vertical_integral(LineIntegralSpec(x=x, T=T))
            err = abs(r.value - J)
            env = x * math.log(x) / T
            print(f"{x:7g} {T:7g} {r.value:14.9f} {err:10.2e} {env:10.2e} {err / env:7.3f}")


if __name__ == "__main__":
    main()
