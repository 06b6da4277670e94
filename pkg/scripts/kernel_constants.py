"""Largest observed |h_T(y) - step(y)| * T|log y| / y^k over a y grid.

This is the empirical constant of the kernel truncation bound; the
harness ceiling is 5.
"""
import math

import numpy as np

from pntverify.perron import kernel_h


def main(k=1.1):
    ys = np.concatenate([np.geomspace(0.05, 0.95, 40), np.geomspace(1.05, 20, 40)])
    for T in (100.0, 1000.0, 5000.0):
        worst = 0.0
        for y in ys:
            step = 1.0 if y > 1 else 0.0
            c = abs(kernel_h(y, k, T) - step) * T * abs(math.log(y)) / y**k
            worst = max(worst, c)
        print(f"T={T:6g} max constant={worst:.4f}")


if __name__ == "__main__":
    main()
