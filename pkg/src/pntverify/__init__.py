"""Numerical verification toolkit for the prime number theorem.

Exact prime counts, an Euler-Maclaurin zeta engine with branch-tracked
logarithms, Perron-integral quadrature and an error harness comparing the
three against li(x).
"""
__version__ = "0.1.0"
