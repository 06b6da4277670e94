import math
from fractions import Fraction

import numpy as np
import pytest

from oracles import perron_prediction, trial_division_primes, truncated_kernel
from pntverify.errors import DomainError, GeometryError
from pntverify.logint import li_complex_power, li_real
from pntverify.perron import (
    LineIntegralSpec, arc_contribution, f1_principal, f_path, finite_difference_f, kernel_h,
    principal_averages, step_h, vertical_integral, vertical_integral_full_line,
)

PRIMES = trial_division_primes(20_000)
KERNEL_C = 5.0  # calibration ceiling on the kernel's O-constant


@pytest.mark.parametrize("y", [0.5, 0.9, 1.1, 2.0])
def test_kernel_sandwich(y):
    k, T = 1.1, 1000
    v = kernel_h(y, k, T)
    assert abs(v - step_h(y)) <= KERNEL_C * y**k / (T * abs(math.log(y)))
    assert v == pytest.approx(truncated_kernel(y, k, T), abs=1e-10)


def test_kernel_examples():
    assert abs(kernel_h(2, 1.1, 1000) - 1) < 0.004
    assert abs(kernel_h(0.5, 1.1, 1000)) < 0.004
    with pytest.raises(DomainError):
        kernel_h(1, 1.1, 1000)
    with pytest.raises(DomainError):
        kernel_h(2, 1.0, 1000)


def test_spec_defaults_and_validation():
    s = LineIntegralSpec(x=10.5, T=100)
    assert s.k_value - 1 - 1 / math.log(10.5) == 0
    assert LineIntegralSpec(x=10.5, T=100, k=1.7).k_value == 1.7
    with pytest.raises(DomainError):
        LineIntegralSpec(x=10.5, T=1)
    with pytest.raises(DomainError):
        LineIntegralSpec(x=1.5, T=100)
    with pytest.raises(DomainError):
        LineIntegralSpec(x=10.5, T=100, k=1.0)
    lay = s.layout()
    assert lay.width <= min(0.25, 0.5 / math.log(10.5))


@pytest.mark.parametrize("x, J", [(2.5, Fraction(1)), (10.5, Fraction(16, 3))])
def test_vertical_integral_matches_kernel_sum(x, J):
    T = 300
    r = vertical_integral(LineIntegralSpec(x=x, T=T))
    pred = perron_prediction(x, T, PRIMES, 2000)
    # the omitted n >= 2000 tail is far below this
    assert r.value == pytest.approx(pred, abs=2e-4)
    assert abs(r.value - float(J)) <= 10 * x * math.log(x) / T
    assert r.est_error < 1e-8 and r.nodes >= 2


def test_vertical_integral_2000():
    r = vertical_integral(LineIntegralSpec(x=10.5, T=2000))
    assert abs(r.value - 16 / 3) <= 10 * 10.5 * math.log(10.5) / 2000
    assert r.value == pytest.approx(perron_prediction(10.5, 2000, PRIMES, 3000), abs=2e-5)


def test_folding_matches_full_line():
    spec = LineIntegralSpec(x=10.5, T=200)
    folded = vertical_integral(spec)
    full = vertical_integral_full_line(spec)
    assert abs(full.imag) < 1e-10
    assert abs(full.real - folded.value) <= max(folded.est_error, 1e-11)


def test_node_density_sufficient():
    base = LineIntegralSpec(x=100.5, T=300)
    r = vertical_integral(base)
    finer = vertical_integral(LineIntegralSpec(x=100.5, T=300, step=base.layout().width / 2))
    assert abs(finer.value - r.value) <= 2 * r.est_error + 1e-12


def test_adaptive_policy_halves_until_converged():
    r = vertical_integral(LineIntegralSpec(x=10.5, T=100, step=2.0, adaptive_eps=1e-9))
    assert r.est_error <= 1e-9
    ref = vertical_integral(LineIntegralSpec(x=10.5, T=100))
    assert r.value == pytest.approx(ref.value, abs=1e-8)


def test_f_path_lemma():
    lhs = f_path(10.5, 0.5, 1)
    assert abs(lhs - (li_complex_power(10.5, 0.5, 1) - 1j * math.pi)) < 1e-6
    assert abs(f_path(10.5, 0.5, -1) - (li_complex_power(10.5, 0.5, -1) + 1j * math.pi)) < 1e-6


def test_f_path_conjugate_symmetry():
    for x, eta in [(10.5, 0.5), (3.0, 0.2), (100.5, 1.5)]:
        assert f_path(x, eta, -1) == pytest.approx(f_path(x, eta, 1).conjugate(), abs=1e-12)


def test_f_path_independent_of_arc_radius():
    vals = [f_path(10.5, 0.5, 1, eps) for eps in (0.2, 0.05, 0.001)]
    assert max(abs(v - vals[0]) for v in vals) < 1e-11


def test_arc_converges_linearly():
    errs = [abs(arc_contribution(e, 1) + 1j * math.pi) for e in (0.1, 0.05, 0.025)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[0] / errs[1] == pytest.approx(2, rel=0.05)
    assert errs[1] / errs[2] == pytest.approx(2, rel=0.05)
    assert arc_contribution(0.01, -1) == pytest.approx(arc_contribution(0.01, 1).conjugate())


def test_f_path_geometry_errors():
    with pytest.raises(GeometryError):
        f_path(10.5, 0.5, 1, eps_arc=0.5)
    with pytest.raises(GeometryError):
        f_path(10.5, 0.5, 1, eps_arc=0)
    with pytest.raises(DomainError):
        f_path(10.5, 0, 1)


@pytest.mark.parametrize("x", [10.5, 100.5])
def test_principal_value(x):
    etas = [0.2, 0.1, 0.05]
    assert f1_principal(x, etas) == pytest.approx(li_real(x), abs=1e-3)
    assert all(abs(a.imag) < 1e-8 for a in principal_averages(x, etas))


def test_principal_value_rejects():
    with pytest.raises(ValueError):
        f1_principal(10.5, [0.05, 0.1, 0.2])
    with pytest.raises(ValueError):
        f1_principal(10.5, [0.2, 0.1])


@pytest.mark.parametrize("x, r0", [(10.5, 1 + 0.5j), (2.5, 1 + 1j)])
def test_finite_difference(x, r0):
    exact = x**r0 / r0
    assert abs(finite_difference_f(x, r0, 1e-3) - exact) < 1e-4


def test_finite_difference_is_second_order():
    x, r0 = 10.5, 1 + 0.5j
    exact = x**r0 / r0
    d1 = abs(finite_difference_f(x, r0, 1e-3) - exact)
    d2 = abs(finite_difference_f(x, r0, 5e-4) - exact)
    assert d1 / d2 == pytest.approx(4, rel=0.05)


def test_finite_difference_step_errors():
    with pytest.raises(DomainError):
        finite_difference_f(10.5, 1 + 0.5j, 0.2)
    with pytest.raises(DomainError):
        finite_difference_f(10.5, 1.0, 1e-3)
