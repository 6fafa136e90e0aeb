"""Evaluation, zeros, extrema and bounds of the (2, 2) rows."""

import math
from fractions import Fraction

import pytest

from blockcheb.analysis import (bound_check, closed_form_zeros, evaluate,
                                evaluate_exact_at_float, extrema,
                                monic_sup_norm, numeric_zeros,
                                trig_form_residual)
from blockcheb.errors import ConvergenceError, InvalidConfigError
from blockcheb.polyfamily import (Family, IntPolynomial, P_FAMILY, U_FAMILY,
                                  build_definitional)


# ------------------------------------------------------------- evaluation

def test_evaluate_stays_exact_for_exact_input():
    p4 = build_definitional(4, P_FAMILY)
    assert evaluate(p4, 1) == 0
    assert evaluate(p4, 0) == 1
    assert evaluate(p4, Fraction(1, 2)) == 0
    assert isinstance(evaluate(p4, Fraction(1, 3)), Fraction)
    assert evaluate(build_definitional(3, U_FAMILY), 1) == 4


def test_evaluate_exact_at_float_is_dyadic_exact():
    p4 = build_definitional(4, P_FAMILY)
    assert evaluate_exact_at_float(p4, 0.5) == 0
    assert evaluate_exact_at_float(p4, 1.0) == 0
    # 0.1 is not 1/10 as a double; the exact evaluator must see the
    # double, not the decimal.
    x = 0.1
    frac = Fraction(x)
    assert evaluate_exact_at_float(p4, x) == \
        4 * frac ** 4 - 5 * frac ** 2 + 1


def test_evaluate_empty_polynomial():
    assert evaluate(IntPolynomial(), 3) == 0
    assert evaluate_exact_at_float(IntPolynomial(), 0.7) == 0


# ---------------------------------------------------------- trig residual

def test_trig_form_residual_small():
    for n in (3, 7, 12, 20, 25):
        worst = max(abs(trig_form_residual(n, math.pi * (j + 0.5) / 200))
                    for j in range(200))
        assert worst <= 1e-12


def test_trig_form_requires_n3():
    with pytest.raises(InvalidConfigError):
        trig_form_residual(2, 0.5)


# ------------------------------------------------------------------ zeros

def test_closed_form_zeros_small_rows():
    assert closed_form_zeros(3).roots == (-1.0, 0.0, 1.0)
    z4 = closed_form_zeros(4)
    third = math.cos(math.pi / 3)  # 0.500...01, the rounded cos, not 1/2
    assert z4.roots == (-1.0, -third, third, 1.0)
    assert z4.multiplicities == (1, 1, 1, 1)
    z5 = closed_form_zeros(5)
    assert z5.count == 5
    assert z5.roots[1] == pytest.approx(-math.sqrt(2) / 2, abs=1e-15)
    assert z5.roots[2] == 0.0


def test_closed_form_zeros_mirror_symmetry():
    for n in range(3, 21):
        roots = closed_form_zeros(n).roots
        assert len(roots) == n
        for a, b in zip(roots, reversed(roots)):
            assert a == -b  # exact float negation, not approximate


def test_closed_form_zeros_require_n3():
    with pytest.raises(InvalidConfigError):
        closed_form_zeros(2)


def test_numeric_zeros_match_closed_form():
    for n in (3, 4, 5, 10, 17, 20):
        poly = build_definitional(n, P_FAMILY)
        numeric = numeric_zeros(poly, P_FAMILY)
        closed = closed_form_zeros(n)
        assert numeric.count == closed.count
        for a, b in zip(numeric.roots, closed.roots):
            assert abs(a - b) <= 1e-10


def test_numeric_zeros_double_root_at_origin():
    rs = numeric_zeros(build_definitional(2, P_FAMILY), P_FAMILY)
    assert rs.roots == (0.0,)
    assert rs.multiplicities == (2,)


def test_numeric_zeros_without_family_hint():
    rs = numeric_zeros(IntPolynomial((-2, 0, 1)))  # x^2 - 2
    assert len(rs.roots) == 2
    assert rs.roots[0] == pytest.approx(-math.sqrt(2), abs=1e-12)
    assert rs.roots[1] == pytest.approx(math.sqrt(2), abs=1e-12)


def test_numeric_zeros_cubic_family_start():
    rs = numeric_zeros(build_definitional(3, Family(3, 2)), Family(3, 2))
    assert rs.roots == (0.0,)
    assert rs.multiplicities == (3,)


def test_numeric_zeros_error_paths():
    with pytest.raises(InvalidConfigError):
        numeric_zeros(IntPolynomial())
    # x^2 + 1 has no real roots, so a claimed full (2,2) root set of
    # degree 2 cannot be assembled.
    with pytest.raises(ConvergenceError):
        numeric_zeros(IntPolynomial((1, 0, 1)), P_FAMILY)


# ---------------------------------------------------------------- extrema

def test_extrema_endpoints_and_counts():
    for n in range(3, 13):
        points = extrema(n)
        assert points[0] == (0.0, 1.0)
        assert points[-1] == (math.pi, -1.0)
        assert len(points) == n + 1
        thetas = [t for t, _ in points]
        assert thetas == sorted(thetas)


def test_extrema_of_cubic_at_inverse_sqrt3():
    interior = [x for t, x in extrema(3) if 0.0 < t < math.pi]
    assert len(interior) == 2
    assert interior[0] == pytest.approx(1 / math.sqrt(3), abs=1e-10)
    assert interior[1] == pytest.approx(-1 / math.sqrt(3), abs=1e-10)


def test_extrema_even_row_passes_through_origin():
    interior = [(t, x) for t, x in extrema(4) if 0.0 < t < math.pi]
    middle = interior[len(interior) // 2]
    assert middle == (math.pi / 2, 0.0)


def test_extrema_satisfy_tangent_equation():
    for n in (3, 4, 5, 8, 11):
        for theta, _ in extrema(n):
            if theta in (0.0, math.pi):
                continue
            residual = (n - 1) * math.sin(theta) * math.cos((n - 1) * theta) \
                + math.cos(theta) * math.sin((n - 1) * theta)
            assert abs(residual) <= 1e-8


def test_extrema_require_n3():
    with pytest.raises(InvalidConfigError):
        extrema(2)


# ----------------------------------------------------------------- bounds

def test_unit_circle_bound_sampled():
    for n in (3, 4, 7, 12, 20):
        assert bound_check(n, samples=2000) <= 1 + 1e-12


def test_monic_sup_norm_sandwich():
    # Within a factor two of the Chebyshev minimum, but never below it.
    for n in (3, 4, 5, 9, 14, 20):
        sup = monic_sup_norm(n)
        assert sup <= 2.0 ** (2 - n) + 1e-12
        assert sup >= 2.0 ** (1 - n) - 1e-12


def test_bounds_require_n3():
    with pytest.raises(InvalidConfigError):
        bound_check(2)
    with pytest.raises(InvalidConfigError):
        monic_sup_norm(2)
