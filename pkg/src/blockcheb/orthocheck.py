"""Weighted inner products of family rows over [-1, 1], exact and float.

Every integral here is of the form

    I(n, m) = integral_{-1}^{1} P_n(x) P_m(x) (1 - x^2)^(q/2) dx

with half-exponent q >= -1.  Substituting x = cos(theta) turns this into
a trigonometric polynomial on [0, pi]: the weight supplies sin^q, dx
supplies one more sine, and each row is expanded through cosine powers,
never through its trigonometric closed form (so those identities stay
independent test targets).  Exact integration then reads the answer off
the frequency-0 cosine term and the odd sine terms, giving a PiRational.

The numeric backend samples the same integrand pointwise and applies a
composite trapezoid rule in theta.  On a uniform grid the rule is exact
(to rounding) for every cosine frequency below aliasing and every even
sine frequency; odd sine frequencies appear only when q is even and
n - m is even, and there the rule converges at O(N^-2), so that case
runs on a much denser grid.  Row evaluation uses extended precision:
coefficient sums reach 1e5 by degree 15, which leaves no float64 margin
against the 1e-10 agreement contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidConfigError
from .exact import PiRational, TrigPoly, cos_power, sin_power
from .polyfamily import Family, IntPolynomial, build_definitional


@dataclass(frozen=True)
class Weight:
    """The weight (1 - x^2)^(q/2) on [-1, 1], by its half-exponent q."""

    half_exponent: int

    def __post_init__(self):
        if self.half_exponent < -1:
            raise InvalidConfigError(
                "weight (1-x^2)^(q/2) is integrable on [-1,1] only for q >= -1")

    def __str__(self) -> str:
        return f"(1-x^2)^({self.half_exponent}/2)"


def sin_exponent(weight: Weight) -> int:
    """Total sine exponent after substituting x = cos(theta).

    The weight (1 - x^2)^(q/2) becomes sin^q(theta) and dx = -sin(theta)
    d(theta) contributes exactly one more, so the integrand carries
    sin^(q+1).  Centralized because an off-by-one here silently corrupts
    every orthogonality table.
    """
    return weight.half_exponent + 1


def poly_to_trig(poly: IntPolynomial) -> TrigPoly:
    """Exact expansion of poly(cos theta) as a TrigPoly."""
    acc = TrigPoly.constant(0)
    for k, c in enumerate(poly.coeffs):
        if c:
            acc = acc + cos_power(k).scale(c)
    return acc


def _rows(n: int, m: int, family: Family) -> tuple[IntPolynomial, IntPolynomial]:
    if n < family.m or m < family.m:
        raise InvalidConfigError(
            f"rows {n}, {m} must be >= the family start {family.m}")
    return build_definitional(n, family), build_definitional(m, family)


def inner_product_exact(n: int, m: int, family: Family, weight: Weight) -> PiRational:
    pn, pm = _rows(n, m, family)
    integrand = poly_to_trig(pn) * poly_to_trig(pm) * sin_power(sin_exponent(weight))
    return integrand.integrate_0_to_pi()


_LONG_PI = np.arccos(np.longdouble(-1.0))


def _horner_array(poly: IntPolynomial, x: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(x)
    for c in reversed(poly.coeffs):
        acc = acc * x + np.longdouble(c)
    return acc


def trapezoid_nodes(n: int, m: int, weight: Weight) -> int:
    """Node count for the theta-trapezoid rule on one inner product.

    8(n+m+q+4) intervals keep every frequency far below aliasing, which
    is all the exact cases need.  Even q with n-m even is the one
    combination whose integrand contains odd sine frequencies; there the
    rule is merely O(N^-2) and the count jumps to 2^21, which pushes the
    truncation error below 1e-10 for the coefficient sizes of the p = 2
    families these tables concern.
    """
    q = weight.half_exponent
    if q % 2 == 0 and (n - m) % 2 == 0:
        return 1 << 21
    return max(64, 8 * (n + m + q + 4))


def inner_product_numeric(n: int, m: int, family: Family, weight: Weight) -> float:
    pn, pm = _rows(n, m, family)
    steps = trapezoid_nodes(n, m, weight)
    theta = np.linspace(np.longdouble(0.0), _LONG_PI, steps + 1,
                        dtype=np.longdouble)
    x = np.cos(theta)
    vn = _horner_array(pn, x)
    vm = vn if n == m else _horner_array(pm, x)
    integrand = vn * vm * np.sin(theta) ** sin_exponent(weight)
    return float(np.trapezoid(integrand, theta))


@dataclass(frozen=True)
class GramEntry:
    n: int
    m: int
    family: Family
    weight: Weight
    exact: PiRational
    numeric: float | None

    @property
    def agreement(self) -> float | None:
        if self.numeric is None:
            return None
        return abs(float(self.exact) - self.numeric)


@dataclass(frozen=True)
class BandPattern:
    """What one |n - m| band of a Gram matrix looks like.

    value is the band's common entry when uniform, otherwise the most
    frequent one with the outliers listed in deviations.
    """

    offset: int
    uniform: bool
    value: PiRational
    deviations: tuple[tuple[int, int, PiRational], ...]


class GramMatrix:
    def __init__(self, lo: int, hi: int, family: Family, weight: Weight,
                 entries: dict[tuple[int, int], GramEntry]):
        self.lo = lo
        self.hi = hi
        self.family = family
        self.weight = weight
        self._entries = entries

    def entry(self, n: int, m: int) -> GramEntry:
        return self._entries[(n, m)] if (n, m) in self._entries \
            else self._entries[(m, n)]

    def entries(self):
        return list(self._entries.values())

    def band_report(self) -> dict[int, BandPattern]:
        report = {}
        for offset in range(self.hi - self.lo + 1):
            cells = [(n, n + offset, self.entry(n, n + offset).exact)
                     for n in range(self.lo, self.hi - offset + 1)]
            counts: dict[PiRational, int] = {}
            for _, _, v in cells:
                counts[v] = counts.get(v, 0) + 1
            modal, best = None, -1
            for v, c in counts.items():
                if c > best:
                    modal, best = v, c
            deviations = tuple((n, m, v) for n, m, v in cells if v != modal)
            report[offset] = BandPattern(offset, not deviations, modal, deviations)
        return report


def gram_matrix(n_range: tuple[int, int], family: Family, weight: Weight,
                with_numeric: bool = True) -> GramMatrix:
    """Symmetric Gram matrix of rows lo..hi under the given weight."""
    lo, hi = n_range
    if lo > hi or lo < family.m:
        raise InvalidConfigError(f"bad row range {lo}..{hi} for family {family}")
    entries = {}
    for n in range(lo, hi + 1):
        for m in range(n, hi + 1):
            exact = inner_product_exact(n, m, family, weight)
            numeric = inner_product_numeric(n, m, family, weight) \
                if with_numeric else None
            entries[(n, m)] = GramEntry(n, m, family, weight, exact, numeric)
    return GramMatrix(lo, hi, family, weight, entries)


def theorem_band_value(offset: int, weight: Weight) -> PiRational:
    """The published band patterns for the (2, 2) family, by weight.

    q = -1: pi/4 on the diagonal, -pi/8 at offset 2, else 0.
    q = 1:  3pi/16, -pi/8, pi/32, else 0.
    q = 3:  5pi/32, -15pi/128, 3pi/64, -pi/128, else 0.

    These are the claimed values; whether the actual Gram entries obey
    them everywhere is a test outcome (they deviate near the low corner
    for q = 1 and q = 3).
    """
    q = weight.half_exponent
    patterns = {
        -1: {0: Fraction(1, 4), 2: Fraction(-1, 8)},
        1: {0: Fraction(3, 16), 2: Fraction(-1, 8), 4: Fraction(1, 32)},
        3: {0: Fraction(5, 32), 2: Fraction(-15, 128), 4: Fraction(3, 64),
            6: Fraction(-1, 128)},
    }
    if q not in patterns:
        raise InvalidConfigError(f"no published band pattern for q={q}")
    return PiRational.of(patterns[q].get(offset, 0))
