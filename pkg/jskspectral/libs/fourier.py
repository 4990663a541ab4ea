# -*- coding: utf-8 -*-
"""
  fourier.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 15.10.2026, 14:02:39

  Purpose: Certified evaluation of measure transforms.

  Product measures (self-similar, Moran) are truncated after enough
  factors that the remaining ones can move the product by at most tol/2,
  using |1 - m_R(y)| <= 2 pi max|R| |y| and |prod a - prod b| <= sum |1 - b_k|
  for factors of modulus at most 1.

  The alternating families have no scalar product formula. Their transform
  satisfies F(t) = M(rho t) F(rho t) for F(t) = (nu(t), nu(-t)) and

      M(u) = | A(u)   B(u)  |    A(u) = (1/n) sum_{sign +} exp(2 pi i d u)
             | B(-u)  A(-u) |    B(u) = (1/n) sum_{sign -} exp(-2 pi i d u)

  Each row of M has absolute sum at most 1, so the seed error at
  rho**K t does not grow along the product.
"""

import math

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from inspect import currentframe
from typing import List, Optional, Tuple, Union

import numpy as np

from jsktoolbox.raisetool import Raise

from jskspectral.libs.digit_sets import (
    DigitSet,
    Point,
    alternate_digit_set,
    mask_eval,
    mask_order,
    mask_values,
    mask_vanishes,
)
from jskspectral.libs.errors import DomainError
from jskspectral.libs.exact_core import EXACT_ORDER_LIMIT, RationalLike, to_rational
from jskspectral.libs.measures import (
    Alternating,
    AlternatingSymmetric,
    MeasureSpec,
    Moran,
    SelfSimilar,
)

DYADIC_LIMIT: int = 4096

_EPS: float = float(np.finfo(float).eps)
_TWO_PI: float = 2.0 * math.pi

AlternatingSpec = Union[Alternating, AlternatingSymmetric]


@dataclass(frozen=True)
class CertifiedComplex:
    """Value with |true - value| <= error_bound."""

    value: complex
    error_bound: float

    @property
    def abs(self) -> float:
        return abs(self.value)

    def excludes_zero(self) -> bool:
        """True if 0 lies outside the certified disc."""
        return abs(self.value) > self.error_bound

    def pins_zero(self) -> bool:
        """True if the value is exactly zero."""
        return self.value == 0 and self.error_bound == 0


def _check_tol(tol: float) -> None:
    if not tol > 0:
        raise Raise.error(
            f"Tolerance must be positive, received: {tol}",
            DomainError,
            __name__,
            currentframe(),
        )


def _check_point(xi: Point) -> float:
    """Float view of xi, rejecting non-finite or overflowing frequencies."""
    try:
        value = float(xi)
    except OverflowError:
        value = math.inf
    if not math.isfinite(value):
        raise Raise.error(
            f"Frequency must be finite, received: {xi}",
            DomainError,
            __name__,
            currentframe(),
        )
    return value


def _check_points(xis: np.ndarray) -> np.ndarray:
    points = np.atleast_1d(np.asarray(xis, dtype=float))
    if not np.all(np.isfinite(points)):
        raise Raise.error(
            "Frequencies must be finite",
            DomainError,
            __name__,
            currentframe(),
        )
    return points


def _rounding(terms: int, scale: np.ndarray) -> np.ndarray:
    return 8.0 * _EPS * max(terms, 1) * (1.0 + _TWO_PI * scale)


def _as_exact(xi: Point) -> Optional[Fraction]:
    """Rational view of xi when it is exact or a short binary fraction."""
    if isinstance(xi, bool):
        return None
    if isinstance(xi, (int, Fraction)):
        return Fraction(xi)
    value = float(xi)
    if not math.isfinite(value):
        return None
    frac = Fraction(value)
    if frac.denominator <= DYADIC_LIMIT:
        return frac
    return None


def _factor_vanishes(digits: DigitSet, y: Fraction, exact_limit: int) -> bool:
    if digits.max_abs == 0:
        return False
    return mask_order(digits, y) <= exact_limit and mask_vanishes(digits, y)


def _geometric_depth(constant: float, ratio: float, target: float) -> int:
    """Smallest k >= 0 with constant * ratio**k <= target."""
    if constant <= target:
        return 0
    k = max(0, math.ceil(math.log(target / constant) / math.log(ratio)))
    while constant * ratio**k > target:
        k += 1
    return k


def ft_discrete(e: DigitSet, xi: Point) -> complex:
    """Transform of the uniform measure on e, equal to its mask."""
    return mask_eval(e, xi)


# self-similar ################################################################


def _self_similar_depth(spec: SelfSimilar, xi_abs: float, tol: float) -> int:
    r = float(spec.digits.max_abs)
    rho = float(spec.rho)
    if r == 0 or xi_abs == 0:
        return 0
    constant = _TWO_PI * r * xi_abs * rho / (1.0 - rho)
    return _geometric_depth(constant, rho, min(tol / 2.0, 0.5))


def _self_similar_tail(
    spec: SelfSimilar, xi_abs: np.ndarray, depth: int
) -> np.ndarray:
    r = float(spec.digits.max_abs)
    rho = float(spec.rho)
    return _TWO_PI * r * xi_abs * rho ** (depth + 1) / (1.0 - rho)


def ft_self_similar_array(
    spec: SelfSimilar, xis: np.ndarray, tol: float
) -> Tuple[np.ndarray, np.ndarray]:
    """Values and error bounds of mu(xi) over an array."""
    _check_tol(tol)
    points = _check_points(xis)
    xi_abs = np.abs(points)
    depth = _self_similar_depth(spec, float(xi_abs.max(initial=0.0)), tol)
    values = np.ones(points.shape, dtype=complex)
    if depth:
        powers = float(spec.rho) ** np.arange(1, depth + 1)
        factors = mask_values(spec.digits, np.multiply.outer(points, powers))
        values = np.prod(factors, axis=-1)
    bounds = _self_similar_tail(spec, xi_abs, depth) + _rounding(
        depth * len(spec.digits), float(spec.digits.max_abs) * xi_abs
    )
    return values, bounds


def ft_self_similar(
    spec: SelfSimilar,
    xi: Point,
    tol: float = 1e-9,
    exact_limit: int = EXACT_ORDER_LIMIT,
) -> CertifiedComplex:
    """mu(xi) = prod_{j >= 1} m_D(rho**j xi), certified to tol."""
    _check_tol(tol)
    _check_point(xi)
    exact = _as_exact(xi)
    if exact is not None and exact == 0:
        return CertifiedComplex(1 + 0j, 0.0)
    depth = _self_similar_depth(spec, abs(float(xi)), tol)
    if exact is not None:
        y = exact
        factors: List[complex] = []
        for _ in range(depth):
            y *= spec.rho
            if _factor_vanishes(spec.digits, y, exact_limit):
                return CertifiedComplex(0j, 0.0)
            factors.append(mask_eval(spec.digits, y, exact_limit=0))
        value = complex(np.prod(np.array(factors, dtype=complex)))
        xi_abs = np.array([abs(float(exact))])
        bound = _self_similar_tail(spec, xi_abs, depth) + _rounding(
            depth * len(spec.digits), float(spec.digits.max_abs) * xi_abs
        )
        return CertifiedComplex(value, float(bound[0]))
    values, bounds = ft_self_similar_array(spec, np.array([float(xi)]), tol)
    return CertifiedComplex(complex(values[0]), float(bounds[0]))


# Moran #######################################################################


@dataclass(frozen=True)
class _MoranPlan:
    divisors: Tuple[Fraction, ...]
    digits: Tuple[DigitSet, ...]
    tail_constant: float
    tail_ratio: float
    periods: int

    def tail_bound(self, xi_abs: np.ndarray) -> np.ndarray:
        if self.tail_constant == 0:
            return np.zeros_like(xi_abs)
        return self.tail_constant * xi_abs * self.tail_ratio**self.periods


def _moran_plan(spec: Moran, xi_abs: float, tol: float) -> _MoranPlan:
    divisors: List[Fraction] = list(spec.prefix_products)
    digits: List[DigitSet] = [stage.digits for stage in spec.prefix]
    if spec.is_finite:
        return _MoranPlan(tuple(divisors), tuple(digits), 0.0, 1.0, 0)
    beta = abs(spec.tail_period_product)
    weight = sum(
        float(stage.digits.max_abs) / abs(float(partial))
        for stage, partial in zip(spec.tail, spec.tail_partial_products)
    )
    ratio = 1.0 / float(beta)
    constant = _TWO_PI * weight / abs(float(spec.prefix_total)) / (1.0 - ratio)
    periods = 0
    if xi_abs > 0 and weight > 0:
        periods = _geometric_depth(constant * xi_abs, ratio, min(tol / 2.0, 0.5))
    scale = spec.prefix_total
    for _ in range(periods):
        for stage, partial in zip(spec.tail, spec.tail_partial_products):
            divisors.append(scale * partial)
            digits.append(stage.digits)
        scale *= spec.tail_period_product
    return _MoranPlan(tuple(divisors), tuple(digits), constant, ratio, periods)


def _moran_scale(plan: _MoranPlan) -> float:
    return max(
        (float(d.max_abs) / abs(float(b)) for b, d in zip(plan.divisors, plan.digits)),
        default=0.0,
    )


def ft_moran_array(
    spec: Moran, xis: np.ndarray, tol: float
) -> Tuple[np.ndarray, np.ndarray]:
    """Values and error bounds of the Moran transform over an array."""
    _check_tol(tol)
    points = _check_points(xis)
    xi_abs = np.abs(points)
    plan = _moran_plan(spec, float(xi_abs.max(initial=0.0)), tol)
    values = np.ones(points.shape, dtype=complex)
    terms = 0
    for divisor, digits in zip(plan.divisors, plan.digits):
        values = values * mask_values(digits, points / float(divisor))
        terms += len(digits)
    bounds = plan.tail_bound(xi_abs) + _rounding(
        terms, _moran_scale(plan) * xi_abs * max(len(plan.divisors), 1)
    )
    return values, bounds


def ft_moran(
    spec: Moran,
    xi: Point,
    tol: float = 1e-9,
    exact_limit: int = EXACT_ORDER_LIMIT,
) -> CertifiedComplex:
    """prod_k m_{R_k}(xi / (b_1 ... b_k)), certified to tol."""
    _check_tol(tol)
    _check_point(xi)
    exact = _as_exact(xi)
    if exact is not None and exact == 0:
        return CertifiedComplex(1 + 0j, 0.0)
    if exact is None:
        values, bounds = ft_moran_array(spec, np.array([float(xi)]), tol)
        return CertifiedComplex(complex(values[0]), float(bounds[0]))
    plan = _moran_plan(spec, abs(float(exact)), tol)
    factors: List[complex] = []
    terms = 0
    for divisor, digits in zip(plan.divisors, plan.digits):
        y = exact / divisor
        if _factor_vanishes(digits, y, exact_limit):
            return CertifiedComplex(0j, 0.0)
        factors.append(mask_eval(digits, y, exact_limit=0))
        terms += len(digits)
    xi_abs = np.array([abs(float(exact))])
    bound = plan.tail_bound(xi_abs) + _rounding(
        terms, _moran_scale(plan) * xi_abs * max(len(plan.divisors), 1)
    )
    value = complex(np.prod(np.array(factors, dtype=complex))) if factors else 1 + 0j
    return CertifiedComplex(value, float(bound[0]))


# alternating #################################################################


def _cocycle_depth(spec: AlternatingSpec, xi_abs: float, tol: float) -> int:
    r = float(spec.max_abs_digit)
    rho = float(spec.rho)
    if r == 0 or xi_abs == 0:
        return 0
    constant = _TWO_PI * r * xi_abs / (1.0 - rho)
    return _geometric_depth(constant, rho, tol / 2.0)


def _seed_bound(spec: AlternatingSpec, xi_abs: np.ndarray, depth: int) -> np.ndarray:
    rho = float(spec.rho)
    return _TWO_PI * float(spec.max_abs_digit) * xi_abs * rho**depth / (1.0 - rho)


def _cocycle(spec: AlternatingSpec, points: np.ndarray, depth: int) -> np.ndarray:
    digits = np.array(spec.digits, dtype=float)
    signs = np.array(spec.signs)
    plus = digits[signs > 0]
    minus = digits[signs < 0]
    count = float(len(digits))
    rho = float(spec.rho)
    upper = np.ones(points.shape, dtype=complex)
    lower = np.ones(points.shape, dtype=complex)
    for k in range(depth, 0, -1):
        u = points * rho**k
        a = np.exp(2j * np.pi * np.multiply.outer(u, plus)).sum(axis=-1) / count
        b = np.exp(-2j * np.pi * np.multiply.outer(u, minus)).sum(axis=-1) / count
        upper, lower = (
            a * upper + b * lower,
            np.conj(b) * upper + np.conj(a) * lower,
        )
    return upper


def cocycle_array(
    spec: AlternatingSpec, xis: np.ndarray, depth: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Cocycle unrolled a fixed number of steps, with the matching bound."""
    points = _check_points(xis)
    xi_abs = np.abs(points)
    values = _cocycle(spec, points, depth)
    bounds = _seed_bound(spec, xi_abs, depth) + _rounding(
        depth * len(spec.digits), float(spec.max_abs_digit) * xi_abs
    )
    return values, bounds


def cocycle_value(spec: AlternatingSpec, xi: Point, depth: int) -> CertifiedComplex:
    """Single point version of cocycle_array."""
    values, bounds = cocycle_array(spec, np.array([_check_point(xi)]), depth)
    return CertifiedComplex(complex(values[0]), float(bounds[0]))


def ft_alternating_array(
    spec: AlternatingSpec, xis: np.ndarray, tol: float
) -> Tuple[np.ndarray, np.ndarray]:
    """Values and error bounds of nu(xi) over an array."""
    _check_tol(tol)
    points = _check_points(xis)
    depth = _cocycle_depth(spec, float(np.abs(points).max(initial=0.0)), tol)
    return cocycle_array(spec, points, depth)


def ft_alternating(
    spec: AlternatingSpec, xi: Point, tol: float = 1e-9
) -> CertifiedComplex:
    """nu(xi) for the alternating families, certified to tol."""
    _check_tol(tol)
    if _check_point(xi) == 0:
        return CertifiedComplex(1 + 0j, 0.0)
    values, bounds = ft_alternating_array(spec, np.array([float(xi)]), tol)
    return CertifiedComplex(complex(values[0]), float(bounds[0]))


# dispatch ####################################################################


def ft(
    spec: MeasureSpec,
    xi: Point,
    tol: float = 1e-9,
    exact_limit: int = EXACT_ORDER_LIMIT,
) -> CertifiedComplex:
    """Certified transform of any supported measure."""
    if isinstance(spec, SelfSimilar):
        return ft_self_similar(spec, xi, tol, exact_limit)
    if isinstance(spec, Moran):
        return ft_moran(spec, xi, tol, exact_limit)
    return ft_alternating(spec, xi, tol)


def ft_array(
    spec: MeasureSpec, xis: np.ndarray, tol: float = 1e-9
) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorised certified transform of any supported measure."""
    if isinstance(spec, SelfSimilar):
        return ft_self_similar_array(spec, xis, tol)
    if isinstance(spec, Moran):
        return ft_moran_array(spec, xis, tol)
    return ft_alternating_array(spec, xis, tol)


# exact vanishing #############################################################


def _scan_self_similar(spec: SelfSimilar, x: Fraction) -> bool:
    r = spec.digits.max_abs
    y = x
    while True:
        y *= spec.rho
        if 7 * r * abs(y) < 1:
            return False
        if mask_vanishes(spec.digits, y):
            return True


def _scan_moran(spec: Moran, x: Fraction) -> bool:
    for stage, total in zip(spec.prefix, spec.prefix_products):
        y = x / total
        if 7 * stage.digits.max_abs * abs(y) >= 1 and mask_vanishes(stage.digits, y):
            return True
    if spec.is_finite:
        return False
    scale = spec.prefix_total
    while True:
        live = False
        for stage, partial in zip(spec.tail, spec.tail_partial_products):
            y = x / (scale * partial)
            if 7 * stage.digits.max_abs * abs(y) >= 1:
                live = True
                if mask_vanishes(stage.digits, y):
                    return True
        if not live:
            return False
        scale *= spec.tail_period_product


def transform_vanishes(spec: MeasureSpec, x: RationalLike) -> Optional[bool]:
    """Exact test of transform(x) == 0 at a rational point.

    Only factors with 2 pi max|R| |y| >= 1 can vanish (7 > 2 pi is used to
    stay in rationals). None is returned for the odd alternating family,
    whose transform has no product form.
    """
    point = to_rational(x)
    if point == 0:
        return False
    if isinstance(spec, SelfSimilar):
        return _scan_self_similar(spec, point)
    if isinstance(spec, Moran):
        return _scan_moran(spec, point)
    if isinstance(spec, AlternatingSymmetric):
        return _scan_self_similar(spec.self_similar_shifted(), point)
    equivalent = spec.self_similar_equivalent()
    if equivalent is None:
        return None
    return _scan_self_similar(equivalent, point)


# identities ##################################################################


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of a sampled identity check between two evaluators."""

    name: str
    samples: int
    window: float
    tol: float
    max_deviation: float
    max_bound: float
    worst_point: float
    passed: bool


def _sample(sample_count: int, window: float, seed: int) -> np.ndarray:
    if sample_count < 1 or not window > 0:
        raise Raise.error(
            f"Expected positive sample count and window, received: "
            f"{sample_count}, {window}",
            DomainError,
            __name__,
            currentframe(),
        )
    return np.random.default_rng(seed).uniform(-window, window, sample_count)


def _compare(
    name: str,
    points: np.ndarray,
    window: float,
    tol: float,
    left: Tuple[np.ndarray, np.ndarray],
    right: Tuple[np.ndarray, np.ndarray],
) -> IdentityReport:
    deviation = np.abs(left[0] - right[0])
    allowed = tol + left[1] + right[1]
    worst = int(np.argmax(deviation - allowed))
    return IdentityReport(
        name=name,
        samples=len(points),
        window=window,
        tol=tol,
        max_deviation=float(deviation.max()),
        max_bound=float((left[1] + right[1]).max()),
        worst_point=float(points[worst]),
        passed=bool(np.all(deviation <= allowed)),
    )


def verify_nu_equals_mu(
    m: int,
    n_param: int,
    rho: RationalLike,
    sample_count: int = 200,
    window: float = 10.0,
    tol: float = 1e-8,
    seed: int = 0,
) -> IdentityReport:
    """Compares nu for n = 2Nm with mu on D_m + 2m D_N + (1 + m rho - 2Nm) D_2."""
    _check_tol(tol)
    r = to_rational(rho)
    alternating = Alternating(r, m, 2 * n_param * m)
    self_similar = SelfSimilar(r, alternate_digit_set(m, n_param, r))
    points = _sample(sample_count, window, seed)
    return _compare(
        "nu_equals_mu",
        points,
        window,
        tol,
        ft_alternating_array(alternating, points, tol),
        ft_self_similar_array(self_similar, points, tol),
    )


def verify_symmetric_example(
    n: int,
    rho: RationalLike,
    sample_count: int = 200,
    window: float = 10.0,
    tol: float = 1e-8,
    seed: int = 0,
) -> IdentityReport:
    """Checks nu(t) = exp(-2 pi i n t rho / (1 - rho)) mu_{rho, D_{2n+1}}(t)."""
    _check_tol(tol)
    spec = AlternatingSymmetric(to_rational(rho), n)
    points = _sample(sample_count, window, seed)
    values, bounds = ft_self_similar_array(spec.self_similar_shifted(), points, tol)
    phase = np.exp(-2j * np.pi * points * float(spec.shift))
    return _compare(
        "symmetric_phase_identity",
        points,
        window,
        tol,
        ft_alternating_array(spec, points, tol),
        (phase * values, bounds + _rounding(1, float(spec.shift) * np.abs(points))),
    )


# sweeps ######################################################################


@dataclass(frozen=True)
class Sweep:
    """Transform values on a uniform grid."""

    xi: np.ndarray
    values: np.ndarray
    bounds: np.ndarray


def sweep(
    spec: MeasureSpec,
    start: float,
    stop: float,
    points: int,
    tol: float = 1e-9,
    threads: int = 1,
) -> Sweep:
    """Evaluates the transform on linspace(start, stop, points)."""
    _check_tol(tol)
    if points < 1:
        raise Raise.error(
            f"Expected at least one point, received: {points}",
            DomainError,
            __name__,
            currentframe(),
        )
    grid = np.linspace(_check_point(start), _check_point(stop), points)
    if threads <= 1 or points < 2 * threads:
        values, bounds = ft_array(spec, grid, tol)
        return Sweep(grid, values, bounds)
    chunks = np.array_split(grid, threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda chunk: ft_array(spec, chunk, tol), chunks))
    return Sweep(
        grid,
        np.concatenate([p[0] for p in parts]),
        np.concatenate([p[1] for p in parts]),
    )


# #[EOF]#######################################################################
