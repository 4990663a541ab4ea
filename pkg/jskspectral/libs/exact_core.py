# -*- coding: utf-8 -*-
"""
  exact_core.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 14.10.2026, 20:11:36

  Purpose: Exact rational helpers and the exact zero test for finite sums
  of roots of unity.

  A sum c_0 + c_1 z + ... evaluated at z = exp(2 pi i / M) vanishes if and
  only if the M-th cyclotomic polynomial divides the coefficient polynomial.
  The sum is first brought to its smallest order so the divisibility test
  runs on the shortest polynomial.
"""

import math

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from inspect import currentframe
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

import mpmath
import numpy as np

from jsktoolbox.raisetool import Raise
from sympy import Poly, cyclotomic_poly, symbols
from sympy.polys.domains import ZZ

from jskspectral.libs.errors import DomainError

Rational = Fraction
RationalLike = Union[int, str, Fraction]

# largest root-of-unity order settled by the exact zero test inside evaluators
EXACT_ORDER_LIMIT: int = 2048

_X = symbols("x")


def to_rational(value: object) -> Fraction:
    """Converts int, Fraction, exact float or 'a/b' string to Fraction."""
    if isinstance(value, bool):
        raise Raise.error(
            f"Boolean is not a rational number: {value}",
            DomainError,
            __name__,
            currentframe(),
        )
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise Raise.error(
                f"Non-finite value: {value}", DomainError, __name__, currentframe()
            )
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise Raise.error(
                f"Malformed rational: '{value}'", DomainError, __name__, currentframe()
            )
    raise Raise.error(
        f"Unexpected type for rational: '{type(value)}'",
        DomainError,
        __name__,
        currentframe(),
    )


def rational_to_str(value: Fraction) -> str:
    """Returns 'a/b', or 'a' when the denominator is 1."""
    return str(Fraction(value))


def rational_pow(x: RationalLike, k: int) -> Fraction:
    """Returns exact x**k."""
    base: Fraction = to_rational(x)
    if base == 0 and k < 0:
        raise Raise.error(
            f"Zero base with negative exponent: {k}",
            DomainError,
            __name__,
            currentframe(),
        )
    return base**k


def frac_part(x: Fraction) -> Fraction:
    """Returns x mod 1 in [0, 1)."""
    return x - math.floor(x)


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    """Returns lcm of denominators, 1 for empty input."""
    out = 1
    for value in values:
        out = math.lcm(out, value.denominator)
    return out


@dataclass(frozen=True)
class RootOfUnitySum:
    """Integer combination sum c_k * exp(2 pi i k / order)."""

    order: int
    coefficients: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise Raise.error(
                f"Order must be positive, received: {self.order}",
                DomainError,
                self.__class__.__name__,
                currentframe(),
            )
        previous = -1
        for key, _ in self.coefficients:
            if key <= previous or key >= self.order:
                raise Raise.error(
                    f"Residue keys must be increasing in [0, {self.order}): {key}",
                    DomainError,
                    self.__class__.__name__,
                    currentframe(),
                )
            previous = key

    @classmethod
    def of(cls, order: int, coefficients: Mapping[int, int]) -> "RootOfUnitySum":
        """Builds a sum, reducing residues mod order and dropping zeros."""
        if order < 1:
            raise Raise.error(
                f"Order must be positive, received: {order}",
                DomainError,
                cls.__name__,
                currentframe(),
            )
        acc: Dict[int, int] = {}
        for key, count in coefficients.items():
            residue = key % order
            acc[residue] = acc.get(residue, 0) + count
        return cls(order, tuple(sorted((k, c) for k, c in acc.items() if c != 0)))

    @classmethod
    def from_phases(
        cls, phases: Iterable[Fraction], weights: Optional[Iterable[int]] = None
    ) -> "RootOfUnitySum":
        """Builds sum of exp(2 pi i phase) for rational phases."""
        reduced = [frac_part(Fraction(phase)) for phase in phases]
        counts = [1] * len(reduced) if weights is None else list(weights)
        order = lcm_of_denominators(reduced)
        acc: Dict[int, int] = {}
        for phase, count in zip(reduced, counts):
            key = int(phase * order)
            acc[key] = acc.get(key, 0) + count
        return cls.of(order, acc)

    def as_dict(self) -> Dict[int, int]:
        """Returns residue to coefficient map."""
        return dict(self.coefficients)

    def canonical(self) -> "RootOfUnitySum":
        """Returns the same sum written over its smallest order."""
        g = self.order
        for key, _ in self.coefficients:
            g = math.gcd(g, key)
        if g <= 1:
            return self
        return RootOfUnitySum(
            self.order // g, tuple((k // g, c) for k, c in self.coefficients)
        )

    def is_zero(self) -> bool:
        """Exact vanishing test."""
        return root_sum_is_zero(self)

    def value(self) -> complex:
        """Double precision value."""
        if not self.coefficients:
            return 0j
        keys = np.array([k for k, _ in self.coefficients], dtype=float)
        counts = np.array([c for _, c in self.coefficients], dtype=float)
        return complex(np.sum(counts * np.exp(2j * np.pi * keys / self.order)))

    def evaluate_mp(self, dps: int = 50) -> mpmath.mpc:
        """Value computed with dps decimal digits."""
        with mpmath.workdps(dps):
            total = mpmath.mpc(0)
            for key, count in self.coefficients:
                total += count * mpmath.expjpi(mpmath.mpf(2 * key) / self.order)
            return total

    def conjugate(self, unit: int) -> "RootOfUnitySum":
        """Applies the Galois automorphism z -> z**unit."""
        if math.gcd(unit, self.order) != 1:
            raise Raise.error(
                f"{unit} is not a unit modulo {self.order}",
                DomainError,
                self.__class__.__name__,
                currentframe(),
            )
        return RootOfUnitySum.of(
            self.order, {k * unit: c for k, c in self.coefficients}
        )

    def rotated(self, shift: int) -> "RootOfUnitySum":
        """Multiplies the sum by exp(2 pi i shift / order)."""
        return RootOfUnitySum.of(
            self.order, {k + shift: c for k, c in self.coefficients}
        )

    def __mul__(self, other: "RootOfUnitySum") -> "RootOfUnitySum":
        order = math.lcm(self.order, other.order)
        fa = order // self.order
        fb = order // other.order
        acc: Dict[int, int] = {}
        for ka, ca in self.coefficients:
            for kb, cb in other.coefficients:
                key = ka * fa + kb * fb
                acc[key] = acc.get(key, 0) + ca * cb
        return RootOfUnitySum.of(order, acc)


@lru_cache(maxsize=4096)
def _cyclotomic(order: int) -> Poly:
    return cyclotomic_poly(order, _X, polys=True)


@lru_cache(maxsize=1 << 16)
def _divisible(order: int, coefficients: Tuple[Tuple[int, int], ...]) -> bool:
    degree = coefficients[-1][0]
    dense = [0] * (degree + 1)
    for key, count in coefficients:
        dense[degree - key] = count
    return Poly(dense, _X, domain=ZZ).rem(_cyclotomic(order)).is_zero


def root_sum_is_zero(s: RootOfUnitySum) -> bool:
    """Returns True iff the sum is exactly zero."""
    canon = s.canonical()
    if not canon.coefficients:
        return True
    if canon.order == 1:
        return False
    return _divisible(canon.order, canon.coefficients)


# #[EOF]#######################################################################
