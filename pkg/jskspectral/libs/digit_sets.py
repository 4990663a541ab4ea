# -*- coding: utf-8 -*-
"""
  digit_sets.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 14.10.2026, 21:27:05

  Purpose: Digit sets, direct sums and mask polynomials.

  A digit set may carry its decomposition into scaled consecutive blocks
  a_1 D_{n_1} + ... + a_r D_{n_r}. The decomposition is recorded by the
  constructors and never guessed from the elements.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from inspect import currentframe
from typing import Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np

from jsktoolbox.raisetool import Raise

from jskspectral.libs.errors import DomainError, NotADirectSumError
from jskspectral.libs.exact_core import (
    EXACT_ORDER_LIMIT,
    RationalLike,
    RootOfUnitySum,
    frac_part,
    lcm_of_denominators,
    to_rational,
)

Point = Union[int, float, Fraction]


@dataclass(frozen=True)
class Block:
    """Scaled consecutive block scale * {0, ..., length - 1}."""

    scale: Fraction
    length: int

    def elements(self) -> Tuple[Fraction, ...]:
        """Block elements."""
        return tuple(self.scale * k for k in range(self.length))


def _expand(blocks: Iterable[Block]) -> Tuple[Fraction, ...]:
    current: List[Fraction] = [Fraction(0)]
    for block in blocks:
        current = _sum_lists(current, list(block.elements()))
    return tuple(sorted(current))


def _sum_lists(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    seen: set[Fraction] = set()
    out: List[Fraction] = []
    for x in a:
        for y in b:
            value = x + y
            if value in seen:
                raise Raise.error(
                    f"Not a direct sum, element {value} is reached twice",
                    NotADirectSumError,
                    __name__,
                    currentframe(),
                )
            seen.add(value)
            out.append(value)
    return out


@dataclass(frozen=True)
class DigitSet:
    """Finite set of rationals with optional block structure."""

    elements: Tuple[Fraction, ...]
    blocks: Optional[Tuple[Block, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.elements:
            raise Raise.error(
                "Digit set must not be empty",
                DomainError,
                self.__class__.__name__,
                currentframe(),
            )
        for left, right in zip(self.elements, self.elements[1:]):
            if not left < right:
                raise Raise.error(
                    f"Elements must be strictly increasing: {left}, {right}",
                    DomainError,
                    self.__class__.__name__,
                    currentframe(),
                )
        if self.blocks is not None:
            for block in self.blocks:
                if block.length < 1:
                    raise Raise.error(
                        f"Block length must be positive: {block.length}",
                        DomainError,
                        self.__class__.__name__,
                        currentframe(),
                    )
            if _expand(self.blocks) != self.elements:
                raise Raise.error(
                    "Block structure does not reproduce the elements",
                    DomainError,
                    self.__class__.__name__,
                    currentframe(),
                )

    @classmethod
    def of(
        cls,
        values: Iterable[RationalLike],
        blocks: Optional[Iterable[Tuple[RationalLike, int]]] = None,
    ) -> "DigitSet":
        """Builds a digit set from values, rejecting duplicates."""
        items = sorted(to_rational(v) for v in values)
        for left, right in zip(items, items[1:]):
            if left == right:
                raise Raise.error(
                    f"Duplicate digit: {left}",
                    DomainError,
                    cls.__name__,
                    currentframe(),
                )
        structure: Optional[Tuple[Block, ...]] = None
        if blocks is not None:
            structure = tuple(Block(to_rational(s), int(n)) for s, n in blocks)
        return cls(tuple(items), structure)

    @classmethod
    def progression(cls, step: RationalLike, length: int) -> "DigitSet":
        """Returns step * {0, ..., length - 1} as a single block."""
        if length < 1:
            raise Raise.error(
                f"Length must be positive: {length}",
                DomainError,
                cls.__name__,
                currentframe(),
            )
        block = Block(to_rational(step), length)
        if block.scale == 0 and length > 1:
            raise Raise.error(
                "Zero step with more than one element",
                NotADirectSumError,
                cls.__name__,
                currentframe(),
            )
        return cls(tuple(sorted(block.elements())), (block,))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    @property
    def is_structured(self) -> bool:
        """True if a block decomposition is recorded."""
        return self.blocks is not None

    @property
    def is_integral(self) -> bool:
        """True if all elements are integers."""
        return all(e.denominator == 1 for e in self.elements)

    @property
    def max_abs(self) -> Fraction:
        """Largest absolute value of an element."""
        return max(abs(self.elements[0]), abs(self.elements[-1]))

    def scaled(self, factor: RationalLike) -> "DigitSet":
        """Returns factor * D, structure kept."""
        f = to_rational(factor)
        if f == 0:
            raise Raise.error(
                "Scaling by zero", DomainError, self.__class__.__name__, currentframe()
            )
        blocks: Optional[Tuple[Block, ...]] = None
        if self.blocks is not None:
            blocks = tuple(Block(b.scale * f, b.length) for b in self.blocks)
        return DigitSet(tuple(sorted(e * f for e in self.elements)), blocks)

    def translated(self, shift: RationalLike) -> "DigitSet":
        """Returns D + shift without block structure."""
        t = to_rational(shift)
        return DigitSet(tuple(e + t for e in self.elements))

    def as_floats(self) -> np.ndarray:
        """Elements as float array."""
        return np.array([float(e) for e in self.elements], dtype=float)


def consecutive(n: int) -> DigitSet:
    """Returns D_n = {0, 1, ..., n - 1}."""
    if n < 1:
        raise Raise.error(
            f"Expected n >= 1, received: {n}", DomainError, __name__, currentframe()
        )
    return DigitSet.progression(1, n)


def direct_sum(a: DigitSet, b: DigitSet) -> DigitSet:
    """Returns a + b, failing on any repeated sum."""
    elements = tuple(sorted(_sum_lists(list(a.elements), list(b.elements))))
    blocks: Optional[Tuple[Block, ...]] = None
    if a.blocks is not None and b.blocks is not None:
        blocks = a.blocks + b.blocks
    return DigitSet(elements, blocks)


def alternate_digit_set(m: int, n_over_2m: int, rho: RationalLike) -> DigitSet:
    """Returns D_m + 2m D_N + (1 + m rho - 2Nm) D_2."""
    r = to_rational(rho)
    if m < 1 or n_over_2m < 1:
        raise Raise.error(
            f"Expected positive m and N, received: m={m}, N={n_over_2m}",
            DomainError,
            __name__,
            currentframe(),
        )
    if not 0 < r < 1:
        raise Raise.error(
            f"Contraction ratio outside (0, 1): {r}",
            DomainError,
            __name__,
            currentframe(),
        )
    head = direct_sum(consecutive(m), DigitSet.progression(2 * m, n_over_2m))
    return direct_sum(head, DigitSet.progression(1 + m * r - 2 * n_over_2m * m, 2))


def _phases(d: DigitSet, x: Fraction) -> List[Fraction]:
    return [frac_part(e * x) for e in d.elements]


def mask_root_sum(d: DigitSet, x: RationalLike) -> RootOfUnitySum:
    """Unnormalised sum of exp(2 pi i e x) as an exact root sum."""
    return RootOfUnitySum.from_phases(_phases(d, to_rational(x)))


def vanishing_factor(d: DigitSet, x: RationalLike) -> Optional[RootOfUnitySum]:
    """Returns a vanishing factor of the mask at x, or None if the mask is nonzero."""
    xr = to_rational(x)
    if d.blocks is not None:
        for block in d.blocks:
            if block.length < 2:
                continue
            factor = RootOfUnitySum.from_phases(
                frac_part(e * xr) for e in block.elements()
            )
            if factor.is_zero():
                return factor
        return None
    full = mask_root_sum(d, xr)
    if full.is_zero():
        return full
    return None


def mask_vanishes(d: DigitSet, x: RationalLike) -> bool:
    """Exact test m_D(x) == 0."""
    return vanishing_factor(d, x) is not None


def mask_order(d: DigitSet, x: Fraction) -> int:
    """Root-of-unity order of the mask phases at rational x."""
    return lcm_of_denominators(e * x for e in d.elements)


def mask_eval(
    d: DigitSet, x: Point, exact_limit: int = EXACT_ORDER_LIMIT
) -> complex:
    """Returns m_D(x) = (1/#D) sum exp(2 pi i d x).

    For rational x the phases are reduced exactly before rounding, and a
    mask that vanishes exactly returns 0j when the order is at most
    exact_limit.
    """
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        xr = Fraction(x)
        if mask_order(d, xr) <= exact_limit and mask_vanishes(d, xr):
            return 0j
        phases = np.array([float(p) for p in _phases(d, xr)], dtype=float)
        return complex(np.mean(np.exp(2j * np.pi * phases)))
    return complex(np.mean(np.exp(2j * np.pi * d.as_floats() * float(x))))


def mask_values(d: DigitSet, xs: np.ndarray) -> np.ndarray:
    """Vectorised double precision mask over an array of points."""
    points = np.asarray(xs, dtype=float)
    return np.exp(2j * np.pi * np.multiply.outer(points, d.as_floats())).mean(axis=-1)


# #[EOF]#######################################################################
