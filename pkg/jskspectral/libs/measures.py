# -*- coding: utf-8 -*-
"""
  measures.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 15.10.2026, 09:14:52

  Purpose: Measure descriptions.

  SelfSimilar       mu for the maps x -> rho (x + d), d in D.
  Alternating       nu for x -> (-1)**floor(d / m) rho (x + d), d in D_n.
  AlternatingSymmetric
                    nu for x -> (-1)**d rho (x + d), d in {-n, ..., n}.
  Moran             infinite convolution of uniform measures on
                    R_k / (b_1 ... b_k), a finite prefix followed by a
                    periodically repeated tail.
"""

from dataclasses import dataclass
from fractions import Fraction
from inspect import currentframe
from typing import ClassVar, Optional, Tuple, Union

from jsktoolbox.raisetool import Raise

from jskspectral.libs.digit_sets import DigitSet, alternate_digit_set, consecutive
from jskspectral.libs.errors import DomainError


def _check_rho(rho: Fraction, name: str) -> None:
    if not 0 < rho < 1:
        raise Raise.error(
            f"Contraction ratio outside (0, 1): {rho}",
            DomainError,
            name,
            currentframe(),
        )


@dataclass(frozen=True)
class SelfSimilar:
    """Self-similar measure with uniform weights."""

    KIND: ClassVar[str] = "self_similar"

    rho: Fraction
    digits: DigitSet

    def __post_init__(self) -> None:
        _check_rho(self.rho, self.__class__.__name__)


@dataclass(frozen=True)
class Alternating:
    """Alternating-sign measure with period m on D_n."""

    KIND: ClassVar[str] = "alternating"

    rho: Fraction
    m: int
    n: int

    def __post_init__(self) -> None:
        _check_rho(self.rho, self.__class__.__name__)
        if self.m < 1 or self.n < 1 or self.n % self.m:
            raise Raise.error(
                f"Expected positive m dividing n, received: m={self.m}, n={self.n}",
                DomainError,
                self.__class__.__name__,
                currentframe(),
            )

    @property
    def digits(self) -> Tuple[int, ...]:
        """Digits 0, ..., n - 1."""
        return tuple(range(self.n))

    @property
    def signs(self) -> Tuple[int, ...]:
        """Sign of each digit's map."""
        return tuple(-1 if (d // self.m) % 2 else 1 for d in self.digits)

    @property
    def max_abs_digit(self) -> int:
        return self.n - 1

    @property
    def is_even_family(self) -> bool:
        """True for n = 2Nm, the family with a self-similar equivalent."""
        return (self.n // self.m) % 2 == 0

    def self_similar_equivalent(self) -> Optional[SelfSimilar]:
        """Self-similar form of the same measure, None for odd n/m."""
        if not self.is_even_family:
            return None
        return SelfSimilar(
            self.rho, alternate_digit_set(self.m, self.n // (2 * self.m), self.rho)
        )


@dataclass(frozen=True)
class AlternatingSymmetric:
    """Alternating-sign measure on {-n, ..., n} with sign (-1)**d."""

    KIND: ClassVar[str] = "alternating_symmetric"

    rho: Fraction
    n: int

    def __post_init__(self) -> None:
        _check_rho(self.rho, self.__class__.__name__)
        if self.n < 1:
            raise Raise.error(
                f"Expected n >= 1, received: {self.n}",
                DomainError,
                self.__class__.__name__,
                currentframe(),
            )

    @property
    def digits(self) -> Tuple[int, ...]:
        return tuple(range(-self.n, self.n + 1))

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(-1 if d % 2 else 1 for d in self.digits)

    @property
    def max_abs_digit(self) -> int:
        return self.n

    @property
    def shift(self) -> Fraction:
        """Translation n rho / (1 - rho) relating nu to mu_{rho, D_{2n+1}}."""
        return self.n * self.rho / (1 - self.rho)

    def self_similar_shifted(self) -> SelfSimilar:
        """mu_{rho, D_{2n+1}}, equal to nu translated by the shift."""
        return SelfSimilar(self.rho, consecutive(2 * self.n + 1))


@dataclass(frozen=True)
class MoranStage:
    """One convolution factor: expansion b and digit set R."""

    b: Fraction
    digits: DigitSet

    def __post_init__(self) -> None:
        if self.b == 0:
            raise Raise.error(
                "Stage expansion must be nonzero",
                DomainError,
                self.__class__.__name__,
                currentframe(),
            )

    @property
    def is_trivial(self) -> bool:
        """True when the stage measure is the point mass at 0."""
        return len(self.digits) == 1 and self.digits.elements[0] == 0


@dataclass(frozen=True)
class Moran:
    """Moran measure with a finite prefix and a periodic tail."""

    KIND: ClassVar[str] = "moran"

    prefix: Tuple[MoranStage, ...]
    tail: Tuple[MoranStage, ...] = ()

    def __post_init__(self) -> None:
        if self.tail and not self.tail_is_trivial:
            if abs(self.tail_period_product) <= 1:
                raise Raise.error(
                    "Divergent tail: |product of tail expansions| must exceed 1, "
                    f"received {self.tail_period_product}",
                    DomainError,
                    self.__class__.__name__,
                    currentframe(),
                )

    @property
    def tail_is_trivial(self) -> bool:
        """True if every tail stage is the point mass at 0."""
        return all(stage.is_trivial for stage in self.tail)

    @property
    def prefix_products(self) -> Tuple[Fraction, ...]:
        """Cumulative products b_1 ... b_k over the prefix."""
        out = []
        acc = Fraction(1)
        for stage in self.prefix:
            acc *= stage.b
            out.append(acc)
        return tuple(out)

    @property
    def prefix_total(self) -> Fraction:
        """b_1 ... b_P, 1 for an empty prefix."""
        products = self.prefix_products
        return products[-1] if products else Fraction(1)

    @property
    def tail_partial_products(self) -> Tuple[Fraction, ...]:
        """c_i = b_{P+1} ... b_{P+i} for one tail period."""
        out = []
        acc = Fraction(1)
        for stage in self.tail:
            acc *= stage.b
            out.append(acc)
        return tuple(out)

    @property
    def tail_period_product(self) -> Fraction:
        """beta = c_T, growth of the expansion per tail period."""
        partial = self.tail_partial_products
        return partial[-1] if partial else Fraction(1)

    @property
    def is_finite(self) -> bool:
        """True when the measure is a finite convolution."""
        return not self.tail or self.tail_is_trivial

    @classmethod
    def from_self_similar(cls, spec: SelfSimilar) -> "Moran":
        """Encodes mu_{rho, D} with constant stages b = 1/rho."""
        return cls((), (MoranStage(1 / spec.rho, spec.digits),))


MeasureSpec = Union[SelfSimilar, Alternating, AlternatingSymmetric, Moran]


# #[EOF]#######################################################################
