# -*- coding: utf-8 -*-
"""
  zero_sets.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 15.10.2026, 11:48:20

  Purpose: Exact zero sets of masks and of measure transforms.

  Atoms:
    LatticeComplement(a, n)  a * (Z \\ nZ) / n
    OddLattice(a, b)         a * (2Z + 1) / (2b)
  A ZeroSetExpr is a union of atoms, optionally dilated by base**j for all
  j >= start. Membership of a rational point is decided exactly: the atoms
  keep away from 0, so only finitely many dilations can contain the point.
"""

from dataclasses import dataclass
from fractions import Fraction
from inspect import currentframe
from typing import List, Optional, Tuple, Union

from jsktoolbox.raisetool import Raise

from jskspectral.libs.digit_sets import DigitSet
from jskspectral.libs.errors import DomainError
from jskspectral.libs.exact_core import RationalLike, to_rational
from jskspectral.libs.measures import (
    Alternating,
    AlternatingSymmetric,
    MeasureSpec,
    Moran,
    SelfSimilar,
)


@dataclass(frozen=True)
class LatticeComplement:
    """scale * (Z \\ modulus Z) / modulus."""

    scale: Fraction
    modulus: int

    def contains(self, x: Fraction) -> bool:
        y = x * self.modulus / self.scale
        return y.denominator == 1 and y.numerator % self.modulus != 0

    @property
    def min_abs(self) -> Fraction:
        """Smallest absolute value of a member."""
        return abs(self.scale) / self.modulus

    def scaled(self, factor: Fraction) -> "LatticeComplement":
        return LatticeComplement(self.scale * factor, self.modulus)


@dataclass(frozen=True)
class OddLattice:
    """scale * (2Z + 1) / (2 * half_denominator)."""

    scale: Fraction
    half_denominator: Fraction

    def contains(self, x: Fraction) -> bool:
        y = x * 2 * self.half_denominator / self.scale
        return y.denominator == 1 and y.numerator % 2 == 1

    @property
    def min_abs(self) -> Fraction:
        """Smallest absolute value of a member."""
        return abs(self.scale) / (2 * abs(self.half_denominator))

    def scaled(self, factor: Fraction) -> "OddLattice":
        return OddLattice(self.scale * factor, self.half_denominator)


Atom = Union[LatticeComplement, OddLattice]


@dataclass(frozen=True)
class Dilation:
    """Family base**j for j >= start."""

    base: Fraction
    start: int = 0


@dataclass(frozen=True)
class ZeroSetExpr:
    """Union of atoms, optionally over a dilation family."""

    atoms: Tuple[Atom, ...]
    dilation: Optional[Dilation] = None

    def __post_init__(self) -> None:
        for atom in self.atoms:
            if atom.scale == 0:
                raise Raise.error(
                    "Atom with zero scale",
                    DomainError,
                    self.__class__.__name__,
                    currentframe(),
                )
        if self.dilation is not None and abs(self.dilation.base) <= 1:
            raise Raise.error(
                f"Dilation base must exceed 1 in absolute value: {self.dilation.base}",
                DomainError,
                self.__class__.__name__,
                currentframe(),
            )

    @property
    def is_known(self) -> bool:
        return True

    def witness(self, x: RationalLike) -> Optional[Tuple[Optional[int], Atom]]:
        """Returns (dilation exponent, atom) containing x, or None."""
        point = to_rational(x)
        if point == 0 or not self.atoms:
            return None
        if self.dilation is None:
            for atom in self.atoms:
                if atom.contains(point):
                    return (None, atom)
            return None
        floor = min(atom.min_abs for atom in self.atoms)
        base = self.dilation.base
        j = self.dilation.start
        y = point / base**j
        while abs(y) >= floor:
            for atom in self.atoms:
                if atom.contains(y):
                    return (j, atom)
            y /= base
            j += 1
        return None

    def contains(self, x: RationalLike) -> bool:
        """Exact membership."""
        return self.witness(x) is not None

    def scaled(self, factor: Fraction) -> "ZeroSetExpr":
        """Returns factor * Z."""
        return ZeroSetExpr(tuple(a.scaled(factor) for a in self.atoms), self.dilation)


@dataclass(frozen=True)
class ZeroSetUnion:
    """Finite union of zero set expressions."""

    members: Tuple[ZeroSetExpr, ...]

    @property
    def is_known(self) -> bool:
        return True

    def contains(self, x: RationalLike) -> bool:
        point = to_rational(x)
        return any(member.contains(point) for member in self.members)


@dataclass(frozen=True)
class UnknownZeroSet:
    """No exact description available."""

    reason: str

    @property
    def is_known(self) -> bool:
        return False


KnownZeroSet = Union[ZeroSetExpr, ZeroSetUnion]
ZeroSet = Union[ZeroSetExpr, ZeroSetUnion, UnknownZeroSet]


def mask_zero_set(d: DigitSet) -> Union[ZeroSetExpr, UnknownZeroSet]:
    """Zero set of m_D from its block structure."""
    if len(d) == 1:
        return ZeroSetExpr(())
    if d.blocks is None:
        return UnknownZeroSet("digit set has no recorded block structure")
    atoms: List[Atom] = []
    for block in d.blocks:
        if block.length >= 3:
            atoms.append(LatticeComplement(1 / block.scale, block.length))
        elif block.length == 2:
            atoms.append(OddLattice(Fraction(1), block.scale))
    return ZeroSetExpr(tuple(atoms))


def _self_similar_zero_set(spec: SelfSimilar) -> ZeroSet:
    mask = mask_zero_set(spec.digits)
    if isinstance(mask, UnknownZeroSet):
        return mask
    return ZeroSetExpr(mask.atoms, Dilation(1 / spec.rho, 1))


def _moran_zero_set(spec: Moran) -> ZeroSet:
    members: List[ZeroSetExpr] = []
    for stage, total in zip(spec.prefix, spec.prefix_products):
        mask = mask_zero_set(stage.digits)
        if isinstance(mask, UnknownZeroSet):
            return mask
        if mask.atoms:
            members.append(mask.scaled(total))
    if not spec.is_finite:
        atoms: List[Atom] = []
        for stage, partial in zip(spec.tail, spec.tail_partial_products):
            mask = mask_zero_set(stage.digits)
            if isinstance(mask, UnknownZeroSet):
                return mask
            atoms.extend(a.scaled(spec.prefix_total * partial) for a in mask.atoms)
        if atoms:
            members.append(
                ZeroSetExpr(tuple(atoms), Dilation(spec.tail_period_product, 0))
            )
    return ZeroSetUnion(tuple(members))


def measure_zero_set(spec: MeasureSpec) -> ZeroSet:
    """Exact zero set of the measure transform, or UnknownZeroSet."""
    if isinstance(spec, SelfSimilar):
        return _self_similar_zero_set(spec)
    if isinstance(spec, Alternating):
        equivalent = spec.self_similar_equivalent()
        if equivalent is None:
            return UnknownZeroSet(
                "odd alternating family: only a superset of the zero set is known"
            )
        return _self_similar_zero_set(equivalent)
    if isinstance(spec, AlternatingSymmetric):
        return _self_similar_zero_set(spec.self_similar_shifted())
    return _moran_zero_set(spec)


# #[EOF]#######################################################################
