# -*- coding: utf-8 -*-
"""
  errors.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 14.10.2026, 18:02:11

  Purpose: Exception classes of the package.

  Mathematical negative answers (a failing Hadamard pair, a point outside
  a zero set, an unknown zero set) are returned as values. The classes
  below are raised only for invalid input and broken constructions.
"""

from fractions import Fraction
from typing import Optional, Tuple


class SpectralError(ValueError):
    """Base class for package errors."""


class DomainError(SpectralError):
    """Numeric precondition violated."""


class NotADirectSumError(SpectralError):
    """Two pairs of summands produced the same element."""


class DegenerateLabelSetError(SpectralError):
    """Canonical spectrum expansion is not unique."""


class InternalConsistencyError(RuntimeError):
    """A construction guaranteed to verify did not verify."""


class IndeterminateError(SpectralError):
    """Exact decision required, only an indecisive estimate available."""

    def __init__(
        self, message: str = "", pair: Optional[Tuple[Fraction, Fraction]] = None
    ) -> None:
        """Constructor."""
        super().__init__(message)
        self.pair: Optional[Tuple[Fraction, Fraction]] = pair


class PayloadError(SpectralError):
    """Command payload failed validation."""

    def __init__(self, message: str = "", position: Optional[str] = None) -> None:
        """Constructor."""
        super().__init__(message)
        self.position: Optional[str] = position


# #[EOF]#######################################################################
