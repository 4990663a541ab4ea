# -*- coding: utf-8 -*-
"""
  conftest.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 17.10.2026, 15:20:44

  Purpose: Shared fixtures and hypothesis profiles.

  HYPOTHESIS_PROFILE=ci selects the longer profile.
"""

import os

from fractions import Fraction

import pytest

from hypothesis import HealthCheck, settings

from jskspectral.libs.digit_sets import DigitSet, consecutive
from jskspectral.libs.measures import (
    Alternating,
    Moran,
    MoranStage,
    SelfSimilar,
)

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "ci",
    max_examples=400,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def middle_fourth() -> SelfSimilar:
    """rho = 1/4 on {0, 2}."""
    return SelfSimilar(Fraction(1, 4), DigitSet.progression(2, 2))


@pytest.fixture
def cantor() -> SelfSimilar:
    """rho = 1/3 on {0, 2}."""
    return SelfSimilar(Fraction(1, 3), DigitSet.progression(2, 2))


@pytest.fixture
def moran_mixed() -> Moran:
    """{0, 1}/2 followed by the repeated stage (3, D_3)."""
    return Moran(
        (MoranStage(Fraction(2), DigitSet.progression(1, 2)),),
        (MoranStage(Fraction(3), consecutive(3)),),
    )


@pytest.fixture
def odd_alternating() -> Alternating:
    """m = 1 on D_3 with rho = 1/2."""
    return Alternating(Fraction(1, 2), 1, 3)


# #[EOF]#######################################################################
