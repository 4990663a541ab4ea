# -*- coding: utf-8 -*-
"""
  system.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 29.12.2023, 04:19:32

  Purpose: System interaction classes.
"""

import os
from typing import Optional

from jsktoolbox.attribtool import ReadOnlyClass
from jsktoolbox.systemtool import Env


class EnvKeys(object, metaclass=ReadOnlyClass):
    """Environment variable names."""

    THREADS: str = "JSKSPECTRAL_THREADS"
    TOL: str = "JSKSPECTRAL_TOL"
    EXACT_LIMIT: str = "JSKSPECTRAL_EXACT_LIMIT"
    VERBOSE: str = "JSKSPECTRAL_VERBOSE"


class MEnv(Env):
    """Extended Env version."""

    def tolerance(self) -> Optional[float]:
        """Returns tolerance override or None if unset or malformed."""
        value: Optional[str] = os.getenv(EnvKeys.TOL)
        if value is None:
            return None
        try:
            tol = float(value)
        except ValueError:
            return None
        if tol > 0:
            return tol
        return None

    def threads(self) -> Optional[int]:
        """Returns worker count override or None if unset or malformed."""
        value: Optional[str] = os.getenv(EnvKeys.THREADS)
        if value is None or not value.strip().isdigit():
            return None
        count = int(value)
        if count < 1:
            return None
        return count

    def verbose(self) -> Optional[bool]:
        """Returns verbose flag override."""
        value: Optional[str] = os.getenv(EnvKeys.VERBOSE)
        if value is None:
            return None
        return value.strip().lower() in ("1", "true", "yes", "on")

    def exact_limit(self) -> Optional[int]:
        """Returns the exact order limit override or None if unset or malformed."""
        value: Optional[str] = os.getenv(EnvKeys.EXACT_LIMIT)
        if value is None or not value.strip().isdigit():
            return None
        limit = int(value)
        if limit < 1:
            return None
        return limit

    def malformed(self) -> list[str]:
        """Returns names of variables that are set but unusable."""
        out: list[str] = []
        if os.getenv(EnvKeys.TOL) is not None and self.tolerance() is None:
            out.append(EnvKeys.TOL)
        if os.getenv(EnvKeys.THREADS) is not None and self.threads() is None:
            out.append(EnvKeys.THREADS)
        if os.getenv(EnvKeys.EXACT_LIMIT) is not None and self.exact_limit() is None:
            out.append(EnvKeys.EXACT_LIMIT)
        return out


# #[EOF]#######################################################################
