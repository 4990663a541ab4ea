# -*- coding: utf-8 -*-
"""
  config.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 14.10.2026, 19:05:48

  Purpose: Run configuration.
"""

from inspect import currentframe
from typing import Optional

from jsktoolbox.basetool.data import BData
from jsktoolbox.raisetool import Raise

from jskspectral.libs.exact_core import EXACT_ORDER_LIMIT
from jskspectral.libs.keys import Keys
from jskspectral.libs.system import MEnv


class Config(BData):
    """Configuration container for a single invocation."""

    def __init__(self) -> None:
        """Constructor."""
        self._set_data(key=Keys.TOL, value=1e-9, set_default_type=float)
        self._set_data(key=Keys.THREADS, value=1, set_default_type=int)
        self._set_data(key=Keys.OUTPUT, value=None, set_default_type=Optional[str])
        self._set_data(key=Keys.FORMAT, value=None, set_default_type=Optional[str])
        self._set_data(key=Keys.VERBOSE, value=False, set_default_type=bool)
        self._set_data(
            key=Keys.EXACT_LIMIT, value=EXACT_ORDER_LIMIT, set_default_type=int
        )

    def update_from_env(self, env: Optional[MEnv] = None) -> list[str]:
        """Applies environment overrides, returns unusable variable names."""
        if env is None:
            env = MEnv()
        tol = env.tolerance()
        if tol is not None:
            self.tolerance = tol
        threads = env.threads()
        if threads is not None:
            self.threads = threads
        verbose = env.verbose()
        if verbose is not None:
            self.verbose = verbose
        limit = env.exact_limit()
        if limit is not None:
            self.exact_order_limit = limit
        return env.malformed()

    @property
    def tolerance(self) -> float:
        """Default certification tolerance."""
        return self._get_data(key=Keys.TOL)  # type: ignore

    @tolerance.setter
    def tolerance(self, value: float) -> None:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise Raise.error(
                f"Expected float, received: '{type(value)}'",
                TypeError,
                self._c_name,
                currentframe(),
            )
        if not value > 0:
            raise Raise.error(
                f"Tolerance must be positive, received: {value}",
                ValueError,
                self._c_name,
                currentframe(),
            )
        self._set_data(key=Keys.TOL, value=float(value))

    @property
    def threads(self) -> int:
        """Worker count for parallel sections."""
        return self._get_data(key=Keys.THREADS)  # type: ignore

    @threads.setter
    def threads(self, value: int) -> None:
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise Raise.error(
                f"Expected positive int, received: '{value}'",
                ValueError,
                self._c_name,
                currentframe(),
            )
        self._set_data(key=Keys.THREADS, value=value)

    @property
    def output(self) -> Optional[str]:
        """Report path, None for stdout."""
        return self._get_data(key=Keys.OUTPUT)

    @output.setter
    def output(self, value: Optional[str]) -> None:
        self._set_data(key=Keys.OUTPUT, value=value)

    @property
    def format(self) -> Optional[str]:
        """Report format, None for the command default."""
        return self._get_data(key=Keys.FORMAT)

    @format.setter
    def format(self, value: Optional[str]) -> None:
        if value is not None and value not in ("json", "csv"):
            raise Raise.error(
                f"Unknown format: '{value}'",
                ValueError,
                self._c_name,
                currentframe(),
            )
        self._set_data(key=Keys.FORMAT, value=value)

    @property
    def verbose(self) -> bool:
        """Debug logging flag."""
        return self._get_data(key=Keys.VERBOSE)  # type: ignore

    @verbose.setter
    def verbose(self, value: bool) -> None:
        self._set_data(key=Keys.VERBOSE, value=bool(value))

    @property
    def exact_order_limit(self) -> int:
        """Largest root-of-unity order tested exactly during evaluation."""
        return self._get_data(key=Keys.EXACT_LIMIT)  # type: ignore

    @exact_order_limit.setter
    def exact_order_limit(self, value: int) -> None:
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise Raise.error(
                f"Expected positive int, received: '{value}'",
                ValueError,
                self._c_name,
                currentframe(),
            )
        self._set_data(key=Keys.EXACT_LIMIT, value=value)


# #[EOF]#######################################################################
