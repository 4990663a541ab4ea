# -*- coding: UTF-8 -*-
"""
  Author:  Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 10.12.2023

  Purpose: Sets of base classes.
"""

from typing import Optional

from jsktoolbox.basetool.data import BData
from jsktoolbox.logstool.logs import LoggerClient

from jskspectral.libs.keys import Keys
from jskspectral.libs.config import Config


class BLogs(BData):
    """BLogs base class."""

    @property
    def logs(self) -> Optional[LoggerClient]:
        """The logs property."""
        return self._get_data(key=Keys.LOGS)

    @logs.setter
    def logs(self, value: Optional[LoggerClient]) -> None:
        """The logs setter."""
        self._set_data(
            key=Keys.LOGS, value=value, set_default_type=Optional[LoggerClient]
        )


class BConfigHandler(BData):
    """BConfigHandler base class."""

    @property
    def _conf(self) -> Config:
        """The _conf property."""
        return self._get_data(key=Keys.CONF)  # type: ignore

    @_conf.setter
    def _conf(self, value: Config) -> None:
        """The _conf setter."""
        self._set_data(key=Keys.CONF, value=value, set_default_type=Config)


# #[EOF]#######################################################################
