# -*- coding: utf-8 -*-
"""
  logs.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 14.10.2026, 18:40:27

  Purpose: Logging subsystem setup.

  Every log line goes to stderr, stdout is reserved for reports.
"""

from typing import Optional

from jsktoolbox.basetool.data import BData
from jsktoolbox.attribtool import ReadOnlyClass
from jsktoolbox.logstool.logs import LoggerClient, LoggerEngine
from jsktoolbox.logstool.engines import LoggerEngineStderr
from jsktoolbox.logstool.formatters import LogFormatterDateTime

try:
    from jsktoolbox.logstool.keys import LogsLevelKeys
except ImportError:  # jsktoolbox < 1.1
    from jsktoolbox.libs.base_logs import LogsLevelKeys  # type: ignore


class _Keys(object, metaclass=ReadOnlyClass):
    """Local keys."""

    CLIENT: str = "_client_"
    ENGINE: str = "_engine_"
    NAME: str = "_name_"


class LogsProcessor(BData):
    """Owns the logger engine and hands out clients."""

    def __init__(self, name: str = "jskspectral", verbose: bool = False) -> None:
        """Constructor."""
        self._set_data(key=_Keys.NAME, value=name, set_default_type=str)
        engine = LoggerEngine()
        levels: list[str] = [
            LogsLevelKeys.INFO,
            LogsLevelKeys.WARNING,
            LogsLevelKeys.ERROR,
            LogsLevelKeys.CRITICAL,
        ]
        if verbose:
            levels.append(LogsLevelKeys.DEBUG)
        for level in levels:
            engine.add_engine(
                level,
                LoggerEngineStderr(name=name, formatter=LogFormatterDateTime()),
            )
        self._set_data(key=_Keys.ENGINE, value=engine, set_default_type=LoggerEngine)
        self._set_data(
            key=_Keys.CLIENT,
            value=LoggerClient(queue=engine.logs_queue, name=name),
            set_default_type=LoggerClient,
        )

    @property
    def client(self) -> LoggerClient:
        """Returns the shared logger client."""
        return self._get_data(key=_Keys.CLIENT)  # type: ignore

    def child(self, name: str) -> LoggerClient:
        """Returns a client with its own name on the same queue."""
        engine: LoggerEngine = self._get_data(key=_Keys.ENGINE)  # type: ignore
        return LoggerClient(
            queue=engine.logs_queue, name=f"{self._get_data(key=_Keys.NAME)}.{name}"
        )

    def flush(self) -> None:
        """Sends the queued messages to engines."""
        engine: Optional[LoggerEngine] = self._get_data(key=_Keys.ENGINE)
        if engine is not None:
            engine.send()


# #[EOF]#######################################################################
