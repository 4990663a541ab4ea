# -*- coding: utf-8 -*-
"""
  test_config.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 17.10.2026, 18:44:50

  Purpose: Configuration defaults, environment overrides and log setup.
"""

import pytest

from jsktoolbox.logstool.logs import LoggerClient

from jskspectral.libs.config import Config
from jskspectral.libs.exact_core import EXACT_ORDER_LIMIT
from jskspectral.libs.logs import LogsProcessor
from jskspectral.libs.system import EnvKeys, MEnv


@pytest.fixture
def clean_env(monkeypatch: pytest.MonkeyPatch) -> pytest.MonkeyPatch:
    for name in (EnvKeys.TOL, EnvKeys.THREADS, EnvKeys.VERBOSE, EnvKeys.EXACT_LIMIT):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


class TestConfig:
    def test_defaults(self) -> None:
        conf = Config()
        assert conf.tolerance == 1e-9
        assert conf.threads == 1
        assert conf.output is None
        assert conf.format is None
        assert conf.verbose is False
        assert conf.exact_order_limit == EXACT_ORDER_LIMIT == 2048

    def test_setters_validate(self) -> None:
        conf = Config()
        with pytest.raises(ValueError):
            conf.tolerance = 0.0
        with pytest.raises(TypeError):
            conf.tolerance = "1e-3"  # type: ignore
        with pytest.raises(ValueError):
            conf.threads = 0
        with pytest.raises(ValueError):
            conf.format = "xml"
        conf.format = "csv"
        assert conf.format == "csv"
        with pytest.raises(ValueError):
            conf.exact_order_limit = 0
        conf.exact_order_limit = 64
        assert conf.exact_order_limit == 64

    def test_env_overrides(self, clean_env: pytest.MonkeyPatch) -> None:
        clean_env.setenv(EnvKeys.TOL, "1e-6")
        clean_env.setenv(EnvKeys.THREADS, "4")
        clean_env.setenv(EnvKeys.VERBOSE, "yes")
        clean_env.setenv(EnvKeys.EXACT_LIMIT, "512")
        conf = Config()
        assert conf.update_from_env() == []
        assert conf.tolerance == 1e-6
        assert conf.threads == 4
        assert conf.verbose is True
        assert conf.exact_order_limit == 512

    def test_malformed_env_is_reported(self, clean_env: pytest.MonkeyPatch) -> None:
        clean_env.setenv(EnvKeys.TOL, "-1")
        clean_env.setenv(EnvKeys.THREADS, "many")
        clean_env.setenv(EnvKeys.EXACT_LIMIT, "-5")
        conf = Config()
        assert conf.update_from_env() == [
            EnvKeys.TOL,
            EnvKeys.THREADS,
            EnvKeys.EXACT_LIMIT,
        ]
        assert conf.exact_order_limit == EXACT_ORDER_LIMIT
        assert conf.tolerance == 1e-9
        assert conf.threads == 1

    def test_unset_env(self, clean_env: pytest.MonkeyPatch) -> None:
        env = MEnv()
        assert env.tolerance() is None
        assert env.threads() is None
        assert env.verbose() is None
        assert env.exact_limit() is None

    def test_keys_are_read_only(self) -> None:
        with pytest.raises(AttributeError):
            EnvKeys.TOL = "OTHER_TOL"  # type: ignore


class TestLogsProcessor:
    def test_clients(self) -> None:
        processor = LogsProcessor("jskspectral-test")
        assert isinstance(processor.client, LoggerClient)
        child = processor.child("cli")
        assert isinstance(child, LoggerClient)
        child.message_info = "message"
        processor.flush()

    def test_messages_go_to_stderr(self, capsys: pytest.CaptureFixture) -> None:
        processor = LogsProcessor("jskspectral-test", verbose=True)
        processor.client.message_debug = "debug line"
        processor.flush()
        captured = capsys.readouterr()
        assert "debug line" not in captured.out


# #[EOF]#######################################################################
