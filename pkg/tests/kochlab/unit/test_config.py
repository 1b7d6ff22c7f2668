"""
Unit tests for KochConfig and logging setup
"""

import logging

import pytest

from backend.kochlab.config import KochConfig
from backend.kochlab.errors import ConfigError
from backend.utils.logger import KochLabFormatter, get_logger


def test_defaults():
    """Defaults cover every documented example"""
    config = KochConfig()
    assert config.precision == 12
    assert config.qmax == 1000
    assert config.output_format == "text"
    config.validate()


def test_from_env_reads_log_level(monkeypatch, tmp_path):
    """Only LOG_LEVEL is taken from the environment"""
    monkeypatch.setenv("LOG_LEVEL", "debug")
    config = KochConfig.from_env(env_file=tmp_path / "missing.env")
    assert config.log_level == "DEBUG"
    assert config.precision == 12


def test_from_env_dotenv_file(monkeypatch, tmp_path):
    """A .env file supplies LOG_LEVEL when the variable is unset"""
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    env = tmp_path / ".env"
    env.write_text("LOG_LEVEL=INFO\n")
    config = KochConfig.from_env(env_file=env)
    assert config.log_level == "INFO"
    monkeypatch.delenv("LOG_LEVEL", raising=False)


def test_overrides_skip_none():
    """Unset CLI flags keep the defaults"""
    config = KochConfig().with_overrides(precision=8, qmax=None, output_format="json")
    assert config.precision == 8
    assert config.qmax == 1000
    assert config.output_format == "json"


@pytest.mark.parametrize(
    "overrides",
    [
        {"precision": 0},
        {"precision": 65},
        {"output_format": "xml"},
        {"qmax": 2},
        {"workers": 0},
        {"log_level": "LOUD"},
    ],
)
def test_validate_rejects(overrides):
    """Out-of-range values fail fast"""
    with pytest.raises(ConfigError):
        KochConfig().with_overrides(**overrides).validate()


def test_logger_namespace():
    """Module loggers live under the kochlab namespace"""
    assert get_logger("backend.kochlab.koch").logger.name == "kochlab.koch"
    assert get_logger("kochlab.cli").logger.name == "kochlab.cli"


def test_logger_context_rendered():
    """Keyword arguments end up as key=value pairs"""
    logger = get_logger("tests.context")
    records = []

    class Capture(logging.Handler):
        def emit(self, record):
            records.append(record)

    handler = Capture()
    logger.logger.addHandler(handler)
    logger.logger.setLevel(logging.DEBUG)
    try:
        logger.debug("Link table built", p=3, primes=[7, 31])
    finally:
        logger.logger.removeHandler(handler)
        logger.logger.setLevel(logging.NOTSET)

    assert records[0].context == {"p": 3, "primes": [7, 31]}
    text = KochLabFormatter("%(message)s%(context_str)s").format(records[0])
    assert text == "Link table built | p=3 primes=[7, 31]"
