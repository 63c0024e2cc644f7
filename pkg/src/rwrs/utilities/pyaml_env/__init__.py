"""
Wrapper around `pyaml_env`'s `parse_config` for experiment files. `!ENV` tags are resolved
(after loading `.env`), values left at the `N/A` default become `None`.
"""
from pathlib import Path

from dotenv import load_dotenv
from pyaml_env import parse_config as original_parse_config

from ...errors import ConfigError

UNSET = "N/A"


def _unset_to_none(obj):
    if isinstance(obj, (list, tuple)):
        return type(obj)(_unset_to_none(value) for value in obj)
    if isinstance(obj, dict):
        return {key: _unset_to_none(value) for key, value in obj.items()}
    if obj == UNSET:
        return None
    return obj


def parse_config(path: Path) -> dict:
    load_dotenv(Path(".env"))
    if not Path(path).is_file():
        raise ConfigError(None, f"Config file {path} does not exist")

    parsed = original_parse_config(str(path), default_value=UNSET)
    if not isinstance(parsed, dict):
        raise ConfigError(None, f"Config file {path} must contain a key-value mapping")
    return _unset_to_none(parsed)
