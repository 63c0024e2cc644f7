import pytest

from src.rwrs.errors import ConfigError
from src.rwrs.utilities.pyaml_env import parse_config
from tests import root_test_path


class TestPyYamlEnv:
    resource_path = root_test_path / "test_resources"

    def test_replace_default_with_none(self):
        yaml_values = parse_config(self.resource_path / "env_replace.yml")
        assert yaml_values["root"]["output"] is None
        assert yaml_values["root"]["fallback"] == "results/fallback.csv"
        assert yaml_values["root"]["seed"] == 3

    def test_missing_file_is_a_config_error(self):
        with pytest.raises(ConfigError, match="does not exist"):
            parse_config(self.resource_path / "no_such_experiment.yml")
