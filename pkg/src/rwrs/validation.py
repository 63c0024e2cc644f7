"""Validation of experiment configuration files against the bundled schema."""

import pkgutil
from functools import lru_cache

import jsonschema
from jsonschema import ValidationError
from jsonschema.validators import Draft7Validator
from referencing import Registry, Resource
from ruamel.yaml import YAML

from .constants import EXPERIMENT_SCHEMA_FILE_NAME
from .errors import ConfigError

yaml = YAML()


def load_bundled_schema(name: str) -> str:
    schema_string = pkgutil.get_data(__name__, f"schema/{name}")
    if not schema_string:
        raise ImportError(f"'schema/{name}' was not found in bundle")
    return schema_string.decode("utf-8")


@lru_cache(maxsize=10)
def load_schema(schema_string: str) -> Draft7Validator:
    schema = yaml.load(schema_string)
    registry: Registry = Registry().with_resource(  # type: ignore[call-arg]
        uri=schema.get("$id", ""), resource=Resource.from_contents(schema)
    )

    all_validators = dict(Draft7Validator.VALIDATORS)
    existing_validator = all_validators["type"]

    def allow_none_validator(validator, types, instance, yaml_schema):
        if instance is None and "null" in (
            types if isinstance(types, list) else [types]
        ):
            return None

        return existing_validator(validator, types, instance, yaml_schema)

    all_validators["type"] = allow_none_validator

    extended_validator = jsonschema.validators.extend(
        validator=jsonschema.validators.Draft7Validator,
        validators=all_validators,
        type_checker=Draft7Validator.TYPE_CHECKER,
    )
    return extended_validator(schema=schema, registry=registry)


def validate(values: dict, schema_string: str):
    schema = load_schema(schema_string)
    return schema.validate(values)


def validate_experiment(values: dict) -> None:
    """Raises a `ConfigError` naming the offending field when `values` violate the schema."""
    try:
        validate(values, load_bundled_schema(EXPERIMENT_SCHEMA_FILE_NAME))
    except ValidationError as exc:
        field = ".".join(str(part) for part in exc.absolute_path) or None
        if exc.validator == "additionalProperties":
            unknown = sorted(set(exc.instance) - set(exc.schema.get("properties", {})))
            raise ConfigError(", ".join(unknown), "unknown key") from exc
        raise ConfigError(field, exc.message) from exc
