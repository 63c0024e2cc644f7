"""Constants for rwrs."""

DEFAULT_CONFIG_FILE_NAME = "experiment.yml"
EXPERIMENT_SCHEMA_FILE_NAME = "experiment_config.schema.yml"

CONFIG_PATH_ENV_VAR = "RWRS_CONFIG_PATH"
THREADS_ENV_VAR = "RWRS_THREADS"

REPLICA_CHUNK = 500
"""Replicas per work unit. Fixed so that reductions do not depend on the thread count."""

MAX_ENUMERATION_STEPS = 12
LATTICE_ZIPF_CUTOFF = 10**9

CSV_HEADER = (
    "regime",
    "a",
    "estimate_re",
    "estimate_im",
    "stat_err",
    "trunc_err",
    "predicted",
    "ratio",
)
CSV_DIGITS = 17

EXIT_PASS = 0
EXIT_ERROR = 1
EXIT_FAIL = 2
