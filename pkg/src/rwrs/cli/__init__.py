"""Command Line Interface parsing for rwrs"""

import importlib
import logging
from importlib.metadata import version as version_meta
from typing import Optional

import click
from rich.console import Console
from rich.logging import RichHandler

from ..constants import CONFIG_PATH_ENV_VAR, DEFAULT_CONFIG_FILE_NAME, THREADS_ENV_VAR

CONFIG_PATH_HELP = (
    f"Path to the experiment file. Can be set via `{CONFIG_PATH_ENV_VAR}` env var. "
)


def get_version():
    try:
        return f"{version_meta('rwrs')}"
    except importlib.metadata.PackageNotFoundError:
        return "(local)"


FORMAT = "%(message)s"


def create_console_logger(
    show_path: bool, verbose: bool, max_width: Optional[int] = None
) -> Console:
    console = Console(
        markup=True,
        width=max_width if (max_width is not None and max_width > 0) else None,
        no_color=False,
        log_path=False,
        log_time=False,
        color_system="256",
    )
    logging.basicConfig(
        level="DEBUG" if verbose else "INFO",
        format=FORMAT,
        datefmt="[%X]",
        handlers=[RichHandler(markup=True, console=console, show_path=show_path)],
    )
    return console


def experiment_options(function):
    """The options shared by every command that runs an experiment file."""
    options = [
        click.option(
            "--config",
            "-c",
            required=True,
            type=click.Path(dir_okay=False),
            help=CONFIG_PATH_HELP,
            envvar=CONFIG_PATH_ENV_VAR,
            default=DEFAULT_CONFIG_FILE_NAME,
        ),
        click.option(
            "--seed",
            "-s",
            type=click.INT,
            required=False,
            help="Replaces the seed of the experiment file",
        ),
        click.option(
            "--threads",
            "-t",
            type=click.IntRange(min=1),
            required=False,
            envvar=THREADS_ENV_VAR,
            help=f"Worker threads. Can be set via `{THREADS_ENV_VAR}` env var. "
            "Results do not depend on it.",
        ),
        click.option(
            "--out",
            "-o",
            type=click.Path(dir_okay=False),
            required=False,
            help="CSV file for the result rows",
        ),
        click.option(
            "--verbose",
            "-v",
            is_flag=True,
            default=False,
            help="Verbose output",
        ),
    ]
    for option in reversed(options):
        function = option(function)
    return function
