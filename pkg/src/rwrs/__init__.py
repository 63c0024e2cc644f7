"""
.. include:: ../../README.md

.. include:: ../../README-usage.md

.. include:: ../../README-dev.md
"""
import logging

import click

from .cli.experiments import constants, fit, kernel, psi, sample_check
from .cli.meta_info import version


def _disable_package_loggers(offending_loggers: list[str]):
    for name, _ in logging.root.manager.loggerDict.items():  # pylint: disable=no-member
        for offending_logger in offending_loggers:
            if name.startswith(offending_logger):
                logging.getLogger(name).setLevel(logging.WARNING)


@click.group(name="rwrs", help="Renewal experiments for random walks in random scenery")
def main_group():
    """Renewal experiments for random walks in random scenery"""


def add_commands():
    main_group.add_command(sample_check)
    main_group.add_command(psi)
    main_group.add_command(constants)
    main_group.add_command(kernel)
    main_group.add_command(fit)
    main_group.add_command(version)


def main():
    _disable_package_loggers(["markdown", "concurrent"])
    add_commands()
    main_group()  # pylint: disable = no-value-for-parameter
