"""Extractors for package meta information"""

import os
from importlib.metadata import distribution

import click

from . import get_version


def simple_version():
    return f"rwrs {get_version()}"


def about():
    dist = distribution("rwrs")
    return os.linesep.join(str(dist.metadata).split(os.linesep)[1:12])


@click.command()
@click.option("--verbose", "-v", is_flag=True, default=False, help="Print more output.")
def version(verbose):
    """Version information"""
    if verbose:
        click.echo(about())
    else:
        click.echo(simple_version())
