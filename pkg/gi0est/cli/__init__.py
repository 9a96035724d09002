from gi0est.logging_utils import logging_basic_config
logging_basic_config()

import click

import gi0est
from gi0est.cli.estimate import estimate
from gi0est.cli.extract_region import extract_region
from gi0est.cli.fit_density import fit_density
from gi0est.cli.kstest import kstest
from gi0est.cli.map import map_raster
from gi0est.cli.mc import mc
from gi0est.cli.sample import sample


@click.group()
@click.version_option(version=gi0est.__version__)
@click.pass_context
def cli(ctx):
    pass


# simulation
cli.add_command(sample, "sample")
cli.add_command(mc, "mc")

# estimation
cli.add_command(estimate, "estimate")
cli.add_command(kstest, "kstest")
cli.add_command(map_raster, "map")

# utils
cli.add_command(fit_density, "fit_density")
cli.add_command(extract_region, "extract_region")
