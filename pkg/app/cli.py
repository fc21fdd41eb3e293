"""
Command line front end.

Every subcommand writes one artifact to standard output or to --output; logs
and diagnostics go to standard error. Exit status 2 marks a parse error,
1 a domain error.
"""
from pathlib import Path
from typing import Annotated, Optional

import typer
from pydantic import ValidationError

from app.core.exceptions import ComputationError
from app.core.logger import configure
from app.schemas.command import Command, CommandConfig, OutputFormat
from app.services.command_service import execute
from app.services.constant.response_constant import PARSE_EXIT_CODE

cli = typer.Typer(
    name="bredon",
    add_completion=False,
    no_args_is_help=True,
    help="Bredon cohomology of configuration spaces over orbit categories.",
)

Group = Annotated[str, typer.Option("-g", "--group", help="C<n>, D<2n>, S<n>, A<n>, Q8 or perm:<degree>:<cycles;...>")]
Points = Annotated[int, typer.Option("-q", "--points", help="Number of configuration points.")]
Dimension = Annotated[int, typer.Option("-n", "--dimension", help="Dimension of the ambient Euclidean space.")]
Representation = Annotated[str, typer.Option("-r", "--representation", help="regular, free:<s> or orbits:<k>x<m>,...")]
Source = Annotated[str, typer.Option("-s", "--source", help="First coefficient system of hom and ext.")]
Coefficient = Annotated[str, typer.Option("-c", "--coefficient", help="constQ, zero, atom:<i>, injective:<i>, regular-injective:<i> or homology:<n>")]
Format = Annotated[OutputFormat, typer.Option("-f", "--format", case_sensitive=False)]
Output = Annotated[Optional[Path], typer.Option("-o", "--output", help="Write to this file instead of standard output.")]


def run(config: CommandConfig) -> int:
    """
    Execute one command and emit its artifact.

    Returns:
        int: Process exit status
    """
    try:
        artifact = execute(config)
    except ComputationError as error:
        typer.echo(f"error: {error}", err=True)
        return error.exit_code
    if config.output is not None:
        config.output.write_text(artifact, encoding="utf-8")
    else:
        typer.echo(artifact, nl=False)
    return 0


def _invoke(command: Command, **options) -> None:
    try:
        config = CommandConfig(command=command, **options)
    except ComputationError as error:
        typer.echo(f"error: {error}", err=True)
        raise typer.Exit(error.exit_code)
    except ValidationError as error:
        typer.echo(f"error: {error.errors()[0]['msg']}", err=True)
        raise typer.Exit(PARSE_EXIT_CODE)
    raise typer.Exit(run(config))


@cli.callback()
def main(verbose: Annotated[bool, typer.Option("-v", "--verbose", help="Log at DEBUG level.")] = False):
    """Bredon cohomology of configuration spaces over orbit categories."""
    if verbose:
        configure("DEBUG")


@cli.command()
def lattice(group: Group = "D8", format: Format = OutputFormat.TEXT, output: Output = None):
    """Subgroup conjugacy classes in canonical order."""
    _invoke(Command.LATTICE, group=group, format=format, output=output)


@cli.command()
def orbitcat(group: Group = "D8", format: Format = OutputFormat.TEXT, output: Output = None):
    """Reduced orbit category: hom-set sizes, composition, quiver."""
    _invoke(Command.ORBITCAT, group=group, format=format, output=output)


@cli.command()
def betti(
    dimension: Dimension = 2,
    points: Points = 3,
    format: Format = OutputFormat.TEXT,
    output: Output = None,
):
    """Betti numbers of Conf(R^n, q)."""
    _invoke(Command.BETTI, dimension=dimension, points=points, format=format, output=output)


@cli.command()
def decompose(
    group: Group = "D8",
    points: Points = 3,
    representation: Representation = "regular",
    format: Format = OutputFormat.TEXT,
    output: Output = None,
):
    """Homology coefficient systems of Conf(V, q) as sums of atoms."""
    _invoke(
        Command.DECOMPOSE,
        group=group, points=points, representation=representation, format=format, output=output,
    )


@cli.command()
def resolve(
    group: Group = "D8",
    coefficient: Coefficient = "atom:0",
    points: Points = 3,
    representation: Representation = "regular",
    format: Format = OutputFormat.TEXT,
    output: Output = None,
):
    """Injective resolution of a coefficient system."""
    _invoke(
        Command.RESOLVE,
        group=group, coefficient=coefficient, points=points, representation=representation,
        format=format, output=output,
    )


@cli.command()
def hom(
    group: Group = "D8",
    source: Source = "constQ",
    coefficient: Coefficient = "atom:0",
    points: Points = 3,
    representation: Representation = "regular",
    format: Format = OutputFormat.TEXT,
    output: Output = None,
):
    """Dimension and basis of Hom(source, coefficient)."""
    _invoke(
        Command.HOM,
        group=group, source=source, coefficient=coefficient, points=points,
        representation=representation, format=format, output=output,
    )


@cli.command()
def ext(
    group: Group = "D8",
    source: Source = "constQ",
    coefficient: Coefficient = "atom:0",
    points: Points = 3,
    representation: Representation = "regular",
    format: Format = OutputFormat.TEXT,
    output: Output = None,
):
    """Ext^q(source, coefficient) next to dim Hom(source, I^q)."""
    _invoke(
        Command.EXT,
        group=group, source=source, coefficient=coefficient, points=points,
        representation=representation, format=format, output=output,
    )


@cli.command()
def e2page(
    group: Group = "D8",
    points: Points = 3,
    coefficient: Coefficient = "atom:0",
    representation: Representation = "regular",
    format: Format = OutputFormat.TEXT,
    output: Output = None,
):
    """E2 page of the universal coefficient spectral sequence."""
    _invoke(
        Command.E2PAGE,
        group=group, points=points, coefficient=coefficient, representation=representation,
        format=format, output=output,
    )


@cli.command()
def cohomology(
    group: Group = "D8",
    points: Points = 3,
    coefficient: Coefficient = "atom:0",
    representation: Representation = "regular",
    format: Format = OutputFormat.TEXT,
    output: Output = None,
):
    """Ranks of H^n_G(Conf(V, q); M) read off the E2 page, with undetermined degrees flagged."""
    _invoke(
        Command.COHOMOLOGY,
        group=group, points=points, coefficient=coefficient, representation=representation,
        format=format, output=output,
    )


@cli.command()
def constq(
    group: Group = "D8",
    points: Points = 3,
    representation: Representation = "regular",
    format: Format = OutputFormat.TEXT,
    output: Output = None,
):
    """Equivariant cohomology of Conf(V, q) with constant rational coefficients."""
    _invoke(
        Command.CONSTQ,
        group=group, points=points, representation=representation, format=format, output=output,
    )


if __name__ == "__main__":
    cli()
