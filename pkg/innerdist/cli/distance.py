"""Commands computing distances of symbols and grids."""
import logging
from typing import TextIO

import click

from .. import core, utils
from ..exceptions import InvalidGridError
from . import emit, handle_errors, main

_logger = logging.getLogger(__name__)


@main.command()
@click.argument("a", type=int)
@click.argument("b", type=int)
@click.argument("n", type=int)
@click.pass_context
def dist(ctx: click.Context, a: int, b: int, n: int) -> None:
    """Print the cyclic distance between symbols A and B of order N."""
    with handle_errors(ctx):
        d = core.dist(a, b, n)
        emit(ctx.obj, str(d), {"a": a, "b": b, "n": n, "dist": d})


@main.command("inner-distance")
@click.argument("file", type=click.File("r"))
@click.pass_context
def inner_distance(ctx: click.Context, file: TextIO) -> None:
    """Print the inner distance of the Latin rectangle in FILE.

    FILE holds a header line "m n" followed by m rows of symbols in [1,n];
    pass - to read standard input.
    """
    with handle_errors(ctx):
        n, rows = utils.parse_grid(file.read())
        try:
            rect = core.validate(rows, order=n)
        except InvalidGridError as ex:
            raise click.UsageError(str(ex), ctx=ctx) from ex
        d = core.inner_distance(rect)
        _logger.info(f"{rect.rows}x{rect.cols} rectangle of order {n}: {d}")
        emit(
            ctx.obj,
            str(d),
            {"n": n, "rows": rect.rows, "cols": rect.cols, "inner_distance": d},
        )


@main.command("max-distance")
@click.argument("n", type=int)
@click.pass_context
def max_distance(ctx: click.Context, n: int) -> None:
    """Print the largest inner distance a Latin square of order N can reach."""
    with handle_errors(ctx):
        d = core.max_inner_distance(n)
        emit(ctx.obj, str(d), {"n": n, "max_inner_distance": d})
