"""Command building squares from rows."""
import logging
from typing import Optional, Tuple

import click

from .. import core, diffs, transforms, utils
from ..exceptions import InvalidGridError
from ..models import Row
from . import Settings, emit, handle_errors, main

_logger = logging.getLogger(__name__)


def _parse_row(ctx: click.Context, text: str) -> Row:
    symbols = utils.parse_symbols(text)
    try:
        rect = core.validate([symbols], order=len(symbols))
    except InvalidGridError as ex:
        raise click.UsageError(str(ex), ctx=ctx) from ex
    return Row(n=rect.n, cells=rect.cells[0])


@main.command()
@click.option("--circulant", metavar="ROW", help="Shift ROW right on every row.")
@click.option(
    "--back-circulant", metavar="ROW", help="Shift ROW left on every row."
)
@click.option(
    "--row-product",
    nargs=2,
    type=str,
    default=None,
    metavar="D D2",
    help='Difference rows such as "6: 3 4 4 3 2" for rows and columns.',
)
@click.option(
    "--odd",
    nargs=3,
    type=int,
    default=None,
    metavar="S R C",
    help="m[i][j] = S+R*i+C*j with i, j from 0.",
)
@click.option("-n", "--order", type=int, default=None, help="Order for --odd.")
@click.option("-s", "--start", type=int, default=1, show_default=True)
@click.pass_context
def construct(
    ctx: click.Context,
    circulant: Optional[str],
    back_circulant: Optional[str],
    row_product: Optional[Tuple[str, str]],
    odd: Optional[Tuple[int, int, int]],
    order: Optional[int],
    start: int,
) -> None:
    """Build a Latin square and print it in the grid format.

    Exactly one of --circulant, --back-circulant, --row-product and --odd
    must be given.
    """
    settings: Settings = ctx.obj
    given = [x for x in (circulant, back_circulant, row_product, odd) if x]
    if len(given) != 1:
        msg = "give exactly one of --circulant, --back-circulant, --row-product, --odd"
        raise click.UsageError(msg, ctx=ctx)

    with handle_errors(ctx):
        if circulant:
            square = diffs.make_circulant(_parse_row(ctx, circulant))
        elif back_circulant:
            square = diffs.make_back_circulant(_parse_row(ctx, back_circulant))
        elif row_product:
            d = diffs.parse_diff_row(row_product[0])
            d2 = diffs.parse_diff_row(row_product[1], d.n)
            square = diffs.row_product(d, d2, start)
        else:
            if order is None:
                raise click.UsageError("--odd needs --order", ctx=ctx)
            assert odd is not None
            s, r, c = odd
            square = transforms.odd_construction(order, s, r, c)

        inner = core.inner_distance(square)
        _logger.info(f"constructed square of order {square.n}, inner distance {inner}")
        emit(
            settings,
            utils.format_grid(square.grid, square.n),
            {"n": square.n, "grid": square.grid, "inner_distance": inner},
        )
