"""Commands enumerating and classifying rows."""
import logging
from typing import Any, Dict, List, Optional

import click
import pandas as pd

from .. import classify, core, diffs, graphs
from ..models import Row
from . import Settings, emit, handle_errors, main

_logger = logging.getLogger(__name__)


def _record(row: Row) -> Dict[str, Any]:
    record: Dict[str, Any] = {"row": row.symbols, "ext_diff": None, "h": None}
    if row.n % 2 == 0:
        d = diffs.ext_diff_row(row)
        record["ext_diff"] = list(d.eps)
        record["h"] = d.h
    return record


def _emit_rows(
    settings: Settings, n: int, k: int, rows: List[Row], count_only: bool
) -> None:
    if count_only:
        emit(settings, str(len(rows)), {"n": n, "k": k, "count": len(rows)})
        return
    records = [_record(r) for r in rows]
    frame = pd.DataFrame(
        [
            {
                "row": " ".join(map(str, r["row"])),
                "ext_diff": " ".join(map(str, r["ext_diff"] or [])),
                "h": r["h"],
            }
            for r in records
        ],
        columns=["row", "ext_diff", "h"],
    )
    emit(
        settings,
        "\n".join(str(r) for r in rows),
        {"n": n, "k": k, "rows": records},
        frame,
    )


def _threshold(n: int, k: Optional[int]) -> int:
    return core.max_inner_distance(n) if k is None else k


@main.command("enumerate-paths")
@click.argument("n", type=int)
@click.argument("k", type=int, required=False)
@click.option("--count-only", is_flag=True, help="Print only the number of rows.")
@click.option("--start", type=int, default=1, show_default=True)
@click.pass_context
def enumerate_paths(
    ctx: click.Context, n: int, k: Optional[int], count_only: bool, start: int
) -> None:
    """List rows of order N starting at START with inner distance at least K.

    K defaults to the maximum inner distance of order N.
    """
    settings: Settings = ctx.obj
    with handle_errors(ctx):
        k = _threshold(n, k)
        g = graphs.build_graph(n, k)
        if count_only:
            count = graphs.count_ham_paths(
                g, start, settings.threads, settings.progress
            )
            emit(settings, str(count), {"n": n, "k": k, "count": count})
            return
        rows = graphs.ham_paths(g, start, settings.threads, settings.progress)
        _logger.info(f"{len(rows)} rows of order {n} at distance >= {k}")
        _emit_rows(settings, n, k, rows, False)


@main.command("enumerate-cycles")
@click.argument("n", type=int)
@click.argument("k", type=int, required=False)
@click.option("--count-only", is_flag=True, help="Print only the number of rows.")
@click.pass_context
def enumerate_cycles(
    ctx: click.Context, n: int, k: Optional[int], count_only: bool
) -> None:
    """List normal rows whose first and last symbols are also K apart."""
    settings: Settings = ctx.obj
    with handle_errors(ctx):
        k = _threshold(n, k)
        g = graphs.build_graph(n, k)
        rows = graphs.ham_cycles(g, 1, settings.threads, settings.progress)
        _emit_rows(settings, n, k, rows, count_only)


@main.command(
    "classify-row", context_settings={"ignore_unknown_options": True}
)
@click.argument("row")
@click.argument("n", type=int, required=False)
@click.pass_context
def classify_row(ctx: click.Context, row: str, n: Optional[int]) -> None:
    """Name the family of a maximum-distance extended difference ROW.

    ROW looks like "1 0 -1 -1 0 | 1", optionally prefixed by "6:".
    """
    with handle_errors(ctx):
        d = diffs.parse_ext_diff_row(row, n)
        cls = classify.classify_row(d)
        data = cls.to_json()
        text = " ".join(f"{key}={value}" for key, value in data.items())
        emit(ctx.obj, text, {"n": d.n, "row": list(d.entries), **data})
