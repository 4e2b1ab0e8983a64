"""Commands counting squares and running the cross-checks."""
import logging
from enum import Enum
from typing import Optional

import click
import pandas as pd

from .. import census as census_mod
from .. import classify, core, utils
from ..exceptions import DomainError
from . import Settings, emit, handle_errors, main

_logger = logging.getLogger(__name__)


class CountMethod(str, Enum):
    FORMULA: str = "formula"
    CONSTRUCTIVE: str = "constructive"
    BRUTE: str = "brute"


@main.command("mid-count")
@click.argument("n", type=int)
@click.option(
    "--method",
    type=click.Choice([m.value for m in CountMethod]),
    default=CountMethod.FORMULA.value,
    show_default=True,
)
@click.pass_context
def mid_count(ctx: click.Context, n: int, method: str) -> None:
    """Count Latin squares of order N at the maximum inner distance."""
    settings: Settings = ctx.obj
    with handle_errors(ctx):
        k = core.max_inner_distance(n)
        if CountMethod(method) == CountMethod.FORMULA:
            count = classify.midls_count_formula(n)
        elif CountMethod(method) == CountMethod.CONSTRUCTIVE:
            if n < 5:
                msg = f"no construction below order 5, got {n}"
                raise DomainError(msg)
            count = len(census_mod.enumerate_mid_constructive(n))
        else:
            count = census_mod.brute_count(
                n, k, settings.threads, settings.long, settings.progress
            )
        emit(
            settings,
            str(count),
            {"n": n, "k": k, "count": count, "method": method},
        )


@main.command()
@click.argument("n", type=int)
@click.option(
    "--max-k-only", is_flag=True, help="Skip the census over every distance."
)
@click.pass_context
def census(ctx: click.Context, n: int, max_k_only: bool) -> None:
    """Count squares of order N by inner distance and cross-check the counts."""
    settings: Settings = ctx.obj
    with handle_errors(ctx):
        report = census_mod.census(
            n, max_k_only, settings.threads, settings.long, settings.progress
        )
        lines = [f"n={n}" + ("" if report.complete else " (incomplete)")]
        lines += [f"k={k}: {v}" for k, v in sorted(report.per_k.items())]
        for name, value in report.mid.model_dump().items():
            if value is not None:
                lines.append(f"maximum distance ({name}): {value}")
        if report.structure is not None:
            parts = report.structure.model_dump().items()
            lines.append("structure: " + ", ".join(f"{a}={b}" for a, b in parts))
        lines += [_check_line(c.tag, c.passed, c.detail) for c in report.checks]
        emit(settings, "\n".join(lines), report.to_json(), report.to_frame())
        if not report.passed:
            ctx.exit(1)


@main.command()
@click.option(
    "--n-range",
    default="5..14",
    show_default=True,
    help="Orders to check, as A..B.",
)
@click.option("--long", "long_", is_flag=True, help="Same as the global --long.")
@click.pass_context
def verify(ctx: click.Context, n_range: str, long_: bool) -> None:
    """Run every cross-check and exit 1 if any fails."""
    settings: Settings = ctx.obj
    with handle_errors(ctx):
        lo, hi = utils.parse_range(n_range)
        report = census_mod.theorem_suite(
            (lo, hi),
            settings.threads,
            settings.long or long_,
            settings.progress,
            seed=settings.seed,
        )
        lines = [_check_line(c.tag, c.passed, c.detail) for c in report.checks]
        frame = pd.DataFrame(
            [c.model_dump() for c in report.checks],
            columns=["tag", "passed", "detail"],
        )
        emit(settings, "\n".join(lines), report.to_json(), frame)
        if not report.passed:
            ctx.exit(1)


def _check_line(tag: str, passed: bool, detail: Optional[str]) -> str:
    return f"{'PASS' if passed else 'FAIL'} {tag}: {detail}"
