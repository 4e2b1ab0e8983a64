import contextlib
import dataclasses
import io
import json
import logging
import traceback
from enum import Enum
from typing import Any, Dict, Iterator, Optional

import click
import pandas as pd

from .. import __version__
from ..exceptions import DomainError, GuardExceeded, ParseError

_help_threads = (
    "Number of worker processes to launch."
    " Specifying 0 launches as many processes as CPU cores."
)
_help_long = "Raise the brute-force guards to their long-run limits."
_help_seed = "Seed for randomized property checks."


class OutputFormat(str, Enum):
    TEXT: str = "text"
    JSON: str = "json"
    CSV: str = "csv"


@dataclasses.dataclass
class Settings:
    format: OutputFormat = OutputFormat.TEXT
    threads: int = 1
    seed: Optional[int] = None
    long: bool = False
    progress: bool = False


@click.group()
@click.version_option(__version__)
@click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.TEXT.value,
    help="Output format.",
)
@click.option(
    "-j", "--threads", type=int, default=1, metavar="N", help=_help_threads
)
@click.option("--seed", type=int, default=None, help=_help_seed)
@click.option("--long", is_flag=True, help=_help_long)
@click.option("-v", "--verbose", count=True)
@click.pass_context
def main(
    ctx: click.Context,
    output_format: str,
    threads: int,
    seed: Optional[int],
    long: bool,
    verbose: int,
) -> None:
    """Compute, enumerate and verify inner distances of Latin squares."""
    log_level = {1: "INFO", 2: "DEBUG"}.get(verbose, "WARNING")
    logging.basicConfig(level="WARNING", format="[%(asctime)s] %(message)s")
    logging.getLogger("innerdist").setLevel(log_level)

    ctx.obj = Settings(
        format=OutputFormat(output_format),
        threads=threads,
        seed=seed,
        long=long,
        progress=0 < verbose,
    )


@contextlib.contextmanager
def handle_errors(ctx: click.Context) -> Iterator[None]:
    """Exit 2 on bad input, print the traceback and exit 1 on anything else."""
    try:
        yield
    except (click.exceptions.Exit, click.ClickException):
        raise
    except (DomainError, ParseError, GuardExceeded) as ex:
        raise click.UsageError(str(ex), ctx=ctx) from ex
    except Exception:
        with io.StringIO() as buf:
            traceback.print_exc(file=buf)
            click.secho(str(buf.getvalue()), fg="red", err=True)
        ctx.exit(1)


def emit(
    settings: Settings,
    text: str,
    data: Dict[str, Any],
    frame: Optional[pd.DataFrame] = None,
) -> None:
    """Write one result in the selected format."""
    if settings.format == OutputFormat.JSON:
        click.echo(json.dumps({"schema": "1", **data}, indent=2))
    elif settings.format == OutputFormat.CSV:
        if frame is None:
            frame = pd.DataFrame([{k: v for k, v in data.items() if _scalar(v)}])
        click.echo(frame.to_csv(index=False), nl=False)
    else:
        click.echo(text)


def _scalar(v: Any) -> bool:
    return v is None or isinstance(v, (bool, int, float, str))


# Import subcommand modules after defining main so that they can refer it
from . import construct  # noqa: E402, F401
from . import counting  # noqa: E402, F401
from . import distance  # noqa: E402, F401
from . import paths  # noqa: E402, F401
