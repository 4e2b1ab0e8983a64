import multiprocessing
import re
from typing import Any, List, Sequence, Tuple

import tqdm.auto
from joblib import Parallel

from .exceptions import ParseError

_re_range = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


class ProgressParallel(Parallel):  # type: ignore[misc]
    # https://stackoverflow.com/questions/37804279
    def __init__(
        self,
        total: int,
        *args: Any,
        desc: str = "",
        disable: bool = False,
        **kwargs: Any,
    ):
        super().__init__(*args, **kwargs)
        self._total = total
        self._desc = desc
        self._disable = disable

    def __call__(self, *args: Any, **kwargs: Any) -> Any:
        with tqdm.auto.tqdm(desc=self._desc, disable=self._disable) as self._pbar:
            return Parallel.__call__(self, *args, **kwargs)

    def print_progress(self) -> None:
        self._pbar.total = self._total
        self._pbar.n = self.n_completed_tasks
        self._pbar.refresh()


def resolve_jobs(n_jobs: int) -> int:
    """Map the CLI convention ``0 == all cores`` to a joblib worker count."""
    return n_jobs if 0 < n_jobs else multiprocessing.cpu_count()


def parse_grid(text: str) -> Tuple[int, List[List[int]]]:
    """Parse the grid text format.

    The first line holds ``m n`` (row count and order), followed by ``m``
    lines of space separated symbols. Returns the order and the raw rows;
    Latin constraints are left to :func:`innerdist.core.validate`.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty grid text")
    try:
        header = [int(tok) for tok in lines[0].split()]
    except ValueError as ex:
        msg = f"malformed header line: {lines[0]!r}"
        raise ParseError(msg) from ex
    if len(header) != 2 or header[0] < 1 or header[1] < 1:
        msg = f"header must be 'm n' with positive integers: {lines[0]!r}"
        raise ParseError(msg)

    m, n = header
    body = lines[1:]
    if len(body) != m:
        msg = f"header declares {m} rows but {len(body)} follow"
        raise ParseError(msg)

    rows = []
    for lineno, line in enumerate(body, start=2):
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as ex:
            msg = f"line {lineno}: non-integer symbol in {line!r}"
            raise ParseError(msg) from ex
    return n, rows


def format_grid(grid: Sequence[Sequence[int]], n: int) -> str:
    lines = [f"{len(grid)} {n}"]
    lines.extend(" ".join(str(x) for x in row) for row in grid)
    return "\n".join(lines)


def parse_range(s: str) -> Tuple[int, int]:
    """Parse ``A..B`` into an inclusive pair."""
    match = _re_range.match(s)
    if not match:
        msg = f"range must look like A..B: {s!r}"
        raise ParseError(msg)
    lo, hi = int(match.group(1)), int(match.group(2))
    if hi < lo:
        msg = f"empty range: {s!r}"
        raise ParseError(msg)
    return lo, hi


def chunked(items: Sequence[Any], parts: int) -> List[Sequence[Any]]:
    """Split ``items`` into at most ``parts`` contiguous blocks."""
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    blocks, start = [], 0
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0)
        blocks.append(items[start:stop])
        start = stop
    return [b for b in blocks if len(b)]


def parse_symbols(text: str) -> List[int]:
    """Parse a row given as space or comma separated symbols."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("empty row")
    try:
        return [int(tok) for tok in tokens]
    except ValueError as ex:
        msg = f"non-integer symbol in {text!r}"
        raise ParseError(msg) from ex
