"""Difference rows, extended difference rows and difference matrices.

A Latin row ``s`` of order ``n`` has the difference row
``h_j = s_{j+1} - s_j (mod n)``. For even ``n`` the extended form recentres
each difference by ``n/2`` and appends the wrap term ``h`` measuring the
gap from the last entry back to the first. A rectangle is determined by its
horizontal and vertical difference matrices plus its top-left symbol.
"""
import logging
import re
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pydantic

from .core import from_cells
from .exceptions import (
    ConsistencyError,
    DomainError,
    InvalidPairError,
    ParseError,
)
from .models import (
    Cells,
    DifferencePair,
    DifferenceRow,
    ExtendedDifferenceRow,
    PairViolation,
    Rectangle,
    Row,
    Square,
)

_logger = logging.getLogger(__name__)

_re_diff_row = re.compile(r"^\s*(?:(\d+)\s*:)?\s*([-\d\s]*)$")
_re_ext_diff_row = re.compile(r"^\s*(?:(\d+)\s*:)?\s*([-\d\s]*)\|\s*(-?\d+)\s*$")


def zero_windows(values: Sequence[int], n: int) -> List[Tuple[int, int]]:
    """All 1-based windows ``(j1, j2)`` whose contiguous sum is 0 mod ``n``."""
    windows = []
    prefix = 0
    seen = {0: [0]}
    for j, v in enumerate(values, start=1):
        prefix = (prefix + v) % n
        for start in seen.get(prefix, []):
            windows.append((start + 1, j))
        seen.setdefault(prefix, []).append(j)
    return sorted(windows)


def diff_row(r: Row) -> DifferenceRow:
    n = r.n
    steps = tuple((b - a) % n for a, b in zip(r.cells, r.cells[1:]))
    return DifferenceRow(n=n, steps=steps)


def row_from_diff(s: int, d: DifferenceRow) -> Row:
    """The row starting with symbol ``s`` whose difference row is ``d``."""
    n = d.n
    if not 1 <= s <= n:
        msg = f"symbol {s} out of range [1,{n}]"
        raise DomainError(msg)
    windows = zero_windows(d.steps, n)
    if windows:
        j1, j2 = windows[0]
        msg = f"partial sum of differences {j1}..{j2} is 0 mod {n}"
        raise DomainError(msg)
    cells = [s - 1]
    for step in d.steps:
        cells.append((cells[-1] + step) % n)
    return Row(n=n, cells=tuple(cells))


def ext_diff_row(r: Row) -> ExtendedDifferenceRow:
    n = r.n
    if n % 2:
        msg = f"extended difference rows need an even order, got {n}"
        raise DomainError(msg)
    half = n // 2
    eps = tuple(step - half for step in diff_row(r).steps)
    h = (r.cells[0] - r.cells[-1]) % n - half
    return ExtendedDifferenceRow(n=n, eps=eps, h=h)


def row_from_ext(d: ExtendedDifferenceRow) -> Row:
    """The normal row (starting with 1) of an extended difference row."""
    half = d.n // 2
    try:
        steps = DifferenceRow(n=d.n, steps=tuple(e + half for e in d.eps))
    except pydantic.ValidationError as ex:
        msg = f"not a difference row: {d}"
        raise DomainError(msg) from ex
    return row_from_diff(1, steps)


def to_ext(d: DifferenceRow) -> ExtendedDifferenceRow:
    return ext_diff_row(row_from_diff(1, d))


def from_ext(d: ExtendedDifferenceRow) -> DifferenceRow:
    half = d.n // 2
    return DifferenceRow(n=d.n, steps=tuple(e + half for e in d.eps))


def diff_matrices(rect: Rectangle) -> DifferencePair:
    n = rect.n
    a = np.array(rect.cells, dtype=np.int64)
    H = (a[:, 1:] - a[:, :-1]) % n
    V = (a[1:, :] - a[:-1, :]) % n
    return DifferencePair(n=n, H=_to_cells(H), V=_to_cells(V))


def _to_cells(a: np.ndarray) -> Cells:
    return tuple(tuple(int(x) for x in row) for row in a)


def validate_pair(H: Cells, V: Cells, n: int) -> List[PairViolation]:
    """Every violated condition of a pair of difference matrices.

    Condition 1 is the square condition
    ``h[i][j] + v[i][j+1] == v[i][j] + h[i+1][j] (mod n)``; conditions 2 and
    3 forbid a contiguous window along a row of ``H`` or down a column of
    ``V`` summing to 0 mod ``n``. Locations are 1-based.
    """
    rows = len(H)
    cols = len(H[0]) + 1 if rows else 0
    if (
        rows < 1
        or any(len(r) != cols - 1 for r in H)
        or len(V) != rows - 1
        or any(len(r) != cols for r in V)
    ):
        detail = f"H must be m x (c-1) and V (m-1) x c, got {rows} and {len(V)} rows"
        return [PairViolation(condition=0, location=(), detail=detail)]

    violations = []
    for i in range(rows - 1):
        for j in range(cols - 1):
            lhs = H[i][j] + V[i][j + 1]
            rhs = V[i][j] + H[i + 1][j]
            if (lhs - rhs) % n:
                violations.append(
                    PairViolation(
                        condition=1,
                        location=(i + 1, j + 1),
                        detail=f"h+v' = {lhs % n} but v+h' = {rhs % n} (mod {n})",
                    )
                )
    for i, row in enumerate(H, start=1):
        for j1, j2 in zero_windows(row, n):
            violations.append(
                PairViolation(
                    condition=2,
                    location=(i, j1, j2),
                    detail=f"row {i} of H sums to 0 over columns {j1}..{j2}",
                )
            )
    for j, column in enumerate(zip(*V), start=1):
        for i1, i2 in zero_windows(column, n):
            violations.append(
                PairViolation(
                    condition=3,
                    location=(j, i1, i2),
                    detail=f"column {j} of V sums to 0 over rows {i1}..{i2}",
                )
            )
    return violations


def reconstruct(s: int, pair: DifferencePair) -> Rectangle:
    """The rectangle with difference matrices ``pair`` and ``s`` in cell (1,1)."""
    n = pair.n
    if not 1 <= s <= n:
        msg = f"symbol {s} out of range [1,{n}]"
        raise DomainError(msg)
    violations = validate_pair(pair.H, pair.V, n)
    if violations:
        raise InvalidPairError(violations)

    first_column = np.zeros(pair.rows, dtype=np.int64)
    if pair.rows > 1:
        first_column[1:] = np.cumsum([v[0] for v in pair.V])
    a = np.zeros((pair.rows, pair.cols), dtype=np.int64)
    if pair.cols > 1:
        a[:, 1:] = np.cumsum(np.array(pair.H, dtype=np.int64), axis=1)
    a = (a + first_column[:, None] + (s - 1)) % n
    return from_cells(n, a.tolist())


def row_product(d: DifferenceRow, d2: DifferenceRow, s: int = 1) -> Square:
    """The square whose every row of H is ``d`` and every column of V is ``d2``."""
    n = d.n
    if d2.n != n:
        msg = f"order mismatch: {d.n} != {d2.n}"
        raise DomainError(msg)
    across = np.concatenate(([0], np.cumsum(d.steps, dtype=np.int64)))
    down = np.concatenate(([0], np.cumsum(d2.steps, dtype=np.int64)))
    a = (down[:, None] + across[None, :] + (s - 1)) % n
    square = from_cells(n, a.tolist())
    assert isinstance(square, Square)
    return square


def is_row_product(L: Rectangle) -> bool:
    pair = diff_matrices(L)
    by_rows = all(row == pair.H[0] for row in pair.H)
    columns = list(zip(*pair.V))
    by_columns = all(col == columns[0] for col in columns[1:])
    if by_rows != by_columns:
        msg = f"row-product tests disagree (H rows: {by_rows}, V columns: {by_columns})"
        raise ConsistencyError(msg)
    return by_rows


def make_circulant(r: Row) -> Square:
    n = r.n
    cells = [[r.cells[(j - i) % n] for j in range(n)] for i in range(n)]
    return from_cells(n, cells)  # type: ignore[return-value]


def make_back_circulant(r: Row) -> Square:
    n = r.n
    cells = [[r.cells[(j + i) % n] for j in range(n)] for i in range(n)]
    return from_cells(n, cells)  # type: ignore[return-value]


def is_circulant(L: Rectangle) -> bool:
    c, w = L.cells, L.cols
    return all(
        c[i + 1][j] == c[i][(j - 1) % w] for i in range(L.rows - 1) for j in range(w)
    )


def is_back_circulant(L: Rectangle) -> bool:
    c, w = L.cells, L.cols
    return all(
        c[i + 1][j] == c[i][(j + 1) % w] for i in range(L.rows - 1) for j in range(w)
    )


def is_circulant_matrix(M: Cells) -> bool:
    """Every entry equals its up-left neighbour where one exists."""
    return all(
        M[i + 1][j + 1] == M[i][j]
        for i in range(len(M) - 1)
        for j in range(len(M[i]) - 1)
    )


def is_back_circulant_matrix(M: Cells) -> bool:
    """Every entry equals its up-right neighbour where one exists."""
    return all(
        M[i + 1][j] == M[i][j + 1]
        for i in range(len(M) - 1)
        for j in range(len(M[i]) - 1)
    )


def parse_diff_row(text: str, n: Optional[int] = None) -> DifferenceRow:
    match = _re_diff_row.match(text)
    if not match:
        msg = f"malformed difference row: {text!r}"
        raise ParseError(msg)
    steps = _ints(match.group(2), text)
    order = _resolve_order(match.group(1), n, len(steps) + 1, text)
    try:
        return DifferenceRow(n=order, steps=steps)
    except pydantic.ValidationError as ex:
        msg = f"invalid difference row: {text!r}"
        raise ParseError(msg) from ex


def parse_ext_diff_row(text: str, n: Optional[int] = None) -> ExtendedDifferenceRow:
    match = _re_ext_diff_row.match(text)
    if not match:
        msg = f"malformed extended difference row (want 'e1 ... | h'): {text!r}"
        raise ParseError(msg)
    eps = _ints(match.group(2), text)
    order = _resolve_order(match.group(1), n, len(eps) + 1, text)
    try:
        return ExtendedDifferenceRow(n=order, eps=eps, h=int(match.group(3)))
    except pydantic.ValidationError as ex:
        msg = f"invalid extended difference row: {text!r}"
        raise ParseError(msg) from ex


def _ints(body: str, text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in body.split())
    except ValueError as ex:
        msg = f"malformed number in {text!r}"
        raise ParseError(msg) from ex


def _resolve_order(
    prefix: Optional[str], n: Optional[int], inferred: int, text: str
) -> int:
    declared = [int(x) for x in (prefix, n) if x is not None]
    for order in declared:
        if order != inferred:
            msg = f"order {order} does not match {inferred - 1} entries in {text!r}"
            raise ParseError(msg)
    return inferred
