"""Symbols, the mod-n distance, Latin rectangles and inner distance."""
import logging
from typing import Any, List, Optional, Sequence, Tuple, Union

import numpy as np
import pydantic

from .exceptions import DomainError, InvalidGridError
from .models import Rectangle, Row, Square, Violation

_logger = logging.getLogger(__name__)


def cell_distance(a: int, b: int, n: int) -> int:
    """Distance between two 0-based symbols."""
    d = (a - b) % n
    return min(d, n - d)


def dist(a: int, b: int, n: int) -> int:
    """Cyclic distance between two symbols in ``[1, n]``."""
    if n < 1:
        msg = f"order must be positive: {n}"
        raise DomainError(msg)
    for x in (a, b):
        if not 1 <= x <= n:
            msg = f"symbol {x} out of range [1,{n}]"
            raise DomainError(msg)
    return cell_distance(a, b, n)


def max_inner_distance(n: int) -> int:
    if n < 3:
        msg = f"maximum inner distance is defined for n >= 3, got {n}"
        raise DomainError(msg)
    return (n - 1) // 2


def from_cells(n: int, cells: Sequence[Sequence[int]]) -> Rectangle:
    """Build a rectangle from 0-based cells, as a Square when it is one."""
    cells = tuple(tuple(row) for row in cells)
    cls = Square if len(cells) == n and cells and len(cells[0]) == n else Rectangle
    try:
        return cls(n=n, cells=cells)
    except pydantic.ValidationError as ex:
        msg = f"not a Latin rectangle of order {n}"
        raise DomainError(msg) from ex


def find_violations(raw: Any, order: Optional[int] = None) -> List[Violation]:
    """Every reason ``raw`` (1-based symbols) is not a Latin rectangle."""
    if not isinstance(raw, (list, tuple)) or not raw:
        return [Violation(kind="shape", detail="grid must be a non-empty list of rows")]
    if not all(isinstance(row, (list, tuple)) and row for row in raw):
        return [Violation(kind="shape", detail="every row must be a non-empty list")]

    width = len(raw[0])
    violations = [
        Violation(kind="shape", row=i, detail=f"expected {width} cells, got {len(row)}")
        for i, row in enumerate(raw, start=1)
        if len(row) != width
    ]
    if violations:
        return violations
    if order is not None and width < order:
        detail = f"expected {order} cells, got {width}"
        return [
            Violation(kind="shape", row=i, detail=detail)
            for i in range(1, len(raw) + 1)
        ]

    n = max(len(raw), width) if order is None else order
    if n < max(len(raw), width):
        violations.append(
            Violation(
                kind="order",
                detail=f"{len(raw)}x{width} grid does not fit order {n}",
            )
        )

    for i, row in enumerate(raw, start=1):
        for j, x in enumerate(row, start=1):
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                violations.append(
                    Violation(
                        kind="symbol",
                        row=i,
                        column=j,
                        detail=f"{x!r} is not an integer",
                    )
                )
            elif not 1 <= x <= n:
                violations.append(
                    Violation(
                        kind="symbol",
                        row=i,
                        column=j,
                        detail=f"{x} out of range [1,{n}]",
                    )
                )

    if any(v.detail.endswith("is not an integer") for v in violations):
        return violations

    for i, row in enumerate(raw, start=1):
        seen = set()
        for j, x in enumerate(row, start=1):
            if x in seen:
                violations.append(
                    Violation(
                        kind="row_repeat", row=i, column=j, detail=f"symbol {x} repeats"
                    )
                )
            seen.add(x)

    for j in range(width):
        seen = set()
        for i, row in enumerate(raw, start=1):
            if row[j] in seen:
                violations.append(
                    Violation(
                        kind="column_repeat",
                        row=i,
                        column=j + 1,
                        detail=f"symbol {row[j]} repeats",
                    )
                )
            seen.add(row[j])

    return violations


def validate(raw: Any, order: Optional[int] = None) -> Rectangle:
    """Validate a 1-based grid, raising :class:`InvalidGridError` with every problem."""
    violations = find_violations(raw, order)
    if violations:
        raise InvalidGridError(violations)
    n = max(len(raw), len(raw[0])) if order is None else order
    return from_cells(n, [[int(x) - 1 for x in row] for row in raw])


def random_square(n: int, rng: np.random.Generator) -> Square:
    """A random isotope of the cyclic square of order ``n``."""
    if n < 1:
        msg = f"order must be positive: {n}"
        raise DomainError(msg)
    rows, cols, symbols = (rng.permutation(n) for _ in range(3))
    cells = symbols[(rows[:, None] + cols[None, :]) % n]
    return from_cells(n, cells.tolist())  # type: ignore[return-value]


def _as_array(rect: Union[Rectangle, Row]) -> np.ndarray:
    if isinstance(rect, Row):
        return np.array([rect.cells], dtype=np.int64)
    return np.array(rect.cells, dtype=np.int64)


def _pair_distances(a: np.ndarray, n: int) -> Tuple[np.ndarray, np.ndarray]:
    across = (a[:, 1:] - a[:, :-1]) % n
    down = (a[1:, :] - a[:-1, :]) % n
    return np.minimum(across, n - across), np.minimum(down, n - down)


def inner_distance(rect: Union[Rectangle, Row]) -> int:
    """Minimum distance over all horizontally or vertically adjacent cells."""
    a = _as_array(rect)
    if a.size < 2:
        msg = "a 1x1 grid has no adjacent cells"
        raise DomainError(msg)
    across, down = _pair_distances(a, rect.n)
    return int(min(x.min() for x in (across, down) if x.size))


def row_inner_distance(row: Union[Row, Sequence[int]], n: Optional[int] = None) -> int:
    """Inner distance of a single row; plain sequences are taken as 1-based."""
    if not isinstance(row, Row):
        n = len(row) if n is None else n
        row = Row(n=n, cells=tuple(x - 1 for x in row))
    return inner_distance(row)


def transpose(rect: Rectangle) -> Rectangle:
    return from_cells(rect.n, list(zip(*rect.cells)))


def canonical_key(rect: Rectangle) -> Tuple[int, ...]:
    """Row-major symbol sequence, the ordering used for set comparisons."""
    return tuple(x for row in rect.cells for x in row)
