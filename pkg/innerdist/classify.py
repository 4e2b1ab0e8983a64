"""Closed-form classification of maximum-inner-distance rows of even order.

At inner distance ``n/2 - 1`` every recentred difference lies in
``{-1, 0, 1}``. The rows fall into the rotations of Row C (the Hamiltonian
cycles, plus ``+-(1, ..., 1)`` when ``4 | n``), the type 1 family made of 0s
and 1s, and the type 2 family which mixes both signs. Everything here is
checked against the path oracle in :mod:`innerdist.graphs` by the test
suite and by :func:`innerdist.census.theorem_suite`.
"""
import functools
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from joblib import delayed

from . import diffs, utils
from .core import cell_distance
from .exceptions import DomainError
from .models import (
    BoundViolation,
    ExtendedDifferenceRow,
    NamedRows,
    PathClass,
    PathVariant,
    PatternViolation,
)

_logger = logging.getLogger(__name__)

_NOT_MAXIMAL = "not a maximum-inner-distance path"


def _require_even(n: int) -> int:
    if n < 6 or n % 2:
        msg = f"the classification covers even orders n >= 6, got {n}"
        raise DomainError(msg)
    return n // 2


def _ext(n: int, eps: Sequence[int], h: int) -> ExtendedDifferenceRow:
    return ExtendedDifferenceRow(n=n, eps=tuple(eps), h=h)


def P_formula(n: int) -> int:
    """Number of normal rows of order ``n`` at maximum inner distance."""
    _require_even(n)
    return n * n // 4 + (2 if n % 4 == 0 else 1)


def type1_count(n: int) -> int:
    """Type 1 rows with ``h > 0``, including ``(1, ..., 1)`` and the alternating row."""
    _require_even(n)
    return len(_type1_hs(n)) + 1


def type2_count(n: int) -> int:
    """Type 2 rows with ``h > 0``, the cyclic ones included."""
    half = _require_even(n)
    return sum(half - h for h in range(1, half - 1))


def midls_count_formula(n: int) -> int:
    """Number of Latin squares of order ``n`` at maximum inner distance."""
    if n < 5:
        msg = f"the count is stated for n >= 5, got {n}"
        raise DomainError(msg)
    if n % 2:
        return 4 * n
    p = P_formula(n)
    return n * (p * p + 2 * n)


def row_a(n: int) -> ExtendedDifferenceRow:
    """The alternating row ``(0, 1, 0, ..., 1, 0 | 1 - n/2)``."""
    half = _require_even(n)
    return _ext(n, [j % 2 for j in range(n - 1)], 1 - half)


def row_c(n: int) -> ExtendedDifferenceRow:
    """The cycle ``(1, ..., 1, 0, -1, ..., -1 | 0)``."""
    half = _require_even(n)
    return _ext(n, [1] * (half - 1) + [0] + [-1] * (half - 1), 0)


def named_rows(n: int) -> NamedRows:
    return NamedRows(row_a=row_a(n), row_c=row_c(n))


def _type1_hs(n: int) -> List[int]:
    half = n // 2
    first = 1 if n % 4 == 0 else 2
    return list(range(first, half, 2))


def _type1(n: int, h: int) -> ExtendedDifferenceRow:
    half = n // 2
    eps = [1] * (half - h + 1) + [0, 1] * (h - 1) + [1] * (half - h)
    return _ext(n, eps, h)


def _type1_alternating(n: int) -> ExtendedDifferenceRow:
    return row_a(n).negated()


def _type2(n: int, m: int, h: int) -> ExtendedDifferenceRow:
    half = n // 2
    tail = half - h - m - 1
    eps = [1] * m + [0] + [-1] * (m + 1) + [0, -1] * (h - 1)
    eps += [-1] * tail + [0] + [1] * tail
    return _ext(n, eps, h)


def _all_ones(n: int) -> ExtendedDifferenceRow:
    return _ext(n, [1] * (n - 1), 1)


def _sign(h: int) -> int:
    return 1 if h >= 0 else -1


@functools.lru_cache(maxsize=None)
def _catalogue(n: int) -> Dict[ExtendedDifferenceRow, PathClass]:
    half = _require_even(n)

    type2: Dict[ExtendedDifferenceRow, Tuple[int, int]] = {}
    for h in range(1, half - 1):
        for m in range(0, half - h):
            d = _type2(n, m, h)
            type2[d] = (m, h)
            type2[d.negated()] = (m, -h)

    catalogue: Dict[ExtendedDifferenceRow, PathClass] = {}
    base = row_c(n)
    for t in range(n):
        d = base.rotated(t)
        sign = _sign(d.h) if d.h else (1 if t == 0 else -1)
        m = type2[d][0] if d in type2 else None
        catalogue[d] = PathClass(
            variant=PathVariant.CYCLE_ROTATION, sign=sign, h=d.h, m=m, offset=t
        )
    if n % 4 == 0:
        for d in (_all_ones(n), _all_ones(n).negated()):
            catalogue[d] = PathClass(variant=PathVariant.ALL_ONES, sign=d.h, h=d.h)

    for h in _type1_hs(n):
        if h == 1:
            continue
        d = _type1(n, h)
        for e in (d, d.negated()):
            catalogue[e] = PathClass(variant=PathVariant.TYPE1, sign=_sign(e.h), h=e.h)
    alt = _type1_alternating(n)
    for e in (alt, alt.negated()):
        catalogue[e] = PathClass(
            variant=PathVariant.TYPE1, sign=_sign(e.h), h=e.h, alternating=True
        )

    for d, (m, h) in type2.items():
        if d not in catalogue:
            catalogue[d] = PathClass(variant=PathVariant.TYPE2, sign=_sign(h), h=h, m=m)

    _logger.debug(f"catalogue of order {n}: {len(catalogue)} rows")
    return catalogue


@functools.lru_cache(maxsize=None)
def _inverse_catalogue(n: int) -> Dict[PathClass, ExtendedDifferenceRow]:
    return {cls: d for d, cls in _catalogue(n).items()}


def generate_cycles(n: int) -> List[ExtendedDifferenceRow]:
    _require_even(n)
    rows = [row_c(n).rotated(t) for t in range(n)]
    if n % 4 == 0:
        rows += [_all_ones(n), _all_ones(n).negated()]
    return sorted(rows, key=lambda d: d.entries)


def generate_paths(n: int) -> List[ExtendedDifferenceRow]:
    return sorted(_catalogue(n), key=lambda d: d.entries)


def classify_row(d: ExtendedDifferenceRow) -> PathClass:
    if d.n < 6 or d.n % 2:
        msg = f"{_NOT_MAXIMAL}: {d}"
        raise DomainError(msg)
    cls = _catalogue(d.n).get(d)
    if cls is None:
        msg = f"{_NOT_MAXIMAL}: {d}"
        raise DomainError(msg)
    return cls


def row_for_class(n: int, cls: PathClass) -> ExtendedDifferenceRow:
    d = _inverse_catalogue(n).get(cls)
    if d is None:
        msg = f"no row of order {n} has class {cls.to_json()}"
        raise DomainError(msg)
    return d


def _runs(values: Sequence[int], a: int, b: int) -> int:
    """Number of runs of non-zero entries in ``values[a:b + 1]``."""
    runs = 0
    for j in range(a, b + 1):
        if values[j] != 0 and (j == a or values[j - 1] == 0):
            runs += 1
    return runs


def _rule2(eps: Sequence[int], half: int, sign: int) -> List[PatternViolation]:
    found = []
    size = len(eps)
    for a in range(size):
        if eps[a] != 0:
            continue
        b = a + 1
        while b < size and eps[b] == sign:
            b += 1
        m = b - a - 1
        if m == 0 or b >= size or eps[b] != 0:
            continue
        left = a
        while left > 0 and eps[left - 1] == -sign:
            left -= 1
        right = b
        while right + 1 < size and eps[right + 1] == -sign:
            right += 1
        flank = (a - left) + (right - b)
        if flank >= m and not m == flank == half - 1:
            found.append(
                PatternViolation(
                    rule=2,
                    start=left + 1,
                    end=right + 1,
                    detail=(
                        f"zeros bound {m} of {sign:+d}"
                        f" with {flank} of {-sign:+d} around"
                    ),
                )
            )
    return found


def _rule3(eps: Sequence[int], half: int, n: int, sign: int) -> List[PatternViolation]:
    found = []
    size = len(eps)
    for a in range(size):
        count = 0
        for b in range(a, size):
            if eps[b] not in (0, sign):
                break
            if eps[b] == sign:
                count += 1
            if count > half:
                break
            if count != half:
                continue
            q = _runs(eps, a, b)
            attached = eps[a] == 0 or eps[b] == 0
            parity_bad = (q % 2 == 0) if n % 4 == 0 else (q % 2 == 1)
            if attached or parity_bad:
                why = "zero attached" if attached else f"{q} runs"
                found.append(
                    PatternViolation(
                        rule=3,
                        start=a + 1,
                        end=b + 1,
                        detail=f"{half} of {sign:+d} in {q} runs, {why}",
                    )
                )
    return found


def check_patterns(
    d: Union[ExtendedDifferenceRow, Sequence[int]], n: Optional[int] = None
) -> List[PatternViolation]:
    """Forbidden subsequences in the entries before ``h`` (both signs).

    Rule 1 flags ``(0, 0)``, ``(1, -1)`` and ``(-1, 1)``. Rule 2 flags two
    zeros bounding ``m`` equal entries flanked by at least ``m`` entries of
    the opposite sign. Rule 3 flags ``n/2`` equal entries split into ``q``
    runs by single zeros when ``n/2 + q`` is even, and always when a zero is
    attached at either end.
    """
    if isinstance(d, ExtendedDifferenceRow):
        eps: Sequence[int] = d.eps
        n = d.n
    else:
        eps = list(d)
        n = len(eps) + 1 if n is None else n
    half = n // 2

    found = []
    for j in range(len(eps) - 1):
        pair = (eps[j], eps[j + 1])
        if pair in ((0, 0), (1, -1), (-1, 1)):
            found.append(
                PatternViolation(
                    rule=1, start=j + 1, end=j + 2, detail=f"{pair} backtracks"
                )
            )
    for sign in (1, -1):
        found.extend(_rule2(eps, half, sign))
        found.extend(_rule3(eps, half, n, sign))
    return sorted(found, key=lambda v: (v.rule, v.start, v.end))


def neighbor_offsets(d: ExtendedDifferenceRow, d2: ExtendedDifferenceRow) -> List[int]:
    """Shifts ``t`` letting the row of ``d2`` plus ``t`` sit under the row of ``d``."""
    if d.n != d2.n:
        msg = f"order mismatch: {d.n} != {d2.n}"
        raise DomainError(msg)
    n, k = d.n, d.n // 2 - 1
    top = diffs.row_from_ext(d).cells
    bottom = diffs.row_from_ext(d2).cells
    return [
        t
        for t in range(n)
        if all(cell_distance(x, (y + t) % n, n) >= k for x, y in zip(top, bottom))
    ]


def is_neighbor(d: ExtendedDifferenceRow, d2: ExtendedDifferenceRow) -> bool:
    return bool(neighbor_offsets(d, d2))


def neighbors(d: ExtendedDifferenceRow) -> List[ExtendedDifferenceRow]:
    return [e for e in generate_paths(d.n) if is_neighbor(d, e)]


def _neighbor_block(n: int, block: Sequence[int]) -> List[List[bool]]:
    rows = generate_paths(n)
    return [[is_neighbor(rows[i], e) for e in rows] for i in block]


def neighbor_matrix(n: int, n_jobs: int = 1, progress: bool = False) -> np.ndarray:
    """Neighbour relation over :func:`generate_paths` in its sorted order."""
    size = len(generate_paths(n))
    blocks = utils.chunked(list(range(size)), utils.resolve_jobs(n_jobs))
    with utils.ProgressParallel(
        total=len(blocks),
        n_jobs=utils.resolve_jobs(n_jobs),
        desc=f"neighbours n={n}",
        disable=not progress,
    ) as parallel:
        parts = parallel(delayed(_neighbor_block)(n, b) for b in blocks)
    return np.array([row for part in parts for row in part], dtype=bool)


def _delta(d: ExtendedDifferenceRow, d2: ExtendedDifferenceRow) -> List[int]:
    return [b - a for a, b in zip(d.eps, d2.eps)]


def determining_window(
    d: ExtendedDifferenceRow, d2: ExtendedDifferenceRow
) -> Optional[Tuple[int, int]]:
    """First columns ``(j1, j2)`` with ``|sum(eps2 - eps over j1..j2-1)| == 2``."""
    delta = _delta(d, d2)
    for j1 in range(len(delta)):
        total = 0
        for j in range(j1, len(delta)):
            total += delta[j]
            if abs(total) == 2:
                return j1 + 1, j + 2
    return None


def is_determined(d: ExtendedDifferenceRow, d2: ExtendedDifferenceRow) -> bool:
    if not is_neighbor(d, d2):
        msg = f"rows are not neighbours: {d} / {d2}"
        raise DomainError(msg)
    return determining_window(d, d2) is not None


def adjacency_bounds_check(
    d: ExtendedDifferenceRow, d2: ExtendedDifferenceRow
) -> List[BoundViolation]:
    """Bounds every pair of neighbours obeys; empty when all hold."""
    if not is_neighbor(d, d2):
        msg = f"rows are not neighbours: {d} / {d2}"
        raise DomainError(msg)
    half = d.n // 2
    delta = _delta(d, d2)
    found = []

    for j, (a, b) in enumerate(zip(d.eps, d2.eps), start=1):
        if a * b == -1:
            found.append(
                BoundViolation(
                    check="opposite", start=j, end=j, detail=f"{a} above {b}"
                )
            )
    for j1 in range(len(delta)):
        total = 0
        for j in range(j1, len(delta)):
            total += delta[j]
            if abs(total) > 2:
                found.append(
                    BoundViolation(
                        check="partial_sum",
                        start=j1 + 1,
                        end=j + 1,
                        detail=f"difference sums to {total}",
                    )
                )
    if abs(d.h - d2.h) > 2 and not (abs(d.h) == half - 1 and d2.h == -d.h):
        found.append(
            BoundViolation(
                check="h",
                start=d.n,
                end=d.n,
                detail=f"h={d.h} and h'={d2.h} too far apart",
            )
        )
    return found
