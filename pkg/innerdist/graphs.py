"""Distance-k graphs and exact Hamiltonian path enumeration.

The normal rows of inner distance at least ``k`` are exactly the Hamiltonian
paths from symbol 1 in the graph joining symbols at distance ``k`` or more,
so this module serves as the independent oracle for the closed forms in
:mod:`innerdist.classify`.
"""
import dataclasses
import logging
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np
from joblib import delayed

from . import config, diffs, utils
from .core import cell_distance
from .exceptions import DomainError, GuardExceeded
from .models import ExtendedDifferenceRow, Row, Symmetry

_logger = logging.getLogger(__name__)

Path = Tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class DistanceGraph:
    n: int
    k: int
    # 0-based neighbours of each vertex in increasing order
    neighbors: Tuple[Tuple[int, ...], ...]

    @property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for x, ys in enumerate(self.neighbors):
            a[x, list(ys)] = True
        return a

    def degree(self, symbol: int) -> int:
        return len(self.neighbors[symbol - 1])

    def has_edge(self, a: int, b: int) -> bool:
        return b - 1 in self.neighbors[a - 1]


def build_graph(n: int, k: int) -> DistanceGraph:
    if not 1 <= k <= n // 2:
        msg = f"distance threshold {k} out of range [1,{n // 2}] for order {n}"
        raise DomainError(msg)
    neighbors = tuple(
        tuple(y for y in range(n) if cell_distance(x, y, n) >= k) for x in range(n)
    )
    return DistanceGraph(n=n, k=k, neighbors=neighbors)


def _check_guard(g: DistanceGraph) -> None:
    limit = config["oracle_max_order"]
    if g.n > limit:
        msg = f"order {g.n} exceeds the {limit}-vertex limit of the path oracle"
        raise GuardExceeded(msg)


def _walk(g: DistanceGraph, path: List[int], visited: int) -> Iterator[Path]:
    if len(path) == g.n:
        yield tuple(path)
        return
    for y in g.neighbors[path[-1]]:
        if not visited >> y & 1:
            path.append(y)
            yield from _walk(g, path, visited | 1 << y)
            path.pop()


def _subtree(g: DistanceGraph, start: int, first: int, count_only: bool):
    walker = _walk(g, [start, first], 1 << start | 1 << first)
    if count_only:
        return sum(1 for _ in walker)
    return list(walker)


def _split(
    g: DistanceGraph, start: int, count_only: bool, n_jobs: int, progress: bool
) -> list:
    """Run one job per first edge out of ``start``."""
    firsts = g.neighbors[start]
    with utils.ProgressParallel(
        total=len(firsts),
        n_jobs=utils.resolve_jobs(n_jobs),
        desc=f"paths n={g.n} k={g.k}",
        disable=not progress,
    ) as parallel:
        return parallel(delayed(_subtree)(g, start, f, count_only) for f in firsts)


def _start_index(g: DistanceGraph, start: int) -> int:
    if not 1 <= start <= g.n:
        msg = f"start symbol {start} out of range [1,{g.n}]"
        raise DomainError(msg)
    return start - 1


def iter_ham_paths(g: DistanceGraph, start: int = 1) -> Iterator[Row]:
    """Stream Hamiltonian paths from ``start`` in depth-first order."""
    _check_guard(g)
    s = _start_index(g, start)
    if g.n == 1:
        yield Row(n=1, cells=(0,))
        return
    for path in _walk(g, [s], 1 << s):
        yield Row(n=g.n, cells=path)


def count_ham_paths(
    g: DistanceGraph, start: int = 1, n_jobs: int = 1, progress: bool = False
) -> int:
    _check_guard(g)
    s = _start_index(g, start)
    if g.n == 1:
        return 1
    if n_jobs == 1:
        return sum(1 for _ in _walk(g, [s], 1 << s))
    return sum(_split(g, s, True, n_jobs, progress))


def ham_paths(
    g: DistanceGraph, start: int = 1, n_jobs: int = 1, progress: bool = False
) -> List[Row]:
    """All Hamiltonian paths from ``start``, sorted lexicographically."""
    _check_guard(g)
    s = _start_index(g, start)
    if g.n == 1 or n_jobs == 1:
        paths = [r.cells for r in iter_ham_paths(g, start)]
    else:
        paths = [p for chunk in _split(g, s, False, n_jobs, progress) for p in chunk]
    _logger.debug(f"{len(paths)} paths from {start} (n={g.n}, k={g.k})")
    return [Row(n=g.n, cells=p) for p in sorted(paths)]


def ham_cycles(
    g: DistanceGraph, start: int = 1, n_jobs: int = 1, progress: bool = False
) -> List[Row]:
    """The Hamiltonian paths whose end is adjacent to their start."""
    return [
        r
        for r in ham_paths(g, start, n_jobs, progress)
        if g.n > 1 and r.cells[0] in g.neighbors[r.cells[-1]]
    ]


def max_distance_rows(n: int) -> List[Row]:
    """Normal rows of order ``n`` at the maximum inner distance."""
    return ham_paths(build_graph(n, (n - 1) // 2), 1)


def ext_rows(rows: Iterable[Row]) -> List[ExtendedDifferenceRow]:
    return sorted((diffs.ext_diff_row(r) for r in rows), key=lambda d: d.entries)


def _apply(d: ExtendedDifferenceRow, op: Symmetry) -> ExtendedDifferenceRow:
    if op == Symmetry.REVERSE:
        return d.reversed()
    if op == Symmetry.NEGATE:
        return d.negated()
    return d.rotated(1)


def symmetry_orbit(
    d: ExtendedDifferenceRow, ops: Sequence[Symmetry]
) -> List[ExtendedDifferenceRow]:
    """Closure of ``d`` under the chosen generators, sorted by entries."""
    ops = [Symmetry(op) for op in ops]
    if Symmetry.ROTATE in ops and not d.is_cycle:
        msg = f"rotation needs a cyclic row: {d}"
        raise DomainError(msg)

    orbit = {d}
    frontier = [d]
    while frontier:
        current = frontier.pop()
        for op in ops:
            image = _apply(current, op)
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return sorted(orbit, key=lambda x: x.entries)
