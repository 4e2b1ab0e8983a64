"""Symbol-level transformations of Latin squares and the odd-order closed form."""
import logging
from typing import List

from . import core, diffs
from .exceptions import DomainError
from .models import Rectangle, Square, SymbolPermutation

_logger = logging.getLogger(__name__)


def add(L: Rectangle, i: int) -> Rectangle:
    """Shift every symbol by ``i`` (mod n)."""
    n = L.n
    return core.from_cells(n, [[(x + i) % n for x in row] for row in L.cells])


def permute(L: Rectangle, sigma: SymbolPermutation) -> Rectangle:
    if sigma.n != L.n:
        msg = f"permutation of order {sigma.n} applied to a grid of order {L.n}"
        raise DomainError(msg)
    m = sigma.mapping
    return core.from_cells(L.n, [[m[x] for x in row] for row in L.cells])


def negate_square(L: Rectangle) -> Rectangle:
    """Map ``x`` to ``n - x`` with ``n`` kept as ``n``."""
    n = L.n
    return core.from_cells(n, [[(-x - 2) % n for x in row] for row in L.cells])


def conjugate_permutation(L: Rectangle) -> SymbolPermutation:
    """The symbol permutation ``x -> 2s - x`` where ``s`` is the top-left symbol."""
    n, s = L.n, L.cells[0][0]
    return SymbolPermutation(n=n, mapping=tuple((2 * s - x) % n for x in range(n)))


def distance_conjugate(L: Rectangle) -> Rectangle:
    """Rebuild ``L`` from its negated difference matrices, keeping cell (1,1)."""
    pair = diffs.diff_matrices(L)
    return diffs.reconstruct(L.cells[0][0] + 1, pair.negated())


def swap_consecutive(L: Rectangle, x: int) -> Rectangle:
    """Permute by the transposition of ``x`` and ``x + 1`` (mod n)."""
    n = L.n
    if not 1 <= x <= n:
        msg = f"symbol {x} out of range [1,{n}]"
        raise DomainError(msg)
    return permute(L, SymbolPermutation.transposition(n, x, x % n + 1))


def reduce_inner_distance(L: Rectangle) -> Rectangle:
    """A square of inner distance exactly one less than ``L``.

    The first adjacent pair at the current inner distance ``m`` (row-major,
    right neighbour before down neighbour) is shifted to ``(n, m)`` by an
    addition; swapping the symbols ``n`` and ``1`` then leaves ``1`` next to
    ``m``.
    """
    n = L.n
    m = core.inner_distance(L)
    if m <= 1:
        msg = f"inner distance {m} cannot be reduced"
        raise DomainError(msg)

    c = L.cells
    for i in range(L.rows):
        for j in range(L.cols):
            for ii, jj in ((i, j + 1), (i + 1, j)):
                if ii >= L.rows or jj >= L.cols:
                    continue
                a, b = c[i][j], c[ii][jj]
                if core.cell_distance(a, b, n) == m:
                    x = a if (b - a) % n == m else b
                    shifted = add(L, n - 1 - x)
                    reduced = permute(shifted, SymbolPermutation.transposition(n, n, 1))
                    _logger.debug(
                        f"reduced at ({i + 1},{j + 1})-({ii + 1},{jj + 1}):"
                        f" {m} -> {m - 1}"
                    )
                    return reduced
    raise AssertionError("no adjacent pair realises the inner distance")


def descend(L: Rectangle) -> List[Rectangle]:
    """``L`` followed by repeated reductions down to inner distance 1."""
    chain = [L]
    while core.inner_distance(chain[-1]) > 1:
        chain.append(reduce_inner_distance(chain[-1]))
    return chain


def odd_construction(n: int, s: int, r: int, c: int) -> Square:
    """The square ``m[i][j] = s + r*i + c*j`` with ``i, j`` counted from 0."""
    if n < 3 or n % 2 == 0:
        msg = f"the closed form needs an odd order >= 3, got {n}"
        raise DomainError(msg)
    half = (n - 1) // 2
    if abs(r) != half or abs(c) != half:
        msg = f"r and c must be +-{half}, got r={r}, c={c}"
        raise DomainError(msg)
    if not 1 <= s <= n:
        msg = f"symbol {s} out of range [1,{n}]"
        raise DomainError(msg)
    cells = [[(s - 1 + r * i + c * j) % n for j in range(n)] for i in range(n)]
    square = core.from_cells(n, cells)
    assert isinstance(square, Square)
    return square


def odd_mid_squares(n: int) -> List[Square]:
    """All ``4n`` closed-form squares of order ``n`` in canonical order."""
    half = (n - 1) // 2
    squares = [
        odd_construction(n, s, r, c)
        for s in range(1, n + 1)
        for r in (half, -half)
        for c in (half, -half)
    ]
    return sorted(squares, key=core.canonical_key)
