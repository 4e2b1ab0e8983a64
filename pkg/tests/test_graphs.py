import pytest

from innerdist import classify, config, core, graphs
from innerdist.exceptions import DomainError, GuardExceeded
from innerdist.models import Symmetry


def test_build_graph():
    g = graphs.build_graph(6, 2)
    assert g.neighbors[0] == (2, 3, 4)
    assert g.degree(1) == 3
    assert g.has_edge(1, 4) and not g.has_edge(1, 2)
    a = g.adjacency
    assert a.shape == (6, 6)
    assert (a == a.T).all()
    assert not a.diagonal().any()


@pytest.mark.parametrize("n, k", [(6, 0), (6, 4), (5, 3)])
def test_build_graph_out_of_range(n, k):
    with pytest.raises(DomainError):
        graphs.build_graph(n, k)


@pytest.mark.parametrize(
    "n, k, want",
    [
        (5, 1, 24),
        (5, 2, 2),
        (6, 2, 10),
        (7, 3, 2),
        (8, 3, 18),
        (10, 4, 26),
        (12, 5, 38),
    ],
)
def test_count_ham_paths(n, k, want):
    g = graphs.build_graph(n, k)
    assert graphs.count_ham_paths(g) == want
    assert len(graphs.ham_paths(g)) == want
    assert sum(1 for _ in graphs.iter_ham_paths(g)) == want


def test_ham_paths_in_parallel():
    g = graphs.build_graph(8, 3)
    assert graphs.count_ham_paths(g, 1, n_jobs=2) == 18
    assert graphs.ham_paths(g, 1, n_jobs=2) == graphs.ham_paths(g, 1)


def test_ham_paths_are_rows_at_distance():
    g = graphs.build_graph(8, 3)
    rows = graphs.ham_paths(g, start=3)
    assert rows == sorted(rows, key=lambda r: r.cells)
    for r in rows:
        assert r.symbols[0] == 3
        assert core.inner_distance(r) >= 3


@pytest.mark.parametrize("n, want", [(6, 6), (8, 10), (10, 10), (12, 14)])
def test_ham_cycles(n, want):
    g = graphs.build_graph(n, n // 2 - 1)
    cycles = graphs.ham_cycles(g)
    assert len(cycles) == want
    for r in cycles:
        assert core.cell_distance(r.cells[0], r.cells[-1], n) >= n // 2 - 1


def test_start_out_of_range():
    with pytest.raises(DomainError):
        graphs.ham_paths(graphs.build_graph(6, 2), start=7)


def test_guard(monkeypatch):
    monkeypatch.setitem(config, "oracle_max_order", 6)
    with pytest.raises(GuardExceeded):
        graphs.count_ham_paths(graphs.build_graph(8, 3))


def test_max_distance_rows_odd():
    rows = graphs.max_distance_rows(7)
    assert [r.symbols for r in rows] == [[1, 4, 7, 3, 6, 2, 5], [1, 5, 2, 6, 3, 7, 4]]


def test_ext_rows_sorted():
    rows = graphs.ext_rows(graphs.max_distance_rows(6))
    assert len(rows) == 10
    assert [d.entries for d in rows] == sorted(d.entries for d in rows)


def test_symmetry_orbit_of_row_c():
    orbit = graphs.symmetry_orbit(
        classify.row_c(6), [Symmetry.NEGATE, Symmetry.REVERSE, Symmetry.ROTATE]
    )
    assert orbit == classify.generate_cycles(6)


def test_symmetry_orbit_without_rotation():
    d = classify.row_a(8)
    orbit = graphs.symmetry_orbit(d, ["negate", "reverse"])
    assert d in orbit and d.negated() in orbit
    assert len(orbit) in (2, 4)
    for e in orbit:
        assert e.inner_distance == d.inner_distance


def test_symmetry_orbit_rotate_non_cycle():
    with pytest.raises(DomainError):
        graphs.symmetry_orbit(classify.row_a(6), [Symmetry.ROTATE])


@pytest.mark.parametrize("n", [6, 8, 10])
def test_symmetries_preserve_the_path_set(n):
    rows = set(graphs.ext_rows(graphs.max_distance_rows(n)))
    for d in rows:
        assert d.negated() in rows
        assert d.reversed() in rows
        if d.is_cycle:
            assert d.rotated(1) in rows
