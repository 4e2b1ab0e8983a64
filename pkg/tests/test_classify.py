import pytest

from innerdist import classify, diffs, graphs
from innerdist.exceptions import DomainError
from innerdist.models import ExtendedDifferenceRow, PathVariant


def _ext(n, *entries):
    return ExtendedDifferenceRow(n=n, eps=tuple(entries[:-1]), h=entries[-1])


@pytest.mark.parametrize(
    "n, want", [(6, 10), (8, 18), (10, 26), (12, 38), (14, 50), (16, 66), (18, 82)]
)
def test_P_formula(n, want):
    assert classify.P_formula(n) == want
    assert 2 + 2 * (classify.type1_count(n) + classify.type2_count(n)) == want


@pytest.mark.parametrize("n", [4, 5, 7])
def test_P_formula_domain(n):
    with pytest.raises(DomainError):
        classify.P_formula(n)


@pytest.mark.parametrize(
    "n, want",
    [(5, 20), (6, 672), (7, 28), (8, 2720), (9, 36), (10, 6960), (12, 17616)],
)
def test_midls_count_formula(n, want):
    assert classify.midls_count_formula(n) == want


def test_midls_count_formula_small():
    with pytest.raises(DomainError):
        classify.midls_count_formula(4)


@pytest.mark.parametrize("n", [6, 8, 10, 12, 14])
def test_generate_paths_matches_oracle(n):
    generated = classify.generate_paths(n)
    assert generated == graphs.ext_rows(graphs.max_distance_rows(n))
    assert len(generated) == classify.P_formula(n)


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_generate_cycles_matches_oracle(n):
    g = graphs.build_graph(n, n // 2 - 1)
    generated = classify.generate_cycles(n)
    assert generated == graphs.ext_rows(graphs.ham_cycles(g))
    assert len(generated) == n + (2 if n % 4 == 0 else 0)
    assert all(d.is_cycle for d in generated)


def test_named_rows():
    rows = classify.named_rows(6)
    assert rows.row_a == _ext(6, 0, 1, 0, 1, 0, -2)
    assert rows.row_c == _ext(6, 1, 1, 0, -1, -1, 0)
    assert classify.row_a(8).entries == (0, 1, 0, 1, 0, 1, 0, -3)
    paths = classify.generate_paths(8)
    assert classify.row_a(8) in paths and classify.row_c(8) in paths


def test_classify_row_from_figure():
    cls = classify.classify_row(_ext(6, 1, 0, -1, -1, 0, 1))
    assert cls.variant == PathVariant.CYCLE_ROTATION
    assert cls.offset == 5
    assert cls.h == 1
    assert cls.m == 1
    assert cls.to_json()["sign"] == "+"


@pytest.mark.parametrize(
    "entries, variant, h",
    [
        ((1, 1, 0, 1, 1, 2), PathVariant.TYPE1, 2),
        ((-1, -1, 0, -1, -1, -2), PathVariant.TYPE1, -2),
        ((0, -1, 0, -1, 0, 2), PathVariant.TYPE1, 2),
        ((1, 1, 0, -1, -1, 0), PathVariant.CYCLE_ROTATION, 0),
    ],
)
def test_classify_row_order_six(entries, variant, h):
    cls = classify.classify_row(_ext(6, *entries))
    assert (cls.variant, cls.h) == (variant, h)


def test_classify_row_order_eight():
    ones = _ext(8, 1, 1, 1, 1, 1, 1, 1, 1)
    assert classify.classify_row(ones).variant == PathVariant.ALL_ONES
    assert classify.classify_row(ones.negated()).sign == -1
    assert classify.classify_row(classify.row_a(8)).alternating


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_classify_covers_every_path(n):
    classes = [classify.classify_row(d) for d in classify.generate_paths(n)]
    assert len(set(classes)) == classify.P_formula(n)
    for d, cls in zip(classify.generate_paths(n), classes):
        assert classify.row_for_class(n, cls) == d
    cycles = [c for c in classes if c.variant == PathVariant.CYCLE_ROTATION]
    assert len(cycles) == n


@pytest.mark.parametrize(
    "d",
    [
        _ext(6, 1, 1, 1, 1, 1, 1),
        _ext(6, 0, 0, 0, 0, 0, 0),
        _ext(8, 1, 0, -1, -1, 0, 1, 0, 0),
    ],
)
def test_classify_row_rejects(d):
    with pytest.raises(DomainError, match="not a maximum-inner-distance path"):
        classify.classify_row(d)


def test_classify_row_small_order():
    with pytest.raises(DomainError):
        classify.classify_row(_ext(4, 1, 0, -1, 0))


@pytest.mark.parametrize("n", [6, 8, 10, 12, 14])
def test_valid_rows_have_no_patterns(n):
    for d in classify.generate_paths(n):
        assert classify.check_patterns(d) == []


@pytest.mark.parametrize("n", [6, 8])
def test_oracle_rows_have_no_patterns(n):
    for d in graphs.ext_rows(graphs.max_distance_rows(n)):
        assert classify.check_patterns(d) == [], d


@pytest.mark.parametrize(
    "eps, n, rule, start",
    [
        ((1, 0, 0, -1, 0), 6, 1, 2),
        ((1, -1, 1, 0, -1), 6, 1, 1),
        ((0, 0, 1, 1, 1, 1, -1), 8, 1, 1),
        ((-1, 0, 1, 0, -1), 6, 2, 1),
        ((-1, -1, 0, 1, 1, 0, -1), 8, 2, 1),
        ((1, 0, 1, 0, -1), 6, 2, 2),
        ((0, 1, 1, 1, 0), 6, 3, 1),
        ((0, 1, 1, 1, 0), 6, 3, 2),
        ((1, 1, 0, 1, 1, 0, -1), 8, 3, 1),
        ((0, -1, -1, -1, 0), 6, 3, 2),
    ],
)
def test_check_patterns_violations(eps, n, rule, start):
    found = classify.check_patterns(eps, n)
    assert (rule, start) in {(v.rule, v.start) for v in found}


def test_neighbours():
    n = 6
    rows = classify.generate_paths(n)
    for d in rows:
        assert classify.is_neighbor(d, d)
        assert n // 2 in classify.neighbor_offsets(d, d)
    c = classify.row_c(n)
    assert not classify.is_neighbor(c, c.negated())
    assert c in classify.neighbors(c)


@pytest.mark.parametrize("n", [6, 8])
def test_neighbor_matrix(n):
    rows = classify.generate_paths(n)
    matrix = classify.neighbor_matrix(n)
    assert matrix.shape == (len(rows), len(rows))
    assert (matrix == matrix.T).all()
    assert matrix.diagonal().all()
    for i, d in enumerate(rows):
        linked = [rows[j] for j in range(len(rows)) if matrix[i, j]]
        assert linked == classify.neighbors(d)


def test_neighbor_matrix_in_parallel():
    assert (classify.neighbor_matrix(8, n_jobs=2) == classify.neighbor_matrix(8)).all()


@pytest.mark.parametrize("n", [6, 8, 10])
def test_neighbours_are_determined(n):
    rows = classify.generate_paths(n)
    for d in rows:
        for e in classify.neighbors(d):
            if e == d:
                continue
            assert classify.is_determined(d, e)
            j1, j2 = classify.determining_window(d, e)
            assert 1 <= j1 < j2 <= n
            assert classify.adjacency_bounds_check(d, e) == []


def test_determined_needs_neighbours():
    c = classify.row_c(6)
    with pytest.raises(DomainError):
        classify.is_determined(c, c.negated())
    with pytest.raises(DomainError):
        classify.adjacency_bounds_check(c, c.negated())


def test_neighbor_rows_stack():
    n = 8
    rows = classify.generate_paths(n)
    d = rows[0]
    for e in classify.neighbors(d):
        top = diffs.row_from_ext(d)
        bottom = diffs.row_from_ext(e)
        for t in classify.neighbor_offsets(d, e):
            shifted = [(y + t) % n for y in bottom.cells]
            assert sorted(shifted) == list(range(n))
            assert all(
                min((x - y) % n, (y - x) % n) >= n // 2 - 1
                for x, y in zip(top.cells, shifted)
            )


@pytest.mark.parametrize("n", [6, 8, 10])
def test_row_c_neighbours_are_its_rotations(n):
    c = classify.row_c(n)
    assert set(classify.neighbors(c)) == {c, c.rotated(1), c.rotated(-1)}
