import pytest

from innerdist import census, classify, config, core, diffs, transforms
from innerdist.exceptions import DomainError, GuardExceeded
from innerdist.models import PathVariant, StructureBreakdown


def _keys(squares):
    return [core.canonical_key(sq) for sq in squares]


@pytest.mark.parametrize(
    "n, k, want", [(3, 1, 12), (4, 1, 576), (5, 2, 20), (6, 2, 672), (7, 3, 28)]
)
def test_brute_count(n, k, want):
    assert census.brute_count(n, k) == want


def test_brute_count_in_parallel():
    assert census.brute_count(6, 2, n_jobs=2) == 672


@pytest.mark.parametrize("n, k", [(6, 0), (6, 4), (0, 1)])
def test_brute_count_out_of_range(n, k):
    with pytest.raises(DomainError):
        census.brute_count(n, k)


def test_brute_census_small():
    assert census.brute_census(3) == {1: 12}
    assert census.brute_census(4) == {1: 576, 2: 0}


@pytest.mark.slow
def test_brute_census_five():
    assert census.brute_census(5) == {1: 161260, 2: 20}


def test_brute_census_domain():
    with pytest.raises(DomainError):
        census.brute_census(1)


@pytest.mark.parametrize(
    "call", [lambda: census.brute_count(9, 4), lambda: census.brute_census(6)]
)
def test_guards(call):
    with pytest.raises(GuardExceeded, match="exceeds the guard"):
        call()


def test_guard_is_configurable(monkeypatch):
    monkeypatch.setitem(config, "brute_max_order_mid", 5)
    with pytest.raises(GuardExceeded):
        census.brute_count(6, 2)
    assert census.brute_count(6, 2, long=True) == 672


def test_enumerate_mid_brute_odd():
    squares = census.enumerate_mid_brute(5)
    assert _keys(squares) == sorted(_keys(transforms.odd_mid_squares(5)))
    assert all(core.inner_distance(sq) == 2 for sq in squares)


def test_enumerate_mid_brute_matches_construction():
    brute = census.enumerate_mid_brute(6)
    assert len(brute) == 672
    assert _keys(brute) == _keys(census.enumerate_mid_constructive(6))


@pytest.mark.parametrize("n", [6, 8, 10])
def test_enumerate_mid_constructive_count(n):
    squares = census.enumerate_mid_constructive(n)
    assert len(squares) == classify.midls_count_formula(n)
    assert _keys(squares) == sorted(_keys(squares))


def test_enumerate_mid_constructive_too_small():
    with pytest.raises(DomainError):
        census.enumerate_mid_constructive(1)


def test_verify_structure():
    assert census.verify_structure(6) == StructureBreakdown(
        total=672, circulant=36, back_circulant=36, row_product=600, overlap=0
    )
    assert census.verify_structure(5).closed_form == 20


@pytest.mark.slow
def test_verify_structure_eight():
    breakdown = census.verify_structure(8)
    assert breakdown.total == 2720
    parts = (breakdown.circulant, breakdown.back_circulant, breakdown.row_product)
    assert parts == (80, 80, 2592)
    assert breakdown.overlap == 32


@pytest.mark.parametrize("n, want", [(6, 0), (8, 2), (10, 0), (12, 2)])
def test_overlap_counts(n, want):
    assert census.overlap_counts(n) == {"circulant": want, "back_circulant": want}


@pytest.mark.parametrize(
    "check, tag",
    [
        (census.check_addition_orbits, "orbits"),
        (census.check_conjugation_pairs, "conjugation"),
        (census.check_consecutive_rows, "consecutive-rows"),
        (census.check_row_product_local, "row-prod-local"),
        (census.check_circulant_matrices, "circulant-hv"),
        (census.check_row_product_rows, "row-product"),
    ],
)
def test_structure_checks_pass(check, tag):
    result = check(census.enumerate_mid_constructive(6))
    assert result.tag == tag
    assert result.passed, result.detail


def test_addition_orbits_incomplete():
    squares = census.enumerate_mid_constructive(6)
    assert not census.check_addition_orbits(squares[1:]).passed
    assert not census.check_addition_orbits([]).passed


def test_census_max_k_only():
    report = census.census(5, max_k_only=True)
    assert report.per_k == {2: 20}
    assert report.complete
    assert report.passed
    assert report.structure.closed_form == 20
    assert (report.mid.formula, report.mid.constructive, report.mid.brute) == (
        20,
        20,
        20,
    )


def test_census_small_order():
    report = census.census(4)
    assert report.per_k == {1: 576, 2: 0}
    assert report.mid.formula is None
    assert report.mid.brute == 576
    assert {c.tag for c in report.checks} == {"ls-total", "per-k-mid", "midls"}
    assert report.passed


def test_census_beyond_guard():
    report = census.census(7)
    assert not report.complete
    assert report.per_k == {3: 28}
    assert report.passed


def test_census_frame():
    frame = census.census(5, max_k_only=True).to_frame()
    assert list(frame.columns) == ["n", "k", "count", "method"]
    assert set(frame["method"]) == {"brute-force", "formula", "constructive"}
    assert (frame["count"] == 20).all()


def test_census_domain():
    with pytest.raises(DomainError):
        census.census(1)


def test_conjecture_report():
    report = census.conjecture_report(4)
    assert report.per_k == {1: 576, 2: 0}
    assert report.monotone == {"1>=2": True}
    assert report.complete


def test_conjecture_report_beyond_guard():
    report = census.conjecture_report(7)
    assert not report.complete
    assert report.per_k == {3: 28}
    assert report.monotone == {}


def test_theorem_suite_single_order():
    report = census.theorem_suite((6, 6), seed=5, cases=100)
    assert [c.tag for c in report.checks] == [
        "P-formula",
        "cycle-count",
        "patterns",
        "midls-even",
        "midls-odd",
        "structure",
        "row-product",
        "neighbors",
        "determined",
        "oeis",
        "roundtrip",
    ]
    assert report.passed, [c for c in report.checks if not c.passed]


def test_theorem_suite_reports_failures(monkeypatch):
    generate_paths = classify.generate_paths
    monkeypatch.setattr(classify, "generate_paths", lambda n: generate_paths(n)[1:])
    report = census.theorem_suite((6, 6), cases=10)
    assert not report.passed
    failed = {c.tag for c in report.checks if not c.passed}
    assert "P-formula" in failed
    assert "cycle-count" not in failed


@pytest.mark.slow
def test_theorem_suite_default_range():
    assert census.theorem_suite(n_jobs=0).passed


def test_oeis_tables():
    for table in census.OEIS.values():
        for n, value in table.items():
            if n >= 6:
                assert classify.P_formula(n) == value


def test_enumerate_mid_brute_in_parallel():
    assert _keys(census.enumerate_mid_brute(6, n_jobs=2)) == _keys(
        census.enumerate_mid_brute(6)
    )


def test_row_classes():
    L = diffs.make_circulant(diffs.row_from_ext(classify.row_c(6)))
    classes = census.row_classes(L)
    assert len(classes) == 6
    assert {c.variant for c in classes} == {PathVariant.CYCLE_ROTATION}


def test_row_product_rows_six():
    result = census.check_row_product_rows(census.enumerate_mid_brute(6))
    assert result.passed
    assert result.detail == "240 squares hold a forcing row, 0 are not row products"


def test_row_product_rows_skip_circulants():
    squares = [
        diffs.make_circulant(diffs.row_from_ext(d)) for d in classify.generate_cycles(8)
    ]
    result = census.check_row_product_rows(squares)
    assert result.passed
    assert result.detail.startswith("2 squares hold")


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_roundtrips(n, rng):
    result = census.check_roundtrips(n, 200, rng)
    assert result.tag == "roundtrip"
    assert result.passed, result.detail


@pytest.mark.slow
@pytest.mark.parametrize("n", [10, 12])
def test_roundtrips_full(n, rng):
    assert census.check_roundtrips(n, config["random_cases"], rng).passed


def test_theorem_suite_neighbours(monkeypatch):
    monkeypatch.setitem(config, "brute_max_order_mid", 5)
    report = census.theorem_suite((6, 10), cases=10)
    assert report.passed, [c for c in report.checks if not c.passed]
    checks = {c.tag: c for c in report.checks}
    assert checks["row-product"].detail == "no order within the search guard"
    detail = checks["neighbors"].detail
    row_a = detail.split("; ")[1]
    assert row_a.startswith("6: Row A ~ ")
    assert set(row_a.split(" ~ ")[1].split()) == {
        "type1/alternating(h=-2)",
        "type1(h=2)",
        "cycle_rotation(h=-1,m=0)",
        "cycle_rotation(h=-1,m=1)",
    }
    assert "type 1 rows open with n/2-h+1 ones" in checks["structure"].detail


def test_theorem_suite_seed():
    details = [
        census.theorem_suite((6, 6), seed=11, cases=20).checks[-1].detail
        for _ in range(2)
    ]
    assert details[0] == details[1] == "seed=11: 20 rows and squares at each n in [6]"


def test_config_holds_the_guards():
    assert {
        "brute_max_order_mid",
        "brute_max_order_mid_long",
        "brute_max_order_full",
        "brute_max_order_full_long",
        "random_cases",
    } <= set(config)
    assert config["brute_max_order_mid_long"] == 10
    assert config["brute_max_order_full_long"] == 6
