import pytest

from engine.census import (
    B2_DIFF,
    BASKET_DIFF,
    DOCUMENTED_DISCREPANCIES,
    ERROR,
    MATCH,
    CatalogParseError,
    CatalogRow,
    bundled_catalog,
    classify,
    enumerate_codim1,
    load_catalog,
    quasismooth_codim1,
    verify_catalog,
    verify_row,
)
from engine.stratum import Basket, WeightSystem, try_analyze

HEADER = "id,codim,weights,degrees,basket,b2\n"


@pytest.fixture(scope="module")
def reid():
    return bundled_catalog("reid")


@pytest.fixture(scope="module")
def fletcher():
    return bundled_catalog("fletcher")


@pytest.fixture(scope="module")
def report(reid, fletcher):
    return verify_catalog(reid + fletcher)


def _write(tmp_path, body, name="catalog.csv"):
    path = tmp_path / name
    path.write_text(HEADER + body, encoding="utf-8")
    return str(path)


def test_quasismooth_codim1():
    assert quasismooth_codim1(WeightSystem.of((1, 1, 1, 2), (5,)))
    assert quasismooth_codim1(WeightSystem.of((1, 1, 2, 4), (8,)))
    assert not quasismooth_codim1(WeightSystem.of((1, 1, 2, 5), (9,)))


def test_enumerate_small_bounds():
    assert [ws.weights for ws in enumerate_codim1(1)] == [(1, 1, 1, 1)]
    assert [(ws.weights, ws.degrees) for ws in enumerate_codim1(2)] == [
        ((1, 1, 1, 1), (4,)),
        ((1, 1, 1, 2), (5,)),
        ((1, 1, 2, 2), (6,)),
    ]
    with pytest.raises(ValueError):
        enumerate_codim1(0)


def test_enumerate_monotone():
    small = set(enumerate_codim1(6))
    assert small <= set(enumerate_codim1(10))


def test_enumerate_reproduces_hypersurface_catalog(reid):
    found = enumerate_codim1(40)
    assert len(found) == 95
    assert {ws for ws in found} == {row.ws for row in reid}
    assert [ws.weights for ws in found] == sorted(ws.weights for ws in found)


def test_enumerate_parallel_matches_serial():
    assert enumerate_codim1(12, jobs=2) == enumerate_codim1(12)


def test_load_bundled_catalogs(reid, fletcher):
    assert len(reid) == 95
    assert len(fletcher) == 84
    assert {row.codim for row in reid} == {1}
    assert {row.codim for row in fletcher} == {2}
    row19 = next(r for r in reid if r.id == 19)
    assert row19.ws.weights == (2, 3, 3, 4)
    assert row19.expected_basket.counts() == {1: 3, 2: 4}
    assert row19.expected_b2 == 11


def test_weight_errata_applied_on_load(reid, fletcher):
    row66 = next(r for r in reid if r.id == 66)
    assert row66.printed_ws.weights == (5, 6, 7, 8)
    assert row66.ws.weights == (5, 6, 7, 9)
    assert row66.corrected
    assert next(r for r in fletcher if r.id == 18).ws.weights == (1, 2, 3, 3, 5)
    assert next(r for r in fletcher if r.id == 42).ws.weights == (1, 4, 5, 6, 6)
    assert sum(r.corrected for r in reid + fletcher) == 3
    notes = {(d.codim, d.id): d.note for d in DOCUMENTED_DISCREPANCIES if d.field == "weights"}
    assert notes[(2, 42)] == "printed weights sum to 20, not 22"
    for (codim, row_id), note in notes.items():
        row = next(r for r in reid + fletcher if (r.codim, r.id) == (codim, row_id))
        assert note == f"printed weights sum to {sum(row.printed_ws.weights)}, not {sum(row.ws.degrees)}"


def test_load_catalog_single_row(tmp_path):
    rows = load_catalog(_write(tmp_path, "19,1,2 3 3 4,12,3xA1+4xA2,11\n"))
    assert len(rows) == 1
    assert rows[0].expected_basket.counts() == {1: 3, 2: 4}
    assert not rows[0].corrected


def test_load_catalog_skips_comments_and_extra_columns(tmp_path):
    path = tmp_path / "extra.csv"
    path.write_text(
        "id,codim,weights,degrees,basket,b2,link\n"
        "1,1,1 1 1 1,4,-,22,#21(S2xS3)\n"
        "# 1 weight systems\n",
        encoding="utf-8",
    )
    rows = load_catalog(str(path))
    assert [r.id for r in rows] == [1]
    assert rows[0].expected_basket.total() == 0


def test_load_catalog_basket_error_location(tmp_path):
    with pytest.raises(CatalogParseError) as excinfo:
        load_catalog(_write(tmp_path, "19,1,2 3 3 4,12,3xB1,11\n"))
    assert excinfo.value.line == 2
    assert excinfo.value.column == 17


@pytest.mark.parametrize("body,line", [
    ("1,1,1 1 1 1,4,-,22\n1,1,1 1 1 2,5,A1,21\n", 3),
    ("1,1,1 1 1 1,4,-\n", 2),
    ("1,3,1 1 1 1,4,-,22\n", 2),
    ("1,1,1 1 1,4,-,22\n", 2),
    ("1,1,1 1 1 1,4 4,-,22\n", 2),
    ("x,1,1 1 1 1,4,-,22\n", 2),
    ("1,1,1 1 0 1,4,-,22\n", 2),
])
def test_load_catalog_errors(tmp_path, body, line):
    with pytest.raises(CatalogParseError) as excinfo:
        load_catalog(_write(tmp_path, body))
    assert excinfo.value.line == line


def test_load_catalog_bad_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("id,codim,weight,degrees,basket,b2\n", encoding="utf-8")
    with pytest.raises(CatalogParseError) as excinfo:
        load_catalog(str(path))
    assert (excinfo.value.line, excinfo.value.column) == (1, 10)


def test_verify_counts(report):
    assert len(report) == 95 + 84
    assert report.counts(1) == {MATCH: 89, BASKET_DIFF: 1, B2_DIFF: 5, ERROR: 0}
    assert report.counts(2) == {MATCH: 82, BASKET_DIFF: 0, B2_DIFF: 2, ERROR: 0}
    assert sum(report.counts().values()) == len(report)
    assert report.passed


def test_verify_discrepancies_are_exactly_the_documented_ones(report):
    assert report.undocumented == []
    assert {d.key() for d in report.discrepancies} == {d.key() for d in DOCUMENTED_DISCREPANCIES}


def test_verify_row_72_b2_conflict(report):
    v = next(v for v in report.select(1) if v.row.id == 72)
    assert v.status == B2_DIFF
    assert v.computed_basket.canonical() == "3xA1+2xA2+A4"
    assert (v.row.expected_b2, v.computed_b2) == (6, 11)
    assert v.documented


def test_verify_realized_betti_numbers(report):
    assert report.realized_b2_orbifold(1) == [b for b in range(4, 23) if b != 18]
    assert report.rows_with_b2_orbifold(18, 2) == [5, 6, 7, 9, 11, 17]
    assert report.rows_with_b2_orbifold(18, 1) == []
    assert report.realized_b2_link() == list(range(3, 22))
    for v in report.verdicts:
        assert 4 <= v.computed_b2 <= 22


def test_verify_face_rows(report):
    expected = {5: "4xA1", 12: "4xA1+A3", 29: "3xA1+A5", 45: "5xA1+2xA4"}
    for v in report.select(2):
        if v.row.id in expected:
            assert v.computed_basket.canonical() == expected[v.row.id]
            assert v.status == MATCH


def test_moduli_agreement(report):
    assert report.moduli_agreement() == (95, 95)
    for v in report.verdicts:
        assert 2 * v.record.dolgachev_dim == v.record.moduli_dim


def test_verify_undocumented_basket_diff_fails():
    ws = WeightSystem.of((1, 1, 1, 2), (5,))
    rows = [CatalogRow(id=2, codim=1, ws=ws, expected_basket=Basket.parse("A2"), expected_b2=21, printed_ws=ws)]
    report = verify_catalog(rows)
    assert report.counts()[BASKET_DIFF] == 1
    assert len(report.undocumented) == 1
    assert not report.passed


def test_verify_row_reports_analysis_errors():
    ws = WeightSystem.of((1, 1, 2, 5), (9,))
    verdict = verify_row(CatalogRow(id=1, codim=1, ws=ws, expected_basket=Basket(), expected_b2=22, printed_ws=ws))
    assert verdict.status == ERROR
    assert verdict.error["error"] == "QuasismoothnessFailureAtVertex"
    assert verdict.record is None
    assert verdict.error == try_analyze(ws)[1].to_dict()


def test_classify(report):
    result = classify(report)
    assert result.complete
    assert result.missing == ()
    assert result.realized_k == tuple(range(3, 22))
    assert 17 not in result.realized_k_by_codim[1]
    assert result.suppliers[17] == ((2, 5), (2, 6), (2, 7), (2, 9), (2, 11), (2, 17))
