import random

import pytest
from compositae import catalog
from compositae.conformance import (
    ORACLE_POINTS,
    ConformanceRecord,
    ConformanceReport,
    run_oracles,
    run_paper_tables,
    run_suite,
    sample_points,
)


@pytest.fixture(scope="module")
def tables():
    return run_paper_tables()


def test_reference_tables_pass(tables):
    assert tables.passed, [r for r in tables.failures()]
    assert tables.failures() == []


def test_reference_tables_cover_printed_examples(tables):
    entries = {r.entry for r in tables.records}
    for name in ["sin", "tan", "arctan", "poly:0:2:0:1", "fib", "inv(xexp)", "xlnx:1", "recip", "generic"]:
        assert name in entries, name
    locations = " ".join(r.location for r in tables.records)
    assert "sine Bell polynomials, row 5" in locations
    assert "fourth derivative of e^(sin x)" in locations


def test_reference_tables_record_discrepancies(tables):
    discrepancies = {r.entry: r for r in tables.records if r.status == "discrepancy"}
    for name in ["sqrt", "rsqrt", "cbrt", "xexp", "comp(recip, ln)", "inv(xexp)", "bernoulli"]:
        assert name in discrepancies, name
    sqrt = discrepancies["sqrt"]
    assert "literal fails" in sqrt.note
    assert "corrected passes" in sqrt.note


def test_every_record_quotes_its_source(tables):
    for r in tables.records:
        assert r.location and r.quote and r.point
        assert r.status in ("pass", "fail", "discrepancy")


def test_oracle_sweep_passes():
    report = run_oracles(seed=7)
    assert report.passed, [r for r in report.failures()]
    assert report.seed == 7


def test_oracle_sweep_covers_every_atom_at_three_points():
    report = run_oracles(seed=1)
    for name in catalog.names():
        points = {r.point for r in report.records if r.entry == name and r.location.startswith("closed form")}
        assert len(points) >= 3, name


def test_sample_points_are_seeded_and_in_domain():
    for name in ORACLE_POINTS:
        a = sample_points(name, random.Random(3))
        b = sample_points(name, random.Random(3))
        assert a == b
        params = ORACLE_POINTS[name][0]
        for x in a:
            catalog.get(name).check(x, params)


def test_report_passed_ignores_discrepancies():
    report = ConformanceReport(suite="paper-tables")
    report.extend([ConformanceRecord("sqrt", "here", "q", "4", "1/4", "1", "discrepancy")])
    assert report.passed
    report.extend([ConformanceRecord("sqrt", "here", "q", "4", "1/4", "1", "fail")])
    assert not report.passed
    assert len(report.failures()) == 1


def test_run_suite_names():
    assert run_suite("paper-tables").suite == "paper-tables"
    with pytest.raises(ValueError):
        run_suite("")
