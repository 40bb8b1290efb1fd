import json

import pytest
from compositae import constants
from compositae.conformance import ConformanceRecord
from compositae.protocol import Document, Modes, OutputRecord


@pytest.fixture
def bell_doc():
    doc = Document(mode=Modes.BELL, expr="sin", order=2, at="0")
    doc.records = [
        OutputRecord(Modes.BELL, 1, 1, "1"),
        OutputRecord(Modes.BELL, 2, 1, "0"),
        OutputRecord(Modes.BELL, 2, 2, "1"),
    ]
    return doc


@pytest.fixture
def report_doc():
    checks = [
        ConformanceRecord("sin", "sine Bell polynomials, row 1", "cos x", "0", "1", "1", "pass"),
        ConformanceRecord("sqrt", "square root, row 1", "1/(2 sqrt x)", "4", "1/4", "1", "discrepancy", "literal fails"),
    ]
    return Document(mode=Modes.VERIFY, checks=checks, passed=True, seed=3)


def test_text_rows(bell_doc):
    assert bell_doc.render_text() == "row 1: 1\nrow 2: 0 ; 1\n", "Test failed"
    assert bell_doc.render("text") == bell_doc.render_text()


def test_text_derivative():
    doc = Document(mode=Modes.DERIVATIVE, expr="comp(exp, sin)", order=4, at="0")
    doc.records.append(OutputRecord(Modes.DERIVATIVE, 4, None, "-3"))
    assert doc.render_text() == "order 4: -3\n"


def test_json_puts_schema_version_first(bell_doc):
    text = bell_doc.to_json()
    assert text.lstrip("{\n ").startswith('"schema_version"')
    d = json.loads(text)
    assert d["schema_version"] == constants.SCHEMA_VERSION
    assert d["records"][1] == {"mode": "bell", "n": 2, "k": 1, "value": "0"}


def test_json_round_trip(bell_doc, report_doc):
    for doc in (bell_doc, report_doc):
        back = Document.from_json(doc.to_json())
        assert back == doc
        assert back.render_text() == doc.render_text()


def test_json_rejects_other_schema_versions(bell_doc):
    d = json.loads(bell_doc.to_json())
    d["schema_version"] = constants.SCHEMA_VERSION + 1
    with pytest.raises(ValueError):
        Document.from_json(json.dumps(d))


def test_csv_rows(bell_doc):
    lines = bell_doc.render_csv().splitlines()
    assert lines[0] == "mode,n,k,value"
    assert lines[2] == "bell,2,1,0"


def test_csv_derivative_leaves_k_empty():
    doc = Document(mode=Modes.DERIVATIVE, records=[OutputRecord(Modes.DERIVATIVE, 3, None, "0.5")])
    assert doc.render_csv().splitlines()[1] == "derivative,3,,0.5"


def test_report(report_doc):
    text = report_doc.render_text()
    lines = text.splitlines()
    assert lines[0].startswith("pass")
    assert "expected 1/4 | computed 1 | literal fails" in lines[1]
    assert lines[-1] == "PASSED: 2 records, 1 pass, 1 discrepancy, 0 fail"
    header = report_doc.render_csv().splitlines()[0]
    assert header == "entry,location,quote,point,expected,computed,status,note"
