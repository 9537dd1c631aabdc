import json
from fractions import Fraction

import pytest

from quiverdual.algebra.identity import IdentityOutcome, Witness
from quiverdual.reporting.models import (
    REPORT_SCHEMA,
    CheckRecord,
    Report,
    WitnessRecord,
    record_from_outcome,
)


@pytest.fixture
def outcome():
    return IdentityOutcome(
        witnesses=(
            Witness(0, 0, Fraction(1, 2), Fraction(1, 2)),
            Witness(1, 100, Fraction(1), Fraction(2), (("x_1", "3/4"), ("z", "5"))),
        )
    )


@pytest.fixture
def report(outcome):
    return Report(
        records=[
            record_from_outcome(
                "proposition.gr.plus1",
                "citation",
                outcome,
                shape=(3, 2, 1),
                degree=1,
                elapsed_ms=12.5,
            ),
            CheckRecord(
                identity_id="determinantal.cy_classify", citation="", passed=True
            ),
        ]
    )


def test_witness_values_kept_only_on_failure(outcome):
    passed, failed = (WitnessRecord.from_witness(w) for w in outcome.witnesses)
    assert passed.lhs is None and passed.assignment is None
    assert failed.lhs == "1" and failed.rhs == "2"
    assert failed.assignment == {"x_1": "3/4", "z": "5"}


def test_report_status(report):
    assert not report.passed
    assert [r.identity_id for r in report.failures] == ["proposition.gr.plus1"]
    assert report.failures[0].points == 2


def test_canonical_json(report):
    payload = json.loads(report.to_json())
    assert payload["schema"] == REPORT_SCHEMA
    assert [r["identity_id"] for r in payload["records"]] == [
        "determinantal.cy_classify",
        "proposition.gr.plus1",
    ]
    assert "elapsed_ms" not in report.to_json(include_timing=False)
    shuffled = report.model_copy(update={"records": report.records[::-1]})
    assert shuffled.to_json() == report.to_json()


def test_text_summary(report):
    lines = report.to_text().splitlines()
    assert lines[0] == "PASS determinantal.cy_classify"
    assert lines[1].startswith("FAIL proposition.gr.plus1 shape=(3,2,1) a=1 points=2")
    assert lines[-1] == "1/2 passed"


def test_file_round_trip(report, tmp_path):
    path = tmp_path / "report.json"
    report.write_to_file(path)
    assert Report.read_from_file(path).to_json() == report.to_json()


def test_extended(report):
    extra = CheckRecord(identity_id="quiver.pax_cycles", citation="", passed=True)
    assert len(report.extended([extra]).records) == 3
    assert len(report.records) == 2
