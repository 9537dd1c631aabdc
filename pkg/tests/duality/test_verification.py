import warnings

import pytest

from quiverdual.duality import verification
from quiverdual.duality.exceptions import (
    AmplenessDiscrepancyWarning,
    CaseMismatch,
    TruncationTooSmall,
)
from quiverdual.duality.models import Case, KernelKind
from quiverdual.duality.verification import (
    ampleness_discrepancies,
    verify_proposition,
    verify_theorem,
)
from quiverdual.hypergeometric.base_models import Duality
from quiverdual.localization.fixed_points import fixed_points
from quiverdual.localization.models import BetaClass, ModelShape, Side
from quiverdual.reporting.models import CheckRecord

CASES = [
    (Case.GEQ2, "shape_geq2", "beta_geq2"),
    (Case.PLUS1, "shape_plus1", "beta_plus1"),
    (Case.EQUAL, "shape_equal", "beta_equal"),
]


@pytest.mark.parametrize("duality", list(Duality))
@pytest.mark.parametrize("case, shape_name, beta_name", CASES)
def test_propositions_hold(request, duality, case, shape_name, beta_name):
    shape = request.getfixturevalue(shape_name)
    beta = request.getfixturevalue(beta_name)
    report = verify_proposition(case, duality, shape, beta, 2, seed=1, points=2)
    assert report.passed
    assert [record.degree for record in report.records] == [0, 1, 2]
    assert {record.identity_id for record in report.records} == {
        f"proposition.{duality.value}.{case.value}"
    }


def test_proposition_at_other_fixed_point(shape_plus1, beta_plus1):
    fp = fixed_points(shape_plus1, Side.GRASSMANNIAN)[2]
    report = verify_proposition(
        Case.PLUS1, Duality.PAX_PAXY, shape_plus1, beta_plus1, 2, 3, 2, fp=fp
    )
    assert report.passed
    assert report.records[0].fixed_point == fp.indices


def test_proposition_case_must_match(shape_geq2, beta_geq2):
    with pytest.raises(CaseMismatch):
        verify_proposition(Case.EQUAL, Duality.GR, shape_geq2, beta_geq2, 1, 0, 1)


@pytest.mark.parametrize("duality", list(Duality))
@pytest.mark.parametrize("case, shape_name, beta_name", CASES)
def test_theorems_hold(request, duality, case, shape_name, beta_name):
    shape = request.getfixturevalue(shape_name)
    beta = request.getfixturevalue(beta_name)
    for fp in fixed_points(shape, Side.GRASSMANNIAN):
        report = verify_theorem(duality, case, shape, beta, 2, seed=2, points=2, fp=fp)
        assert report.passed, report.to_text()
        ids = [record.identity_id for record in report.records]
        assert ids[:2] == [
            f"theorem.{duality.value}.offset",
            f"theorem.{duality.value}.common_factor",
        ]
        assert ids[2:] == [f"theorem.{duality.value}.{case.value}"] * 3


@pytest.mark.parametrize("duality", list(Duality))
@pytest.mark.parametrize("r", [1, 2])
def test_equal_case_theorem_at_higher_order(duality, r):
    shape = ModelShape(m=3, n=3, r=r)
    beta = BetaClass(bx=(1, 0, 2), bz=(0, -1, 0))
    others = fixed_points(shape, Side.GRASSMANNIAN)
    for fp in (None, others[-1]):
        report = verify_theorem(
            duality, Case.EQUAL, shape, beta, 3, seed=5, points=1, fp=fp
        )
        assert report.passed, report.to_text()
        coefficients = [
            record
            for record in report.records
            if record.identity_id == f"theorem.{duality.value}.equal"
        ]
        assert [record.degree for record in coefficients] == [0, 1, 2, 3]


def test_theorem_fails_without_kernel(monkeypatch, shape_plus1, beta_plus1):
    monkeypatch.setitem(verification.KERNEL_FOR_CASE, Case.PLUS1, KernelKind.NONE)
    report = verify_theorem(
        Duality.GR, Case.PLUS1, shape_plus1, beta_plus1, 2, seed=0, points=2
    )
    assert not report.passed
    failing = [record.degree for record in report.failures]
    assert failing == [1, 2]
    assert report.failures[0].witnesses[0].assignment is not None


def test_theorem_needs_positive_order(shape_geq2, beta_geq2):
    with pytest.raises(TruncationTooSmall):
        verify_theorem(Duality.GR, Case.GEQ2, shape_geq2, beta_geq2, 0, 0, 1)


def _record(ample, passed, degree=1):
    return CheckRecord(
        identity_id="proposition.gr.geq2",
        citation="",
        passed=passed,
        shape=(3, 1, 1),
        ample=ample,
        degree=degree,
    )


def test_ampleness_discrepancy_is_warned():
    records = [_record(True, True), _record(False, False), _record(False, True, 2)]
    with pytest.warns(AmplenessDiscrepancyWarning):
        found = ampleness_discrepancies(records)
    assert found == [("proposition.gr.geq2", (3, 1, 1), 1)]


def test_agreeing_ampleness_is_silent():
    records = [_record(True, True), _record(False, True)]
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert ampleness_discrepancies(records) == []
