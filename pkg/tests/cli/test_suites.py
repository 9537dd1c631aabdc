import pytest

from quiverdual.algebra.exceptions import EvaluationExhausted
from quiverdual.cli import suites
from quiverdual.cli.config import BetaSource, RunConfig, SuiteName
from quiverdual.cli.suites import run_suites, selected_suites, suite_catalogue
from quiverdual.hypergeometric.base_models import Model
from quiverdual.localization.models import ModelShape


def _config(**values):
    return RunConfig.model_validate(
        {"points": 2, "beta_count": 1, "ample": True, **values}
    )


def test_every_suite_is_registered():
    expected = {s.value for s in SuiteName} - {"all"}
    assert set(suite_catalogue.list_items()) == expected
    assert selected_suites(_config(suite="quiver")) == ["quiver"]
    assert set(selected_suites(_config())) == expected


def test_determinantal_suite():
    report = run_suites(_config(suite="determinantal"))
    assert report.passed
    assert [r.identity_id for r in report.records] == [
        "determinantal.cy_classify",
        "determinantal.cy_classify_stable",
        "determinantal.gulliksen_negard",
        "determinantal.stratification",
    ]
    assert report.max_order_checked is None
    assert report.config["suite"] == "determinantal"


def test_quiver_suite():
    report = run_suites(_config(suite="quiver"))
    assert report.passed
    involution = [
        r for r in report.records if r.identity_id == "quiver.rank_involution"
    ]
    assert len(involution) == 2
    assert all(r.detail.startswith("structurally involutive") for r in involution)


def test_lemma_forms_suite():
    config = _config(
        suite="lemma_forms",
        shapes="2,1,1",
        degree_count=2,
        lemma_points=2,
        ample=False,
    )
    report = run_suites(config)
    assert report.passed
    assert len(report.records) == 4 * 2 * 2


def test_propositions_suite():
    report = run_suites(_config(suite="propositions", shapes="3,1,1; 2,2,1", a_max=1))
    assert report.passed
    assert {r.identity_id for r in report.records} == {
        "proposition.gr.geq2",
        "proposition.pax_paxy.geq2",
        "proposition.gr.equal",
        "proposition.pax_paxy.equal",
    }


def test_theorems_suite():
    config = _config(
        suite="theorems", shapes="3,2,1", order=1, all_fixed_points=False
    )
    report = run_suites(config)
    assert report.passed
    assert report.max_order_checked == 1
    assert report.records[0].identity_id == "theorem.offset_identity"


def test_gn_3fold_source_fixes_shape_and_betas():
    config = _config(beta_source=BetaSource.GN_3FOLD, shapes="3,1,1")
    shapes = suites._shapes(config, suites.DUALITY_SHAPES)
    assert [s.as_tuple() for s in shapes] == [(4, 4, 2)]
    betas = suites._betas(config, shapes[0])
    assert [b.bz[0] for b in betas] == [0, -1, -2]


def test_sweep_betas_cover_both_ampleness_modes():
    config = _config(ample=None, beta_count=2)
    betas = suites._betas(config, ModelShape(m=2, n=1, r=1))
    assert [b.ample_flag for b in betas] == [True, True, False, False]


def test_fail_fast_stops_at_first_failure(monkeypatch):
    monkeypatch.setattr(suites, "CY_LIST", [])
    report = run_suites(_config(suite="determinantal", fail_fast=True))
    assert not report.passed
    assert len(report.records) == 1
    complete = run_suites(_config(suite="determinantal"))
    assert len(complete.records) == 4


def test_reports_are_deterministic():
    config = _config(suite="propositions", shapes="3,2,1", a_max=1, seed=3)
    first = run_suites(config).to_json(include_timing=False)
    assert run_suites(config).to_json(include_timing=False) == first


@pytest.mark.parametrize("seed", [0, 1])
def test_seed_is_recorded(seed):
    assert run_suites(_config(suite="determinantal", seed=seed)).config["seed"] == seed


def test_paxy_cycle_record_names_the_built_shape():
    report = run_suites(_config(suite="quiver"))
    (record,) = [r for r in report.records if r.identity_id == "quiver.paxy_cycles"]
    assert record.passed
    assert record.shape == (5, 4, 2)


def test_dual_lemma_citations_use_shifted_indices():
    for model in (Model.GR_HAT, Model.PAXY):
        assert "d_j + beta.x_{j_j}" in suites.LEMMA_CITATIONS[model]
        assert "beta.x_{r+j}" in suites.LEMMA_CITATIONS[model]
    for model in (Model.GR, Model.PAX):
        assert "d_j - beta.x_{i_j}" in suites.LEMMA_CITATIONS[model]


def test_exhausted_theorem_point_is_recorded(monkeypatch):
    def exhausted(*args, **kwargs):
        raise EvaluationExhausted("every draw hit a pole", point_index=1, attempt=7)

    monkeypatch.setattr(suites, "verify_theorem", exhausted)
    config = _config(
        suite="theorems", shapes="3,2,1", order=1, all_fixed_points=False
    )
    report = run_suites(config)
    failed = report.failures
    assert sorted(r.identity_id for r in failed) == [
        "theorem.gr.plus1",
        "theorem.pax_paxy.plus1",
    ]
    assert all(r.witnesses[0].point_index == 1 for r in failed)
    assert all(r.detail.startswith("evaluation exhausted") for r in failed)
    (offsets,) = [
        r for r in report.records if r.identity_id == "theorem.offset_identity"
    ]
    assert offsets.passed
