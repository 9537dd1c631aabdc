"""
Verification suites run by ``quiverdual verify``.

Each suite is a generator of `CheckRecord` registered in
`suite_catalogue`; `run_suites` drains the selected ones into a `Report`,
stopping at the first failure when ``fail_fast`` is set.
"""
import logging
import time
import warnings
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from quiverdual.algebra.exceptions import EvaluationExhausted
from quiverdual.algebra.identity import check_identities
from quiverdual.architecture.catalogue import Catalogue
from quiverdual.cli.config import BetaSource, RunConfig, SuiteName
from quiverdual.determinantal.numerology import (
    BaseKind,
    DetConfig,
    codim,
    cy_classify,
    dimension,
    singular_stratum,
)
from quiverdual.determinantal.scenarios import beta_sweep, scenario_preset
from quiverdual.duality.models import case_for
from quiverdual.duality.verification import (
    PROPOSITION_CITATIONS,
    THEOREM_CITATIONS,
    ampleness_discrepancies,
    offset_identity_holds,
    verify_proposition,
    verify_theorem,
)
from quiverdual.hypergeometric.base_models import Duality, Model
from quiverdual.hypergeometric.factors import two_form_pair
from quiverdual.localization.fixed_points import fixed_points, standard_fixed_point
from quiverdual.localization.models import BetaClass, FixedPoint, ModelShape, Side
from quiverdual.quiver.builders import (
    build_dual_grassmannian_bundle,
    build_gn_extension,
    build_grassmannian_bundle,
    build_pax,
    build_paxy,
)
from quiverdual.quiver.cycles import canonical_rotation, cycles
from quiverdual.quiver.exceptions import SuperpotentialCycleRemovedWarning
from quiverdual.quiver.isomorphism import quiver_equal
from quiverdual.quiver.mutation import mutate
from quiverdual.reporting.models import (
    CheckRecord,
    Report,
    WitnessRecord,
    record_from_outcome,
)

logger = logging.getLogger(__name__)

Suite = Callable[[RunConfig], Iterator[CheckRecord]]

suite_catalogue = Catalogue(item_type=Callable)

LEMMA_SHAPES: Tuple[Tuple[int, int, int], ...] = tuple(
    (m, n, r) for m in range(2, 5) for n in range(1, m + 1) for r in range(1, m)
)
DUALITY_SHAPES: Tuple[Tuple[int, int, int], ...] = tuple(
    (m, n, r)
    for m, n in ((3, 1), (4, 2), (4, 1), (3, 2), (4, 3), (2, 2), (3, 3), (4, 4))
    for r in range(1, m)
)
INVOLUTION_SHAPES = ((5, 4, 3), (3, 2, 1))
CY_LIST = [(4, 5, 4), (2, 4, 7), (1, 5, 19)]

LEMMA_CITATIONS = {
    Model.GR: (
        "restriction of N_{beta,d} to F_i equals its a_j = d_j - beta.x_{i_j} form"
    ),
    Model.GR_HAT: (
        "restriction of N^_{beta,d} to F_j equals its a_j = d_j + beta.x_{j_j} "
        "form (beta.x_{r+j} at the standard point)"
    ),
    Model.PAX: (
        "restriction of N^PAX_{beta,d} to F_i equals its "
        "a_j = d_j - beta.x_{i_j} form"
    ),
    Model.PAXY: (
        "restriction of N^PAXY_{beta,d} to F_j equals its a_j = d_j + beta.x_{j_j} "
        "form (beta.x_{r+j} at the standard point)"
    ),
}


def _rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.default_rng(
        np.random.SeedSequence([abs(seed), int(seed < 0), *keys])
    )


def _shapes(
    config: RunConfig, default: Sequence[Tuple[int, int, int]]
) -> List[ModelShape]:
    if config.beta_source is BetaSource.GN_3FOLD:
        return [scenario_preset("gn_3fold").shape]
    triples = config.shapes or tuple(default)
    return [ModelShape(m=m, n=n, r=r) for m, n, r in triples]


def _betas(config: RunConfig, shape: ModelShape) -> List[BetaClass]:
    """Configured beta classes of ``shape``, across the ampleness modes."""
    if config.beta_source is BetaSource.GN_3FOLD:
        return list(scenario_preset("gn_3fold").betas)
    betas: List[BetaClass] = []
    for ample in config.ample_modes():
        betas += beta_sweep(
            shape, bound=config.beta_bound, ample=ample, limit=config.beta_count
        )
    return betas


def _grassmannian_points(config: RunConfig, shape: ModelShape) -> List[FixedPoint]:
    if config.all_fixed_points:
        return fixed_points(shape, Side.GRASSMANNIAN)
    return [standard_fixed_point(shape, Side.GRASSMANNIAN)]


def _context(shape: ModelShape, beta: BetaClass) -> dict:
    return {
        "shape": shape.as_tuple(),
        "bx": beta.bx,
        "bz": beta.bz,
        "ample": beta.ample_flag,
    }


def _exhausted_record(
    identity_id: str, citation: str, error: EvaluationExhausted, **context: Any
) -> CheckRecord:
    """A failed check for an identity whose test point never avoided poles."""
    logger.warning("%s: %s", identity_id, error)
    return CheckRecord(
        identity_id=identity_id,
        citation=citation,
        passed=False,
        detail=f"evaluation exhausted: {error}",
        witnesses=[
            WitnessRecord(
                point_index=error.point_index, attempt=error.attempt, passed=False
            )
        ],
        **context,
    )


@suite_catalogue.register_decorator(SuiteName.LEMMA_FORMS.value)
def lemma_forms_suite(config: RunConfig) -> Iterator[CheckRecord]:
    """DIRECT against FACTORED for all four models at random degree vectors."""
    for shape in _shapes(config, LEMMA_SHAPES):
        for beta_index, beta in enumerate(_betas(config, shape)):
            rng = _rng(config.seed, *shape.as_tuple(), beta_index)
            for model in Model:
                if config.all_fixed_points:
                    points = fixed_points(shape, model.side)
                else:
                    points = [standard_fixed_point(shape, model.side)]
                for fp in points:
                    degree_vectors = [
                        tuple(
                            int(d)
                            for d in rng.integers(
                                -config.degree_bound,
                                config.degree_bound,
                                size=len(fp),
                                endpoint=True,
                            )
                        )
                        for _ in range(config.degree_count)
                    ]
                    start = time.perf_counter()
                    pairs = [
                        two_form_pair(model, fp, beta, d, shape) for d in degree_vectors
                    ]
                    try:
                        outcomes = check_identities(
                            pairs,
                            shape,
                            config.seed,
                            config.lemma_points,
                            config.num_jobs,
                        )
                    except EvaluationExhausted as e:
                        yield _exhausted_record(
                            f"lemma.{model.value}",
                            LEMMA_CITATIONS[model],
                            e,
                            fixed_point=fp.indices,
                            **_context(shape, beta),
                        )
                        continue
                    elapsed = (time.perf_counter() - start) * 1000.0 / len(outcomes)
                    for d, outcome in zip(degree_vectors, outcomes):
                        yield record_from_outcome(
                            f"lemma.{model.value}",
                            LEMMA_CITATIONS[model],
                            outcome,
                            fixed_point=fp.indices,
                            degrees=d,
                            elapsed_ms=elapsed,
                            **_context(shape, beta),
                        )


@suite_catalogue.register_decorator(SuiteName.PROPOSITIONS.value)
def propositions_suite(config: RunConfig) -> Iterator[CheckRecord]:
    """Collapsed-coefficient identities for a = 0..a_max on both dualities."""
    seen: List[CheckRecord] = []
    for shape in _shapes(config, DUALITY_SHAPES):
        case = case_for(shape)
        for duality in Duality:
            for beta in _betas(config, shape):
                try:
                    report = verify_proposition(
                        case,
                        duality,
                        shape,
                        beta,
                        config.a_max,
                        config.seed,
                        config.points,
                        num_jobs=config.num_jobs,
                    )
                except EvaluationExhausted as e:
                    yield _exhausted_record(
                        f"proposition.{duality.value}.{case.value}",
                        PROPOSITION_CITATIONS[(duality, case)],
                        e,
                        **_context(shape, beta),
                    )
                    continue
                seen += report.records
                yield from report.records
    ampleness_discrepancies(seen)


@suite_catalogue.register_decorator(SuiteName.THEOREMS.value)
def theorems_suite(config: RunConfig) -> Iterator[CheckRecord]:
    """Series identities to q1-order ``order`` at the configured fixed points."""
    for shape in _shapes(config, DUALITY_SHAPES):
        case = case_for(shape)
        betas = _betas(config, shape)
        points = _grassmannian_points(config, shape)
        yield CheckRecord(
            identity_id="theorem.offset_identity",
            citation="q1 offsets agree under both changes of variables",
            passed=all(
                offset_identity_holds(beta, fp, shape.m)
                for beta in betas
                for fp in points
            ),
            shape=shape.as_tuple(),
            detail=f"{len(betas)} beta classes x {len(points)} fixed points",
        )
        for duality in Duality:
            for beta in betas:
                for fp in points:
                    try:
                        report = verify_theorem(
                            duality,
                            case,
                            shape,
                            beta,
                            config.order,
                            config.seed,
                            config.points,
                            fp=fp,
                            num_jobs=config.num_jobs,
                        )
                    except EvaluationExhausted as e:
                        yield _exhausted_record(
                            f"theorem.{duality.value}.{case.value}",
                            THEOREM_CITATIONS[duality],
                            e,
                            fixed_point=fp.indices,
                            **_context(shape, beta),
                        )
                        continue
                    yield from report.records


def _structural_record(
    identity_id: str,
    citation: str,
    shape: Optional[Tuple[int, int, int]],
    passed: bool,
    detail: str = "",
) -> CheckRecord:
    return CheckRecord(
        identity_id=identity_id,
        citation=citation,
        passed=passed,
        shape=shape,
        detail=detail,
    )


@suite_catalogue.register_decorator(SuiteName.QUIVER.value)
def quiver_suite(config: RunConfig) -> Iterator[CheckRecord]:
    """Mutation of the PAX and Grassmannian-bundle quivers and its invariants."""
    for m in range(2, 7):
        for n in range(1, m + 1):
            for r in range(1, m):
                start = time.perf_counter()
                pax = build_pax(m, n, r)
                result = mutate(pax, "gauge")
                passed = result.new_gauge_rank == m - r and quiver_equal(
                    result.quiver, build_paxy(m, n, m - r)
                )
                frozen_kept = pax.frozen_edges() == result.quiver.frozen_edges()
                record = _structural_record(
                    "quiver.pax_mutation",
                    "mutating the PAX quiver at its gauge node gives the PAXY quiver",
                    (m, n, r),
                    passed and frozen_kept,
                    detail=f"new rank {result.new_gauge_rank}",
                )
                yield record.model_copy(
                    update={"elapsed_ms": (time.perf_counter() - start) * 1000.0}
                )
                basic = mutate(build_grassmannian_bundle(m, n, r), "gauge")
                yield _structural_record(
                    "quiver.grassmannian_mutation",
                    "mutating the Grassmannian-bundle quiver gives the dual one "
                    "with W = tr(PYX)",
                    (m, n, r),
                    quiver_equal(
                        basic.quiver, build_dual_grassmannian_bundle(m, n, m - r)
                    ),
                )
                gn = mutate(build_gn_extension(m, n, r), "gauge")
                yield _structural_record(
                    "quiver.gn_extension_rank",
                    "mutation at the rank-r node of the Gulliksen-Negard "
                    "extension gives rank max(m, n) - r",
                    (m, n, r),
                    gn.new_gauge_rank == max(m, n) - r,
                )

    for m, n, r in INVOLUTION_SHAPES:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", SuperpotentialCycleRemovedWarning)
            once = mutate(build_pax(m, n, r), "gauge")
            twice = mutate(once.quiver, "gauge")
        structural = quiver_equal(twice.quiver, build_pax(m, n, r))
        yield _structural_record(
            "quiver.rank_involution",
            "mutating twice at the same node restores the gauge rank",
            (m, n, r),
            twice.new_gauge_rank == r,
            detail=f"structurally involutive: {structural}; "
            f"{len(twice.removed_cycles)} superpotential cycles removed",
        )

    pax_cycles = cycles(build_pax(5, 4, 3), 3)
    yield _structural_record(
        "quiver.pax_cycles",
        "tr(PAX) is the only cycle of the PAX quiver",
        (5, 4, 3),
        pax_cycles == [canonical_rotation(("X", "A", "P"))],
    )
    paxy_cycles = cycles(build_paxy(5, 4, 2), 3)
    yield _structural_record(
        "quiver.paxy_cycles",
        "P(A - YX) accounts for all cycles of the PAXY quiver",
        (5, 4, 2),
        set(paxy_cycles)
        == {canonical_rotation(("A", "P")), canonical_rotation(("X", "Y", "P"))},
    )


@suite_catalogue.register_decorator(SuiteName.DETERMINANTAL.value)
def determinantal_suite(config: RunConfig) -> Iterator[CheckRecord]:
    """Codimension, Calabi-Yau classification and stratification checks."""
    found = cy_classify(8, 30)
    yield _structural_record(
        "determinantal.cy_classify",
        "Calabi-Yau threefolds B(A,s) in P^N with m = n",
        None,
        sorted(found) == sorted(CY_LIST),
        detail=f"found {found}",
    )
    yield _structural_record(
        "determinantal.cy_classify_stable",
        "the classification does not grow up to m <= 12, N <= 60",
        None,
        cy_classify(12, 60) == found,
    )
    gn = DetConfig(m=4, n=4, s=2, base_kind=BaseKind.PROJ, base_dim=7)
    yield _structural_record(
        "determinantal.gulliksen_negard",
        "codim (n-s)(m-s) = 4 and dim 3 for B(A,2) in P^7",
        None,
        codim(gn) == 4 and dimension(gn) == 3,
    )
    monotone = True
    for m in range(1, 9):
        for n in range(1, m + 1):
            for s in range(1, n + 1):
                cfg = DetConfig(m=m, n=n, s=s)
                monotone &= codim(singular_stratum(cfg)) > codim(cfg)
    yield _structural_record(
        "determinantal.stratification",
        "codimension strictly increases from B(A,s) to B(A,s-1)",
        None,
        monotone,
    )


def selected_suites(config: RunConfig) -> List[str]:
    if config.suite is SuiteName.ALL:
        return suite_catalogue.list_items()
    return [config.suite.value]


def run_suites(config: RunConfig) -> Report:
    """
    Runs the configured suites and collects their records.

    With ``fail_fast`` the run stops after the first failing record, which
    is kept in the report.
    """
    records: List[CheckRecord] = []
    for name in selected_suites(config):
        logger.info("running suite %s", name)
        suite = suite_catalogue.get(name)
        for record in suite(config):
            records.append(record)
            if not record.passed:
                logger.info("%s failed", record.identity_id)
                if config.fail_fast:
                    return _report(config, records)
    return _report(config, records)


def _report(config: RunConfig, records: List[CheckRecord]) -> Report:
    ran_theorems = config.suite in (SuiteName.ALL, SuiteName.THEOREMS)
    return Report(
        config=config.model_dump(mode="json"),
        max_order_checked=config.order if ran_theorems else None,
        records=records,
    )
