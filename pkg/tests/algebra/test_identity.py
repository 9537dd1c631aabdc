import pytest

from quiverdual.algebra.exceptions import EvaluationExhausted
from quiverdual.algebra.expressions import power, quotient, x, zgiv, zk
from quiverdual.algebra.identity import check_identities, check_identity
from quiverdual.localization.models import ModelShape


@pytest.fixture
def shape():
    return ModelShape(m=2, n=1, r=1)


def test_true_identity_passes(shape):
    lhs = quotient(power(x(1), 2) - power(x(2), 2), x(1) - x(2))
    rhs = x(1) + x(2)
    outcome = check_identity(lhs, rhs, shape, seed=1, points=5)
    assert outcome.passed
    assert [w.point_index for w in outcome.witnesses] == [0, 1, 2, 3, 4]
    assert all(w.assignment == () for w in outcome.witnesses)


def test_false_identity_reports_witnesses(shape):
    outcome = check_identity(x(1) * zgiv(), x(1) + zgiv(), shape, seed=1, points=3)
    assert not outcome.passed
    assert len(outcome.failures) == 3
    names = [name for name, _ in outcome.failures[0].assignment]
    assert names == ["x_1", "x_2", "z_1", "z"]


def test_pairs_share_points(shape):
    pairs = [(x(1), x(1)), (zk(1), zk(1) + 1)]
    first, second = check_identities(pairs, shape, seed=4, points=2)
    assert first.passed and not second.passed
    assert [w.attempt for w in first.witnesses] == [w.attempt for w in second.witnesses]


def test_threads_match_serial(shape):
    pairs = [(x(1) * x(2), x(2) * x(1)), (x(1), x(2))]
    serial = check_identities(pairs, shape, seed=9, points=4)
    pooled = check_identities(pairs, shape, seed=9, points=4, num_jobs=2)
    assert serial == pooled


def test_edge_cases(shape):
    assert check_identities([], shape, seed=0, points=3) == []
    with pytest.raises(ValueError):
        check_identity(x(1), x(1), shape, seed=0, points=0)


@pytest.mark.parametrize("num_jobs", [0, 2])
def test_exhaustion_type_does_not_depend_on_jobs(shape, num_jobs):
    always_singular = quotient(x(1), x(2) - x(2))
    with pytest.raises(EvaluationExhausted) as excinfo:
        check_identities(
            [(always_singular, x(1))],
            shape,
            seed=0,
            points=2,
            num_jobs=num_jobs,
            max_attempts=2,
        )
    assert excinfo.value.point_index in (0, 1)
    assert excinfo.value.attempt == 2 * excinfo.value.point_index + 1
