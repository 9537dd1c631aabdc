import configparser

import pytest

from quiverdual.determinantal.exceptions import ScenarioParameterError, UnknownScenario
from quiverdual.determinantal.scenarios import (
    admissible_betas,
    beta_sweep,
    scenario_catalogue,
    scenario_preset,
)
from quiverdual.localization.models import ModelShape


@pytest.fixture
def shape():
    return ModelShape(m=2, n=1, r=1)


def test_catalogue_presets():
    assert scenario_catalogue.list_items() == ["gn_3fold", "generic"]


def test_gn_3fold():
    scenario = scenario_preset("gn_3fold")
    assert scenario.shape.as_tuple() == (4, 4, 2)
    assert [beta.bz for beta in scenario.betas] == [(0,) * 4, (-1,) * 4, (-2,) * 4]
    assert all(beta.bx == (0,) * 4 and beta.ample_flag for beta in scenario.betas)
    assert scenario.determinantal.base_dim == 7
    with pytest.raises(ScenarioParameterError):
        scenario_preset("gn_3fold", m=3)


def test_unknown_scenario():
    with pytest.raises(UnknownScenario):
        scenario_preset("quintic")


def test_admissible_betas(shape):
    assert len(admissible_betas(shape, bound=1)) == 27
    ample = admissible_betas(shape, bound=1, ample=True)
    assert all(min(bx) >= max(bz) for bx, bz in ample)
    assert len(ample) == 14


def test_sweep_limit_is_evenly_spaced(shape):
    full = beta_sweep(shape, bound=1)
    thinned = beta_sweep(shape, bound=1, limit=3)
    assert thinned == [full[0], full[9], full[18]]
    assert beta_sweep(shape, bound=1, limit=100) == full
    with pytest.raises(ValueError):
        beta_sweep(shape, bound=1, limit=0)


def test_generic_scenario_renders_as_run_config():
    scenario = scenario_preset("generic", m=3, n=2, r=1, bound=1, ample=True, limit=4)
    parser = configparser.ConfigParser()
    parser.read_string(scenario.to_ini())
    assert parser["shapes"]["shapes"] == "3,2,1"
    assert parser["betas"]["beta_source"] == "sweep"
    assert parser["betas"]["beta_count"] == "4"
    assert parser["betas"]["ample"] == "true"
    assert '"name": "generic"' in scenario.to_json()
    with pytest.raises(ScenarioParameterError):
        scenario_preset("generic", colour="red")
