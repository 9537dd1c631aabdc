from quiverdual.determinantal.numerology import (
    BaseKind,
    DetConfig,
    codim,
    cy_classify,
    cy_defect,
    dimension,
    singular_stratum,
)
from quiverdual.determinantal.scenarios import (
    Scenario,
    beta_sweep,
    scenario_catalogue,
    scenario_preset,
)

__all__ = [
    "BaseKind",
    "DetConfig",
    "Scenario",
    "beta_sweep",
    "codim",
    "cy_classify",
    "cy_defect",
    "dimension",
    "scenario_catalogue",
    "scenario_preset",
    "singular_stratum",
]
