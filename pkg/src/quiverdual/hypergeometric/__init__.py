from quiverdual.hypergeometric.base_models import Duality, Form, Model
from quiverdual.hypergeometric.catalogue import factor_catalogue
from quiverdual.hypergeometric.collapsed import c_factor, collapsed
from quiverdual.hypergeometric.factors import (
    FactorSpec,
    degree_substitution,
    restricted_factor,
    two_form_pair,
)
from quiverdual.hypergeometric.pochhammer import (
    compositions,
    inverse_poch_ratio,
    poch_ratio,
)

__all__ = [
    "Duality",
    "FactorSpec",
    "Form",
    "Model",
    "c_factor",
    "collapsed",
    "compositions",
    "degree_substitution",
    "factor_catalogue",
    "inverse_poch_ratio",
    "poch_ratio",
    "restricted_factor",
    "two_form_pair",
]
