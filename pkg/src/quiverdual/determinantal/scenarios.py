"""
Scenario presets: a model shape plus the beta-classes to verify it on.

``gn_3fold`` is the Gulliksen-Negard threefold B(A, 2) in P^7 with
E trivial of rank 4 and F = O(1)^4. Its trivial line bundles pair to 0
with every beta and O(-1) pairs to -d in degree d, so beta.x = 0 and
beta.z = -d for d = 0, 1, 2.

``generic`` sweeps every integer beta with entries in [-bound, bound],
optionally restricted to ample classes (min beta.x >= max beta.z), and
optionally thinned to ``limit`` evenly spaced classes.
"""
import configparser
import io
import json
from abc import ABC, abstractmethod
from itertools import product
from typing import Any, List, Optional, Tuple

from pydantic import BaseModel

from quiverdual.architecture.catalogue import Catalogue
from quiverdual.determinantal.exceptions import (
    ScenarioParameterError,
    UnknownScenario,
)
from quiverdual.determinantal.numerology import BaseKind, DetConfig
from quiverdual.localization.models import BetaClass, ModelShape


class Scenario(BaseModel):
    name: str
    shape: ModelShape
    betas: Tuple[BetaClass, ...]
    determinantal: Optional[DetConfig] = None

    model_config = {"frozen": True, "extra": "forbid"}

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2, sort_keys=True)

    def to_ini(self) -> str:
        """The scenario as a run configuration in the CLI's INI format."""
        parser = configparser.ConfigParser()
        parser["shapes"] = {"shapes": "{},{},{}".format(*self.shape.as_tuple())}
        parser["betas"] = {
            "beta_source": "gn_3fold" if self.name == "gn_3fold" else "sweep",
            "beta_count": str(len(self.betas)),
        }
        ample = {beta.ample_flag for beta in self.betas}
        if len(ample) == 1:
            parser["betas"]["ample"] = str(ample.pop()).lower()
        buffer = io.StringIO()
        parser.write(buffer)
        return buffer.getvalue()


def admissible_betas(
    shape: ModelShape, bound: int = 2, ample: bool = False
) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All (bx, bz) with entries in [-bound, bound], in lexicographic order."""
    if bound < 0:
        raise ValueError(f"Sweep bound must be non-negative, got {bound}")
    entries = range(-bound, bound + 1)
    found = []
    for values in product(entries, repeat=shape.m + shape.n):
        bx, bz = values[: shape.m], values[shape.m :]
        if ample and min(bx) < max(bz):
            continue
        found.append((bx, bz))
    return found


def beta_sweep(
    shape: ModelShape,
    bound: int = 2,
    ample: bool = False,
    limit: Optional[int] = None,
) -> List[BetaClass]:
    """
    Deterministic beta sweep; with ``limit``, evenly spaced members of the
    full sweep are kept, always starting with the first.
    """
    candidates = admissible_betas(shape, bound, ample)
    if limit is not None:
        if limit < 1:
            raise ValueError(f"Sweep limit must be positive, got {limit}")
        if limit < len(candidates):
            candidates = [
                candidates[i * len(candidates) // limit] for i in range(limit)
            ]
    return [BetaClass(bx=bx, bz=bz, ample_flag=ample) for bx, bz in candidates]


class ScenarioPreset(ABC):
    @abstractmethod
    def build(self, **params: Any) -> Scenario:
        pass


scenario_catalogue = Catalogue(item_type=ScenarioPreset)


@scenario_catalogue.register_decorator("gn_3fold")
class GulliksenNegardPreset(ScenarioPreset):
    max_degree = 2

    def build(self, **params: Any) -> Scenario:
        if params:
            raise ScenarioParameterError(
                f"gn_3fold takes no parameters, got {sorted(params)}"
            )
        m = n = 4
        betas = tuple(
            BetaClass(bx=(0,) * m, bz=(-d,) * n, ample_flag=True)
            for d in range(self.max_degree + 1)
        )
        return Scenario(
            name="gn_3fold",
            shape=ModelShape(m=m, n=n, r=2),
            betas=betas,
            determinantal=DetConfig(
                m=m, n=n, s=2, base_kind=BaseKind.PROJ, base_dim=7
            ),
        )


@scenario_catalogue.register_decorator("generic")
class GenericPreset(ScenarioPreset):
    def build(
        self,
        m: int = 3,
        n: int = 1,
        r: int = 1,
        bound: int = 2,
        ample: bool = False,
        limit: Optional[int] = None,
        **params: Any,
    ) -> Scenario:
        if params:
            raise ScenarioParameterError(
                f"Unexpected generic parameters {sorted(params)}"
            )
        shape = ModelShape(m=m, n=n, r=r)
        return Scenario(
            name="generic",
            shape=shape,
            betas=tuple(beta_sweep(shape, bound=bound, ample=ample, limit=limit)),
        )


def scenario_preset(name: str, **params: Any) -> Scenario:
    """
    Builds a registered scenario.

    Raises:
        UnknownScenario: If no preset is registered under ``name``.
    """
    if name not in scenario_catalogue.list_items():
        raise UnknownScenario(
            f"No scenario {name!r}; known: {', '.join(scenario_catalogue.list_items())}"
        )
    return scenario_catalogue.get(name)().build(**params)

