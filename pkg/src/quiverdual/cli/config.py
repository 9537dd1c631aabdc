"""
Run configuration.

A run is described by a `RunConfig`. Values come, in increasing
precedence, from the model defaults, an INI file, the ``QD_SEED``
environment variable (seed only) and command-line flags.

The INI file groups flat ``key = value`` pairs into the sections
``[run]``, ``[sampling]``, ``[shapes]`` and ``[betas]``; section names only
organise the file, every key is a `RunConfig` field::

    [run]
    suite = propositions
    output_format = json

    [sampling]
    seed = 7
    points = 50

    [shapes]
    shapes = 3,1,1; 4,2,1

    [betas]
    beta_source = sweep
    beta_count = 5
    ample = true
"""
import configparser
import logging
import os
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ValidationError, field_validator, model_validator

from quiverdual.cli.exceptions import ConfigError
from quiverdual.localization.models import ModelShape

logger = logging.getLogger(__name__)

SECTIONS = ("run", "sampling", "shapes", "betas")
SEED_VARIABLE = "QD_SEED"

Triple = Tuple[int, int, int]


class SuiteName(str, Enum):
    LEMMA_FORMS = "lemma_forms"
    PROPOSITIONS = "propositions"
    THEOREMS = "theorems"
    QUIVER = "quiver"
    DETERMINANTAL = "determinantal"
    ALL = "all"


class BetaSource(str, Enum):
    SWEEP = "sweep"
    GN_3FOLD = "gn_3fold"


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


def parse_shapes(text: str) -> Tuple[Triple, ...]:
    """
    >>> parse_shapes("3,1,1; 4,2,1")
    ((3, 1, 1), (4, 2, 1))
    """
    shapes = []
    for chunk in text.replace("\n", ";").split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 3:
            raise ValueError(f"Shapes are m,n,r triples, got {chunk!r}")
        m, n, r = (int(p) for p in parts)
        shapes.append((m, n, r))
    return tuple(shapes)


class RunConfig(BaseModel):
    suite: SuiteName = SuiteName.ALL
    shapes: Tuple[Triple, ...] = ()
    beta_source: BetaSource = BetaSource.SWEEP
    beta_count: int = 5
    beta_bound: int = 2
    ample: Optional[bool] = None
    a_max: int = 3
    order: int = 4
    seed: int = 0
    points: int = 50
    lemma_points: int = 20
    degree_count: int = 10
    degree_bound: int = 3
    all_fixed_points: bool = True
    num_jobs: int = 0
    output_format: OutputFormat = OutputFormat.JSON
    fail_fast: bool = False

    model_config = {"frozen": True, "extra": "forbid"}

    @field_validator("shapes", mode="before")
    def parse_shape_text(cls, v: Any) -> Any:
        if isinstance(v, str):
            return parse_shapes(v)
        return v

    @field_validator("shapes")
    def validate_shapes(cls, v: Tuple[Triple, ...]) -> Tuple[Triple, ...]:
        for m, n, r in v:
            try:
                ModelShape(m=m, n=n, r=r)
            except ValidationError as e:
                raise ValueError(f"Invalid shape ({m},{n},{r}): {e}") from e
        return v

    @field_validator("ample", mode="before")
    def parse_ample(cls, v: Any) -> Any:
        if isinstance(v, str) and v.strip().lower() in ("", "both", "none"):
            return None
        return v

    @field_validator("points", "lemma_points", "beta_count", "degree_count")
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"Must be at least 1, got {v}")
        return v

    @field_validator("a_max", "order", "beta_bound", "degree_bound", "num_jobs")
    def validate_non_negative(cls, v: int) -> int:
        if v < 0:
            raise ValueError(f"Must be non-negative, got {v}")
        return v

    @model_validator(mode="after")
    def validate_theorem_order(self) -> "RunConfig":
        if self.suite in (SuiteName.THEOREMS, SuiteName.ALL) and self.order < 1:
            raise ValueError(f"Theorem suites need order >= 1, got {self.order}")
        return self

    def model_shapes(self) -> Tuple[ModelShape, ...]:
        return tuple(ModelShape(m=m, n=n, r=r) for m, n, r in self.shapes)

    def ample_modes(self) -> Tuple[bool, ...]:
        """Ampleness settings to sweep: the configured one, or both."""
        return (self.ample,) if self.ample is not None else (True, False)


def read_config_file(file_path: Union[Path, str]) -> Dict[str, str]:
    """
    Flattens an INI run configuration into field -> raw string.

    Raises:
        ConfigError: If the file is missing, malformed, uses an unknown
            section or repeats a key across sections.
    """
    file_path = Path(file_path)
    if not file_path.is_file():
        raise ConfigError(f"Config file {file_path} does not exist")
    parser = configparser.ConfigParser()
    try:
        parser.read(file_path)
    except configparser.Error as e:
        raise ConfigError(f"Cannot parse {file_path}: {e}") from e
    values: Dict[str, str] = {}
    for section in parser.sections():
        if section not in SECTIONS:
            raise ConfigError(
                f"Unknown section [{section}] in {file_path}; "
                f"expected one of {', '.join(SECTIONS)}"
            )
        for key, value in parser.items(section):
            if key in values:
                raise ConfigError(f"Key {key!r} appears in more than one section")
            values[key] = value
    return values


def build_config(
    file_path: Optional[Union[Path, str]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """
    Merges defaults, the config file, ``QD_SEED`` and explicit overrides.

    ``None`` overrides are ignored, so unset command-line flags never mask
    file values.

    Raises:
        ConfigError: On any invalid value.
    """
    environ = os.environ if environ is None else environ
    values: Dict[str, Any] = {}
    if file_path is not None:
        values.update(read_config_file(file_path))
    if SEED_VARIABLE in environ:
        values["seed"] = environ[SEED_VARIABLE]
        logger.info("seed taken from %s", SEED_VARIABLE)
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return RunConfig.model_validate(values)
    except ValidationError as e:
        raise ConfigError(f"Invalid run configuration: {e}") from e
