from quiverdual.cli.config import RunConfig, build_config
from quiverdual.cli.suites import run_suites, suite_catalogue

__all__ = ["RunConfig", "build_config", "run_suites", "suite_catalogue"]
