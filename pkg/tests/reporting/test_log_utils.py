import logging

import pytest

from quiverdual.reporting.exceptions import OptionalDependencyNotInstalled
from quiverdual.reporting.log_utils import warn_and_log


class DemoWarning(UserWarning):
    pass


def test_warn_and_log(caplog):
    with caplog.at_level(logging.WARNING):
        with pytest.warns(DemoWarning, match="cycle dropped"):
            warn_and_log("cycle dropped", DemoWarning)
    assert "cycle dropped" in caplog.text


def test_optional_dependency_message():
    error = OptionalDependencyNotInstalled("sympy", "symbolic")
    assert isinstance(error, ImportError)
    assert "pip install quiverdual[symbolic]" in str(error)
    assert OptionalDependencyNotInstalled("sympy").extra_name is None
