import pytest

from quiverdual.reporting import exceptions


def test_only_the_optional_dependency_error_remains():
    public = {name for name in vars(exceptions) if not name.startswith("_")}
    assert public - {"Optional"} == {"OptionalDependencyNotInstalled"}


def test_optional_dependency_error_is_an_import_error():
    with pytest.raises(ImportError, match=r"quiverdual\[symbolic\]"):
        raise exceptions.OptionalDependencyNotInstalled("sympy", "symbolic")
