from quiverdual.duality.assembly import assemble, change_of_variables, series_offset
from quiverdual.duality.kernels import (
    Kernel,
    integer_binomial,
    kernel_psi,
    kernel_series,
)
from quiverdual.duality.models import Case, KernelKind, case_for
from quiverdual.duality.series import PerBetaSeries
from quiverdual.duality.verification import (
    ampleness_discrepancies,
    verify_proposition,
    verify_theorem,
)

__all__ = [
    "Case",
    "Kernel",
    "KernelKind",
    "PerBetaSeries",
    "ampleness_discrepancies",
    "assemble",
    "case_for",
    "change_of_variables",
    "integer_binomial",
    "kernel_psi",
    "kernel_series",
    "series_offset",
    "verify_proposition",
    "verify_theorem",
]
