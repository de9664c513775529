"""Mirror-symmetry pipeline at a MUM point: Frobenius basis, q, K(q), n_d."""

from .frobenius import FrobeniusBasis, LogSeries, apply_operator_log, frobenius_solutions, mum_normalized
from .yukawa import (
    InstantonTable,
    IntegralityReport,
    MirrorMap,
    instanton_numbers,
    integrality_report,
    mirror_map,
    mirror_report,
    yukawa,
)

__all__ = [
    "FrobeniusBasis",
    "LogSeries",
    "apply_operator_log",
    "frobenius_solutions",
    "mum_normalized",
    "InstantonTable",
    "IntegralityReport",
    "MirrorMap",
    "instanton_numbers",
    "integrality_report",
    "mirror_map",
    "mirror_report",
    "yukawa",
]
