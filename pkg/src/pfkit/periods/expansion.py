from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exact.series import PowerSeries, rational_sqrt
from ..exact.textio import format_rational


@dataclass(frozen=True)
class PeriodExpansion:
    """``period = rational_factor * sqrt(prefactor_square) * pi^pi_power * t^offset * series``.

    ``series`` is normalized to leading coefficient 1 and carries ``offset``.
    """

    prefactor_square: Fraction
    pi_power: Fraction
    rational_factor: Fraction
    series: PowerSeries
    notes: tuple = field(default=())

    @property
    def offset(self) -> Fraction:
        return self.series.offset

    @property
    def prefactor_sqrt(self) -> Fraction | None:
        return rational_sqrt(self.prefactor_square)

    def describe(self) -> list[str]:
        return [
            f"prefactor_square {format_rational(self.prefactor_square)}",
            f"pi_power {format_rational(self.pi_power)}",
            f"rational_factor {format_rational(self.rational_factor)}",
            *self.notes,
        ]
