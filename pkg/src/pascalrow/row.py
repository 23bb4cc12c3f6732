"""Row record shared by the generator and the oracles."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .bignat import BigNat


class Method(enum.Enum):
    """How a row was produced."""

    POWER_PARTITION = "power_partition"
    MULTIPLICATIVE = "multiplicative"
    RECURRENCE = "recurrence"


@dataclass(frozen=True)
class Row:
    """Coefficients C(n, 0) .. C(n, n) of one row, in natural order.

    ``n`` is the exponent convention: ``row 9`` is the ten coefficients of
    (x + y)**9. The method tag records provenance and is excluded from
    equality so rows from different generators compare by value.
    """

    n: int
    coefficients: tuple[BigNat, ...]
    method: Method = field(compare=False)

    def __post_init__(self):
        if len(self.coefficients) != self.n + 1:
            raise ValueError(
                f"row {self.n} needs {self.n + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )
