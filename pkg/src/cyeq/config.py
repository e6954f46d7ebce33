"""Run-time knobs shared by the CLI and the scripts."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class AnalysisConfig:
    order: int = 30               # truncation order for series
    n0: str | int = "one"         # "one", "auto" or a fixed integer
    weight: int | None = None     # Lambert weight; None picks 3 for order 4 and 2 above
    rescale: tuple[Fraction, int] | None = None  # (c, m): K((c q)^(1/m))
    root_limit: int = 10**5       # largest exponent tried in root-integrality tests
    head: int = 8                 # coefficients printed per series

    def weight_for(self, order: int) -> int:
        if self.weight is not None:
            return self.weight
        return 3 if order <= 4 else 2


@dataclass(frozen=True)
class FitConfig:
    order: int = 4
    max_zdeg: int = 12
    extra: int = 12


@dataclass(frozen=True)
class CheckConfig:
    terms: int = 40               # annihilation and congruence windows
    beukers_order: int = 50
    zeta_digits: int = 120
