"""Coincidence patterns defining the vanishing ideals.

An IdealSpec names which variable coincidence a substitution targets:
two double diagonals (plain, multiplicative t-shift, or additive 1/2
shift), or a single p-fold diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import BadPattern


@dataclass(frozen=True)
class IdealSpec:
    kind: str  # "double" | "double_t" | "double_shift" | "pfold"
    n: int
    t0: Optional[Fraction] = None
    shift: Optional[Fraction] = None
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind in ("double", "double_t", "double_shift"):
            if self.n < 4:
                raise BadPattern("double-diagonal patterns need n >= 4")
            if self.kind == "double_t" and self.t0 in (None, 0, 1, -1):
                raise BadPattern("double_t needs t0 not in {0, 1, -1}")
            if self.kind == "double_shift" and self.shift is None:
                raise BadPattern("double_shift needs a shift value")
        elif self.kind == "pfold":
            if self.p is None or not 2 <= self.p <= self.n:
                raise BadPattern("pfold needs 2 <= p <= n")
        else:
            raise BadPattern(f"unknown pattern kind {self.kind!r}")


def double_diagonal(n: int) -> IdealSpec:
    return IdealSpec("double", n)


def double_t_diagonal(n: int, t0) -> IdealSpec:
    return IdealSpec("double_t", n, t0=Fraction(t0))


def double_shift(n: int, shift=Fraction(1, 2)) -> IdealSpec:
    return IdealSpec("double_shift", n, shift=Fraction(shift))


def pfold(n: int, p: int) -> IdealSpec:
    return IdealSpec("pfold", n, p=p)
