"""Exact su(2) Clebsch-Gordan coefficients and Wigner-Eckart assembly.

Coefficients follow the Condon-Shortley phase convention and are computed
from Racah's single-sum formula over exact integers, so coupling chains and
orthogonality sums can be checked with zero tolerance.  Labels are doubled
integers (two_j = 2j).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import LabelError
from .exactnum import SqrtSum


@dataclass(frozen=True)
class CGArg:
    """Labels of <j1 m1, j2 m2 | J M>, all as doubled integers."""

    two_j1: int
    two_m1: int
    two_j2: int
    two_m2: int
    two_J: int
    two_M: int

    def validate(self) -> None:
        for two_j, two_m in ((self.two_j1, self.two_m1),
                             (self.two_j2, self.two_m2),
                             (self.two_J, self.two_M)):
            if two_j < 0:
                raise LabelError("angular momentum must be nonnegative")
            if (two_j - two_m) % 2:
                raise LabelError(f"projection {two_m}/2 unpaired with j = {two_j}/2")
        if (self.two_j1 + self.two_j2 + self.two_J) % 2:
            raise LabelError("j1 + j2 + J must be an integer")


@lru_cache(maxsize=None)
def cg_exact(two_j1: int, two_m1: int, two_j2: int, two_m2: int,
             two_J: int, two_M: int) -> SqrtSum:
    """Exact <j1 m1, j2 m2 | J M>; selection-rule violations give 0."""
    CGArg(two_j1, two_m1, two_j2, two_m2, two_J, two_M).validate()
    if two_M != two_m1 + two_m2:
        return SqrtSum()
    if not abs(two_j1 - two_j2) <= two_J <= two_j1 + two_j2:
        return SqrtSum()
    if abs(two_m1) > two_j1 or abs(two_m2) > two_j2 or abs(two_M) > two_J:
        return SqrtSum()

    def h(x: int) -> int:  # doubled integer -> plain integer
        assert x % 2 == 0
        return x // 2

    a = h(two_j1 + two_j2 - two_J)
    b = h(two_j1 - two_j2 + two_J)
    c = h(-two_j1 + two_j2 + two_J)
    radicand = Fraction((two_J + 1)
                        * factorial(a) * factorial(b) * factorial(c),
                        factorial(h(two_j1 + two_j2 + two_J) + 1))
    radicand *= (factorial(h(two_J + two_M)) * factorial(h(two_J - two_M))
                 * factorial(h(two_j1 + two_m1)) * factorial(h(two_j1 - two_m1))
                 * factorial(h(two_j2 + two_m2)) * factorial(h(two_j2 - two_m2)))

    k_min = max(0, h(two_j2 - two_J - two_m1), h(two_j1 + two_m2 - two_J))
    k_max = min(a, h(two_j1 - two_m1), h(two_j2 + two_m2))
    total = Fraction(0)
    for k in range(k_min, k_max + 1):
        den = (factorial(k) * factorial(a - k)
               * factorial(h(two_j1 - two_m1) - k)
               * factorial(h(two_j2 + two_m2) - k)
               * factorial(h(two_J - two_j2 + two_m1) + k)
               * factorial(h(two_J - two_j1 - two_m2) + k))
        total += Fraction(-1 if k % 2 else 1, den)
    return total * SqrtSum.sqrt_of(radicand)


def clebsch_gordan(arg: CGArg) -> float:
    """Condon-Shortley <j1 m1, j2 m2 | J M> as a float."""
    return float(cg_exact(arg.two_j1, arg.two_m1, arg.two_j2, arg.two_m2,
                          arg.two_J, arg.two_M))


def cg(two_j1: int, two_m1: int, two_j2: int, two_m2: int,
       two_J: int, two_M: int) -> float:
    """Shorthand for clebsch_gordan on doubled-integer labels."""
    return float(cg_exact(two_j1, two_m1, two_j2, two_m2, two_J, two_M))


def wigner_eckart(reduced: complex, cg_m: float, cg_mp: float) -> complex:
    """Assemble one su(2) + su(2) matrix element: reduced * CG * CG."""
    return reduced * cg_m * cg_mp
