from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class QuarterWeight:
    """
    An exact weight value/4; every weight in the star-block ledger lives in (1/4)Z
    """

    value: int

    @classmethod
    def from_halves(cls, halves: int) -> QuarterWeight:
        return cls(2 * halves)

    @classmethod
    def from_int(cls, whole: int) -> QuarterWeight:
        return cls(4 * whole)

    @classmethod
    def floor(cls, exact: Fraction) -> QuarterWeight:
        """
        :return: The largest quarter-unit value not exceeding exact
        """
        q = exact * 4
        return cls(q.numerator // q.denominator)

    def fraction(self) -> Fraction:
        return Fraction(self.value, 4)

    def __add__(self, other: QuarterWeight) -> QuarterWeight:
        return QuarterWeight(self.value + other.value)

    def __sub__(self, other: QuarterWeight) -> QuarterWeight:
        return QuarterWeight(self.value - other.value)

    def __lt__(self, other: QuarterWeight) -> bool:
        return self.value < other.value

    def __str__(self) -> str:
        """
        Exact rational form, e.g. "61/4" or "25"
        """
        return str(self.fraction())


ZERO = QuarterWeight(0)
