"""Exact score values stored as integer multiples of 1/12."""
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

DENOMINATOR = 12


@total_ordering
@dataclass(frozen=True)
class Rational12:
    numerator: int = 0

    @classmethod
    def of(cls, value) -> "Rational12":
        """Build from an int, a Fraction or a "p/q" string; q must divide 12."""
        if isinstance(value, Rational12):
            return value
        fraction = Fraction(value)
        scaled = fraction * DENOMINATOR
        if scaled.denominator != 1:
            raise ValueError(f"{value} is not a multiple of 1/12")
        return cls(int(scaled))

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, DENOMINATOR)

    def _coerce(self, other):
        if isinstance(other, Rational12):
            return other
        if isinstance(other, (int, Fraction)):
            return Rational12.of(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Rational12(self.numerator + other.numerator)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Rational12(self.numerator - other.numerator)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Rational12(other.numerator - self.numerator)

    def __neg__(self):
        return Rational12(-self.numerator)

    def __mul__(self, factor):
        if not isinstance(factor, int):
            return NotImplemented
        return Rational12(self.numerator * factor)

    __rmul__ = __mul__

    def half(self) -> "Rational12":
        """Exact half; the numerator must be even."""
        if self.numerator % 2:
            raise ValueError(f"{self} has no exact half in twelfths")
        return Rational12(self.numerator // 2)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.numerator == other.numerator

    def __hash__(self):
        return hash(self.numerator)

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.numerator < other.numerator

    def __str__(self):
        f = self.fraction
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    def to_json(self) -> str:
        return str(self)


ZERO = Rational12(0)


def r12(value) -> Rational12:
    return Rational12.of(value)
