"""Exact coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatchError

MAX_PRIME = 1 << 16


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """A coefficient field, either Q (``characteristic == 0``) or F_p.

    Use :data:`QQ` and :func:`GF` rather than calling this directly.
    """

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0:
            if not _is_prime(characteristic):
                raise ValueError(f"field characteristic must be 0 or prime, got {characteristic}")
            if characteristic >= MAX_PRIME:
                raise ValueError(f"prime fields are supported for p < {MAX_PRIME}, got {characteristic}")
        self.characteristic = characteristic

    def __eq__(self, other):
        return isinstance(other, Field) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    def __reduce__(self):
        return (_field_from_char, (self.characteristic,))

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def _coerce(self, value):
        p = self.characteristic
        if isinstance(value, bool):
            value = int(value)
        if p == 0:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise TypeError(f"cannot interpret {value!r} as a rational number")
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in {self}")
            return value.numerator * pow(value.denominator, -1, p) % p
        raise TypeError(f"cannot interpret {value!r} as an element of {self}")

    def __call__(self, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"scalar of {value.field} used in {self}")
            return value
        return Scalar(self._coerce(value), self)

    def zero(self) -> Scalar:
        return self(0)

    def one(self) -> Scalar:
        return self(1)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    """The prime field with ``p`` elements."""
    return Field(p)


QQ = Field(0)


def _field_from_char(p: int) -> Field:
    return QQ if p == 0 else GF(p)


def parse_field(text: str) -> Field:
    """Parse a field descriptor: ``q``/``Q``, ``f2``, ``F5``, ``fp:7``, ``Fp:7``."""
    t = text.strip().lower()
    if t in ("q", "qq", "rational", "rationals"):
        return QQ
    if t.startswith("fp:"):
        digits = t[3:]
    elif t.startswith("f") and t[1:].isdigit():
        digits = t[1:]
    else:
        raise ValueError(f"unknown field descriptor {text!r}")
    if not digits.isdigit():
        raise ValueError(f"unknown field descriptor {text!r}")
    return GF(int(digits))


class Scalar:
    """An immutable element of a :class:`Field`.

    Rationals are held as :class:`fractions.Fraction` (always reduced,
    positive denominator); prime-field values as ints in ``[0, p)``.
    Python ints coerce into the scalar's own field; scalars from two
    different fields never combine.
    """

    __slots__ = ("value", "field")

    def __init__(self, value, field: Field):
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.value, self.field))

    def _other(self, other) -> Scalar | None:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine scalars of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._make(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._make(self.value - o.value)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._make(self.value * o.value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.value)

    def inverse(self) -> Scalar:
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        p = self.field.characteristic
        if p == 0:
            return Scalar(1 / self.value, self.field)
        return Scalar(pow(self.value, -1, p), self.field)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def _make(self, value) -> Scalar:
        p = self.field.characteristic
        if p:
            value %= p
        return Scalar(value, self.field)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field._coerce(other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.characteristic))

    def is_one(self) -> bool:
        return self.value == 1

    def symmetric(self):
        """The representative of smallest absolute value (ints for F_p, the Fraction for Q)."""
        p = self.field.characteristic
        if p == 0:
            return self.value
        v = self.value
        return v - p if v > p // 2 else v

    def __repr__(self):
        return f"Scalar({self}, {self.field!r})"

    def __str__(self):
        p = self.field.characteristic
        if p == 0:
            return str(self.value)
        return f"{self.value} mod {p}"
