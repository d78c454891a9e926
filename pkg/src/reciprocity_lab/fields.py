"""Exact ground fields: the rationals and prime fields F_p.

A field descriptor owns the raw representation of its elements
(`fractions.Fraction` for Q, canonical ints in 0..p-1 for F_p) and performs
all arithmetic on raw values.  `FieldScalar` is the tagged wrapper used at
API boundaries; arithmetic between scalars of different descriptors is a
hard error, the only implicit conversion anywhere is int literals into the
ambient field.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, MixedFieldError, ParseError, ZeroInputError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common helpers shared by the concrete field descriptors."""

    char: int
    descriptor: str

    def scalar(self, value) -> "FieldScalar":
        return FieldScalar(self, self.coerce(value))

    def zero_scalar(self) -> "FieldScalar":
        return FieldScalar(self, self.zero)

    def one_scalar(self) -> "FieldScalar":
        return FieldScalar(self, self.one)

    def sign(self, exponent: int):
        """Raw value of (-1)**exponent in this field."""
        return self.one if exponent % 2 == 0 else self.neg(self.one)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def __repr__(self):
        return self.descriptor


class RationalField(Field):
    """The field Q with `Fraction` raw values."""

    char = 0
    descriptor = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise MixedFieldError(f"cannot coerce {value!r} into Q")

    def from_int(self, n: int):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroInputError("division by zero in Q")
        return 1 / a

    def pow(self, a, n: int):
        if n < 0 and a == 0:
            raise ZeroInputError("division by zero in Q")
        return a ** n

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return a == b

    def sort_key(self, a):
        return (a.numerator, a.denominator)

    def render(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """The field F_p, raw values are canonical representatives 0..p-1."""

    char: int

    def __init__(self, p: int):
        if not _is_prime(p):
            raise DomainError(f"modulus {p} is not prime")
        self.p = p
        self.char = p
        self.descriptor = f"Fp:{p}"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        raise MixedFieldError(f"cannot coerce {value!r} into {self.descriptor}")

    def from_int(self, n: int):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroInputError(f"division by zero in {self.descriptor}")
        return pow(a, -1, self.p)

    def pow(self, a, n: int):
        if n < 0 and a % self.p == 0:
            raise ZeroInputError(f"division by zero in {self.descriptor}")
        return pow(a, n, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def eq(self, a, b) -> bool:
        return (a - b) % self.p == 0

    def sort_key(self, a):
        return a % self.p

    def render(self, a) -> str:
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()


def field_from_descriptor(text: str) -> Field:
    """Parse a field descriptor: "Q" or "Fp:<prime>"."""
    text = text.strip()
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ParseError(f"bad prime in field descriptor {text!r}") from None
        return PrimeField(p)
    raise ParseError(f"unknown field descriptor {text!r}")


def ensure_same_field(a: Field, b: Field):
    if a != b:
        raise MixedFieldError(f"mixed fields: {a.descriptor} vs {b.descriptor}")


class FieldScalar:
    """An exact element of Q or F_p tagged with its field descriptor."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        self.field = field
        self.raw = raw

    def _check(self, other) -> "FieldScalar":
        if isinstance(other, FieldScalar):
            ensure_same_field(self.field, other.field)
            return other
        if isinstance(other, int):
            return FieldScalar(self.field, self.field.from_int(other))
        raise MixedFieldError(f"cannot combine scalar with {other!r}")

    def __add__(self, other):
        other = self._check(other)
        return FieldScalar(self.field, self.field.add(self.raw, other.raw))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return FieldScalar(self.field, self.field.sub(self.raw, other.raw))

    def __rsub__(self, other):
        other = self._check(other)
        return FieldScalar(self.field, self.field.sub(other.raw, self.raw))

    def __mul__(self, other):
        other = self._check(other)
        return FieldScalar(self.field, self.field.mul(self.raw, other.raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return FieldScalar(self.field, self.field.div(self.raw, other.raw))

    def __rtruediv__(self, other):
        other = self._check(other)
        return FieldScalar(self.field, self.field.div(other.raw, self.raw))

    def __pow__(self, n: int):
        return FieldScalar(self.field, self.field.pow(self.raw, n))

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.raw))

    def inverse(self) -> "FieldScalar":
        return FieldScalar(self.field, self.field.inv(self.raw))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.raw)

    def is_one(self) -> bool:
        return self.field.eq(self.raw, self.field.one)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.field.eq(self.raw, self.field.from_int(other))
        if not isinstance(other, FieldScalar):
            return NotImplemented
        return self.field == other.field and self.field.eq(self.raw, other.raw)

    def __hash__(self):
        return hash((self.field, self.raw))

    def __str__(self):
        return self.field.render(self.raw)

    def __repr__(self):
        return f"FieldScalar({self.field.descriptor}, {self})"
