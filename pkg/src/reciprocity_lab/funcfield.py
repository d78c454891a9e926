"""Rational function fields k(t) and their places.

A place of the projective line over k is either a monic irreducible
polynomial pi (residue field k[T]/(pi), degree = deg pi) or the point at
infinity (residue field k, degree 1).  `RationalFunction` keeps the
canonical form num/den with den monic and gcd(num, den) = 1, and provides
valuations, evaluation into residue fields, divisor support, and the
derivative needed for residues of f dg.

`FractionField` wraps a rational function field as a coefficient field in
its own right, which is how functions on the surface k(s)(t) are built from
the same machinery.
"""
from __future__ import annotations

from .errors import (DomainError, MixedFieldError, NotAUnitError,
                     UncertifiedFactorError, ZeroInputError)
from .factor import factor_polynomial, is_irreducible
from .fields import Field, FieldScalar, ensure_same_field
from .poly import Polynomial
from .residue_field import ResidueField, ResidueFieldElem


class Place:
    """A closed point of the projective line over the ground field."""

    __slots__ = ("field", "var", "pi", "_residue_field")

    def __init__(self, field: Field, var: str, pi: Polynomial | None):
        self.field = field
        self.var = var
        self.pi = pi
        self._residue_field = None

    @classmethod
    def finite(cls, pi: Polynomial, check: bool = True) -> "Place":
        if pi.is_zero() or pi.is_constant():
            raise DomainError("a finite place needs a nonconstant polynomial")
        if not pi.is_monic():
            raise DomainError("a finite place needs a monic polynomial")
        if check and not is_irreducible(pi):
            # a genuine splitting is a caller mistake; an unsettled
            # certificate over Q is a different failure class
            fac = factor_polynomial(pi)
            if len(fac.factors) == 1 and fac.factors[0].multiplicity == 1:
                raise UncertifiedFactorError(
                    f"{pi} is not certified irreducible "
                    f"over {pi.field.descriptor}")
            raise DomainError(f"{pi} is reducible over {pi.field.descriptor}")
        return cls(pi.field, pi.var, pi)

    @classmethod
    def at_infinity(cls, field: Field, var: str = "t") -> "Place":
        return cls(field, var, None)

    @property
    def is_infinity(self) -> bool:
        return self.pi is None

    @property
    def degree(self) -> int:
        return 1 if self.pi is None else self.pi.degree

    def residue_field(self) -> ResidueField:
        if self._residue_field is None:
            if self.pi is None:
                self._residue_field = ResidueField.trivial(self.field)
            else:
                self._residue_field = ResidueField(
                    Polynomial(self.field, self.pi.coeffs, "T"))
        return self._residue_field

    def uniformizer_tag(self) -> str:
        """Human-readable name of the canonical local parameter."""
        if self.pi is None:
            return f"1/{self.var}"
        if self.pi.degree == 1:
            return str(Polynomial.variable(self.field, self.var)
                       - Polynomial.constant(self.field, self.field.neg(self.pi.coeffs[0]), self.var))
        return f"{self.var}-T"

    def sort_key(self):
        if self.pi is None:
            return (1,)
        return (0, self.pi.degree, self.pi.sort_key())

    def __eq__(self, other):
        if not isinstance(other, Place):
            return NotImplemented
        return (self.field == other.field and self.var == other.var
                and self.pi == other.pi)

    def __hash__(self):
        return hash((self.field, self.var, self.pi))

    def __str__(self):
        return "inf" if self.pi is None else str(self.pi)

    def __repr__(self):
        return f"Place({self.field.descriptor}, {self})"


class RationalFunction:
    """An element of k(t) in lowest terms with monic denominator."""

    __slots__ = ("field", "var", "num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero():
            raise ZeroInputError("zero denominator")
        ensure_same_field(num.field, den.field)
        if num.var != den.var:
            raise MixedFieldError(f"mixed variables {num.var}, {den.var}")
        field = num.field
        if num.is_zero():
            self.num = num
            self.den = Polynomial.one(field, num.var)
        else:
            g = num.gcd(den)
            if g.degree and g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            scale = field.inv(den.leading_coefficient())
            self.num = num.scale(scale)
            self.den = den.scale(scale)
        self.field = field
        self.var = num.var

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial.one(p.field, p.var))

    @classmethod
    def constant(cls, field: Field, value, var: str = "t") -> "RationalFunction":
        return cls.from_polynomial(Polynomial.constant(field, value, var))

    @classmethod
    def variable(cls, field: Field, var: str = "t") -> "RationalFunction":
        return cls.from_polynomial(Polynomial.variable(field, var))

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise DomainError("not a constant")
        return self.num.coefficient(0)

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            ensure_same_field(self.field, other.field)
            if self.var != other.var:
                raise MixedFieldError(f"mixed variables {self.var}, {other.var}")
            return other
        if isinstance(other, Polynomial):
            return RationalFunction.from_polynomial(other)
        if isinstance(other, int):
            return RationalFunction.constant(self.field, other, self.var)
        raise MixedFieldError(f"cannot combine rational function with {other!r}")

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroInputError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            if self.is_zero():
                raise ZeroInputError("negative power of zero")
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num ** n, self.den ** n)

    def inverse(self) -> "RationalFunction":
        return self ** (-1)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (MixedFieldError, ZeroInputError):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def sort_key(self):
        return (self.num.sort_key(), self.den.sort_key())

    def __str__(self):
        num = str(self.num)
        if self.den == Polynomial.one(self.field, self.var):
            return num
        return f"({num})/({str(self.den)})"

    def __repr__(self):
        return f"RationalFunction({self.field.descriptor}, {self})"

    # -- places ---------------------------------------------------------------

    def _check_place(self, place: Place):
        if place.field != self.field or place.var != self.var:
            raise MixedFieldError("place belongs to a different function field")

    def valuation(self, place: Place) -> int:
        """Order of vanishing at the place; errors on the zero function."""
        self._check_place(place)
        if self.is_zero():
            raise ZeroInputError("the zero function has no valuation")
        if place.is_infinity:
            return self.den.degree - self.num.degree
        count_num, _ = _strip_power(self.num, place.pi)
        if count_num:
            return count_num
        count_den, _ = _strip_power(self.den, place.pi)
        return -count_den

    def unit_value(self, place: Place):
        """Raw residue-field value of the unit part f * z**(-v) at the place."""
        self._check_place(place)
        if self.is_zero():
            raise ZeroInputError("the zero function has no unit part")
        L = place.residue_field()
        if place.is_infinity:
            value = self.field.div(self.num.leading_coefficient(),
                                   self.den.leading_coefficient())
            return L.from_base(value)
        _, num = _strip_power(self.num, place.pi)
        _, den = _strip_power(self.den, place.pi)
        return L.div(L.from_polynomial(num), L.from_polynomial(den))

    def evaluate(self, place: Place) -> ResidueFieldElem:
        """The class of f in the residue field; f must be a unit at the place."""
        if self.is_zero():
            raise ZeroInputError("cannot evaluate the zero function as a unit")
        if self.valuation(place) != 0:
            raise NotAUnitError(f"function has a zero or pole at {place}")
        return ResidueFieldElem(place.residue_field(), self.unit_value(place))

    def support(self, seed: int | None = None) -> list[tuple[Place, int]]:
        """The divisor of f: all places with nonzero valuation, canonical order.

        Requires a fully certified factorization of numerator and denominator;
        over Q an unresolved degree >= 4 cofactor raises.
        """
        if self.is_zero():
            raise ZeroInputError("the zero function has no divisor")
        entries: list[tuple[Place, int]] = []
        for poly, sign in ((self.num, 1), (self.den, -1)):
            if poly.is_constant():
                continue
            fac = factor_polynomial(poly, seed)
            for item in fac.factors:
                if not item.certified:
                    raise UncertifiedFactorError(
                        f"uncertified irreducible factor {item.base} of {poly}")
                entries.append((Place.finite(item.base, check=False),
                                sign * item.multiplicity))
        v_inf = self.den.degree - self.num.degree
        if v_inf != 0:
            entries.append((Place.at_infinity(self.field, self.var), v_inf))
        entries.sort(key=lambda pair: pair[0].sort_key())
        return entries


def _strip_power(p: Polynomial, pi: Polynomial) -> tuple[int, Polynomial]:
    """Largest k with pi**k | p, together with the cofactor p / pi**k."""
    count = 0
    while True:
        q, r = p.divmod(pi)
        if not r.is_zero():
            return count, p
        count += 1
        p = q


def support_union(*functions: RationalFunction,
                  seed: int | None = None,
                  include_infinity: bool = False) -> list[Place]:
    """Sorted union of the supports of several functions."""
    places: dict = {}
    field = functions[0].field
    var = functions[0].var
    for f in functions:
        for place, _ in f.support(seed):
            places[place] = True
    if include_infinity:
        places[Place.at_infinity(field, var)] = True
    return sorted(places, key=lambda x: x.sort_key())


class FractionField(Field):
    """k(x) viewed as a coefficient field; raw elements are RationalFunction."""

    def __init__(self, base: Field, var: str):
        self.base = base
        self.var = var
        self.char = base.char
        self.descriptor = f"{base.descriptor}({var})"
        self.zero = RationalFunction.constant(base, 0, var)
        self.one = RationalFunction.constant(base, 1, var)

    def coerce(self, value):
        if isinstance(value, RationalFunction):
            ensure_same_field(value.field, self.base)
            if value.var != self.var:
                raise MixedFieldError(f"expected functions of {self.var}")
            return value
        if isinstance(value, Polynomial):
            return RationalFunction.from_polynomial(value)
        if isinstance(value, int):
            return RationalFunction.constant(self.base, value, self.var)
        raise MixedFieldError(f"cannot coerce {value!r} into {self.descriptor}")

    def from_int(self, n: int):
        return RationalFunction.constant(self.base, n, self.var)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a.is_zero():
            raise ZeroInputError(f"division by zero in {self.descriptor}")
        return a.inverse()

    def pow(self, a, n: int):
        return a ** n

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def eq(self, a, b) -> bool:
        return a == b

    def sort_key(self, a):
        return a.sort_key()

    def render(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return (isinstance(other, FractionField) and self.base == other.base
                and self.var == other.var)

    def __hash__(self):
        return hash(("fraction", self.base, self.var))
