"""Truncated Laurent expansions of rational functions at places.

At a finite place x = (pi) the local parameter is w = t - T, where T is the
class of t in the residue field L = k[T]/(pi).  Numerator and denominator
are rewritten around T with a characteristic-safe Taylor shift and then
divided as power series over L.  At infinity the parameter is u = 1/t and
the expansion comes from coefficient reversal.  Every series carries its
precision and refuses to report coefficients it does not know.
"""
from __future__ import annotations

from .errors import MixedFieldError, PrecisionError, ZeroInputError
from .fields import Field
from .funcfield import Place, RationalFunction
from .poly import Polynomial
from .residue_field import ResidueField, ResidueFieldElem


class ResidueCoefficientField(Field):
    """A residue field used as a coefficient field for polynomials over it."""

    def __init__(self, ring: ResidueField):
        self.ring = ring
        self.char = ring.base.char
        self.descriptor = f"{ring.base.descriptor}[T]/({ring.modulus})"
        self.zero = ring.zero
        self.one = ring.one

    def coerce(self, value):
        if isinstance(value, tuple) and len(value) == self.ring.degree:
            return value
        if isinstance(value, int):
            return self.ring.from_int(value)
        if isinstance(value, ResidueFieldElem) and value.parent == self.ring:
            return value.raw
        raise MixedFieldError(f"cannot coerce {value!r} into {self.descriptor}")

    def from_int(self, n: int):
        return self.ring.from_int(n)

    def add(self, a, b):
        return self.ring.add(a, b)

    def sub(self, a, b):
        return self.ring.sub(a, b)

    def mul(self, a, b):
        return self.ring.mul(a, b)

    def neg(self, a):
        return self.ring.neg(a)

    def inv(self, a):
        return self.ring.inv(a)

    def pow(self, a, n: int):
        return self.ring.pow(a, n)

    def is_zero(self, a) -> bool:
        return self.ring.is_zero(a)

    def eq(self, a, b) -> bool:
        return self.ring.eq(a, b)

    def sort_key(self, a):
        base = self.ring.base
        return tuple(base.sort_key(c) for c in a)

    def render(self, a) -> str:
        return self.ring.render(a)

    def __eq__(self, other):
        return (isinstance(other, ResidueCoefficientField)
                and self.ring == other.ring)

    def __hash__(self):
        return hash(("residue-coefficients", self.ring))


class LaurentSeries:
    """Finitely many known coefficients of a Laurent series over a residue field.

    Exponents below `vmin` are known to vanish, exponents in
    [vmin, prec) are stored, and exponents >= prec are unknown.
    """

    __slots__ = ("ring", "param", "vmin", "coeffs", "prec")

    def __init__(self, ring: ResidueField, param: str, vmin: int, coeffs, prec: int):
        coeffs = tuple(coeffs)
        if len(coeffs) != prec - vmin:
            raise ZeroInputError("series length does not match its precision window")
        while coeffs and ring.is_zero(coeffs[0]):
            coeffs = coeffs[1:]
            vmin += 1
        self.ring = ring
        self.param = param
        self.vmin = vmin
        self.coeffs = coeffs
        self.prec = prec

    @classmethod
    def zero_to_precision(cls, ring: ResidueField, param: str, prec: int) -> "LaurentSeries":
        return cls(ring, param, prec, (), prec)

    def is_known_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int | None:
        """Exponent of the first known nonzero term, None if none is known."""
        return None if self.is_known_zero() else self.vmin

    def coefficient(self, n: int):
        if n >= self.prec:
            raise PrecisionError(
                f"coefficient of {self.param}^{n} lies beyond O({self.param}^{self.prec})")
        if n < self.vmin:
            return self.ring.zero
        return self.coeffs[n - self.vmin]

    def elem(self, n: int) -> ResidueFieldElem:
        return ResidueFieldElem(self.ring, self.coefficient(n))

    def residue_coeff(self) -> ResidueFieldElem:
        return self.elem(-1)

    def leading(self) -> tuple[int, ResidueFieldElem]:
        if self.is_known_zero():
            raise ZeroInputError("no nonzero term within the known precision")
        return self.vmin, ResidueFieldElem(self.ring, self.coeffs[0])

    def _compat(self, other: "LaurentSeries"):
        if not isinstance(other, LaurentSeries):
            raise MixedFieldError(f"cannot combine series with {other!r}")
        if self.ring != other.ring or self.param != other.param:
            raise MixedFieldError("series live in different local fields")

    def __add__(self, other):
        self._compat(other)
        prec = min(self.prec, other.prec)
        vmin = min(self.vmin, other.vmin, prec)
        ring = self.ring
        out = [ring.add(self.coefficient(n) if n < self.prec else ring.zero,
                        other.coefficient(n) if n < other.prec else ring.zero)
               for n in range(vmin, prec)]
        return LaurentSeries(ring, self.param, vmin, out, prec)

    def __neg__(self):
        ring = self.ring
        return LaurentSeries(ring, self.param, self.vmin,
                             tuple(ring.neg(c) for c in self.coeffs), self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._compat(other)
        ring = self.ring
        prec = min(self.prec + other.vmin, other.prec + self.vmin)
        vmin = self.vmin + other.vmin
        if self.is_known_zero() or other.is_known_zero():
            return LaurentSeries.zero_to_precision(ring, self.param, prec)
        out = [ring.zero] * (prec - vmin)
        for i, a in enumerate(self.coeffs):
            if ring.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= len(out):
                    break
                out[i + j] = ring.add(out[i + j], ring.mul(a, b))
        return LaurentSeries(ring, self.param, vmin, out, prec)

    def scale(self, raw) -> "LaurentSeries":
        ring = self.ring
        return LaurentSeries(ring, self.param, self.vmin,
                             tuple(ring.mul(raw, c) for c in self.coeffs), self.prec)

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Equality of all coefficients both sides know."""
        self._compat(other)
        prec = min(self.prec, other.prec)
        ring = self.ring
        return all(ring.eq(self.coefficient(n), other.coefficient(n))
                   for n in range(min(self.vmin, other.vmin), prec))

    def __str__(self):
        ring = self.ring
        parts = []
        for n in range(self.vmin, self.prec):
            c = self.coefficient(n)
            if ring.is_zero(c):
                continue
            body = ring.render(c)
            if "+" in body or "-" in body[1:] or "*" in body:
                body = f"({body})"
            if n == 0:
                parts.append(body)
            else:
                parts.append(f"{body}*{self.param}^{n}")
        head = " + ".join(parts) if parts else "0"
        return f"{head} + O({self.param}^{self.prec})"

    def __repr__(self):
        return f"LaurentSeries({self})"


def _series_quotient(ring: ResidueField, num, den, terms: int):
    """First `terms` coefficients of num/den over the ring; den[0] must be a unit."""
    inv0 = ring.inv(den[0])
    out = []
    for k in range(terms):
        acc = num[k] if k < len(num) else ring.zero
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = ring.sub(acc, ring.mul(den[j], out[k - j]))
        out.append(ring.mul(inv0, acc))
    return out


def expand(f: RationalFunction, place: Place, upto: int) -> LaurentSeries:
    """Laurent expansion of f at the place, exact through the exponent `upto`.

    The local parameter is t - T at a finite place and 1/t at infinity.
    """
    if place.field != f.field or place.var != f.var:
        raise MixedFieldError("place belongs to a different function field")
    ring = place.residue_field()
    param = "u" if place.is_infinity else "w"
    prec = upto + 1
    if f.is_zero():
        return LaurentSeries.zero_to_precision(ring, param, prec)
    if place.is_infinity:
        num = [ring.from_base(c) for c in f.num.reverse().coeffs]
        den = [ring.from_base(c) for c in f.den.reverse().coeffs]
        a = 0
        b = 0
        v_extra = f.den.degree - f.num.degree
    else:
        coeffs = ResidueCoefficientField(ring)
        tau = ring.from_coeffs((ring.base.zero, ring.base.one))
        num_poly = Polynomial(coeffs, [ring.from_base(c) for c in f.num.coeffs],
                              f.var).taylor_shift(tau)
        den_poly = Polynomial(coeffs, [ring.from_base(c) for c in f.den.coeffs],
                              f.var).taylor_shift(tau)
        num = list(num_poly.coeffs)
        den = list(den_poly.coeffs)
        a = next(i for i, c in enumerate(num) if not ring.is_zero(c))
        b = next(i for i, c in enumerate(den) if not ring.is_zero(c))
        v_extra = 0
    vmin = a - b + v_extra
    terms = prec - vmin
    if terms <= 0:
        return LaurentSeries.zero_to_precision(ring, param, prec)
    out = _series_quotient(ring, num[a:], den[b:], terms)
    return LaurentSeries(ring, param, vmin, out, prec)
