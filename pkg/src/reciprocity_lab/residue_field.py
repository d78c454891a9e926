"""Residue fields k[T]/(pi) of places, with exact norm and trace down to k.

Raw elements are coefficient tuples of length deg(pi) over the ground
field's raw representation.  The norm of a class is Res(pi, a) (pi monic, so
this is the product of a over the roots of pi), and the trace is the power-sum
pairing tr(T^j) = p_j with the p_j obtained from Newton's identities, which
need no division and therefore work in any characteristic.  Both are
cross-checked in the test suite against the multiplication-matrix oracle.
"""
from __future__ import annotations

from .errors import ZeroInputError
from .fields import Field, FieldScalar
from .poly import Polynomial


class ResidueField:
    """k[T]/(pi) for a monic irreducible pi over the ground field."""

    __slots__ = ("base", "modulus", "degree", "_power_sums", "_monomial_table")

    def __init__(self, modulus: Polynomial):
        if not modulus.is_monic() or modulus.degree < 1:
            raise ZeroInputError("residue field modulus must be monic of degree >= 1")
        self.base = modulus.field
        self.modulus = modulus
        self.degree = modulus.degree
        self._power_sums = None
        self._monomial_table = None

    @classmethod
    def trivial(cls, base: Field) -> "ResidueField":
        """k itself, presented as k[T]/(T); used for the place at infinity."""
        return cls(Polynomial.variable(base, "T"))

    # -- raw tuple arithmetic ------------------------------------------------

    @property
    def zero(self):
        return (self.base.zero,) * self.degree

    @property
    def one(self):
        F = self.base
        return (F.one,) + (F.zero,) * (self.degree - 1)

    def from_base(self, raw):
        F = self.base
        return (raw,) + (F.zero,) * (self.degree - 1)

    def from_int(self, n: int):
        return self.from_base(self.base.from_int(n))

    def from_coeffs(self, coeffs):
        """Reduce an arbitrary coefficient sequence mod pi into a raw tuple."""
        F = self.base
        d = self.degree
        work = list(coeffs)
        if len(work) >= len(self.modulus.coeffs):
            work = list((Polynomial(F, work, self.modulus.var) % self.modulus).coeffs)
        work.extend([F.zero] * (d - len(work)))
        return tuple(work[:d])

    def from_polynomial(self, p: Polynomial):
        return self.from_coeffs(p.coeffs)

    def is_zero(self, a) -> bool:
        F = self.base
        return all(F.is_zero(c) for c in a)

    def eq(self, a, b) -> bool:
        F = self.base
        return all(F.eq(x, y) for x, y in zip(a, b))

    def add(self, a, b):
        F = self.base
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        F = self.base
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        F = self.base
        return tuple(F.neg(x) for x in a)

    def mul(self, a, b):
        F = self.base
        d = self.degree
        if d == 1:
            return (F.mul(a[0], b[0]),)
        prod = [F.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                prod[i + j] = F.add(prod[i + j], F.mul(x, y))
        # reduce by the monic modulus in place
        mod = self.modulus.coeffs
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if F.is_zero(c):
                continue
            prod[i] = F.zero
            for j in range(d):
                prod[i - d + j] = F.sub(prod[i - d + j], F.mul(c, mod[j]))
        return tuple(prod[:d])

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroInputError("division by zero in a residue field")
        F = self.base
        if self.degree == 1:
            return (F.inv(a[0]),)
        # extended Euclid on polynomial representatives, keeping s*a = r mod pi
        p = Polynomial(F, a, self.modulus.var)
        r0, r1 = self.modulus, p
        s0 = Polynomial.zero(F, self.modulus.var)
        s1 = Polynomial.one(F, self.modulus.var)
        while not r1.is_zero() and r1.degree > 0:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r1.is_zero():
            raise ZeroInputError("element is not a unit mod pi")
        scale = F.inv(r1.coeffs[0])
        return self.from_polynomial(s1.scale(scale))

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

    # -- norm and trace ------------------------------------------------------

    def norm_raw(self, a):
        """Norm down to the ground field: Res(pi, a~) for a representative a~."""
        if self.is_zero(a):
            return self.base.zero
        if self.degree == 1:
            return a[0]
        rep = Polynomial(self.base, a, self.modulus.var)
        return self.modulus.resultant(rep)

    def power_sums(self):
        """p_0..p_{d-1}: power sums of the roots of pi, via Newton's identities."""
        if self._power_sums is None:
            F = self.base
            d = self.degree
            # Newton with plain coefficients of monic pi:
            # p_k + a_{d-1} p_{k-1} + ... + a_{d-k+1} p_1 + k a_{d-k} = 0
            a = [self.modulus.coeffs[d - i] for i in range(d + 1)]
            p = [F.from_int(d)]
            for k in range(1, d):
                acc = F.mul(F.from_int(k), a[k])
                for i in range(1, k):
                    acc = F.add(acc, F.mul(a[i], p[k - i]))
                p.append(F.neg(acc))
            self._power_sums = p
        return self._power_sums

    def trace_raw(self, a):
        """Trace down to the ground field: sum of coefficients against tr(T^j)."""
        F = self.base
        if self.degree == 1:
            return a[0]
        p = self.power_sums()
        acc = F.zero
        for c, pj in zip(a, p):
            acc = F.add(acc, F.mul(c, pj))
        return acc

    # -- plumbing --------------------------------------------------------------

    def element(self, raw) -> "ResidueFieldElem":
        return ResidueFieldElem(self, raw)

    def to_polynomial(self, raw) -> Polynomial:
        return Polynomial(self.base, raw, "T")

    def render(self, raw) -> str:
        return str(self.to_polynomial(raw))

    def __eq__(self, other):
        return (isinstance(other, ResidueField)
                and self.base == other.base
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.base, self.modulus))

    def __repr__(self):
        return f"ResidueField({self.base.descriptor}[T]/({self.modulus}))"


class ResidueFieldElem:
    """A class in k[T]/(pi); supports field arithmetic, norm and trace."""

    __slots__ = ("parent", "raw")

    def __init__(self, parent: ResidueField, raw):
        self.parent = parent
        self.raw = raw

    def _other(self, value):
        if isinstance(value, ResidueFieldElem):
            if value.parent != self.parent:
                raise ZeroInputError("elements of different residue fields")
            return value.raw
        if isinstance(value, int):
            return self.parent.from_int(value)
        raise ZeroInputError(f"cannot combine residue class with {value!r}")

    def __add__(self, other):
        return ResidueFieldElem(self.parent, self.parent.add(self.raw, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return ResidueFieldElem(self.parent, self.parent.sub(self.raw, self._other(other)))

    def __rsub__(self, other):
        return ResidueFieldElem(self.parent, self.parent.sub(self._other(other), self.raw))

    def __mul__(self, other):
        return ResidueFieldElem(self.parent, self.parent.mul(self.raw, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ResidueFieldElem(self.parent, self.parent.div(self.raw, self._other(other)))

    def __rtruediv__(self, other):
        return ResidueFieldElem(self.parent, self.parent.div(self._other(other), self.raw))

    def __pow__(self, n: int):
        return ResidueFieldElem(self.parent, self.parent.pow(self.raw, n))

    def __neg__(self):
        return ResidueFieldElem(self.parent, self.parent.neg(self.raw))

    def inverse(self) -> "ResidueFieldElem":
        return ResidueFieldElem(self.parent, self.parent.inv(self.raw))

    def is_zero(self) -> bool:
        return self.parent.is_zero(self.raw)

    def norm(self) -> FieldScalar:
        return FieldScalar(self.parent.base, self.parent.norm_raw(self.raw))

    def trace(self) -> FieldScalar:
        return FieldScalar(self.parent.base, self.parent.trace_raw(self.raw))

    def to_base_scalar(self) -> FieldScalar:
        """The value as a ground-field scalar; only for degree-1 residue fields."""
        if self.parent.degree != 1:
            raise ZeroInputError("class of a higher-degree place is not a scalar")
        return FieldScalar(self.parent.base, self.raw[0])

    def __eq__(self, other):
        if isinstance(other, int):
            return self.parent.eq(self.raw, self.parent.from_int(other))
        if not isinstance(other, ResidueFieldElem):
            return NotImplemented
        return self.parent == other.parent and self.parent.eq(self.raw, other.raw)

    def __hash__(self):
        return hash((self.parent, self.raw))

    def __str__(self):
        return self.parent.render(self.raw)

    def __repr__(self):
        return f"ResidueFieldElem({self})"
