"""Dense univariate polynomials over an exact field.

Coefficients are stored ascending by exponent as raw field values; the zero
polynomial is the empty tuple and its degree is the sentinel None, never -1,
so callers are forced to treat it explicitly.
"""
from __future__ import annotations

from .errors import MixedFieldError, ZeroInputError
from .fields import Field, FieldScalar, ensure_same_field


def _trim(coeffs: list, field: Field) -> tuple:
    n = len(coeffs)
    while n > 0 and field.is_zero(coeffs[n - 1]):
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    __slots__ = ("field", "var", "coeffs")

    def __init__(self, field: Field, coeffs, var: str = "t"):
        self.field = field
        self.var = var
        self.coeffs = _trim([field.coerce(c) if isinstance(c, int) else c
                             for c in coeffs], field)

    @classmethod
    def zero(cls, field: Field, var: str = "t") -> "Polynomial":
        return cls(field, (), var)

    @classmethod
    def one(cls, field: Field, var: str = "t") -> "Polynomial":
        return cls(field, (field.one,), var)

    @classmethod
    def constant(cls, field: Field, value, var: str = "t") -> "Polynomial":
        return cls(field, (field.coerce(value),), var)

    @classmethod
    def variable(cls, field: Field, var: str = "t") -> "Polynomial":
        return cls(field, (field.zero, field.one), var)

    @classmethod
    def monomial(cls, field: Field, exponent: int, coeff=None, var: str = "t") -> "Polynomial":
        c = field.one if coeff is None else field.coerce(coeff)
        return cls(field, (field.zero,) * exponent + (c,), var)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def leading_coefficient(self):
        if not self.coeffs:
            raise ZeroInputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.field.eq(self.coeffs[-1], self.field.one)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def _compat(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise MixedFieldError(f"expected a polynomial, got {other!r}")
        ensure_same_field(self.field, other.field)
        if self.var != other.var:
            raise MixedFieldError(f"mixed variables: {self.var} vs {other.var}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.field, other, self.var)
        self._compat(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Polynomial(F, out, self.var)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial(F, [F.neg(c) for c in self.coeffs], self.var)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.field, other, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.field, other, self.var)
        self._compat(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(F, self.var)
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if F.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Polynomial(F, out, self.var)

    __rmul__ = __mul__

    def scale(self, raw) -> "Polynomial":
        F = self.field
        return Polynomial(F, [F.mul(raw, c) for c in self.coeffs], self.var)

    def shift(self, k: int) -> "Polynomial":
        """Multiply by var**k (k >= 0)."""
        if not self.coeffs:
            return self
        return Polynomial(self.field, (self.field.zero,) * k + self.coeffs, self.var)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ZeroInputError("negative power of a polynomial")
        result = Polynomial.one(self.field, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Polynomial"):
        self._compat(other)
        F = self.field
        if other.is_zero():
            raise ZeroInputError("polynomial division by zero")
        if self.is_zero() or len(self.coeffs) < len(other.coeffs):
            return Polynomial.zero(F, self.var), self
        rem = list(self.coeffs)
        dden = len(other.coeffs) - 1
        inv_lc = F.inv(other.coeffs[-1])
        quot = [F.zero] * (len(rem) - dden)
        for i in range(len(rem) - 1, dden - 1, -1):
            c = rem[i]
            if F.is_zero(c):
                continue
            q = F.mul(c, inv_lc)
            quot[i - dden] = q
            for j, bj in enumerate(other.coeffs):
                rem[i - dden + j] = F.sub(rem[i - dden + j], F.mul(q, bj))
        return (Polynomial(F, quot, self.var), Polynomial(F, rem, self.var))

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ZeroInputError("division was not exact")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor; gcd(0, 0) = 0."""
        self._compat(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "Polynomial":
        F = self.field
        out = [F.mul(F.from_int(k), c) for k, c in enumerate(self.coeffs)][1:]
        return Polynomial(F, out, self.var)

    def evaluate(self, point):
        """Horner evaluation at a raw field value."""
        F = self.field
        if isinstance(point, int):
            point = F.from_int(point)
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, point), c)
        return acc

    def taylor_shift(self, center) -> "Polynomial":
        """Rewrite p(x) as a polynomial in (x - center), by synthetic division.

        Works in any characteristic (no factorials).  Returns q with
        q(w) = p(center + w), coefficients ascending in w.
        """
        F = self.field
        if isinstance(center, int):
            center = F.from_int(center)
        work = list(self.coeffs)
        n = len(work)
        out = []
        for k in range(n):
            # one synthetic division by (x - center); remainder is coeff of w^k
            for i in range(n - 2, k - 1, -1):
                work[i] = F.add(work[i], F.mul(center, work[i + 1]))
            out.append(work[k])
        return Polynomial(F, out, self.var)

    def reverse(self) -> "Polynomial":
        """Coefficient reversal x**deg * p(1/x); zero maps to zero."""
        return Polynomial(self.field, tuple(reversed(self.coeffs)), self.var)

    def resultant(self, other: "Polynomial"):
        """Res(self, other) as a raw field value, by the Euclidean chain."""
        self._compat(other)
        F = self.field
        f, g = self, other
        if f.is_zero() or g.is_zero():
            # Res with the zero polynomial vanishes unless both are constants.
            return F.zero
        res = F.one
        flip = False
        while True:
            if g.degree == 0:
                res = F.mul(res, F.pow(g.coeffs[0], f.degree))
                return F.neg(res) if flip else res
            if f.degree < g.degree:
                flip ^= (f.degree * g.degree) % 2 == 1
                f, g = g, f
                continue
            r = f % g
            if r.is_zero():
                return F.zero
            flip ^= (f.degree * g.degree) % 2 == 1
            res = F.mul(res, F.pow(g.coeffs[-1], f.degree - r.degree))
            f, g = g, r

    def squarefree_part_decomposition(self):
        """List of (monic squarefree factor, multiplicity), pairwise coprime,
        multiplicities distinct, whose weighted product is the monic part.

        Characteristic p is handled by contracting the exponents of the
        derivative-free remainder (its coefficients are Frobenius-fixed over
        a prime field, so g(x) = h(x**p) gives the p-th root directly).
        """
        F = self.field
        if self.is_zero():
            raise ZeroInputError("zero polynomial has no squarefree decomposition")

        def contract(g: Polynomial, p: int) -> Polynomial:
            return Polynomial(F, [g.coeffs[i] for i in range(0, len(g.coeffs), p)], g.var)

        def rec(g: Polynomial):
            if g.is_constant():
                return []
            d = g.derivative()
            if d.is_zero():
                p = F.char
                return [(h, m * p) for h, m in rec(contract(g, p))]
            c = g.gcd(d)
            w = g.exact_div(c)
            result = []
            m = 1
            while not w.is_constant():
                y = w.gcd(c)
                z = w.exact_div(y)
                if not z.is_constant():
                    result.append((z.monic(), m))
                c = c.exact_div(y)
                w = y
                m += 1
            if not c.is_constant():
                p = F.char
                result.extend((h, m2 * p) for h, m2 in rec(contract(c, p)))
            return result

        merged: dict[int, Polynomial] = {}
        for h, m in rec(self.monic()):
            merged[m] = merged[m] * h if m in merged else h
        return sorted(((g.monic(), m) for m, g in merged.items()),
                      key=lambda item: item[1])

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.field, other, self.var)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field == other.field and self.var == other.var
                and len(self.coeffs) == len(other.coeffs)
                and all(self.field.eq(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __hash__(self):
        return hash((self.field, self.var, self.coeffs))

    def sort_key(self):
        return (len(self.coeffs), tuple(self.field.sort_key(c) for c in self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        F = self.field
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if F.is_zero(c):
                continue
            text = F.render(c)
            if k == 0:
                term = text
            else:
                head = self.var if k == 1 else f"{self.var}^{k}"
                if text == "1":
                    term = head
                elif text == "-1":
                    term = f"-{head}"
                else:
                    if _loose_sum(text):
                        text = f"({text})"
                    term = f"{text}*{head}"
            parts.append(term)
        body = parts[0]
        for term in parts[1:]:
            body += ("-" + term[1:]) if term.startswith("-") else ("+" + term)
        return body

    def __repr__(self):
        return f"Polynomial({self.field.descriptor}, {self})"

    def scalar_coefficient(self, k: int) -> FieldScalar:
        return FieldScalar(self.field, self.coefficient(k))


def _loose_sum(text: str) -> bool:
    """True when a rendered coefficient has a top-level sum, which would
    bind to a following product without parentheses."""
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            return True
    return False


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    return a.gcd(b)
