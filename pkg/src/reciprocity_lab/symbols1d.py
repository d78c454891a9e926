"""Curve-level symbols on k(t) and their reciprocity verifiers.

The tame symbol at a place x is
(-1)^(deg(x) v_x(f) v_x(g)) * Norm[(f^v_x(g) / g^v_x(f))(x)], with the norm
taken from the residue field down to k.  Multiplying over all places gives 1
(the product over the joint support of f and g, since every other factor is
a norm of 1).  The same machinery yields the sum-of-valuations formula, the
residue theorem, and the Hilbert norm residue symbol over prime fields.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ZeroInputError
from .fields import FieldScalar, PrimeField
from .funcfield import Place, RationalFunction, support_union
from .report import VerificationReport
from .residue_field import ResidueFieldElem
from .tate import abstract_residue_trace, classical_residue


@dataclass(frozen=True)
class SymbolValue:
    """One symbol evaluation, tagged with its kind and place."""
    kind: str
    place: str
    value: object

    def rendered(self) -> str:
        return str(self.value)


def tame_symbol_elem(f: RationalFunction, g: RationalFunction,
                     x: Place) -> ResidueFieldElem:
    """(-1)^(v_x(f) v_x(g)) (f^v_x(g) / g^v_x(f))(x) inside the residue field."""
    if f.is_zero() or g.is_zero():
        raise ZeroInputError("tame symbol of the zero function")
    vf = f.valuation(x)
    vg = g.valuation(x)
    ring = x.residue_field()
    base = ring.base
    # f^vg / g^vf is a unit at x; rebuilding it from the unit parts of f and
    # g keeps the powers inside the residue field instead of blowing up
    # polynomial degrees.
    uf = ring.pow(f.unit_value(x), vg)
    ug = ring.pow(g.unit_value(x), vf)
    raw = ring.mul(ring.from_base(base.sign(vf * vg)), ring.div(uf, ug))
    return ring.element(raw)


def tame_symbol(f: RationalFunction, g: RationalFunction, x: Place) -> FieldScalar:
    """The k-valued tame symbol: norm of the unit part with the degree sign."""
    return tame_symbol_elem(f, g, x).norm()


def milnor_symbol(f: RationalFunction, g: RationalFunction, x: Place) -> FieldScalar:
    """The rational-point form of the tame symbol; only for degree-1 places."""
    if x.degree != 1:
        raise DomainError("the rational-point symbol needs a degree-1 place")
    return tame_symbol_elem(f, g, x).to_base_scalar()


def hilbert_symbol(f: RationalFunction, g: RationalFunction, x: Place,
                   m: int) -> FieldScalar:
    """Norm residue symbol over a prime field F_q: the tame value to the (q-1)/m.

    The sign stays inside the norm; the result is an m-th root of unity
    inside F_q.
    """
    field = _require_prime_field(f)
    q = field.p
    if m < 1 or (q - 1) % m:
        raise DomainError(f"m = {m} does not divide q - 1 = {q - 1}")
    return tame_symbol_elem(f, g, x).norm() ** ((q - 1) // m)


def _require_prime_field(f: RationalFunction) -> PrimeField:
    if not isinstance(f.field, PrimeField):
        raise DomainError("norm residue symbols need a finite ground field")
    return f.field


def _identity_count(terms: list[dict], key: str, identity: str) -> int:
    return sum(1 for term in terms if term[key] == identity)


def sum_of_valuations_verify(f: RationalFunction,
                             seed: int | None = None) -> VerificationReport:
    """Check sum over places of deg(x) * v_x(f) = 0."""
    if f.is_zero():
        raise ZeroInputError("the zero function has no divisor")
    terms = []
    total = 0
    for place, v in f.support(seed):
        term = {"place": str(place), "deg": place.degree, "v": v,
                "value": place.degree * v}
        total += place.degree * v
        terms.append(term)
    return VerificationReport(
        law="sum-of-valuations",
        field_descriptor=f.field.descriptor,
        inputs={"f": str(f)},
        terms=terms,
        value=str(total),
        expected="0",
        ok=total == 0,
        details={"places": len(terms)},
    )


def weil_verify(f: RationalFunction, g: RationalFunction,
                seed: int | None = None) -> VerificationReport:
    """Check the product of tame symbols over the joint support equals 1."""
    places = support_union(f, g, seed=seed)
    field = f.field
    product = field.one_scalar()
    terms = []
    for x in places:
        val = tame_symbol(f, g, x)
        product = product * val
        terms.append({"place": str(x), "deg": x.degree,
                      "v_f": f.valuation(x), "v_g": g.valuation(x),
                      "value": str(val)})
    one = field.one_scalar()
    return VerificationReport(
        law="weil",
        field_descriptor=field.descriptor,
        inputs={"f": str(f), "g": str(g)},
        terms=terms,
        value=str(product),
        expected=str(one),
        ok=product == one,
        details={"places": len(terms),
                 "suppressed_trivial": _identity_count(terms, "value", str(one))},
    )


def hilbert_verify(f: RationalFunction, g: RationalFunction, m: int,
                   seed: int | None = None) -> VerificationReport:
    """Check the product of Hilbert norm residue symbols equals 1."""
    field = _require_prime_field(f)
    places = support_union(f, g, seed=seed)
    product = field.one_scalar()
    terms = []
    for x in places:
        val = hilbert_symbol(f, g, x, m)
        product = product * val
        terms.append({"place": str(x), "deg": x.degree, "value": str(val)})
    one = field.one_scalar()
    return VerificationReport(
        law="hilbert",
        field_descriptor=field.descriptor,
        inputs={"f": str(f), "g": str(g), "m": str(m)},
        terms=terms,
        value=str(product),
        expected=str(one),
        ok=product == one,
        details={"places": len(terms),
                 "suppressed_trivial": _identity_count(terms, "value", str(one))},
    )


def residue_theorem_places(f: RationalFunction,
                           g: RationalFunction,
                           seed: int | None = None) -> list[Place]:
    """Joint support of f, g, and f*g', plus infinity: residues vanish elsewhere."""
    h = f * g.derivative()
    funcs = [f, g] + ([h] if not h.is_zero() else [])
    return support_union(*funcs, seed=seed, include_infinity=True)


def residue_theorem_verify(f: RationalFunction, g: RationalFunction,
                           oracle: bool = False,
                           seed: int | None = None) -> VerificationReport:
    """Check sum over places of tr res_x(f dg) = 0, optionally cross-checked.

    With `oracle` set, every classical coefficient residue is recomputed as
    an abstract commutator trace and the two must agree.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroInputError("residue theorem needs nonzero functions")
    field = f.field
    places = residue_theorem_places(f, g, seed)
    total = field.zero_scalar()
    terms = []
    agreements = 0
    for x in places:
        val = classical_residue(f, g, x)
        term = {"place": str(x), "deg": x.degree, "value": str(val)}
        if oracle:
            other = abstract_residue_trace(f, g, x)
            term["oracle"] = str(other)
            if other != val:
                raise DomainError(
                    f"classical and commutator residues disagree at {x}")
            agreements += 1
        total = total + val
        terms.append(term)
    zero = field.zero_scalar()
    details = {"places": len(terms),
               "suppressed_trivial": _identity_count(terms, "value", str(zero))}
    if oracle:
        details["oracle_agreements"] = agreements
    return VerificationReport(
        law="residue-theorem",
        field_descriptor=field.descriptor,
        inputs={"f": str(f), "g": str(g)},
        terms=terms,
        value=str(total),
        expected=str(zero),
        ok=total == zero,
        details=details,
    )
