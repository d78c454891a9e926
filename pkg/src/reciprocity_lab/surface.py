"""Symbols along a fixed curve on a rational surface.

The surface model is the (s, t) plane: the function field is k(s)(t), the
curve C is the divisor t = 0, and the function field of C is k(s).  A
surface function is an ordinary rational function in t whose coefficient
field is the fraction field k(s), so places of C are places of k(s) and
every curve-level symbol lands in the ground field k through the
one-variable machinery.

The parameter z is any surface function vanishing to first order along C;
it defaults to t.  The three-slot symbol of Horozov depends on z, the
others do not, and the z-free claims are exercised against rescaled
parameters in the test suite.
"""
from __future__ import annotations

from .errors import DomainError, ZeroInputError
from .fields import Field, FieldScalar
from .funcfield import FractionField, Place, RationalFunction, support_union
from .poly import Polynomial
from .report import VerificationReport
from .symbols1d import tame_symbol


def surface_generators(base: Field, s_var: str = "s",
                       t_var: str = "t") -> tuple[RationalFunction, RationalFunction]:
    """The pair (s, t) as elements of k(s)(t)."""
    coeff = FractionField(base, s_var)
    s_raw = RationalFunction.variable(base, s_var)
    return (RationalFunction.constant(coeff, s_raw, t_var),
            RationalFunction.variable(coeff, t_var))


def _coefficient_field(f: RationalFunction) -> FractionField:
    if not isinstance(f.field, FractionField):
        raise DomainError("surface symbols need k(s) coefficients; "
                          "build inputs from surface_generators")
    return f.field


def _nonzero(*functions: RationalFunction) -> None:
    for f in functions:
        if f.is_zero():
            raise ZeroInputError("surface symbols are defined on nonzero functions")


def curve_place(f: RationalFunction) -> Place:
    """The place t = 0 of k(s)(t) cutting out the curve."""
    coeff = _coefficient_field(f)
    return Place.finite(Polynomial.variable(coeff, f.var), check=False)


def curve_valuation(f: RationalFunction) -> int:
    """Order of vanishing of f along the curve."""
    _nonzero(f)
    return f.valuation(curve_place(f))


def restrict_to_curve(f: RationalFunction) -> RationalFunction:
    """The class of a curve-unit f in k(s); f must have curve valuation 0."""
    _nonzero(f)
    return f.evaluate(curve_place(f)).to_base_scalar().raw


def _parameter(f: RationalFunction, z: RationalFunction | None) -> RationalFunction:
    if z is None:
        return RationalFunction.variable(f.field, f.var)
    _nonzero(z)
    if curve_valuation(z) != 1:
        raise DomainError("the parameter must vanish to first order "
                          "along the curve")
    return z


def phi_z(f: RationalFunction,
          z: RationalFunction | None = None) -> RationalFunction:
    """Restriction of the curve-unit part f * z**(-v_C(f)), in k(s).

    Multiplicative in f; the value changes with z when v_C(f) != 0.
    """
    _nonzero(f)
    z = _parameter(f, z)
    return restrict_to_curve(f * z ** (-curve_valuation(f)))


def vbar(f: RationalFunction, x: Place,
         z: RationalFunction | None = None) -> int:
    """Valuation at x of the restricted unit part; shifts by v_C(f) times
    the unit-rescaling level when z changes."""
    return phi_z(f, z).valuation(x)


def lambda_shift(z_new: RationalFunction, z_old: RationalFunction,
                 x: Place) -> int:
    """Correction level between two parameters: v_x of (z_old/z_new) on C.

    Substituting parameters shifts the reduced valuation by exactly this
    level times the curve valuation:

        vbar(f, x, z_new) = vbar(f, x, z_old) + lambda_shift(z_new, z_old, x) * v_C(f)

    The inverted ratio is forced by the definition of the restricted unit
    part: the new parameter enters with exponent -v_C(f).
    """
    return restrict_to_curve(z_old / z_new).valuation(x)


def nu_symbol(f: RationalFunction, g: RationalFunction, x: Place,
              z: RationalFunction | None = None) -> int:
    """The intersection pairing at x against the curve.

    The determinant of the 2 x 2 array of restricted and curve valuations;
    antisymmetric, and the z-dependence of the top row cancels.
    """
    _nonzero(f, g)
    z = _parameter(f, z)
    return (vbar(f, x, z) * curve_valuation(g)
            - vbar(g, x, z) * curve_valuation(f))


def nu_verify(f: RationalFunction, g: RationalFunction,
              seed: int | None = None) -> VerificationReport:
    """Degree-weighted sum of the intersection pairing over the curve is 0."""
    _nonzero(f, g)
    base = _coefficient_field(f).base
    vcf = curve_valuation(f)
    vcg = curve_valuation(g)
    pf = phi_z(f)
    pg = phi_z(g)
    places = support_union(pf, pg, seed=seed, include_infinity=True)
    total = 0
    terms = []
    for x in places:
        det = pf.valuation(x) * vcg - pg.valuation(x) * vcf
        terms.append({"place": str(x), "deg": x.degree, "nu": det,
                      "term": x.degree * det})
        total += x.degree * det
    return VerificationReport(
        law="nu-sum",
        field_descriptor=base.descriptor,
        inputs={"f": str(f), "g": str(g)},
        terms=terms,
        value=str(total),
        expected="0",
        ok=total == 0,
        details={"places": len(places),
                 "suppressed_trivial": sum(1 for u in terms if u["term"] == 0)},
    )


def curve_tame(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    """The curve-level tame symbol, a function on C rather than a scalar."""
    _nonzero(f, g)
    vf = curve_valuation(f)
    vg = curve_valuation(g)
    unit = restrict_to_curve(f ** vg / g ** vf)
    return -unit if (vf * vg) % 2 else unit


def _minus_one(base: Field, s_var: str) -> RationalFunction:
    return RationalFunction.constant(base, -1, s_var)


def _restricted_data(functions, z):
    vc = tuple(curve_valuation(w) for w in functions)
    phis = tuple(phi_z(w, z) for w in functions)
    return vc, phis


def _horozov_local(vc, phis, minus_one, x: Place) -> FieldScalar:
    first = tame_symbol(phis[0], phis[2], x) ** vc[1]
    second = tame_symbol(phis[1], minus_one, x) ** (vc[0] * vc[2])
    return first * second


def _parshin_local(vc, phis, x: Place) -> FieldScalar:
    if x.degree != 1:
        raise DomainError("the antisymmetric three-slot symbol is evaluated "
                          "at degree-1 points only; no norm-twisted form is "
                          "defined at higher degree")
    vb = tuple(p.valuation(x) for p in phis)
    a = vc[1] * vb[2] - vc[2] * vb[1]
    b = vc[0] * vb[2] - vc[2] * vb[0]
    c = vc[0] * vb[1] - vc[1] * vb[0]
    alpha = (vc[0] * vc[1] * vb[2] + vc[0] * vc[2] * vb[1]
             + vc[1] * vc[2] * vb[0] + vc[0] * vb[1] * vb[2]
             + vc[1] * vb[0] * vb[2] + vc[2] * vb[0] * vb[1])
    # the monomial has curve valuation 0 and x-valuation 0 identically,
    # so restriction and evaluation never leave the unit locus
    value = (phis[0] ** a * phis[1] ** (-b) * phis[2] ** c) \
        .evaluate(x).to_base_scalar()
    return -value if alpha % 2 else value


def _hk4_local(vc, phis, tame12, tame34, minus_one, base, x: Place) -> FieldScalar:
    value = base.one_scalar()
    for i, p in enumerate(phis):
        exponent = 1
        for j in range(4):
            if j != i:
                exponent *= vc[j]
        value = value * tame_symbol(p, minus_one, x) ** exponent
    return value * tame_symbol(tame12, tame34, x)


def horozov3(f: RationalFunction, g: RationalFunction, h: RationalFunction,
             x: Place, z: RationalFunction | None = None) -> FieldScalar:
    """Three-slot local symbol at x; genuinely depends on the parameter z.

    Tame value of the restricted outer pair to the middle curve valuation,
    times a sign-type tame factor of the middle restriction.
    """
    _nonzero(f, g, h)
    base = _coefficient_field(f).base
    vc, phis = _restricted_data((f, g, h), _parameter(f, z))
    return _horozov_local(vc, phis, _minus_one(base, f.field.var), x)


def parshin3(f: RationalFunction, g: RationalFunction, h: RationalFunction,
             x: Place, z: RationalFunction | None = None) -> FieldScalar:
    """Antisymmetric three-slot local symbol at a degree-1 point x.

    A signed evaluation of the monomial with the six 2 x 2 determinant
    exponents; the parameter z drops out, and the value equals the cyclic
    product of three-slot symbols (f,g,h)(h,f,g)(g,h,f) at the same z.
    """
    _nonzero(f, g, h)
    vc, phis = _restricted_data((f, g, h), _parameter(f, z))
    return _parshin_local(vc, phis, x)


def hk4(f1: RationalFunction, f2: RationalFunction, f3: RationalFunction,
        f4: RationalFunction, x: Place,
        z: RationalFunction | None = None) -> FieldScalar:
    """Four-slot local symbol at x; independent of the parameter z.

    Four sign-type tame factors with triple-product curve exponents, times
    the tame value at x of the two curve-level tame symbols of the pairs.
    """
    functions = (f1, f2, f3, f4)
    _nonzero(*functions)
    base = _coefficient_field(f1).base
    vc, phis = _restricted_data(functions, _parameter(f1, z))
    return _hk4_local(vc, phis, curve_tame(f1, f2), curve_tame(f3, f4),
                      _minus_one(base, f1.field.var), base, x)


_ARITY = {"horozov": 3, "parshin": 3, "hk4": 4}


def reciprocity_verify_2d(kind: str, functions, seed: int | None = None,
                          z: RationalFunction | None = None) -> VerificationReport:
    """Product of a local surface symbol over the places of the curve.

    kind selects the symbol; the place list is the joint support on C of
    the restricted unit parts (plus, for the four-slot symbol, the two
    curve-level tame symbols), which exhausts the nontrivial terms.
    """
    if kind not in _ARITY:
        raise DomainError(f"unknown surface symbol {kind!r}")
    functions = tuple(functions)
    if len(functions) != _ARITY[kind]:
        raise DomainError(f"{kind} takes {_ARITY[kind]} functions, "
                          f"got {len(functions)}")
    _nonzero(*functions)
    base = _coefficient_field(functions[0]).base
    z = _parameter(functions[0], z)
    vc, phis = _restricted_data(functions, z)
    minus_one = _minus_one(base, functions[0].field.var)
    carriers = list(phis)
    tame12 = tame34 = None
    if kind == "hk4":
        tame12 = curve_tame(functions[0], functions[1])
        tame34 = curve_tame(functions[2], functions[3])
        carriers += [tame12, tame34]
    places = support_union(*carriers, seed=seed, include_infinity=True)
    value = base.one_scalar()
    terms = []
    for x in places:
        if kind == "horozov":
            local = _horozov_local(vc, phis, minus_one, x)
        elif kind == "parshin":
            local = _parshin_local(vc, phis, x)
        else:
            local = _hk4_local(vc, phis, tame12, tame34, minus_one, base, x)
        value = value * local
        terms.append({"place": str(x), "deg": x.degree, "value": str(local)})
    return VerificationReport(
        law=f"{kind}-product",
        field_descriptor=base.descriptor,
        inputs={f"f{i + 1}": str(w) for i, w in enumerate(functions)},
        terms=terms,
        value=str(value),
        expected="1",
        ok=value.is_one(),
        details={"places": len(places),
                 "suppressed_trivial": sum(1 for u in terms
                                           if u["value"] == "1")},
    )
