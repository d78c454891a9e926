import random

import pytest

from reciprocity_lab.errors import DomainError, ZeroInputError
from reciprocity_lab.funcfield import Place, RationalFunction, support_union
from reciprocity_lab.lattices import MonomialLattice
from reciprocity_lab.poly import Polynomial
from reciprocity_lab.tate import (abstract_residue_trace, classical_residue,
                                  data_spread, minimal_window, window_bound)

from helpers import F3, F5, Q, rand_fn, rand_fn_q

TRUNCATIONS = ("f", "g", "both")


def tt(field):
    return RationalFunction.variable(field)


def at(poly):
    return Place.finite(poly)


def test_residues_of_a_partial_fraction_split():
    # f dg with f = 1/(t^2 - t), g = t: poles at 0 and 1, regular at infinity
    t = tt(Q)
    f = 1 / (t * t - t)
    g = t
    p0 = at(Polynomial.variable(Q))
    p1 = at(Polynomial.variable(Q) - Polynomial.one(Q))
    inf = Place.at_infinity(Q)
    assert classical_residue(f, g, p0) == Q.scalar(-1)
    assert classical_residue(f, g, p1) == Q.scalar(1)
    assert classical_residue(f, g, inf) == Q.scalar(0)


def test_logarithmic_residue_counts_valuation():
    rng = random.Random(193)
    for field in (F5, Q):
        for _ in range(12):
            g = rand_fn_q(rng) if field is Q else rand_fn(rng, field)
            places = support_union(g, include_infinity=True, seed=5)
            for x in places:
                got = classical_residue(1 / g, g, x)
                v = g.valuation(x)
                assert got == field.scalar(v * x.degree)


def test_exact_differentials_have_no_residue():
    rng = random.Random(197)
    inf = Place.at_infinity(Q)
    for _ in range(10):
        f = rand_fn_q(rng)
        for x in support_union(f, include_infinity=True, seed=5):
            # f df = d(f^2)/2 in characteristic zero
            assert classical_residue(f, f, x) == Q.scalar(0)
        one = RationalFunction.constant(Q, 1)
        assert classical_residue(one, f, inf) == Q.scalar(0)


def test_double_pole_keeps_only_the_simple_part():
    t = tt(Q)
    p0 = at(Polynomial.variable(Q))
    f = 3 / t + 5 / (t * t)
    assert classical_residue(f, t, p0) == Q.scalar(3)
    assert classical_residue(1 / (t * t), t, p0) == Q.scalar(0)


def test_residue_at_a_quadratic_place_traces_down():
    pi = Polynomial.variable(F3) * Polynomial.variable(F3) + Polynomial.one(F3)
    x = at(pi)
    assert x.degree == 2
    g = RationalFunction.from_polynomial(pi)
    assert classical_residue(1 / g, g, x) == F3.scalar(2)
    assert abstract_residue_trace(1 / g, g, x) == F3.scalar(2)


def test_abstract_residue_simple_pole():
    t = tt(Q)
    x = at(Polynomial.variable(Q))
    assert abstract_residue_trace(1 / t, t, x) == Q.scalar(1)


def test_abstract_residue_order_two():
    t = tt(Q)
    x = at(Polynomial.variable(Q))
    f = 1 / (t * t)
    g = t * t
    assert abstract_residue_trace(f, g, x) == Q.scalar(2)
    for tr in TRUNCATIONS:
        assert abstract_residue_trace(f, g, x, truncate=tr) == Q.scalar(2)


def test_abstract_residue_of_units_vanishes():
    t = tt(F5)
    x = at(Polynomial.variable(F5))
    f = (t + 1) / (t + 2)
    g = t + 3
    assert abstract_residue_trace(f, g, x) == F5.scalar(0)


def test_abstract_agrees_with_classical_on_random_data():
    rng = random.Random(199)
    for field in (F5, Q):
        for _ in range(15):
            if field is Q:
                f = rand_fn_q(rng, max_deg=4)
                g = rand_fn_q(rng, max_deg=4)
            else:
                f = rand_fn(rng, field, max_deg=3)
                g = rand_fn(rng, field, max_deg=3)
            places = support_union(f, g, include_infinity=True, seed=5)
            for x in places[:3]:
                want = classical_residue(f, g, x)
                base = minimal_window(f, g, x)
                for tr in TRUNCATIONS:
                    assert abstract_residue_trace(f, g, x, truncate=tr) == want
                assert abstract_residue_trace(f, g, x, window=base + 3) == want


def test_window_below_the_admissible_bound_is_rejected():
    t = tt(Q)
    x = at(Polynomial.variable(Q))
    f = 1 / (t * t * t)
    bound = minimal_window(f, t, x)
    with pytest.raises(DomainError):
        abstract_residue_trace(f, t, x, window=bound - 1)


def test_lattice_choice_is_immaterial():
    t = tt(Q)
    x = at(Polynomial.variable(Q))
    f = (t + 2) / (t * t)
    g = t * t - t
    want = classical_residue(f, g, x)
    lattices = [
        MonomialLattice.ray(0),
        MonomialLattice.ray(-4),
        MonomialLattice.from_ray_spec(2, added={-1, -3}),
        MonomialLattice.from_ray_spec(0, removed={1, 4}),
    ]
    for lattice in lattices:
        for tr in TRUNCATIONS:
            got = abstract_residue_trace(f, g, x, lattice=lattice, truncate=tr)
            assert got == want


def test_zero_inputs_are_rejected():
    t = tt(Q)
    x = at(Polynomial.variable(Q))
    zero = t - t
    with pytest.raises(ZeroInputError):
        classical_residue(zero, t, x)
    with pytest.raises(ZeroInputError):
        abstract_residue_trace(t, zero, x)
    with pytest.raises(ZeroInputError):
        minimal_window(zero, zero, x)


def test_window_bound_grows_with_data_spread():
    lattice = MonomialLattice.ray(0)
    assert window_bound(lattice, -1, -1, 0) >= 4
    assert window_bound(lattice, -2, -3, 4) >= 11
    t = tt(Q)
    h = (t * t + 1) / (t * t * t - t)
    assert data_spread(h) == 5
