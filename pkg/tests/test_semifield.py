from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zmaxext.errors import DimensionMismatch, DivisionByZero, UndefinedPower
from zmaxext.ordered_groups import OrderedGroup, Relation, componentwise, lex, weighted
from zmaxext.semifield import (
    ZERO,
    Semifield,
    Unit,
    boolean,
    check_monotonic_division,
    finite_subsemifield_check,
    torsion_free_units_check,
    zmax,
)

FIELDS = [zmax(), boolean(), Semifield(lex(2)), Semifield(componentwise(3)), Semifield(weighted(Fraction(1, 5)))]


@st.composite
def field_and_elements(draw, count=3):
    F = draw(st.sampled_from(FIELDS))
    unit = st.tuples(*[st.integers(-8, 8)] * F.rank).map(Unit)
    elem = st.one_of(st.just(ZERO), unit)
    return F, [draw(elem) for _ in range(count)]


@settings(max_examples=400, deadline=None)
@given(field_and_elements())
def test_semiring_axioms(fe):
    F, (a, b, c) = fe
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, a) == a
    assert F.add(a, ZERO) == a and F.mul(a, ZERO) == ZERO
    assert F.mul(a, F.one()) == a


@settings(max_examples=400, deadline=None)
@given(field_and_elements(), st.integers(1, 6))
def test_monotonic_division(fe, n):
    F, (x, y, _) = fe
    assert check_monotonic_division(F, x, y, n)
    assert check_monotonic_division(F, x, F.add(x, y), n)


def test_zmax_arithmetic():
    F = zmax()
    assert F.add(Unit((3,)), Unit((5,))) == Unit((5,))
    assert F.mul(Unit((3,)), Unit((5,))) == Unit((8,))
    assert F.inv(Unit((3,))) == Unit((-3,))
    assert F.div(Unit((3,)), Unit((5,))) == Unit((-2,))
    assert F.pow(Unit((3,)), -2) == Unit((-6,))
    assert F.compare(ZERO, Unit((-100,))) is Relation.LESS
    assert F.le(Unit((1,)), Unit((2,)))
    assert F.sum([]) == ZERO


def test_zero_powers():
    F = zmax()
    assert F.pow(ZERO, 3) == ZERO
    with pytest.raises(UndefinedPower):
        F.pow(ZERO, 0)
    with pytest.raises(DivisionByZero):
        F.pow(ZERO, -1)
    with pytest.raises(DivisionByZero):
        F.inv(ZERO)
    with pytest.raises(ZeroDivisionError):
        F.div(Unit((1,)), ZERO)


def test_boolean():
    B = boolean()
    one = B.one()
    assert B.add(one, ZERO) == one and B.mul(one, ZERO) == ZERO
    assert B.is_selective


def test_selectivity_and_checks():
    F = Semifield(componentwise(2))
    assert not F.is_selective
    assert F.add(Unit((1, 0)), Unit((0, 1))) == Unit((1, 1))
    with pytest.raises(DimensionMismatch):
        F.add(Unit((1,)), Unit((0, 1)))
    with pytest.raises(TypeError):
        F.add(5, Unit((0, 1)))


def test_torsion_and_finite_subsemifields():
    for F in FIELDS[2:] + [zmax()]:
        x = Unit((1,) + (0,) * (F.rank - 1))
        assert torsion_free_units_check(F, x, 24)
        assert finite_subsemifield_check(F, x, 10)
    assert torsion_free_units_check(zmax(), Unit((0,)), 24)
    with pytest.raises(ValueError):
        finite_subsemifield_check(zmax(), Unit((0,)), 10)
    with pytest.raises(ValueError):
        torsion_free_units_check(zmax(), ZERO, 3)


def test_unit_constructor():
    assert Semifield(OrderedGroup(2)).unit(1, 2) == Unit((1, 2))
    with pytest.raises(DimensionMismatch):
        zmax().unit(1, 2)
