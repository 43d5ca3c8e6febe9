from fractions import Fraction

import pytest

from zmaxext.errors import DimensionMismatch, NonInjectiveEmbedding, OrderIncompatible, ZeroGenerator
from zmaxext.extensions import (
    Embedding,
    Extension,
    check_generates,
    check_order_compatibility,
    embed_element,
    make_Fn,
    make_identity,
    make_lex_example,
    make_scaled,
    make_subgroup_extension,
    scaled_value,
)
from zmaxext.lattice import IntMatrix
from zmaxext.ordered_groups import componentwise, lex, weighted, zmax_group
from zmaxext.semifield import ZERO, Semifield, Unit


def test_Fn_structure():
    e = make_Fn(3)
    assert e.u() == Unit((3,))
    assert e.u_pow(-2) == Unit((-6,))
    assert e.generators == (Unit((0,)), Unit((1,)), Unit((2,)))
    assert e.in_image(Unit((6,))) and not e.in_image(Unit((4,)))
    assert e.in_image(ZERO)
    with pytest.raises(ValueError):
        make_Fn(0)


def test_scaled_values():
    e = make_scaled(4)
    assert scaled_value(e, e.u()) == 1
    assert scaled_value(e, Unit((3,))) == Fraction(3, 4)
    assert e.iso_to_Fn == IntMatrix.identity(1)
    with pytest.raises(TypeError):
        scaled_value(make_Fn(2), Unit((1,)))


def test_lex_example():
    e = make_lex_example()
    assert e.u() == Unit((0, 1))
    assert e.generators is None
    assert embed_element(e, ZERO) == ZERO


def test_identity_on_other_groups():
    e = make_identity(lex(2))
    assert e.matrix == IntMatrix.identity(2)
    assert e.generators == (Unit((0, 0)),)


def test_order_compatibility():
    Z = zmax_group()
    assert check_order_compatibility(Z, Z, IntMatrix.of([[2]])).is_yes
    v = check_order_compatibility(Z, Z, IntMatrix.of([[-2]]))
    assert v.is_no and v.certificate == (1,)
    # swapping coordinates is not monotone for lex
    v = check_order_compatibility(lex(2), lex(2), IntMatrix.of([[0, 1], [1, 0]]), bound=2)
    assert v.is_no
    assert check_order_compatibility(lex(2), lex(2), IntMatrix.identity(2), bound=2).is_unknown
    assert check_order_compatibility(componentwise(2), componentwise(2), IntMatrix.of([[0, 1], [1, 0]]), 2).is_unknown


def test_subgroup_extension():
    e = make_subgroup_extension(componentwise(2), IntMatrix.of([[0], [1]]))
    assert e.K.group == componentwise(1)
    e = make_subgroup_extension(weighted(Fraction(1, 2)), IntMatrix.of([[2]]))
    assert e.K.group.order.weights == (Fraction(1),)
    with pytest.raises(OrderIncompatible) as info:
        make_subgroup_extension(zmax_group(), IntMatrix.of([[-1]]), source=zmax_group())
    assert info.value.counterexample == (1,)
    with pytest.raises(NonInjectiveEmbedding):
        make_subgroup_extension(lex(2), IntMatrix.of([[1, 2], [2, 4]]))
    with pytest.raises(DimensionMismatch):
        make_subgroup_extension(lex(2), IntMatrix.of([[1]]))


def test_embedding_validation():
    Z = zmax_group()
    with pytest.raises(DimensionMismatch):
        Embedding(IntMatrix.of([[1, 0]]), Z, Z)
    with pytest.raises(NonInjectiveEmbedding):
        Embedding(IntMatrix.of([[0]]), Z, Z)
    with pytest.raises(ZeroGenerator):
        Extension(Semifield(Z), Semifield(Z), Embedding(IntMatrix.of([[1]]), Z, Z), (ZERO,))


def test_generators_sorted_and_deduplicated():
    Z = zmax_group()
    e = Extension(Semifield(Z), Semifield(Z), Embedding(IntMatrix.of([[2]]), Z, Z), (Unit((1,)), Unit((0,)), Unit((1,))))
    assert e.generators == (Unit((0,)), Unit((1,)))


def test_check_generates():
    assert check_generates(make_Fn(3), 6).is_yes
    Z = zmax_group()
    e = Extension(Semifield(Z), Semifield(Z), Embedding(IntMatrix.of([[3]]), Z, Z), (Unit((0,)),))
    v = check_generates(e, 6)
    assert v.is_no and v.certificate == Unit((1,))
    assert check_generates(make_lex_example(), 3).is_unknown
