import json
from fractions import Fraction

import pytest

from zmaxext.errors import InvalidOrder, OrderIncompatible
from zmaxext.extensions import make_Fn, make_identity, make_lex_example, make_scaled
from zmaxext.lattice import INFINITE
from zmaxext.ordered_groups import componentwise, lex, weighted
from zmaxext.semifield import ZERO, Unit
from zmaxext.serialize import (
    SchemaError,
    dumps,
    element_from_json,
    element_to_json,
    encode,
    extension_from_json,
    extension_to_json,
    group_from_json,
    group_to_json,
    safe,
    verdict_to_json,
)
from zmaxext.verdict import Verdict


@pytest.mark.parametrize("g", [lex(2), componentwise(3), weighted(Fraction(1, 3)), lex(0)])
def test_group_round_trip(g):
    assert group_from_json(json.loads(json.dumps(group_to_json(g)))) == g


def test_element_round_trip():
    for x in (ZERO, Unit((1, -2))):
        assert element_from_json(element_to_json(x), 2) == x
    with pytest.raises(SchemaError):
        element_from_json({"exp": [1]}, 2)
    with pytest.raises(SchemaError):
        element_from_json({"exp": [True, 1]}, 2)


@pytest.mark.parametrize("e", [make_Fn(3), make_scaled(4), make_lex_example(), make_identity()])
def test_extension_round_trip(e):
    d = json.loads(dumps(extension_to_json(e)))
    back = extension_from_json(d)
    assert extension_to_json(back) == extension_to_json(e)
    assert back.matrix == e.matrix and back.generators == e.generators


def test_big_integers_become_strings():
    big = 2**60
    assert safe({"a": [big, 3, Fraction(1, 2)]}) == {"a": [str(big), 3, "1/2"]}
    assert element_from_json({"exp": [str(big)]}, 1) == Unit((big,))


def test_schema_diagnostics():
    with pytest.raises(SchemaError) as info:
        extension_from_json({"K": {"rank": 1, "order": "lex"}, "L": {"rank": 1}, "embedding": [[1]]})
    assert info.value.path == "$.L"
    with pytest.raises(SchemaError) as info:
        extension_from_json({"K": {"rank": 1, "order": "lex"}, "L": {"rank": 1, "order": "lex"}, "embedding": [[1, 2]]})
    assert info.value.path == "$.embedding[0]"
    with pytest.raises(SchemaError):
        group_from_json({"rank": 1, "order": "spiral"})
    with pytest.raises(InvalidOrder):
        group_from_json({"rank": 2, "order": {"weights": ["1", "2"]}})
    with pytest.raises(OrderIncompatible):
        extension_from_json({"K": {"rank": 1, "order": "lex"}, "L": {"rank": 1, "order": "lex"}, "embedding": [[-1]]})


def test_verdict_encoding():
    v = Verdict.no(Unit((1, 0)), 64)
    assert verdict_to_json(v) == {"verdict": "no", "certificate": {"exp": [1, 0]}, "bound": 64}
    assert encode({"x": INFINITE, "y": (Unit((1,)), ZERO)}) == {"x": "infinite", "y": [{"exp": [1]}, {"zero": True}]}
