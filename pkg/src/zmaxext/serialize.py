"""JSON encodings for groups, elements, matrices, extensions and verdicts.

Integers outside the IEEE-double safe range are written as decimal strings;
the decoders accept either form.
"""

import json
from dataclasses import replace
from fractions import Fraction
from typing import Any

from .errors import ZmaxError
from .extensions import DEFAULT_ORDER_WINDOW, Extension, make_subgroup_extension
from .lattice import INFINITE, IntMatrix
from .ordered_groups import Componentwise, Lex, OrderedGroup, RationalWeights
from .semifield import ZERO, Element, Unit, Zero
from .verdict import Verdict

SAFE_INT = 2**53 - 1


class SchemaError(ZmaxError, ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def safe(obj: Any) -> Any:
    """Recursively make a JSON-ready structure safe for lossy consumers."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if -SAFE_INT <= obj <= SAFE_INT else str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [safe(v) for v in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(safe(obj), indent=2, ensure_ascii=False) + "\n"


def group_to_json(g: OrderedGroup) -> dict:
    order = g.order
    if isinstance(order, Lex):
        o: Any = "lex"
    elif isinstance(order, Componentwise):
        o = "componentwise"
    else:
        o = {"weights": [str(w) for w in order.weights]}
    return {"rank": g.rank, "order": o}


def element_to_json(x: Element) -> dict:
    if isinstance(x, Zero):
        return {"zero": True}
    return {"exp": list(x.exp)}


def matrix_to_json(A: IntMatrix) -> list:
    return A.tolist()


def extension_to_json(e: Extension) -> dict:
    out = {
        "name": e.name,
        "K": group_to_json(e.K.group),
        "L": group_to_json(e.L.group),
        "embedding": matrix_to_json(e.matrix),
        "generators": None if e.generators is None else [element_to_json(g) for g in e.generators],
    }
    if e.iso_to_Fn is not None:
        out["iso_to_Fn"] = matrix_to_json(e.iso_to_Fn)
    return out


def encode(obj: Any) -> Any:
    """Generic encoder for certificates and results."""
    if isinstance(obj, (Zero, Unit)):
        return element_to_json(obj)
    if obj is INFINITE:
        return "infinite"
    if isinstance(obj, Verdict):
        return verdict_to_json(obj)
    if isinstance(obj, dict):
        return {k: encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return obj


def verdict_to_json(v: Verdict) -> dict:
    return {"verdict": v.outcome.value, "certificate": encode(v.certificate), "bound": v.bound}


def _int(value: Any, path: str) -> int:
    if isinstance(value, bool):
        raise SchemaError(path, "expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError:
            pass
    raise SchemaError(path, f"expected an integer, got {value!r}")


def _obj(value: Any, path: str, required: tuple[str, ...]) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(path, f"expected an object, got {type(value).__name__}")
    for k in required:
        if k not in value:
            raise SchemaError(path, f"missing field {k!r}")
    return value


def group_from_json(d: Any, path: str = "$") -> OrderedGroup:
    d = _obj(d, path, ("rank", "order"))
    rank = _int(d["rank"], f"{path}.rank")
    if rank < 0:
        raise SchemaError(f"{path}.rank", "rank must be nonnegative")
    o = d["order"]
    if o == "lex":
        order: Any = Lex()
    elif o == "componentwise":
        order = Componentwise()
    elif isinstance(o, dict) and "weights" in o and isinstance(o["weights"], list):
        try:
            order = RationalWeights(tuple(Fraction(str(w)) for w in o["weights"]))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"{path}.order.weights", f"bad rational: {exc}") from None
    else:
        raise SchemaError(f"{path}.order", f"unknown order {o!r}")
    return OrderedGroup(rank, order)


def element_from_json(d: Any, rank: int, path: str = "$") -> Element:
    if isinstance(d, dict) and d.get("zero") is True:
        return ZERO
    d = _obj(d, path, ("exp",))
    if not isinstance(d["exp"], list):
        raise SchemaError(f"{path}.exp", "expected an array of integers")
    exp = tuple(_int(a, f"{path}.exp[{i}]") for i, a in enumerate(d["exp"]))
    if len(exp) != rank:
        raise SchemaError(f"{path}.exp", f"expected {rank} coordinates, got {len(exp)}")
    return Unit(exp)


def matrix_from_json(d: Any, rows: int, cols: int, path: str = "$") -> IntMatrix:
    if not isinstance(d, list) or any(not isinstance(r, list) for r in d):
        raise SchemaError(path, "expected an array of arrays of integers")
    if len(d) != rows:
        raise SchemaError(path, f"expected {rows} rows, got {len(d)}")
    data = []
    for i, r in enumerate(d):
        if len(r) != cols:
            raise SchemaError(f"{path}[{i}]", f"expected {cols} entries, got {len(r)}")
        data.append([_int(a, f"{path}[{i}][{j}]") for j, a in enumerate(r)])
    return IntMatrix.of(data, cols)


def extension_from_json(d: Any, bound: int | None = None) -> Extension:
    """Decode an extension; user-supplied embeddings get the order check."""
    d = _obj(d, "$", ("K", "L", "embedding"))
    K = group_from_json(d["K"], "$.K")
    L = group_from_json(d["L"], "$.L")
    A = matrix_from_json(d["embedding"], L.rank, K.rank, "$.embedding")
    gens = d.get("generators")
    if gens is not None:
        if not isinstance(gens, list):
            raise SchemaError("$.generators", "expected an array or null")
        gens = [element_from_json(g, L.rank, f"$.generators[{i}]") for i, g in enumerate(gens)]
    name = d.get("name", "custom")
    if not isinstance(name, str):
        raise SchemaError("$.name", "expected a string")
    e = make_subgroup_extension(
        L, A, source=K, bound=DEFAULT_ORDER_WINDOW if bound is None else bound, generators=gens, name=name
    )
    if "iso_to_Fn" in d:
        iso = matrix_from_json(d["iso_to_Fn"], 1, L.rank, "$.iso_to_Fn")
        e = replace(e, iso_to_Fn=iso)
    return e
