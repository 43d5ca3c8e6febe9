"""Unit index and the classification of extensions of Z_max with finite unit index.

If ui(L / Z_max) is finite then L^x is infinite cyclic; choosing the
generator v with u = v^n, n > 0, the addition of L is forced to be
v^a + v^b = v^max(a, b), so L is F^(n).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import (
    AdditionLawViolation,
    BaseNotZmax,
    InfiniteUnitIndex,
    NotASubextension,
    NotSelective,
)
from .extensions import Embedding, Extension, _positive_generator, make_Fn
from .lattice import INFINITE, IntMatrix, Vector, cokernel_order, rank
from .ordered_groups import Componentwise, Lex, OrderedGroup, RationalWeights, zmax_group
from .semifield import ZERO, Element, Semifield, Unit, Zero
from .verdict import Verdict

DEFAULT_WINDOW = 20


def unit_index(e: Extension):
    """|L^x / K^x|, an int or INFINITE."""
    return cokernel_order(e.matrix)


@dataclass(frozen=True)
class ClassificationResult:
    n: int
    generator_v: Vector
    iso_check_window: int
    verified: bool
    extension: Extension

    def to_Fn(self, x: Element) -> Element:
        """The isomorphism L -> F^(n): v^a -> v^a, landing in make_Fn(n).L."""
        if isinstance(self.extension.L.check(x), Zero):
            return ZERO
        (c,) = x.exp
        (g,) = self.generator_v
        return Unit((c * g,))

    def from_Fn(self, y: Element) -> Element:
        if isinstance(y, Zero):
            return ZERO
        (a,) = y.exp
        (g,) = self.generator_v
        return Unit((a * g,))

    def report(self) -> dict:
        return {
            "n": self.n,
            "generator": list(self.generator_v),
            "verified": self.verified,
            "window": self.iso_check_window,
        }


def _require_zmax_base(e: Extension) -> Vector:
    if e.K.rank != 1 or not e.K.group.is_total:
        raise BaseNotZmax("K must be Z_max: rank 1 with a total order")
    return _positive_generator(e.K.group)


def classify(e: Extension, window: int = DEFAULT_WINDOW) -> ClassificationResult:
    g = _require_zmax_base(e)
    ui = unit_index(e)
    if ui is INFINITE:
        raise InfiniteUnitIndex(f"{e.name}: unit index is infinite")
    # Z -> L^x -> finite group forces L^x to have rank 1
    if e.L.rank != 1 or rank(e.matrix) != 1:
        raise AssertionError("finite cokernel of a rank 1 source must live in rank 1")
    (a,) = e.embed.apply(g)
    n = abs(a)
    v = (1 if a > 0 else -1,)
    L = e.L
    if e.u() != Unit((n * v[0],)):
        raise AssertionError("u != v^n")
    powers = [Unit((i * v[0],)) for i in range(-window, window + 1)]
    # addition is commutative, so pairs i <= j suffice; v^i + v^j must be v^j
    for i, x in enumerate(powers):
        for j in range(i, len(powers)):
            if L.add(x, powers[j]) != powers[j]:
                raise AdditionLawViolation(i - window, j - window)
    return ClassificationResult(n, v, window, True, e)


class Subextension(NamedTuple):
    index: int
    extension: Extension
    # exponents of the subextension's L -> exponents of the ambient L
    inclusion: IntMatrix


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _sublattice_group(L: OrderedGroup, step: int) -> OrderedGroup:
    """Order on the sublattice generated by ``step`` in rank-1 L."""
    order = L.order
    if isinstance(order, RationalWeights):
        return OrderedGroup(1, RationalWeights((order.weights[0] * step,)))
    return OrderedGroup(1, Lex() if isinstance(order, Lex) else Componentwise())


def subextensions(e: Extension, window: int = DEFAULT_WINDOW) -> list[Subextension]:
    """All subextensions of a selective L with finite unit index m, one per d | m.

    In a selective L every subgroup containing Z_max^x, with 0 adjoined, is a
    subsemifield, so they correspond to the sublattices between image(K)
    and L^x.
    """
    if not e.L.is_selective:
        raise NotSelective(f"{e.name}: L is not selective")
    g = _require_zmax_base(e)
    res = classify(e, window)
    m, (v,) = res.n, res.generator_v
    out = []
    for d in _divisors(m):
        step = v * (m // d)
        group = _sublattice_group(e.L.group, step)
        sub = Extension(
            e.K,
            Semifield(group),
            Embedding(IntMatrix.of([[d * g[0]]]), e.K.group, group),
            None,
            name=f"{e.name}/sub{d}",
            order_check=Verdict.yes("restricted from the ambient extension"),
        )
        if unit_index(sub) != d:
            raise AssertionError(f"subextension for divisor {d} has the wrong unit index")
        out.append(Subextension(d, sub, IntMatrix.of([[step]])))
    return out


def scaled_subextension(m: int, values) -> Extension:
    """Subextension of ((1/m)Z)_max generated over Z_max by the given rationals."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    g = m
    for q in values:
        q = Fraction(q)
        if (q * m).denominator != 1:
            raise NotASubextension(f"{q} does not lie in (1/{m})Z")
        g = gcd(g, int(q * m))
    n = m // g
    Z = zmax_group()
    L = OrderedGroup(1, RationalWeights((Fraction(g, m),)))
    return Extension(
        Semifield(Z),
        Semifield(L),
        Embedding(IntMatrix.of([[n]]), Z, L),
        tuple(Unit((k,)) for k in range(n)),
        name=f"scaled{m}/sub{n}",
        iso_to_Fn=IntMatrix.identity(1),
        order_check=Verdict.yes("restricted from the ambient extension"),
    )


def finite_subextension_of_scaled_family(m: int, e: Extension) -> int:
    """The n | m with e = ((1/n)Z)_max, for e a subextension of ((1/m)Z)_max."""
    order = e.L.group.order
    if e.L.rank != 1 or not isinstance(order, RationalWeights):
        raise NotASubextension("L is not a rank-1 group of rationals")
    (w,) = order.weights
    if (w * m).denominator != 1:
        raise NotASubextension(f"values of L, multiples of {w}, do not lie in (1/{m})Z")
    _require_zmax_base(e)
    if order.value(e.u().exp) != 1:
        raise NotASubextension("Z_max is not embedded as the integers")
    n = classify(e).n
    if m % n or abs(w) != Fraction(1, n):
        raise AssertionError(f"classification returned n={n} inconsistent with weight {w}")
    return n


def same_as_Fn_up_to_basis(e: Extension, n: int) -> bool:
    """Whether e's embedding matrix equals make_Fn(n)'s up to a unimodular change of basis."""
    target = make_Fn(n).matrix.entries[0][0]
    return e.matrix.rows == 1 and e.matrix.cols == 1 and abs(e.matrix.entries[0][0]) == target
