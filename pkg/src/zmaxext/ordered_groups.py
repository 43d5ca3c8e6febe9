"""Finitely generated free abelian groups Z^k with translation-invariant orders.

Elements are plain integer tuples ("exponent vectors"). Three orders are
supported:

* ``Lex()``: lexicographic, a total order;
* ``Componentwise()``: the product order, a lattice order (total only for
  rank <= 1);
* ``RationalWeights(w)``: x <= y iff w.x <= w.y, total when the weight
  functional is injective on Z^k (which forces rank <= 1 for rational w).
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence, Union

from .errors import DimensionMismatch, InvalidOrder
from .lattice import IntMatrix, Vector, kernel_basis


class Relation(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Lex:
    pass


@dataclass(frozen=True)
class Componentwise:
    pass


@dataclass(frozen=True)
class RationalWeights:
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))

    def value(self, x: Sequence[int]) -> Fraction:
        return sum((w * a for w, a in zip(self.weights, x)), Fraction(0))


OrderSpec = Union[Lex, Componentwise, RationalWeights]


def _check_weights(order: RationalWeights, rank: int) -> None:
    if len(order.weights) != rank:
        raise InvalidOrder(f"{len(order.weights)} weights for a rank {rank} group")
    if rank == 0:
        return
    den = lcm(*(w.denominator for w in order.weights))
    row = IntMatrix.of([[int(w * den) for w in order.weights]])
    ker = kernel_basis(row)
    if ker:
        raise InvalidOrder(
            f"weights {[str(w) for w in order.weights]} vanish on the nonzero lattice vector {ker[0]}"
        )


@dataclass(frozen=True)
class OrderedGroup:
    rank: int
    order: OrderSpec = Lex()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if isinstance(self.order, RationalWeights):
            _check_weights(self.order, self.rank)
        elif not isinstance(self.order, (Lex, Componentwise)):
            raise InvalidOrder(f"unsupported order specification {self.order!r}")

    @property
    def is_total(self) -> bool:
        return not isinstance(self.order, Componentwise) or self.rank <= 1

    def zero(self) -> Vector:
        return (0,) * self.rank

    def check(self, x: Sequence[int]) -> Vector:
        if len(x) != self.rank:
            raise DimensionMismatch(f"vector {tuple(x)} does not lie in a rank {self.rank} group")
        return tuple(x)

    def compare(self, x: Sequence[int], y: Sequence[int]) -> Relation:
        x, y = self.check(x), self.check(y)
        if x == y:
            return Relation.EQUAL
        order = self.order
        if isinstance(order, Lex):
            return Relation.LESS if x < y else Relation.GREATER
        if isinstance(order, RationalWeights):
            # injectivity makes distinct vectors have distinct values
            return Relation.LESS if order.value(x) < order.value(y) else Relation.GREATER
        if all(a <= b for a, b in zip(x, y)):
            return Relation.LESS
        if all(a >= b for a, b in zip(x, y)):
            return Relation.GREATER
        return Relation.INCOMPARABLE

    def le(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return self.compare(x, y) in (Relation.LESS, Relation.EQUAL)

    def lt(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return self.compare(x, y) is Relation.LESS

    def join(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        """Least upper bound of x and y."""
        if isinstance(self.order, Componentwise):
            x, y = self.check(x), self.check(y)
            return tuple(max(a, b) for a, b in zip(x, y))
        return tuple(y) if self.compare(x, y) is Relation.LESS else tuple(x)

    def meet(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        neg = self.join(tuple(-a for a in x), tuple(-b for b in y))
        return tuple(-a for a in neg)


def compare(g: OrderedGroup, x: Sequence[int], y: Sequence[int]) -> Relation:
    return g.compare(x, y)


def join(g: OrderedGroup, x: Sequence[int], y: Sequence[int]) -> Vector:
    return g.join(x, y)


def vadd(x: Sequence[int], y: Sequence[int]) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"cannot add vectors of lengths {len(x)} and {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vneg(x: Sequence[int]) -> Vector:
    return tuple(-a for a in x)


def vscale(k: int, x: Sequence[int]) -> Vector:
    return tuple(k * a for a in x)


def zmax_group() -> OrderedGroup:
    """The exponent group of Z_max: Z with its usual order."""
    return OrderedGroup(1, Lex())


def lex(rank: int) -> OrderedGroup:
    return OrderedGroup(rank, Lex())


def componentwise(rank: int) -> OrderedGroup:
    return OrderedGroup(rank, Componentwise())


def weighted(*weights) -> OrderedGroup:
    return OrderedGroup(len(weights), RationalWeights(tuple(Fraction(w) for w in weights)))
