"""Idempotent semifields M_max = {0} U M for an ordered group M.

A nonzero element is stored by its exponent vector, so multiplication is
vector addition and addition is the group join. Zero is its own variant
(there is no exponent for -infinity).
"""

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import DimensionMismatch, DivisionByZero, UndefinedPower
from .lattice import Vector
from .ordered_groups import OrderedGroup, Relation, vadd, vneg, vscale, zmax_group


@dataclass(frozen=True)
class Zero:
    def __repr__(self):
        return "Zero"


ZERO = Zero()


@dataclass(frozen=True)
class Unit:
    exp: Vector

    def __post_init__(self):
        object.__setattr__(self, "exp", tuple(self.exp))

    def __repr__(self):
        return f"Unit{self.exp}"


Element = Union[Zero, Unit]


@dataclass(frozen=True)
class Semifield:
    group: OrderedGroup

    @property
    def rank(self) -> int:
        return self.group.rank

    @property
    def is_selective(self) -> bool:
        return self.group.is_total

    def one(self) -> Unit:
        return Unit(self.group.zero())

    def unit(self, *coords: int) -> Unit:
        return Unit(self.group.check(coords))

    def check(self, a: Element) -> Element:
        if isinstance(a, Unit):
            if len(a.exp) != self.rank:
                raise DimensionMismatch(f"{a!r} is not an element of a rank {self.rank} semifield")
        elif not isinstance(a, Zero):
            raise TypeError(f"not a semifield element: {a!r}")
        return a

    def add(self, a: Element, b: Element) -> Element:
        self.check(a)
        self.check(b)
        if isinstance(a, Zero):
            return b
        if isinstance(b, Zero):
            return a
        return Unit(self.group.join(a.exp, b.exp))

    def sum(self, items: Sequence[Element]) -> Element:
        acc: Element = ZERO
        for x in items:
            acc = self.add(acc, x)
        return acc

    def mul(self, a: Element, b: Element) -> Element:
        self.check(a)
        self.check(b)
        if isinstance(a, Zero) or isinstance(b, Zero):
            return ZERO
        return Unit(vadd(a.exp, b.exp))

    def inv(self, a: Element) -> Unit:
        self.check(a)
        if isinstance(a, Zero):
            raise DivisionByZero("zero has no multiplicative inverse")
        return Unit(vneg(a.exp))

    def div(self, a: Element, b: Element) -> Element:
        return self.mul(a, self.inv(b))

    def pow(self, a: Element, n: int) -> Element:
        self.check(a)
        if isinstance(a, Zero):
            if n > 0:
                return ZERO
            if n == 0:
                raise UndefinedPower("0**0 is undefined")
            raise DivisionByZero("negative power of zero")
        return Unit(vscale(n, a.exp))

    def le(self, a: Element, b: Element) -> bool:
        """a <= b in the natural order, i.e. a + b == b."""
        return self.add(a, b) == b

    def compare(self, a: Element, b: Element) -> Relation:
        self.check(a)
        self.check(b)
        if a == b:
            return Relation.EQUAL
        if isinstance(a, Zero):
            return Relation.LESS
        if isinstance(b, Zero):
            return Relation.GREATER
        return self.group.compare(a.exp, b.exp)


def zmax() -> Semifield:
    return Semifield(zmax_group())


def boolean() -> Semifield:
    """B = {0, 1}."""
    return Semifield(OrderedGroup(0))


def add(F: Semifield, a: Element, b: Element) -> Element:
    return F.add(a, b)


def mul(F: Semifield, a: Element, b: Element) -> Element:
    return F.mul(a, b)


def inv(F: Semifield, a: Element) -> Element:
    return F.inv(a)


def pow(F: Semifield, a: Element, n: int) -> Element:
    return F.pow(a, n)


def check_monotonic_division(F: Semifield, x: Element, y: Element, n: int) -> bool:
    """Whether x^n + y^n = y^n implies x + y = y for this triple."""
    if n < 1:
        raise ValueError("n must be at least 1")
    premise = F.add(F.pow(x, n), F.pow(y, n)) == F.pow(y, n)
    return (not premise) or F.add(x, y) == y


def torsion_free_units_check(F: Semifield, x: Element, n_max: int) -> bool:
    """Whether x^n != 1 for 1 <= n <= n_max, unless x is 1 itself."""
    if isinstance(F.check(x), Zero):
        raise ValueError("x must be nonzero")
    one = F.one()
    if x == one:
        return True
    return all(F.pow(x, n) != one for n in range(1, n_max + 1))


def finite_subsemifield_check(F: Semifield, x: Element, probe: int) -> bool:
    """Whether x, x^2, ..., x^probe are pairwise distinct.

    For x not in {0, 1} this witnesses that the subsemifield generated by x
    is infinite, so {0, 1} is the only finite subsemifield of F.
    """
    if isinstance(F.check(x), Zero) or x == F.one():
        raise ValueError("x must differ from 0 and 1")
    powers = {F.pow(x, k) for k in range(1, probe + 1)}
    return len(powers) == probe
