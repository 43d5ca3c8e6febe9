"""Bounded-search analysers: archimedean bounds, L_arch, convexity, quotients.

The underlying predicates quantify over infinite sets, so each search runs
over a window of exponents with sup-norm at most ``bound``. A search returns
YES with a witness, NO when a closed-form rule rules out every witness (or
the search space was finite), and UNKNOWN otherwise.

Closed-form NO rules exist for two shapes of L:

* lex order: with p the first coordinate on which image(K) is nonzero,
  x lies above every element of K iff x[:p] > 0, and below iff x[:p] < 0;
* componentwise order: with J the support of image(K), x has no upper
  bound iff x_i > 0 for some i outside J (dually for lower bounds).

Bounds are taken among the units of K. Allowing the zero element as a lower
bound would make every x bounded below and every convexity claim false.
"""

from dataclasses import dataclass
from typing import Sequence

from .errors import ConvexityUndecided, NotConvex, UnsupportedQuotientShape
from .extensions import Extension, embed_element
from .lattice import CosetReducer, IntMatrix, Vector, aligned_coordinates, lattice_basis, window
from .ordered_groups import Componentwise, Lex, OrderedGroup, RationalWeights, Relation
from .semifield import ZERO, Element, Semifield, Unit, Zero
from .verdict import Verdict

DEFAULT_BOUND = 64


def _leading_index(e: Extension) -> int:
    basis = lattice_basis(e.matrix.columns(), e.L.rank)
    lead = [next(i for i, a in enumerate(b) if a) for b in basis]
    return min(lead, default=e.L.rank)


def _support(e: Extension) -> set[int]:
    return {i for i, r in enumerate(e.matrix.entries) if any(r)}


def _provably_unbounded(e: Extension, x: Vector, above: bool) -> bool:
    """Closed-form rule: no unit of K bounds x from above (from below)."""
    order = e.L.group.order
    if isinstance(order, Lex):
        p = _leading_index(e)
        prefix, zero = x[:p], (0,) * p
        return prefix > zero if above else prefix < zero
    if isinstance(order, Componentwise):
        J = _support(e)
        out = [a for i, a in enumerate(x) if i not in J]
        return any(a > 0 for a in out) if above else any(a < 0 for a in out)
    return False


def _images(e: Extension, bound: int) -> list[tuple[Unit, Vector]]:
    return [(Unit(m), e.embed.apply(m)) for m in window(e.K.rank, bound)]


def _search(e: Extension, x: Vector, bound: int, above: bool, images=None) -> Verdict:
    if _provably_unbounded(e, x, above):
        return Verdict.no(Unit(x), bound)
    g = e.L.group
    best = None
    for m, y in images if images is not None else _images(e, bound):
        ok = g.join(x, y) == (y if above else x)
        if not ok:
            continue
        # keep a tightest witness: least upper bound / greatest lower bound
        if best is None or (g.lt(y, best[1]) if above else g.lt(best[1], y)):
            best = (m, y)
    if best is not None:
        return Verdict.yes(best[0], bound)
    if e.K.rank == 0:
        # the window already covered every unit of K
        return Verdict.no(Unit(x), bound)
    return Verdict.unknown(bound)


def _require_unit(e: Extension, x: Element) -> Vector:
    if isinstance(e.L.check(x), Zero):
        raise ValueError("x must be nonzero")
    return x.exp


def upper_bound_in_K(e: Extension, x: Element, bound: int = DEFAULT_BOUND) -> Verdict:
    """Search for y in K with x + y = y; the witness is returned as an element of K."""
    return _search(e, _require_unit(e, x), bound, above=True)


def lower_bound_in_K(e: Extension, x: Element, bound: int = DEFAULT_BOUND) -> Verdict:
    """Search for a nonzero z in K with x + z = x."""
    return _search(e, _require_unit(e, x), bound, above=False)


def recheck_upper(e: Extension, x: Element, y: Element) -> bool:
    """Direct evaluation of x + y = y for a K-element y."""
    iy = embed_element(e, y)
    return e.L.add(x, iy) == iy


def recheck_lower(e: Extension, x: Element, z: Element) -> bool:
    iz = embed_element(e, z)
    return not isinstance(z, Zero) and e.L.add(x, iz) == x


def recheck_unbounded(e: Extension, x: Element, bound: int, above: bool = True) -> bool:
    """Evaluate the bound equation for every K-unit in the window; all must fail."""
    check = recheck_upper if above else recheck_lower
    return not any(check(e, x, m) for m, _ in _images(e, bound))


def is_archimedean(e: Extension, bound: int = DEFAULT_BOUND) -> Verdict:
    """Whether every element of L is bounded above by K.

    Only the lattice generators e_i and their inverses are searched: the set
    of elements bounded above and below by K is closed under products, and
    an upper bound for x^-1 yields a lower bound for x.
    """
    k = e.L.rank
    images = _images(e, bound)
    witnesses = []
    undecided = False
    for i in range(k):
        for sign in (1, -1):
            g = tuple(sign * int(j == i) for j in range(k))
            v = _search(e, g, bound, above=True, images=images)
            if v.is_no:
                return Verdict.no(Unit(g), bound)
            if v.is_unknown:
                undecided = True
            else:
                witnesses.append((Unit(g), v.certificate))
    if undecided:
        return Verdict.unknown(bound)
    return Verdict.yes(witnesses, bound)


def arch_subextension(e: Extension, bound: int = DEFAULT_BOUND) -> list[Vector]:
    """Lattice basis of the window elements bounded above and below by K."""
    images = _images(e, bound)
    found = []
    for x in window(e.L.rank, bound):
        if _search(e, x, bound, True, images).is_yes and _search(e, x, bound, False, images).is_yes:
            found.append(x)
    return lattice_basis(found, e.L.rank)


def _convex_rule(e: Extension) -> tuple[int, ...] | None:
    """Coordinates J certifying convexity in closed form, or None.

    image(K) must be the coordinate subgroup span(e_j : j in J); for lex L,
    J must moreover be a final segment of coordinates.
    """
    J = aligned_coordinates(e.matrix)
    if J is None:
        return None
    k = e.L.rank
    order = e.L.group.order
    if isinstance(order, Lex) and k > 1:
        p = min(J, default=k)
        return J if J == tuple(range(p, k)) else None
    if isinstance(order, RationalWeights) and J not in ((), tuple(range(k))):
        return None
    return J


def is_convex(e: Extension, bound: int = DEFAULT_BOUND) -> Verdict:
    """Look for x outside K that is bounded above and below by K.

    NO carries ``(x, (y, z))`` with x + y = y and x + z = x. YES needs both
    an exhausted window and the closed-form rule.
    """
    images = _images(e, bound)
    red = CosetReducer(e.matrix)
    for x in window(e.L.rank, bound):
        if red.contains(x):
            continue
        up = _search(e, x, bound, True, images)
        if not up.is_yes:
            continue
        lo = _search(e, x, bound, False, images)
        if lo.is_yes:
            return Verdict.no((Unit(x), (up.certificate, lo.certificate)), bound)
    J = _convex_rule(e)
    if J is None:
        return Verdict.unknown(bound)
    return Verdict.yes({"aligned_coordinates": list(J)}, bound)


@dataclass(frozen=True)
class QuotientSemifield:
    """L / K^x for a convex K aligned with the coordinates J.

    Classes are represented by the coordinates outside J; the canonical lift
    puts zeros on J.
    """

    base: Extension
    quotient_group: OrderedGroup
    projection: IntMatrix

    @property
    def semifield(self) -> Semifield:
        return Semifield(self.quotient_group)

    def project(self, x: Element) -> Element:
        if isinstance(self.base.L.check(x), Zero):
            return ZERO
        return Unit(self.projection.apply(x.exp))

    def lift(self, q: Element) -> Element:
        if isinstance(self.semifield.check(q), Zero):
            return ZERO
        return Unit(self.projection.transpose().apply(q.exp))

    def add(self, a: Element, b: Element) -> Element:
        return self.project(self.base.L.add(self.lift(a), self.lift(b)))

    def mul(self, a: Element, b: Element) -> Element:
        return self.project(self.base.L.mul(self.lift(a), self.lift(b)))

    def equivalent(self, x: Element, y: Element) -> bool:
        """x ~ y iff x = k y for a unit k of K."""
        L = self.base.L
        if isinstance(L.check(x), Zero) or isinstance(L.check(y), Zero):
            return x == y
        return self.base.in_image(L.div(x, y))


def quotient(e: Extension, bound: int = DEFAULT_BOUND) -> QuotientSemifield:
    verdict = is_convex(e, bound)
    if verdict.is_no:
        x = verdict.certificate[0]
        raise NotConvex(f"{x!r} lies between two elements of K but not in K", counterexample=x)
    if verdict.is_unknown:
        raise ConvexityUndecided(f"convexity undecided within bound {bound}", bound)
    J = aligned_coordinates(e.matrix)
    if J is None:
        raise UnsupportedQuotientShape("image of K is not a coordinate subgroup")
    k = e.L.rank
    rest = [i for i in range(k) if i not in J]
    order = e.L.group.order
    if isinstance(order, RationalWeights):
        order = order if rest else Lex()
    elif not isinstance(order, (Lex, Componentwise)):
        raise UnsupportedQuotientShape(f"no induced order for {order!r}")
    group = OrderedGroup(len(rest), order)
    projection = IntMatrix(len(rest), k, tuple(tuple(int(j == i) for j in range(k)) for i in rest))
    return QuotientSemifield(e, group, projection)


def selectivity(F: Semifield) -> bool:
    """Whether x + y is always x or y; exactly when the order is total."""
    return F.group.is_total


def find_nonselective_pair(F: Semifield, samples: Sequence[tuple[Element, Element]]):
    for a, b in samples:
        if F.add(a, b) not in (a, b):
            return a, b
    return None
