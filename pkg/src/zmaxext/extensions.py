"""Extensions N_max -> M_max given by integer embedding matrices.

Built-in families:

* ``make_Fn(n)``: Z_max over itself through u^k -> v^(nk);
* ``make_scaled(n)``: ((1/n)Z)_max over Z_max;
* ``make_lex_example()``: Z_max inside (Z x Z)_max, lex order, n -> (0, n);
* ``make_identity(group)``: a semifield over itself.

Their order compatibility is known in closed form. User embeddings go
through :func:`check_order_compatibility`, a window search.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, NonInjectiveEmbedding, OrderIncompatible, ZeroGenerator
from .lattice import CosetReducer, IntMatrix, Vector, is_injective, window
from .ordered_groups import Componentwise, OrderedGroup, RationalWeights, Relation, lex, zmax_group
from .semifield import ZERO, Element, Semifield, Unit, Zero
from .verdict import Verdict

DEFAULT_ORDER_WINDOW = 8


@dataclass(frozen=True)
class Embedding:
    matrix: IntMatrix
    source: OrderedGroup
    target: OrderedGroup

    def __post_init__(self):
        A = self.matrix
        if A.rows != self.target.rank or A.cols != self.source.rank:
            raise DimensionMismatch(
                f"{A.rows}x{A.cols} matrix cannot map rank {self.source.rank} into rank {self.target.rank}"
            )
        if not is_injective(A):
            raise NonInjectiveEmbedding(f"embedding matrix {A.tolist()} is not injective")

    def apply(self, x: Sequence[int]) -> Vector:
        return self.matrix.apply(self.source.check(x))


@dataclass(frozen=True)
class Extension:
    K: Semifield
    L: Semifield
    embed: Embedding
    generators: tuple[Unit, ...] | None = None
    name: str = "custom"
    # exponent a of L -> exponent of F^(n); only set for the scaled family
    iso_to_Fn: IntMatrix | None = None
    order_check: Verdict | None = None

    def __post_init__(self):
        if self.embed.source != self.K.group or self.embed.target != self.L.group:
            raise DimensionMismatch("embedding groups do not match K and L")
        if self.generators is not None:
            gens = []
            for g in self.generators:
                if isinstance(self.L.check(g), Zero):
                    raise ZeroGenerator("generator lists may not contain zero")
                gens.append(g)
            object.__setattr__(self, "generators", tuple(sorted(set(gens), key=lambda g: g.exp)))

    @property
    def matrix(self) -> IntMatrix:
        return self.embed.matrix

    def u(self) -> Unit:
        """Image in L of the generator u of K with u + 1 = u (K of rank 1)."""
        return self.u_pow(1)

    def u_pow(self, m: int) -> Unit:
        if self.K.rank != 1 or not self.K.group.is_total:
            raise DimensionMismatch("u is only defined when K is totally ordered of rank 1")
        (g,) = _positive_generator(self.K.group)
        return embed_element(self, Unit((m * g,)))

    def in_image(self, x: Element) -> bool:
        if isinstance(self.L.check(x), Zero):
            return True
        return CosetReducer(self.matrix).contains(x.exp)


def embed_element(e: Extension, x: Element) -> Element:
    if isinstance(e.K.check(x), Zero):
        return ZERO
    return Unit(e.embed.apply(x.exp))


def _positive_generator(g: OrderedGroup) -> Vector:
    """The generator of a rank-1 totally ordered group that is > 0."""
    one = (1,)
    return one if g.compare(one, (0,)) is Relation.GREATER else (-1,)


def check_order_compatibility(
    source: OrderedGroup, target: OrderedGroup, A: IntMatrix, bound: int = DEFAULT_ORDER_WINDOW
) -> Verdict:
    """Whether x -> A x is a homomorphism of ordered groups (join preserving).

    Exact when the source has rank <= 1; otherwise a window search that can
    only refute (NO) or give up (UNKNOWN).
    """
    if source.rank == 0:
        return Verdict.yes("trivial source")
    if source.rank == 1 and target.is_total:
        g = _positive_generator(source)
        if target.compare(A.apply(g), target.zero()) is Relation.GREATER:
            return Verdict.yes("positive generator maps to a positive element")
        return Verdict.no(g)
    zs, zt = source.zero(), target.zero()
    for x in window(source.rank, bound):
        if A.apply(source.join(x, zs)) != target.join(A.apply(x), zt):
            return Verdict.no(x, bound)
    return Verdict.unknown(bound)


def _induced_source(target: OrderedGroup, A: IntMatrix) -> OrderedGroup:
    r = A.cols
    if isinstance(target.order, Componentwise):
        return OrderedGroup(r, Componentwise())
    if isinstance(target.order, RationalWeights):
        w = target.order.weights
        pulled = tuple(
            sum((w[i] * A.entries[i][j] for i in range(A.rows)), Fraction(0)) for j in range(r)
        )
        return OrderedGroup(r, RationalWeights(pulled))
    return lex(r)


def make_subgroup_extension(
    target: OrderedGroup,
    inclusion: IntMatrix,
    source: OrderedGroup | None = None,
    bound: int = DEFAULT_ORDER_WINDOW,
    generators: Sequence[Unit] | None = None,
    name: str = "subgroup",
) -> Extension:
    """N_max inside M_max for the subgroup N = inclusion(Z^r) of M.

    The order on N defaults to the one pulled back from M (lex for a lex
    target, componentwise for componentwise, restricted weights for
    weights). Raises OrderIncompatible when the order check finds a
    counterexample; an UNKNOWN order check is kept on the result.
    """
    if inclusion.rows != target.rank:
        raise DimensionMismatch(f"inclusion has {inclusion.rows} rows, target has rank {target.rank}")
    if not is_injective(inclusion):
        raise NonInjectiveEmbedding(f"inclusion {inclusion.tolist()} is not injective")
    if source is None:
        source = _induced_source(target, inclusion)
    verdict = check_order_compatibility(source, target, inclusion, bound)
    if verdict.is_no:
        raise OrderIncompatible(
            f"inclusion {inclusion.tolist()} does not preserve joins at {verdict.certificate}",
            verdict.certificate,
        )
    return Extension(
        Semifield(source),
        Semifield(target),
        Embedding(inclusion, source, target),
        tuple(generators) if generators is not None else None,
        name=name,
        order_check=verdict,
    )


def make_Fn(n: int) -> Extension:
    """F^(n): Z_max -> Z_max, u^k -> v^(nk), generated by 1, v, ..., v^(n-1)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    Z = zmax_group()
    return Extension(
        Semifield(Z),
        Semifield(Z),
        Embedding(IntMatrix.of([[n]]), Z, Z),
        tuple(Unit((k,)) for k in range(n)),
        name=f"F{n}",
        order_check=Verdict.yes("built-in"),
    )


def make_scaled(n: int) -> Extension:
    """((1/n)Z)_max over Z_max.

    L's exponent a stands for the rational a/n; Z_max sits inside as the
    multiples of n. ``iso_to_Fn`` sends exponent a to u^a in F^(n).
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    Z = zmax_group()
    L = OrderedGroup(1, RationalWeights((Fraction(1, n),)))
    return Extension(
        Semifield(Z),
        Semifield(L),
        Embedding(IntMatrix.of([[n]]), Z, L),
        tuple(Unit((k,)) for k in range(n)),
        name=f"scaled{n}",
        iso_to_Fn=IntMatrix.identity(1),
        order_check=Verdict.yes("built-in"),
    )


def make_lex_example() -> Extension:
    Z = zmax_group()
    L = lex(2)
    return Extension(
        Semifield(Z),
        Semifield(L),
        Embedding(IntMatrix.of([[0], [1]]), Z, L),
        None,
        name="lex",
        order_check=Verdict.yes("built-in"),
    )


def make_identity(group: OrderedGroup | None = None) -> Extension:
    g = zmax_group() if group is None else group
    F = Semifield(g)
    return Extension(
        F,
        F,
        Embedding(IntMatrix.identity(g.rank), g, g),
        (F.one(),),
        name="identity",
        order_check=Verdict.yes("built-in"),
    )


def scaled_value(e: Extension, x: Unit) -> Fraction:
    """The rational number an element of a weighted rank-1 L stands for."""
    order = e.L.group.order
    if not isinstance(order, RationalWeights):
        raise TypeError("L does not carry rational weights")
    return order.value(x.exp)


def check_generates(e: Extension, bound: int) -> Verdict:
    """Whether every window element of L is a K-combination of the generators.

    For selective L the span of S over K, with 0 excluded, is exactly the
    union of the cosets S K^x, so the answer is exact on the window. For
    non-selective L a candidate x is accepted when the join of all window
    multiples k*g lying below x reaches x.
    """
    if e.generators is None:
        return Verdict.unknown(bound)
    L = e.L
    if L.is_selective:
        red = CosetReducer(e.matrix)
        keys = {red.key(g.exp) for g in e.generators}
        for x in window(L.rank, bound):
            if red.key(x) not in keys:
                return Verdict.no(Unit(x), bound)
        return Verdict.yes(len(e.generators), bound)
    scaled = [
        L.mul(embed_element(e, Unit(m)), g) for m in window(e.K.rank, bound) for g in e.generators
    ]
    for x in window(L.rank, bound):
        target = Unit(x)
        acc = L.sum([s for s in scaled if L.le(s, target)])
        if acc != target:
            return Verdict.unknown(bound)
    return Verdict.yes(len(e.generators), bound)
