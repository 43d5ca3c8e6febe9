"""Enlarging a generating set S of an archimedean extension L / Z_max.

Given S, find the least M with x + u^M = u^M and x + u^-M = x for all
x in S^-1 S, then grow

    T_0 = S,    T_(n+1) = { t + u^k s : t in T_n, s in S, -M <= k <= 0 }

until two consecutive levels agree. The chain must stop by
N = (M + 1)|S|, after which T Z_max is closed under addition and T meets
every class of L^x / Z_max^x.
"""

from dataclasses import dataclass, replace
from typing import Sequence

from .errors import BaseNotZmax, SearchExhausted, ZeroGenerator
from .extensions import Extension
from .lattice import CosetReducer
from .semifield import Element, Unit, Zero

DEFAULT_BOUND = 64


@dataclass(frozen=True)
class ArchimedeanizationRun:
    S: tuple[Unit, ...]
    M: int
    N: int
    T: tuple[Unit, ...]
    level_sizes: tuple[int, ...]
    stabilized_at: int
    coset_count: int
    closed: bool | None = None

    def report(self) -> dict:
        return {
            "M": self.M,
            "N": self.N,
            "T_size": len(self.T),
            "stabilized_at": self.stabilized_at,
            "closed": self.closed,
            "coset_count": self.coset_count,
        }


def _require_zmax_base(e: Extension) -> None:
    if e.K.rank != 1 or not e.K.group.is_total:
        raise BaseNotZmax("archimedeanization needs K = Z_max")


def _clean(e: Extension, S: Sequence[Element]) -> tuple[Unit, ...]:
    out = set()
    for s in S:
        if isinstance(e.L.check(s), Zero):
            raise ZeroGenerator("the generating set may not contain zero")
        out.add(s)
    return tuple(sorted(out, key=lambda s: s.exp))


def inverse_difference_set(e: Extension, S: Sequence[Element]) -> tuple[Unit, ...]:
    """{s1^-1 s2 : s1, s2 in S}, deduplicated and sorted by exponent."""
    S = _clean(e, S)
    L = e.L
    return tuple(sorted({L.div(s2, s1) for s1 in S for s2 in S}, key=lambda x: x.exp))


def _bounded_by(e: Extension, x: Unit, M: int) -> bool:
    L = e.L
    up, down = e.u_pow(M), e.u_pow(-M)
    return L.add(x, up) == up and L.add(x, down) == x


def find_M(e: Extension, S: Sequence[Element], bound: int = DEFAULT_BOUND) -> int:
    """Least M <= bound that works for every x in S^-1 S.

    The construction presumes L archimedean over Z_max, so each s in S must
    itself be squeezed between u^-M and u^M for some M <= bound; otherwise
    (and when no M works for S^-1 S) SearchExhausted is raised.
    """
    _require_zmax_base(e)
    S = _clean(e, S)
    for s in S:
        if not any(_bounded_by(e, s, M) for M in range(bound + 1)):
            raise SearchExhausted(f"{s!r} is not bounded by powers of u within {bound}", bound)
    D = inverse_difference_set(e, S)
    for M in range(bound + 1):
        if all(_bounded_by(e, x, M) for x in D):
            assert all(_bounded_by(e, x, M + 1) for x in D), "M + 1 must work whenever M does"
            return M
    raise SearchExhausted(f"no M <= {bound} bounds S^-1 S", bound)


def build_T(e: Extension, S: Sequence[Element], M: int) -> ArchimedeanizationRun:
    _require_zmax_base(e)
    S = _clean(e, S)
    L = e.L
    N = (M + 1) * len(S)
    shifts = {L.mul(e.u_pow(k), s) for k in range(-M, 1) for s in S}
    cur = set(S)
    sizes = [len(cur)]
    n = 0
    while True:
        assert len(cur) <= len(S) ** (n + 1) * (M + 1) ** n, f"|T_{n}| exceeds the counting bound"
        nxt = {L.add(t, w) for t in cur for w in shifts}
        assert cur <= nxt, f"T_{n} is not contained in T_{n + 1}"
        if nxt == cur:
            break
        if n >= N:
            raise AssertionError(f"T_n has not stabilized by N = {N}")
        n += 1
        cur = nxt
        sizes.append(len(cur))
    T = tuple(sorted(cur, key=lambda t: t.exp))
    red = CosetReducer(e.matrix)
    cosets = len({red.key(t.exp) for t in T})
    return ArchimedeanizationRun(S, M, N, T, tuple(sizes), n, cosets)


def check_T_closed(e: Extension, run: ArchimedeanizationRun, bound: int = DEFAULT_BOUND) -> bool:
    """Whether t1 + u^a t2 lies in T Z_max for all t1, t2 in T, |a| <= bound.

    T Z_max is the union of the K^x-cosets of elements of T, so membership
    is exact coset membership (any power of u allowed).
    """
    L = e.L
    red = CosetReducer(e.matrix)
    keys = {red.key(t.exp) for t in run.T}
    for a in range(-bound, bound + 1):
        ua = e.u_pow(a)
        for t1 in run.T:
            for t2 in run.T:
                w = L.add(t1, L.mul(ua, t2))
                if red.key(w.exp) not in keys:
                    return False
    return True


def unit_index_upper_bound(run: ArchimedeanizationRun) -> int:
    """Number of K^x-classes met by T; an upper bound for ui(L / Z_max)."""
    return run.coset_count


def archimedeanize(
    e: Extension, S: Sequence[Element] | None = None, bound: int = DEFAULT_BOUND
) -> ArchimedeanizationRun:
    """find_M, build_T and check_T_closed in sequence."""
    if S is None:
        if e.generators is None:
            raise ValueError("no generating set given and the extension carries none")
        S = e.generators
    M = find_M(e, S, bound)
    run = build_T(e, S, M)
    return replace(run, closed=check_T_closed(e, run, bound))


def evaluate_sum(e: Extension, s: Unit, terms: Sequence[tuple[int, Unit]]) -> Element:
    """s + sum u^k_i s_i."""
    L = e.L
    return L.sum([s] + [L.mul(e.u_pow(k), si) for k, si in terms])


def drop_negligible(terms: Sequence[tuple[int, Unit]], M: int) -> list[tuple[int, Unit]]:
    """Remove the terms with k_i < -M, which cannot change the sum."""
    return [(k, si) for k, si in terms if k >= -M]
