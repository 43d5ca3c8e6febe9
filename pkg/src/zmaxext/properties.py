"""Randomised property suites behind ``zmaxext verify``.

Each suite takes a seeded ``random.Random`` and a trial count and returns
a list of :class:`PropertyResult`. A failing property carries the first
counterexample found.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import analysis, archimedeanization as arch, classification as cls
from .extensions import (
    Extension,
    embed_element,
    make_Fn,
    make_identity,
    make_lex_example,
    make_scaled,
    make_subgroup_extension,
)
from .lattice import INFINITE, CosetReducer, IntMatrix, count_order_dividing, in_span, lattice_basis
from .ordered_groups import componentwise, lex, weighted, zmax_group, OrderedGroup
from .semifield import (
    ZERO,
    Element,
    Semifield,
    Unit,
    Zero,
    check_monotonic_division,
    finite_subsemifield_check,
    torsion_free_units_check,
)

SAMPLE_RANGE = 8


@dataclass
class PropertyResult:
    name: str
    passed: bool
    trials: int
    counterexample: Any = None

    def to_json(self) -> dict:
        from .serialize import encode

        return {
            "name": self.name,
            "passed": self.passed,
            "trials": self.trials,
            "counterexample": encode(self.counterexample),
        }


def lemma_semifields() -> list[tuple[str, Semifield]]:
    out = [("B", Semifield(OrderedGroup(0)))]
    for k in (1, 2, 3):
        out.append((f"lex{k}", Semifield(lex(k))))
    for k in (2, 3):
        out.append((f"componentwise{k}", Semifield(componentwise(k))))
    for n in range(1, 7):
        out.append((f"weights(1/{n})", Semifield(weighted(Fraction(1, n)))))
    return out


def random_unit(rng: random.Random, F: Semifield, r: int = SAMPLE_RANGE) -> Unit:
    return Unit(tuple(rng.randint(-r, r) for _ in range(F.rank)))


def random_element(rng: random.Random, F: Semifield, r: int = SAMPLE_RANGE) -> Element:
    return ZERO if rng.random() < 0.1 else random_unit(rng, F, r)


def _run(name: str, trials: int, body: Callable[[int], Any]) -> PropertyResult:
    """Call body(i) for each trial; a non-None return is a counterexample."""
    for i in range(trials):
        bad = body(i)
        if bad is not None:
            return PropertyResult(name, False, i + 1, bad)
    return PropertyResult(name, True, trials)


def axioms_suite(rng: random.Random, trials: int) -> list[PropertyResult]:
    results = []
    for label, F in lemma_semifields():
        def body(_, F=F):
            a, b, c = (random_element(rng, F) for _ in range(3))
            add, mul = F.add, F.mul
            checks = {
                "add associative": add(add(a, b), c) == add(a, add(b, c)),
                "add commutative": add(a, b) == add(b, a),
                "mul associative": mul(mul(a, b), c) == mul(a, mul(b, c)),
                "mul commutative": mul(a, b) == mul(b, a),
                "distributive": mul(a, add(b, c)) == add(mul(a, b), mul(a, c)),
                "zero neutral": add(ZERO, a) == a,
                "zero absorbing": mul(ZERO, a) == ZERO,
                "one neutral": mul(F.one(), a) == a,
                "idempotent": add(a, a) == a,
            }
            failed = [k for k, ok in checks.items() if not ok]
            return {"axioms": failed, "a": a, "b": b, "c": c} if failed else None

        results.append(_run(f"semiring axioms on {label}", trials, body))
        if F.is_selective:
            def body(_, F=F):
                a, b = random_element(rng, F), random_element(rng, F)
                return None if F.add(a, b) in (a, b) else [a, b]

            results.append(_run(f"selective on {label}", trials, body))
        else:
            samples = [(random_unit(rng, F), random_unit(rng, F)) for _ in range(100)]
            pair = analysis.find_nonselective_pair(F, samples)
            results.append(PropertyResult(f"non-selective pair found on {label}", pair is not None, 100))
    return results


def monotonic_division_suite(rng: random.Random, trials: int) -> list[PropertyResult]:
    results = []
    for label, F in lemma_semifields():
        def body(_, F=F):
            x, y = random_element(rng, F), random_element(rng, F)
            if rng.random() < 0.5 and not isinstance(x, Zero):
                # bias toward x <= y so the premise actually holds
                y = F.add(x, y)
            n = rng.randint(1, 6)
            return None if check_monotonic_division(F, x, y, n) else [x, y, n]

        results.append(_run(f"monotonic division on {label}", trials, body))
    return results


def roots_of_unity_suite(rng: random.Random, trials: int) -> list[PropertyResult]:
    results = []
    for label, F in lemma_semifields():
        if F.rank == 0:
            continue

        def sample(F=F):
            while True:
                x = random_unit(rng, F)
                if x != F.one():
                    return x

        def body(_, F=F):
            x = sample()
            return None if torsion_free_units_check(F, x, 24) else x

        results.append(_run(f"torsion-free units on {label}", trials, body))

        def body(_, F=F):
            x = sample()
            return None if finite_subsemifield_check(F, x, 10) else x

        results.append(_run(f"powers pairwise distinct on {label}", trials, body))
    return results


def _canonical_S(n: int) -> list[Unit]:
    return [Unit((k,)) for k in range(n)]


def archimedeanization_suite(rng: random.Random, trials: int) -> list[PropertyResult]:
    results = []

    def family(_):
        for n in range(1, 11):
            e = make_Fn(n)
            run = arch.archimedeanize(e, _canonical_S(n), bound=8)
            S = len(run.S)
            checks = {
                "stabilized by N": run.stabilized_at <= run.N == (run.M + 1) * S,
                "level size bound": all(
                    size <= S ** (k + 1) * (run.M + 1) ** k for k, size in enumerate(run.level_sizes)
                ),
                "closed": run.closed,
                "unit index agreement": arch.unit_index_upper_bound(run) == cls.unit_index(e) == n,
                "M": run.M == (0 if n == 1 else 1),
            }
            failed = [k for k, ok in checks.items() if not ok]
            if failed:
                return {"n": n, "failed": failed, "run": run.report()}
        return None

    results.append(_run("T-set construction on F^(1..10)", 1, family))

    e = make_Fn(4)
    S = _canonical_S(4) + [e.L.mul(e.u(), Unit((1,)))]
    run = arch.archimedeanize(e, S, bound=8)
    results.append(
        PropertyResult("redundant generators dedup to 4 cosets", arch.unit_index_upper_bound(run) == 4, 1, None)
    )

    exts = [make_Fn(n) for n in (2, 3, 5)] + [make_scaled(3)]

    def negligible(_):
        e = rng.choice(exts)
        S = list(e.generators)
        M = arch.find_M(e, S, 16)
        s = rng.choice(S)
        terms = [(rng.randint(-3 * M - 5, 0), rng.choice(S)) for _ in range(rng.randint(1, 6))]
        full = arch.evaluate_sum(e, s, terms)
        short = arch.evaluate_sum(e, s, arch.drop_negligible(terms, M))
        return None if full == short else {"extension": e.name, "s": s, "terms": terms}

    results.append(_run("terms with k < -M are negligible", trials, negligible))
    return results


def convex_examples() -> list[Extension]:
    return [
        make_lex_example(),
        make_identity(),
        make_identity(lex(2)),
        make_subgroup_extension(componentwise(2), IntMatrix.of([[0], [1]]), name="componentwise-axis"),
        make_subgroup_extension(lex(3), IntMatrix.of([[0, 0], [1, 0], [0, 1]]), name="lex3-over-lex2"),
    ]


def analysis_examples() -> list[Extension]:
    return convex_examples() + [make_Fn(2), make_Fn(3), make_scaled(4)]


def convexity_suite(rng: random.Random, trials: int, bound: int = 6) -> list[PropertyResult]:
    results = []
    for e in analysis_examples():
        L = e.L
        gens = analysis.arch_subextension(e, bound)
        basis = lattice_basis(gens, L.rank)

        def span_element():
            coeffs = [rng.randint(-3, 3) for _ in gens]
            return Unit(tuple(sum(c * g[i] for c, g in zip(coeffs, gens)) for i in range(L.rank)))

        def body(_, L=L, basis=basis, span_element=span_element):
            y = span_element()
            z = Unit(L.group.meet(y.exp, span_element().exp))
            r = random_unit(rng, L)
            x = Unit(L.group.meet(L.group.join(r.exp, z.exp), y.exp))
            assert L.add(x, y) == y and L.add(x, z) == x
            return None if in_span(basis, x.exp) else {"x": x, "y": y, "z": z}

        results.append(_run(f"L_arch is convex in {e.name}", trials, body))

        v = analysis.is_convex(e, bound)
        if v.is_yes:
            image = lattice_basis(e.matrix.columns(), L.rank)
            results.append(
                PropertyResult(f"no doubly bounded element outside K in {e.name}", basis == image, 1, gens)
            )

    for n in range(1, 13):
        for e in (make_Fn(n), make_scaled(n)):
            v = analysis.is_archimedean(e, 16)
            if not v.is_yes:
                results.append(PropertyResult(f"{e.name} is archimedean", False, 1, v.certificate))
                break
        else:
            continue
        break
    else:
        results.append(PropertyResult("F^(n), scaled(n), n <= 12 are archimedean", True, 24))
    return results


def quotient_suite(rng: random.Random, trials: int, bound: int = 6) -> list[PropertyResult]:
    results = []
    for e in convex_examples():
        Q = analysis.quotient(e, bound)
        L, K = e.L, e.K

        def k_elem(positive: bool):
            if K.rank == 0:
                return K.one()
            m = random_unit(rng, K)
            if positive:
                # k + 1 = k as in the first case of the well-definedness argument
                m = Unit(K.group.join(m.exp, K.group.zero()))
            return m

        def well_defined(i, Q=Q, L=L):
            x, y = random_element(rng, L), random_element(rng, L)
            k1 = embed_element(Q.base, k_elem(i % 2 == 0))
            k2 = embed_element(Q.base, k_elem(i % 2 == 0))
            x2, y2 = L.mul(k1, x), L.mul(k2, y)
            if not (Q.equivalent(x, x2) and Q.equivalent(y, y2)):
                return {"reason": "lifts not equivalent", "x": x, "y": y}
            if Q.project(L.add(x, y)) != Q.project(L.add(x2, y2)):
                return {"x": x, "y": y, "x'": x2, "y'": y2}
            return None

        results.append(_run(f"quotient addition well defined for {e.name}", trials, well_defined))

        def homomorphism(_, Q=Q, L=L):
            a, b = random_element(rng, L), random_element(rng, L)
            pa, pb = Q.project(a), Q.project(b)
            ok = (
                Q.project(L.add(a, b)) == Q.add(pa, pb) == Q.semifield.add(pa, pb)
                and Q.project(L.mul(a, b)) == Q.mul(pa, pb) == Q.semifield.mul(pa, pb)
            )
            return None if ok else [a, b]

        results.append(_run(f"projection is a homomorphism for {e.name}", trials, homomorphism))
    return results


def brute_force_subgroup_orders(m: int) -> list[int]:
    """Orders of all subgroups of Z/m, found by closing every pair of elements."""
    seen = set()
    for g1 in range(m):
        for g2 in range(g1, m):
            H = {0}
            frontier = [0]
            while frontier:
                h = frontier.pop()
                for g in (g1, g2):
                    k = (h + g) % m
                    if k not in H:
                        H.add(k)
                        frontier.append(k)
            seen.add(frozenset(H))
    return sorted(len(H) for H in seen)


def classification_suite(rng: random.Random, trials: int, window: int = 20) -> list[PropertyResult]:
    results = []

    def fn_family(_):
        for n in range(1, 21):
            e = make_Fn(n)
            res = cls.classify(e, window)
            if res.n != n or not res.verified or not cls.same_as_Fn_up_to_basis(e, res.n):
                return {"n": n, "got": res.report()}
            Fn = make_Fn(res.n)
            xs = [Unit((a,)) for a in range(-window, window + 1)]
            for x in xs:
                for y in xs:
                    if res.to_Fn(e.L.add(x, y)) != Fn.L.add(res.to_Fn(x), res.to_Fn(y)):
                        return {"n": n, "x": x, "y": y, "law": "add"}
                    if res.to_Fn(e.L.mul(x, y)) != Fn.L.mul(res.to_Fn(x), res.to_Fn(y)):
                        return {"n": n, "x": x, "y": y, "law": "mul"}
            if len({res.to_Fn(x) for x in xs}) != len(xs):
                return {"n": n, "law": "injective"}
        return None

    results.append(_run("classify(F^(n)) recovers n, n <= 20", 1, fn_family))

    def scaled_family(_):
        for n in range(1, 21):
            e = make_scaled(n)
            res = cls.classify(e, window)
            if res.n != n:
                return {"n": n, "got": res.n}
            for a in range(-50, 51):
                want = Unit(e.iso_to_Fn.apply((a,)))
                if res.to_Fn(Unit((a,))) != want or want != Unit((a,)):
                    return {"n": n, "a": a}
        return None

    results.append(_run("classify(scaled(n)) reproduces a/n -> u^a", 1, scaled_family))

    def uniqueness(_):
        for m in range(1, 25):
            idx = [s.index for s in cls.subextensions(make_Fn(m), window)]
            if idx != brute_force_subgroup_orders(m):
                return {"m": m, "got": idx}
            if len(set(idx)) != len(idx):
                return {"m": m, "duplicate": idx}
        return None

    results.append(_run("one subextension per divisor, m <= 24", 1, uniqueness))

    def order_count(_):
        exts = [make_Fn(n) for n in range(1, 13)] + [make_scaled(n) for n in range(1, 13)] + [make_lex_example()]
        for e in exts:
            for n in range(1, 25):
                if count_order_dividing(e.matrix, n) > n:
                    return {"extension": e.name, "n": n}
        return None

    results.append(_run("at most n elements of order dividing n", 1, order_count))
    return results


SUITES: dict[str, Callable[[random.Random, int], list[PropertyResult]]] = {
    "axioms": axioms_suite,
    "monotonic-division": monotonic_division_suite,
    "roots-of-unity": roots_of_unity_suite,
    "archimedeanization": archimedeanization_suite,
    "convexity": convexity_suite,
    "quotient": quotient_suite,
    "classification": classification_suite,
}


def run_suite(name: str, seed: int = 0, trials: int = 500) -> list[PropertyResult]:
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(name)
    out = []
    for n in names:
        # each suite gets its own stream so results do not depend on suite order
        out.extend(SUITES[n](random.Random(f"{seed}:{n}"), trials))
    return out
