"""Verdict table for the built-in and a few hand-made extensions."""

import argparse
from dataclasses import dataclass

from zmaxext.analysis import arch_subextension, is_archimedean, is_convex, selectivity
from zmaxext.classification import unit_index
from zmaxext.extensions import make_Fn, make_identity, make_lex_example, make_scaled, make_subgroup_extension
from zmaxext.lattice import IntMatrix
from zmaxext.ordered_groups import componentwise, lex


@dataclass
class Config:
    bound: int = 16


def examples():
    return [
        make_Fn(2),
        make_Fn(3),
        make_scaled(4),
        make_lex_example(),
        make_identity(),
        make_subgroup_extension(componentwise(2), IntMatrix.of([[0], [1]]), name="Z in Z^2 (componentwise)"),
        make_subgroup_extension(lex(2), IntMatrix.of([[1], [0]]), name="first axis in lex Z^2"),
        make_subgroup_extension(lex(2), IntMatrix.of([[1], [1]]), name="diagonal in lex Z^2"),
    ]


def main(cfg: Config) -> None:
    print(f"{'extension':<28} {'selective':>9} {'archimedean':>11} {'convex':>7} {'ui':>9}  L_arch basis")
    for e in examples():
        a = is_archimedean(e, cfg.bound).outcome.value
        c = is_convex(e, cfg.bound).outcome.value
        print(
            f"{e.name:<28} {str(selectivity(e.L)):>9} {a:>11} {c:>7} {unit_index(e)!s:>9}  "
            f"{arch_subextension(e, cfg.bound)}"
        )


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--bound", type=int, default=Config.bound)
    main(Config(p.parse_args().bound))
