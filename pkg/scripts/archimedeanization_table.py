"""Table of T-set runs for F^(n) with S = {1, v, ..., v^(n-1)}."""

import argparse
import time
from dataclasses import dataclass

from zmaxext.archimedeanization import archimedeanize, unit_index_upper_bound
from zmaxext.classification import unit_index
from zmaxext.extensions import make_Fn
from zmaxext.semifield import Unit


@dataclass
class Config:
    n_max: int = 8
    bound: int = 8


def main(cfg: Config) -> None:
    print(f"{'n':>3} {'M':>3} {'N':>4} {'stab':>5} {'|T|':>5} {'levels':<20} {'closed':>7} {'ui<=':>5} {'ui':>4} {'sec':>7}")
    for n in range(1, cfg.n_max + 1):
        e = make_Fn(n)
        start = time.perf_counter()
        run = archimedeanize(e, [Unit((k,)) for k in range(n)], cfg.bound)
        sec = time.perf_counter() - start
        levels = ",".join(map(str, run.level_sizes))
        print(
            f"{n:>3} {run.M:>3} {run.N:>4} {run.stabilized_at:>5} {len(run.T):>5} {levels:<20} "
            f"{str(run.closed):>7} {unit_index_upper_bound(run):>5} {unit_index(e)!s:>4} {sec:>7.3f}"
        )


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--bound", type=int, default=Config.bound)
    a = p.parse_args()
    main(Config(a.n_max, a.bound))
