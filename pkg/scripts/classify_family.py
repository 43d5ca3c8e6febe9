"""Classify F^(n) and ((1/n)Z)_max and list their subextensions."""

import argparse
from dataclasses import dataclass

from zmaxext.classification import classify, subextensions
from zmaxext.extensions import make_Fn, make_scaled


@dataclass
class Config:
    n_max: int = 24
    window: int = 20


def main(cfg: Config) -> None:
    print(f"{'n':>3} {'F^(n)':>6} {'scaled':>7}  subextension indices")
    for n in range(1, cfg.n_max + 1):
        a = classify(make_Fn(n), cfg.window).n
        b = classify(make_scaled(n), cfg.window).n
        idx = [s.index for s in subextensions(make_Fn(n), cfg.window)]
        print(f"{n:>3} {a:>6} {b:>7}  {idx}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--window", type=int, default=Config.window)
    a = p.parse_args()
    main(Config(a.n_max, a.window))
