"""Check the polynomial identities on random small instances and report counts.

    python3 scripts/identity_suite.py --trials 50 --seed 7
"""

import argparse
import random
from dataclasses import dataclass

from vecpart import identities as idn


@dataclass
class Config:
    trials: int = 20
    seed: int = 0


def parts(rng, m):
    return tuple(rng.randint(1, 5) for _ in range(m))


def run(cfg):
    rng = random.Random(cfg.seed)
    makers = {
        "recursion": lambda: idn.recursion(rng.randint(0, 5), parts(rng, rng.randint(1, 4))),
        "reflection": lambda: idn.reflection(rng.randint(0, 5), parts(rng, rng.randint(1, 4))),
        "binomial": lambda: idn.binomial(rng.randint(0, 5), parts(rng, 2), parts(rng, 2)),
        "multiplication (r.d/p)": lambda: idn.multiplication_sum(rng.randint(0, 5), parts(rng, rng.randint(1, 3)), rng.choice([2, 3])),
        "multiplication (single index)": lambda: idn.multiplication_sum_single(rng.randint(0, 5), parts(rng, rng.randint(1, 3)), rng.choice([2, 3])),
        "Bernoulli-Eulerian (rho=-1)": lambda: idn.bernoulli_eulerian(rng.randint(1, 5), rng.choice([2, 4]), -1),
    }
    for name, make in makers.items():
        ok = sum(1 for _ in range(cfg.trials) if (lambda pair: pair[0] == pair[1])(make()))
        print(f"{name:32s} {ok}/{cfg.trials}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    run(Config(**vars(parser.parse_args())))
