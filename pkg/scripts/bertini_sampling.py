"""Schematic Bertini on random hyperplanes: (f, df)|_H versus (g, dg), g = f|_H.

    python3 scripts/bertini_sampling.py --f "x*y*z" --samples 50
    python3 scripts/bertini_sampling.py --f "x^5*z + x^3*y^3 + y^5*z"
"""

import argparse
import random
import time
from dataclasses import dataclass

from logdiv.poly import parse_poly
from logdiv.singular import bertini_schematic_check, sample_hyperplane


@dataclass
class Config:
    f: str = "x*y*z"
    nvars: int = 3
    samples: int = 20
    seed: int = 0
    coeff_range: int = 7


def main(cfg: Config):
    f = parse_poly(cfg.f, cfg.nvars)
    rng = random.Random(cfg.seed)
    tally = {True: 0, False: 0, None: 0}
    for _ in range(cfg.samples):
        H, chart = sample_hyperplane(rng, cfg.nvars, -cfg.coeff_range, cfg.coeff_range, f=f)
        t0 = time.perf_counter()
        r = bertini_schematic_check(f, H, chart)
        tally[r] += 1
        print(f"{str(H):<28} {str(r):<6} {time.perf_counter() - t0:.3f}s")
    print(f"equal {tally[True]}, different {tally[False]}, undecided {tally[None]}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--f", default="x*y*z")
    p.add_argument("--nvars", type=int, default=3)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coeff-range", type=int, default=7)
    main(Config(**vars(p.parse_args())))
