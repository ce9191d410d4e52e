"""Random central arrangements in P^2: freeness census and theorem checks.

For each random arrangement we compute exponents (if free), both
characteristic classes, and the csm-mode section recursion.  Free
arrangements must pass; non-free ones must never report "pass".

    python3 scripts/random_arrangements.py --count 200 --max-lines 7
"""

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from logdiv.arrangement import random_arrangement
from logdiv.logderiv import DivisorSpec
from logdiv.verify import FAIL, NOT_FREE, PASS, main_theorem_check, section_recursion_check


@dataclass
class Config:
    count: int = 100
    max_lines: int = 6
    n: int = 2
    seed: int = 0
    coeff_range: int = 2


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    verdicts = Counter()
    exps = Counter()
    bad = []
    t0 = time.perf_counter()
    for i in range(cfg.count):
        k = rng.randint(1, cfg.max_lines)
        forms = random_arrangement(rng, k, cfg.n, -cfg.coeff_range, cfg.coeff_range)
        D = DivisorSpec.from_arrangement(forms, cfg.n, f"random{i}")
        rep = main_theorem_check(D, seed=cfg.seed)
        verdicts[rep.verdict] += 1
        if rep.verdict == PASS:
            exps[tuple(rep.freeness["exponents"])] += 1
        rec = section_recursion_check(D, "csm", seed=cfg.seed)
        if rep.verdict == FAIL or rec.verdict != PASS or (rep.verdict == NOT_FREE and rep.chern is not None):
            bad.append((i, [str(g) for g in forms], rep.verdict, rec.verdict))
    print(f"{cfg.count} arrangements in P^{cfg.n} ({time.perf_counter() - t0:.1f}s)")
    for v, c in verdicts.most_common():
        print(f"  {v:<26} {c}")
    print("exponents of free arrangements:")
    for e, c in sorted(exps.items()):
        print(f"  {e}: {c}")
    for row in bad:
        print("PROBLEM", row)
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-lines", type=int, default=6)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coeff-range", type=int, default=2)
    raise SystemExit(main(Config(**vars(p.parse_args()))))
