"""Survey of Ore witness sizes: deg s~ against the number of weight components."""

import argparse
import random
from collections import Counter

from redalg.coeff import degree
from redalg.drsl2 import build, random_element
from redalg.ncalg import weight_components
from redalg.ore import Denominator, ore_right, witness_defect


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=200)
    args = ap.parse_args()

    p = build().presentation
    rng = random.Random(args.seed)
    table = Counter()
    bad = 0
    for _ in range(args.trials):
        a = random_element(rng, 3, p, max_terms=5)
        s = Denominator(rng.randint(-5, 5))
        w = ore_right(a, s)
        bad += not witness_defect(a, s, w, p).is_zero()
        table[len(weight_components(a)), int(degree(w.s_tilde))] += 1
    print(f"{'weights':>7} {'deg s~':>6} {'count':>6}")
    for (n, dg), c in sorted(table.items()):
        print(f"{n:>7} {dg:>6} {c:>6}")
    print(f"defects: {bad}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
