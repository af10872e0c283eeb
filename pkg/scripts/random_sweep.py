"""Compare the two arrangements on many random quasi-symmetric systems.

    python scripts/random_sweep.py --count 1000 --max-rank 4 --seed 1
"""

import argparse
import random
import time
from collections import Counter

from qsdisc import compare_arrangements, horn_is_constant
from qsdisc.random_systems import random_non_qs_cy_system, random_qs_system


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-rank", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    verdicts, ranks, families = Counter(), Counter(), 0
    start = time.perf_counter()
    for _ in range(args.count):
        ws = random_qs_system(rng, rng.randint(1, args.max_rank))
        rep = compare_arrangements(ws)
        verdicts[rep.verdict] += 1
        ranks[ws.k] += 1
        families += len(rep.matches)
        if rep.counterexample is not None:
            print("counterexample:", ws, rep.counterexample)
    non_constant = sum(
        horn_is_constant(random_non_qs_cy_system(rng, rng.randint(2, max(2, args.max_rank)))) is None
        for _ in range(args.count)
    )
    elapsed = time.perf_counter() - start
    print(f"verdicts: {dict(verdicts)}  ranks: {dict(sorted(ranks.items()))}  families: {families}")
    print(f"non-QS CY systems with non-constant Horn map: {non_constant}/{args.count}")
    print(f"{elapsed:.1f}s")


if __name__ == "__main__":
    main()
