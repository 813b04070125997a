#!/usr/bin/env python3
"""Wall-clock scaling of the pruned tree matcher, as CSV.

Holds the pattern length fixed while the adversarial tree doubles in
size; a linear-time matcher should show a time ratio near 2 per step.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from oppm.gen import gen_adversarial
from oppm.pattern import build_pattern_tables
from oppm.treematch import match_tree


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heights", default="10,11,12,13,14")
    parser.add_argument("--pattern-length", type=int, default=6)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    print("h,N,m,median_seconds,ratio_to_previous")
    previous = None
    for h in sorted(int(tok) for tok in args.heights.split(",")):
        inst = gen_adversarial(h, args.pattern_length)
        tables = build_pattern_tables(inst.pattern)
        times = []
        for _ in range(args.repeats):
            start = time.perf_counter()
            match_tree(tables, inst.tree, prune=True)
            times.append(time.perf_counter() - start)
        med = sorted(times)[len(times) // 2]
        ratio = "" if previous is None else f"{med / previous:.2f}"
        print(f"{h},{inst.tree.node_count},{args.pattern_length},{med:.6f},{ratio}")
        previous = med


if __name__ == "__main__":
    main()
