#!/usr/bin/env python3
"""Failure-transition counts on the adversarial tree family, as CSV.

The pruned matcher's failure count stays proportional to the tree size
while the unpruned count grows with the pattern length as well; the last
column is their ratio.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from oppm.gen import gen_adversarial
from oppm.pattern import build_pattern_tables
from oppm.treematch import match_tree


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--heights", default="6,8,10,12,14")
    parser.add_argument(
        "--pattern-length", type=int, default=None, help="defaults to height - 2"
    )
    args = parser.parse_args()

    print("h,N,m,goto,fail_pruned,fail_naive,ratio")
    for h in sorted(int(tok) for tok in args.heights.split(",")):
        m = args.pattern_length if args.pattern_length is not None else h - 2
        inst = gen_adversarial(h, m)
        tables = build_pattern_tables(inst.pattern)
        pruned = match_tree(tables, inst.tree, prune=True)
        naive = match_tree(tables, inst.tree, prune=False)
        ratio = naive.stats.fail_count / pruned.stats.fail_count
        print(
            f"{h},{inst.tree.node_count},{m},{pruned.stats.goto_count},"
            f"{pruned.stats.fail_count},{naive.stats.fail_count},{ratio:.3f}"
        )


if __name__ == "__main__":
    main()
