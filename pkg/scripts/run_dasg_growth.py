#!/usr/bin/env python3
"""Path-search cost growth on subsequence graphs, as CSV.

Each text of even length n consists of swapped adjacent pairs
(2, 1, 4, 3, ...); the increasing pattern of length n/2 + 1 exceeds the
longest increasing subsequence, so the backtracking search must explore
the whole space and the explored-edge count grows exponentially with n.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from oppm.cli import organ_pipe_instance
from oppm.dag import build_dasg, match_dag_explored
from oppm.pattern import build_pattern_tables


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="6,8,10,12,14,16")
    args = parser.parse_args()

    print("n,m,explored,matched,seconds,ratio_to_previous")
    previous = None
    for n in sorted(int(tok) for tok in args.sizes.split(",")):
        p, t = organ_pipe_instance(n)
        tables = build_pattern_tables(p)
        dag = build_dasg(t)
        start = time.perf_counter()
        witness, explored = match_dag_explored(tables, dag)
        elapsed = time.perf_counter() - start
        matched = "yes" if witness is not None else "no"
        ratio = "" if previous is None else f"{explored / previous:.2f}"
        print(f"{n},{len(p)},{explored},{matched},{elapsed:.6f},{ratio}")
        previous = explored


if __name__ == "__main__":
    main()
