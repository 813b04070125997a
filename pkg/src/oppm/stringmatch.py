"""Order-preserving matching over a single text string."""

from collections.abc import Sequence
from dataclasses import dataclass

from .pattern import PatternTables


@dataclass
class MatchStats:
    """Automaton transition counts from one matching run."""

    goto_count: int = 0
    fail_count: int = 0


def match_string(
    tables: PatternTables, t: Sequence[int]
) -> tuple[list[int], MatchStats]:
    """Find every window of ``t`` order-isomorphic to the pattern.

    Returns the ascending list of 1-based end positions together with the
    transition counts.  Overlapping occurrences are all reported: after an
    occurrence the automaton leaves the accepting state through its failure
    transition and keeps scanning.  ``fail_count <= goto_count <= len(t)``
    holds on every input.
    """
    m = len(tables.values)
    lmax, lmin, border = tables.lmax, tables.lmin, tables.border
    out: list[int] = []
    goto = fail = 0
    q = 0
    for j, c in enumerate(t):
        while True:
            a = lmax[q]
            b = lmin[q]
            base = j - q  # 0-based start of the candidate window
            alpha = a == 0 or t[base + a - 1] < c
            beta = b == 0 or c < t[base + b - 1]
            if alpha == beta:
                break
            fail += 1
            q = border[q - 1]
        q += 1
        goto += 1
        if q == m:
            out.append(j + 1)
            fail += 1  # leave the accepting state via its failure arc
            q = border[m - 1]
    return out, MatchStats(goto_count=goto, fail_count=fail)
