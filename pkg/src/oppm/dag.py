"""Order-preserving matching over edge-labeled DAGs.

Includes the subsequence-graph construction that reduces order-preserving
subsequence matching to DAG path matching.  The path search is a
backtracking DFS: the problem is NP-complete, so exponential worst-case
cost is expected.  States (vertex, matched length) must NOT be memoized:
whether a partial path can be extended depends on the concrete labels
along the whole path, not just its length, so merging such states is
unsound.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from .pattern import PatternTables, build_pattern_tables


class DagValidationError(ValueError):
    """Raised when an edge list does not describe an acyclic graph."""


@dataclass(frozen=True)
class TextDag:
    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]  # (source, label, target)
    topo_order: tuple[int, ...]


def build_dag(vertex_count: int, edges: Sequence[tuple[int, int, int]]) -> TextDag:
    """Validate (source, label, target) triples and compute a topological order.

    Parallel edges are allowed.  Raises DagValidationError on out-of-range
    vertex ids or on a cycle, naming an edge inside the cyclic part.
    """
    n = vertex_count
    for u, _, v in edges:
        if not 0 <= u < n:
            raise DagValidationError(f"unknown source vertex {u}")
        if not 0 <= v < n:
            raise DagValidationError(f"unknown target vertex {v}")

    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for u, _, v in edges:
        indeg[v] += 1
        out[u].append(v)
    ready = [u for u in range(n) if indeg[u] == 0]
    order = []
    for u in ready:
        order.append(u)
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    if len(order) != n:
        left = set(range(n)) - set(order)
        u, _, v = next(e for e in edges if e[0] in left and e[2] in left)
        raise DagValidationError(f"cycle detected through edge {u} -> {v}")

    return TextDag(
        vertex_count=n,
        edges=tuple((u, c, v) for u, c, v in edges),
        topo_order=tuple(order),
    )


def build_dasg(t: Sequence[int]) -> TextDag:
    """Build the subsequence graph of ``t``.

    Vertices are v_0..v_n.  There is an edge (v_i, c, v_j) exactly when
    position j (1-based) is the first occurrence of c after position i,
    so paths from v_0 spell exactly the subsequences of t.  Out-edges of
    any vertex carry pairwise distinct labels, and all in-edges of v_j
    carry t[j].
    """
    n = len(t)
    edges = []
    for i in range(n + 1):
        seen = set()
        for j in range(i + 1, n + 1):
            c = t[j - 1]
            if c not in seen:
                seen.add(c)
                edges.append((i, c, j))
    return build_dag(n + 1, edges)


def match_dag(tables: PatternTables, dag: TextDag) -> list[int] | None:
    """Find a directed path whose m labels op-match the pattern.

    Returns the path as a vertex sequence of length m+1, or None.  Every
    vertex is considered as a path start; starts are tried in ascending
    order and out-edges in (target, label) order, so the returned witness
    is deterministic.  Vertices whose longest outgoing path is too short
    are skipped; this prunes cost but never answers.
    """
    witness, _ = match_dag_explored(tables, dag)
    return witness


def match_dag_explored(tables: PatternTables, dag: TextDag) -> tuple[list[int] | None, int]:
    """Like match_dag, also returning the number of edge extensions attempted.

    The count is the cost measure used to exhibit exponential growth on
    subsequence-graph inputs.
    """
    m = len(tables.values)
    lmax, lmin = tables.lmax, tables.lmin
    n = dag.vertex_count

    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, c, v in dag.edges:
        adj[u].append((v, c))
    for lst in adj:
        lst.sort()

    # longest path leaving each vertex, for admissible depth pruning
    longest = [0] * n
    for u in reversed(dag.topo_order):
        for v, _ in adj[u]:
            if longest[v] + 1 > longest[u]:
                longest[u] = longest[v] + 1

    labels = [0] * m
    verts = [0] * (m + 1)
    explored = 0
    for s in range(n):
        if longest[s] < m:
            continue
        verts[0] = s
        stack = [iter(adj[s])]
        while stack:
            i = len(stack) - 1  # labels[0..i-1] matched so far
            descended = False
            for v, c in stack[-1]:
                if longest[v] < m - i - 1:
                    continue
                explored += 1
                a = lmax[i]
                b = lmin[i]
                alpha = a == 0 or labels[a - 1] < c
                beta = b == 0 or c < labels[b - 1]
                if alpha != beta:
                    continue
                labels[i] = c
                verts[i + 1] = v
                if i + 1 == m:
                    return list(verts), explored
                stack.append(iter(adj[v]))
                descended = True
                break
            if not descended:
                stack.pop()
    return None, explored


def opsm(p: Sequence[int], t: Sequence[int]) -> bool:
    """Decide whether some subsequence of ``t`` op-matches ``p``.

    Reduction: p op-matches a subsequence of t iff p op-matches a path in
    the subsequence graph of t.  The empty pattern matches vacuously.
    """
    if len(p) == 0:
        return True
    tables = build_pattern_tables(p)
    return match_dag(tables, build_dasg(t)) is not None
