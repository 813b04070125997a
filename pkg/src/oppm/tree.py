"""Rooted edge-labeled tree text model.

Node ids are 0..N-1 with node 0 the root.  Each non-root node stores the
label of the edge from its parent, its depth, and the height of its
subtree (the length of the longest downward path to a leaf).
"""

from dataclasses import dataclass


class TreeValidationError(ValueError):
    """Raised when an edge list does not describe a rooted tree."""


@dataclass(frozen=True)
class TextTree:
    node_count: int
    parent: tuple[int, ...]  # parent[0] = -1
    children: tuple[tuple[int, ...], ...]  # input order preserved
    edge_label: tuple[int, ...]  # edge_label[v] labels the edge parent[v] -> v
    depth: tuple[int, ...]
    subtree_height: tuple[int, ...]
    max_depth: int


def build_tree(edges: list[tuple[int, int, int]]) -> TextTree:
    """Build and validate a TextTree from (parent, child, label) triples.

    The node count is one more than the number of edges; ids must cover
    0..N-1 with node 0 the root.  Raises TreeValidationError naming the
    offending node on duplicate children, out-of-range ids, or nodes not
    reachable from the root (which covers both disconnection and cycles).
    """
    n = len(edges) + 1
    parent = [-1] * n
    label = [0] * n
    children: list[list[int]] = [[] for _ in range(n)]
    for u, v, lab in edges:
        if not 0 <= u < n:
            raise TreeValidationError(f"unknown parent id {u}")
        if not 0 <= v < n:
            raise TreeValidationError(f"unknown child id {v}")
        if v == 0:
            raise TreeValidationError("node 0 is the root and cannot be a child")
        if parent[v] != -1:
            raise TreeValidationError(f"duplicate child {v}")
        parent[v] = u
        label[v] = lab
        children[u].append(v)

    # BFS from the root; the visit order has every parent before its children.
    order = [0]
    depth = [0] * n
    for u in order:
        for c in children[u]:
            depth[c] = depth[u] + 1
            order.append(c)
    if len(order) != n:
        reached = set(order)
        missing = min(v for v in range(n) if v not in reached)
        raise TreeValidationError(
            f"node {missing} is not reachable from the root"
        )

    height = [0] * n
    for u in reversed(order):
        if children[u]:
            height[u] = 1 + max(height[c] for c in children[u])

    return TextTree(
        node_count=n,
        parent=tuple(parent),
        children=tuple(tuple(cs) for cs in children),
        edge_label=tuple(label),
        depth=tuple(depth),
        subtree_height=tuple(height),
        max_depth=max(depth),
    )


def compute_subtree_heights(tree: TextTree) -> tuple[int, ...]:
    """Recompute subtree heights with one traversal (children before parents)."""
    order = []
    stack = [0]
    while stack:
        u = stack.pop()
        order.append(u)
        stack.extend(tree.children[u])
    height = [0] * tree.node_count
    for u in reversed(order):  # reversed preorder: descendants come first
        if tree.children[u]:
            height[u] = 1 + max(height[c] for c in tree.children[u])
    return tuple(height)
