"""Instance generators: the adversarial tree family and seeded random inputs.

The adversarial family is a complete binary tree of height h whose root
paths are strictly increasing down to depth h-2, where every node sprouts
a 0-labeled and a 1-labeled child; leaf edges are labeled 0.  Against the
increasing pattern (2, ..., m+1) every 0/1 edge forces a failure chain,
so the unpruned matcher pays m-1 failures at each of the 2^(h-2) deep
branch points while the pruned matcher cuts each chain after two steps.
"""

import random
from dataclasses import dataclass

from .dag import TextDag, build_dag
from .tree import TextTree, build_tree


@dataclass(frozen=True)
class AdversarialInstance:
    tree: TextTree
    pattern: tuple[int, ...]
    h: int
    m: int


def gen_adversarial(h: int, m: int) -> AdversarialInstance:
    """Build the height-h adversarial tree and the pattern (2, ..., m+1).

    Node ids are heap-ordered (children of k are 2k+1 and 2k+2).  The edge
    into a node at depth d is labeled d+1 for d <= h-2, then 0 (left) or
    1 (right) at depth h-1, then 0 at the leaves.  N = 2^(h+1) - 1.
    """
    if h < 3:
        raise ValueError("height must be at least 3")
    if not 1 <= m <= h - 2:
        raise ValueError("pattern length must be between 1 and h - 2")
    n = 2 ** (h + 1) - 1
    edges = []
    for child in range(1, n):
        d = (child + 1).bit_length() - 1  # depth of a heap-ordered node
        if d <= h - 2:
            lab = d + 1
        elif d == h - 1:
            lab = (child - 1) % 2  # odd ids are left children
        else:
            lab = 0
        edges.append(((child - 1) // 2, child, lab))
    tree = build_tree(edges)
    return AdversarialInstance(
        tree=tree, pattern=tuple(range(2, m + 2)), h=h, m=m
    )


def gen_random_string(n: int, sigma: int, seed: int) -> tuple[int, ...]:
    """Uniform characters from 1..sigma; deterministic for a fixed seed."""
    rng = random.Random(seed)
    return tuple(rng.randint(1, sigma) for _ in range(n))


def gen_random_tree(n: int, sigma: int, seed: int) -> TextTree:
    """Attach node i to a uniformly chosen earlier node; labels 1..sigma."""
    rng = random.Random(seed)
    edges = [
        (rng.randrange(i), i, rng.randint(1, sigma)) for i in range(1, n)
    ]
    return build_tree(edges)


def gen_random_dag(v: int, density: float, sigma: int, seed: int) -> TextDag:
    """Independent forward edges i -> j (i < j), acyclic by construction."""
    rng = random.Random(seed)
    edges = []
    for i in range(v):
        for j in range(i + 1, v):
            if rng.random() < density:
                edges.append((i, rng.randint(1, sigma), j))
    return build_dag(v, edges)
