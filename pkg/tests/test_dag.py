"""DAG validation, subsequence-graph construction, and path matching."""

import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oppm.dag import (
    DagValidationError,
    build_dag,
    build_dasg,
    match_dag,
    match_dag_explored,
    opsm,
)
from oppm.gen import gen_random_dag
from oppm.oracles import is_subsequence, naive_isomorphic, naive_opsm
from oppm.pattern import build_pattern_tables

FIG_TEXT = (5, 2, 1, 4, 3, 6)


def dasg_path_spells(dag, s):
    """Walk from the source; out-labels are distinct, so the walk is forced."""
    step = {}
    for u, c, v in dag.edges:
        step[(u, c)] = v
    u = 0
    for c in s:
        if (u, c) not in step:
            return False
        u = step[(u, c)]
    return True


class TestBuildDag:
    def test_parallel_edges_allowed(self):
        dag = build_dag(2, [(0, 1, 1), (0, 2, 1)])
        assert len(dag.edges) == 2

    def test_unknown_vertex_rejected(self):
        with pytest.raises(DagValidationError, match="unknown target vertex 9"):
            build_dag(2, [(0, 1, 9)])

    def test_cycle_rejected(self):
        with pytest.raises(DagValidationError, match="cycle"):
            build_dag(3, [(0, 1, 1), (1, 1, 2), (2, 1, 0)])

    def test_self_loop_rejected(self):
        with pytest.raises(DagValidationError, match="cycle"):
            build_dag(1, [(0, 1, 0)])

    def test_topological_order_is_consistent(self):
        dag = build_dag(4, [(0, 1, 1), (0, 2, 2), (1, 3, 3), (2, 1, 3)])
        pos = {u: i for i, u in enumerate(dag.topo_order)}
        assert sorted(pos) == [0, 1, 2, 3]
        assert all(pos[u] < pos[v] for u, _, v in dag.edges)


class TestBuildDasg:
    def test_reference_instance_shape(self):
        dag = build_dasg(FIG_TEXT)
        assert dag.vertex_count == 7
        assert len(dag.edges) == 21
        assert sum(1 for e in dag.edges if e[0] == 0) == 6

    def test_empty_text(self):
        dag = build_dasg(())
        assert dag.vertex_count == 1
        assert dag.edges == ()

    def test_repeated_character_blocks_skip_edge(self):
        dag = build_dasg((1, 1))
        assert sorted(dag.edges) == [(0, 1, 1), (1, 1, 2)]

    def test_in_edges_share_one_label_and_out_labels_distinct(self):
        rng = random.Random(3)
        for _ in range(50):
            t = [rng.randint(1, 3) for _ in range(rng.randint(0, 12))]
            dag = build_dasg(t)
            for j in range(1, dag.vertex_count):
                in_labels = {c for u, c, v in dag.edges if v == j}
                assert in_labels == {t[j - 1]}
            for u in range(dag.vertex_count):
                out = [c for uu, c, _ in dag.edges if uu == u]
                assert len(out) == len(set(out))

    def test_edge_count_bounded_by_text_times_alphabet(self):
        rng = random.Random(9)
        for _ in range(50):
            t = [rng.randint(1, 4) for _ in range(rng.randint(0, 12))]
            dag = build_dasg(t)
            assert len(dag.edges) <= len(t) * len(set(t))

    @given(st.lists(st.integers(1, 3), max_size=10), st.lists(st.integers(1, 3), max_size=10))
    def test_paths_from_source_are_exactly_subsequences(self, t, s):
        dag = build_dasg(t)
        assert dasg_path_spells(dag, s) == is_subsequence(s, t)


class TestMatchDag:
    def test_increasing_triple_witness(self):
        dag = build_dasg(FIG_TEXT)
        witness = match_dag(build_pattern_tables((1, 2, 3)), dag)
        assert witness == [0, 2, 4, 6]
        labels = [FIG_TEXT[v - 1] for v in witness[1:]]
        assert labels == [2, 4, 6]

    def test_decreasing_triple_witness(self):
        dag = build_dasg(FIG_TEXT)
        witness = match_dag(build_pattern_tables((3, 2, 1)), dag)
        assert witness is not None
        labels = [FIG_TEXT[v - 1] for v in witness[1:]]
        assert naive_isomorphic((3, 2, 1), labels)

    def test_pattern_longer_than_longest_path(self):
        dag = build_dag(3, [(0, 5, 1), (1, 7, 2)])
        assert match_dag(build_pattern_tables((1, 2, 3, 4)), dag) is None

    def test_unanchored_start(self):
        # only a path starting away from vertex 0 matches
        dag = build_dag(4, [(0, 9, 1), (1, 1, 2), (2, 2, 3)])
        witness = match_dag(build_pattern_tables((1, 2)), dag)
        assert witness == [1, 2, 3]

    def test_general_dag_with_parallel_edges(self):
        dag = build_dag(3, [(0, 5, 1), (0, 1, 1), (1, 2, 2), (1, 9, 2)])
        witness = match_dag(build_pattern_tables((1, 2)), dag)
        assert witness == [0, 1, 2]

    def test_matches_exhaustive_path_enumeration(self):
        rng = random.Random(17)
        for _ in range(150):
            v = rng.randint(1, 7)
            dag = gen_random_dag(v, 0.5, 3, rng.randrange(2**30))
            m = rng.randint(1, 4)
            p = [rng.randint(1, 3) for _ in range(m)]
            adj = [[] for _ in range(v)]
            for u, c, w in dag.edges:
                adj[u].append((w, c))
            found = []

            def walk(u, labels):
                if len(labels) == m:
                    found.append(list(labels))
                    return
                for w, c in adj[u]:
                    labels.append(c)
                    walk(w, labels)
                    labels.pop()

            for s in range(v):
                walk(s, [])
            expected = any(naive_isomorphic(p, labels) for labels in found)
            witness = match_dag(build_pattern_tables(p), dag)
            assert (witness is not None) == expected

    def test_explored_count_grows_with_organ_pipe_size(self):
        counts = []
        for n in (6, 8, 10):
            t = []
            for k in range(1, n, 2):
                t.extend((k + 1, k))
            p = tuple(range(1, n // 2 + 2))
            witness, explored = match_dag_explored(
                build_pattern_tables(p), build_dasg(t)
            )
            assert witness is None
            counts.append(explored)
        assert counts[0] < counts[1] < counts[2]


class TestOpsm:
    def test_reference_instance(self):
        assert opsm((1, 2, 3), FIG_TEXT) is True

    def test_no_increasing_pair(self):
        assert opsm((1, 2), (2, 1)) is False

    def test_pattern_longer_than_text(self):
        assert opsm((1, 2, 3), (1, 2)) is False

    def test_empty_pattern_matches_vacuously(self):
        assert opsm((), (4, 2)) is True
        assert naive_opsm((), (4, 2)) is True

    def test_witnesses_verify_against_pattern(self):
        rng = random.Random(23)
        for _ in range(200):
            sigma = rng.choice((2, 4, 50))
            t = [rng.randint(1, sigma) for _ in range(rng.randint(0, 12))]
            m = rng.randint(1, 6)
            p = [rng.randint(1, sigma) for _ in range(m)]
            dag = build_dasg(t)
            witness = match_dag(build_pattern_tables(p), dag)
            if witness is None:
                continue
            labels = [t[v - 1] for v in witness[1:]]
            assert naive_isomorphic(p, labels)
            assert is_subsequence(labels, t)

    def test_matches_brute_force_enumeration(self):
        rng = random.Random(29)
        for _ in range(300):
            sigma = rng.choice((2, 4, 50))
            t = [rng.randint(1, sigma) for _ in range(rng.randint(0, 12))]
            m = rng.randint(1, 6)
            p = [rng.randint(1, sigma) for _ in range(m)]
            assert opsm(p, t) == naive_opsm(p, t)

    def test_exhaustive_tiny_instances(self):
        for tn in range(0, 5):
            for t in product((1, 2), repeat=tn):
                for m in range(1, 4):
                    for p in product((1, 2), repeat=m):
                        assert opsm(p, t) == naive_opsm(p, t)
