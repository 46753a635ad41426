"""B-queue validation, greedy construction, and the exhaustive oracle."""

import random

import pytest

from fancore import (
    BQueue,
    GraphError,
    Multigraph,
    ResourceLimitError,
    exhaustive_full_bqueue,
    greedy_full_bqueue,
    validate_bqueue,
)
from helpers import all_simple_graphs_up_to, cycle_graph, fixture, path_graph, random_simple_graph


class TestValidate:
    def test_single_edge_queue(self):
        g = Multigraph(edges=[("u", "v", 1)])
        q = BQueue(graph=g, order=("u",), sets=(frozenset(), frozenset({"u", "v"})))
        assert validate_bqueue(q)

    def test_triangle_has_no_first_vertex(self):
        g = fixture("c3.graph")
        for u in g.labels:
            closed = frozenset(g.neighbours(u)) | {u}
            q = BQueue(graph=g, order=(u,), sets=(frozenset(), closed))
            assert not validate_bqueue(q)  # step adds three vertices

    def test_empty_queue_on_edgeless_graph(self):
        q = BQueue(graph=Multigraph(), order=(), sets=(frozenset(),))
        assert validate_bqueue(q)
        assert q.is_full()

    def test_wrong_set_rejected(self):
        g = Multigraph(edges=[("u", "v", 1)])
        q = BQueue(graph=g, order=("u",), sets=(frozenset(), frozenset({"u"})))
        assert not validate_bqueue(q)

    def test_repeated_vertex_rejected(self):
        g = path_graph(["a", "b", "c"])
        full = frozenset(g.labels)
        q = BQueue(graph=g, order=("b", "b"), sets=(frozenset(), full, full))
        assert not validate_bqueue(q)

    def test_multigraph_rejected(self):
        g = Multigraph(edges=[("u", "v", 2)])
        q = BQueue(graph=g, order=(), sets=(frozenset(),))
        with pytest.raises(GraphError):
            validate_bqueue(q)


class TestGreedy:
    @pytest.mark.parametrize(
        "name", ["forest-path4.graph", "forest-spider.graph"]
    )
    def test_forests_have_full_queues(self, name):
        b = fixture(name)
        q = greedy_full_bqueue(b)
        assert q is not None
        assert validate_bqueue(q)
        assert q.is_full()

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
    def test_bare_cycles_fail(self, n):
        assert greedy_full_bqueue(cycle_graph(n)) is None

    def test_figure_counterexample_fails(self):
        assert greedy_full_bqueue(fixture("fig2-h4.graph")) is None
        assert greedy_full_bqueue(fixture("h5.graph")) is None

    def test_cycle_with_pendant_succeeds(self):
        q = greedy_full_bqueue(fixture("cycle-pendant.graph"))
        assert q is not None and q.is_full() and validate_bqueue(q)

    def test_isolated_vertices_enqueue_alone(self):
        g = Multigraph(vertices=["i1", "i2"], edges=[("a", "b", 1)])
        q = greedy_full_bqueue(g)
        assert q is not None and q.is_full()
        assert set(q.order) >= {"i1", "i2"}

    def test_empty_graph(self):
        q = greedy_full_bqueue(Multigraph())
        assert q is not None and q.order == () and q.is_full()

    def test_multigraph_rejected(self):
        with pytest.raises(GraphError):
            greedy_full_bqueue(fixture("double-edge.graph"))


class TestExhaustive:
    def test_forest_found(self):
        q = exhaustive_full_bqueue(fixture("forest-spider.graph"))
        assert q is not None and q.is_full() and validate_bqueue(q)

    def test_c5_absent(self):
        assert exhaustive_full_bqueue(fixture("c5.graph")) is None

    def test_cycle_plus_pendant_found(self):
        assert exhaustive_full_bqueue(fixture("cycle-pendant.graph")) is not None

    def test_cap(self):
        big = path_graph([f"p{i}" for i in range(12)])
        with pytest.raises(ResourceLimitError):
            exhaustive_full_bqueue(big)
        assert exhaustive_full_bqueue(big, max_vertices=12) is not None


class TestAgreement:
    def test_greedy_matches_exhaustive_up_to_5(self):
        for g in all_simple_graphs_up_to(5):
            greedy = greedy_full_bqueue(g)
            exact = exhaustive_full_bqueue(g)
            assert (greedy is None) == (exact is None), g.classes()
            for q in (greedy, exact):
                if q is not None:
                    assert validate_bqueue(q) and q.is_full()

    def test_greedy_matches_exhaustive_random_6_to_8(self):
        rng = random.Random(20240810)
        for _ in range(1500):
            g = random_simple_graph(rng, rng.choice([6, 7, 8]), rng.uniform(0.1, 0.9))
            greedy = greedy_full_bqueue(g)
            exact = exhaustive_full_bqueue(g)
            assert (greedy is None) == (exact is None), g.classes()

    def test_pendant_monotonicity_on_cycles(self):
        # once a cycle has one pendant, adding more pendants keeps fullness
        for n in (3, 4, 5, 6):
            base = cycle_graph(n)
            edges = list(base.classes())
            for pendants in range(1, 4):
                edges_p = edges + [
                    (f"x{i % n}", f"pend{i}", 1) for i in range(pendants)
                ]
                g = Multigraph(base.labels, edges_p)
                q = greedy_full_bqueue(g)
                assert q is not None and q.is_full()
