import random
from itertools import combinations

import pytest

from stablepath.graph import Graph, format_edge_list, parse_edge_list

# five-vertex demo graph: triangle 1-2-5 plus edges 1-3, 2-4, 3-4
DEMO_EDGES = [(1, 2), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4)]


@pytest.fixture
def demo():
    return Graph.from_edges(DEMO_EDGES)


def random_graph(rng, n, p):
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.from_edges(edges, vertices=range(1, n + 1))


class TestConstruction:
    def test_vertices_and_counts(self, demo):
        assert demo.vertices == (1, 2, 3, 4, 5)
        assert demo.n == 5
        assert demo.m == 6

    def test_isolated_vertices(self):
        g = Graph.from_edges([(1, 2)], vertices=[5])
        assert g.vertices == (1, 2, 5)
        assert g.degree(5) == 0

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges([(1, 1)])

    def test_rejects_bad_labels(self):
        with pytest.raises(ValueError):
            Graph.from_edges([(-1, 2)])
        with pytest.raises((TypeError, ValueError)):
            Graph.from_edges([(True, 2)])
        with pytest.raises((TypeError, ValueError)):
            Graph.from_edges([(1.5, 2)])

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges([(1, 2), (2, 1), (1, 2)])
        assert g.m == 1

    def test_equality_and_hash(self, demo):
        again = Graph.from_edges(list(reversed(DEMO_EDGES)))
        assert demo == again
        assert hash(demo) == hash(again)
        assert demo != demo.without(5)


class TestAdjacency:
    def test_neighbors_sorted(self, demo):
        assert demo.neighbors(1) == (2, 3, 5)
        assert demo.neighbors(4) == (2, 3)
        assert demo.degree(2) == 3

    def test_has_edge(self, demo):
        assert demo.has_edge(1, 2)
        assert demo.has_edge(2, 1)
        assert not demo.has_edge(1, 4)

    def test_edges_sorted(self, demo):
        assert demo.edges() == [(1, 2), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4)]

    def test_unknown_vertex(self, demo):
        with pytest.raises(ValueError):
            demo.neighbors(9)

    def test_closed_neighborhood(self, demo):
        assert demo.closed_neighborhood(1).labels == (1, 2, 3, 5)
        k1 = Graph.from_edges(vertices=[7])
        assert k1.closed_neighborhood(7).labels == (7,)
        path = Graph.from_edges([(1, 2), (2, 3)])
        assert path.closed_neighborhood(2).labels == (1, 2, 3)


class TestSubgraphs:
    def test_induced_demo(self, demo):
        sub = demo.induced_subgraph(demo.subset([2, 3, 4, 5]))
        assert sub.vertices == (2, 3, 4, 5)
        assert sub.edges() == [(2, 4), (2, 5), (3, 4)]

    def test_induced_identity_and_empty(self, demo):
        assert demo.induced_subgraph(demo.full_subset()) == demo
        assert demo.induced_subgraph(demo.empty_subset()).n == 0

    def test_induced_member_validation(self, demo):
        with pytest.raises(ValueError):
            demo.subset([1, 9])

    def test_without(self, demo):
        assert demo.without(1).vertices == (2, 3, 4, 5)
        assert demo.without([1, 2]).edges() == [(3, 4)]

    def test_induced_chain_composes(self):
        rng = random.Random(2)
        for _ in range(20):
            g = random_graph(rng, 8, 0.4)
            s = [v for v in g.vertices if rng.random() < 0.7]
            t = [v for v in s if rng.random() < 0.7]
            via_s = g.induced_subgraph(g.subset(s))
            assert via_s.induced_subgraph(via_s.subset(t)) == g.induced_subgraph(
                g.subset(t)
            )


class TestComponents:
    def test_connected_graph_single_component(self, demo):
        comps = demo.connected_components()
        assert len(comps) == 1
        assert comps[0].labels == (1, 2, 3, 4, 5)
        assert demo.is_connected()

    def test_edgeless_graph_singletons(self):
        g = Graph.from_edges(vertices=range(4))
        comps = g.connected_components()
        assert [c.labels for c in comps] == [(0,), (1,), (2,), (3,)]

    def test_demo_minus_closed_neighborhood(self, demo):
        rest = demo.without(demo.closed_neighborhood(1).labels)
        assert [c.labels for c in rest.connected_components()] == [(4,)]

    def test_components_ordered_by_smallest_member(self):
        g = Graph.from_edges([(5, 6), (1, 2)])
        assert [c.labels for c in g.connected_components()] == [(1, 2), (5, 6)]

    def test_partition_property(self):
        rng = random.Random(4)
        for _ in range(20):
            g = random_graph(rng, 9, 0.15)
            comps = g.connected_components()
            seen = [v for c in comps for v in c.labels]
            assert sorted(seen) == list(g.vertices)

    def test_is_forest(self, demo):
        assert not demo.is_forest()
        assert Graph.from_edges([(1, 2), (2, 3), (4, 5)]).is_forest()


class TestClawFree:
    def test_star_is_the_claw(self):
        star = Graph.from_edges([(0, 1), (0, 2), (0, 3)])
        assert not star.is_claw_free()

    def test_complete_graphs(self):
        k4 = Graph.from_edges(list(combinations(range(4), 2)))
        assert k4.is_claw_free()

    def test_triangle_chain(self):
        # path 1..4 with an apex over edge (1,2): claw-free
        g = Graph.from_edges([(1, 2), (2, 3), (3, 4), (1, 5), (2, 5)])
        assert g.is_claw_free()

    def test_agrees_with_bruteforce(self):
        def brute(g):
            for quad in combinations(g.vertices, 4):
                for center in quad:
                    leaves = [v for v in quad if v != center]
                    if all(g.has_edge(center, v) for v in leaves) and not any(
                        g.has_edge(a, b) for a, b in combinations(leaves, 2)
                    ):
                        return False
            return True

        rng = random.Random(8)
        for _ in range(60):
            g = random_graph(rng, rng.randint(4, 9), rng.choice((0.2, 0.4, 0.6)))
            assert g.is_claw_free() == brute(g)

    def test_hereditary(self):
        rng = random.Random(9)
        for _ in range(30):
            g = random_graph(rng, 8, 0.5)
            if not g.is_claw_free():
                continue
            keep = [v for v in g.vertices if rng.random() < 0.6]
            assert g.induced_subgraph(g.subset(keep)).is_claw_free()


class TestVertexSubset:
    def test_set_algebra(self, demo):
        a = demo.subset([1, 2, 3])
        b = demo.subset([3, 4])
        assert (a | b).labels == (1, 2, 3, 4)
        assert (a & b).labels == (3,)
        assert (a - b).labels == (1, 2)
        assert b.complement().labels == (1, 2, 5)

    def test_iteration_and_membership(self, demo):
        s = demo.subset([4, 1])
        assert list(s) == [1, 4]
        assert len(s) == 2
        assert 4 in s and 2 not in s

    def test_cross_host_rejected(self, demo):
        other = Graph.from_edges([(1, 2)])
        with pytest.raises(ValueError):
            demo.subset([1]) | other.subset([1])


class TestEdgeListFormat:
    def test_round_trip(self, demo):
        assert parse_edge_list(format_edge_list(demo)) == demo

    def test_round_trip_isolated(self):
        g = Graph.from_edges([(1, 2)], vertices=[9])
        assert parse_edge_list(format_edge_list(g)) == g

    def test_round_trip_random(self):
        rng = random.Random(12)
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 10), 0.3)
            assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blanks(self):
        text = "# a comment\n\n2 1\n# mid\n1 2\n"
        g = parse_edge_list(text)
        assert g.vertices == (1, 2)
        assert g.m == 1

    def test_single_token_declares_isolated_vertex(self):
        g = parse_edge_list("3 1\n1 2\n7\n")
        assert g.vertices == (1, 2, 7)
        assert g.degree(7) == 0

    def test_header_errors(self):
        with pytest.raises(ValueError, match="line 1"):
            parse_edge_list("x y\n")
        with pytest.raises(ValueError, match="line 1"):
            parse_edge_list("3\n")
        with pytest.raises(ValueError):
            parse_edge_list("")

    def test_count_mismatches(self):
        with pytest.raises(ValueError):
            parse_edge_list("2 2\n1 2\n")  # fewer edges than declared
        with pytest.raises(ValueError):
            parse_edge_list("5 1\n1 2\n")  # vertex count wrong

    def test_bad_edge_lines(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_edge_list("2 1\n1 2 3\n")
        with pytest.raises(ValueError, match="line 2"):
            parse_edge_list("2 1\na b\n")
        with pytest.raises(ValueError):
            parse_edge_list("1 1\n1 1\n")  # self-loop
