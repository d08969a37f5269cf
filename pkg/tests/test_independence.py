import random
from itertools import combinations
from math import comb

import pytest

from stablepath.graph import Graph
from stablepath.independence import (
    _forest_indpoly,
    _memoized_indpoly,
    independence_polynomial,
    independence_polynomial_bruteforce,
)
from stablepath.poly import Poly, X

DEMO_EDGES = [(1, 2), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4)]


def random_graph(rng, n, p):
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.from_edges(edges, vertices=range(1, n + 1))


class TestKnownValues:
    def test_single_vertex(self):
        assert independence_polynomial(Graph.from_edges(vertices=[0])) == Poly((1, 1))

    def test_empty_graph(self):
        assert independence_polynomial(Graph.from_edges()) == Poly((1,))

    def test_edgeless(self):
        g = Graph.from_edges(vertices=range(6))
        assert independence_polynomial(g) == Poly((1, 1)) ** 6

    def test_single_edge(self):
        assert independence_polynomial(Graph.from_edges([(0, 1)])) == Poly((1, 2))

    def test_five_cycle(self):
        g = Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
        assert independence_polynomial(g) == Poly((1, 5, 5))

    def test_claw(self):
        g = Graph.from_edges([(0, 1), (0, 2), (0, 3)])
        assert independence_polynomial(g) == Poly((1, 4, 3, 1))

    def test_demo_graph(self):
        g = Graph.from_edges(DEMO_EDGES)
        assert independence_polynomial(g) == Poly((1, 5, 4))

    def test_complete_graph(self):
        g = Graph.from_edges(list(combinations(range(5), 2)))
        assert independence_polynomial(g) == Poly((1, 5))


class TestBruteforce:
    def test_known_values(self):
        assert independence_polynomial_bruteforce(
            Graph.from_edges([(0, 1)])
        ) == Poly((1, 2))
        g = Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
        assert independence_polynomial_bruteforce(g) == Poly((1, 5, 5))

    def test_size_bound(self):
        g = Graph.from_edges(vertices=range(25))
        with pytest.raises(ValueError):
            independence_polynomial_bruteforce(g)
        small = Graph.from_edges(vertices=range(12))
        with pytest.raises(ValueError):
            independence_polynomial_bruteforce(small, max_vertices=11)
        assert independence_polynomial_bruteforce(small, max_vertices=12) == Poly(
            (1, 1)
        ) ** 12

    def test_agrees_with_recursion(self):
        rng = random.Random(21)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 10), rng.choice((0.2, 0.5, 0.8)))
            assert independence_polynomial_bruteforce(g) == independence_polynomial(g)


class TestRecursionStructure:
    def test_deletion_identity(self):
        rng = random.Random(22)
        for _ in range(25):
            g = random_graph(rng, rng.randint(2, 9), 0.4)
            for u in g.vertices:
                whole = independence_polynomial(g)
                minus_u = independence_polynomial(g.without(u))
                minus_nbhd = independence_polynomial(
                    g.without(g.closed_neighborhood(u).labels)
                )
                assert whole == minus_u + X * minus_nbhd

    def test_multiplicative_over_components(self):
        rng = random.Random(23)
        for _ in range(20):
            a = random_graph(rng, 6, 0.5)
            shift = 100
            b_edges = [(u + shift, v + shift) for u, v in a.edges()]
            union = Graph.from_edges(
                list(a.edges()) + b_edges,
                vertices=list(a.vertices) + [v + shift for v in a.vertices],
            )
            pa = independence_polynomial(a)
            assert independence_polynomial(union) == pa * pa

    def test_pivot_choice_is_irrelevant(self):
        rng = random.Random(24)
        for _ in range(15):
            g = random_graph(rng, 9, 0.4)
            results = {
                _memoized_indpoly(g, pivot=rule)
                for rule in ("max-degree", "min-label", "max-label")
            }
            assert len(results) == 1

    def test_coefficient_sanity(self):
        rng = random.Random(25)
        for _ in range(25):
            g = random_graph(rng, rng.randint(2, 10), 0.4)
            p = independence_polynomial(g)
            assert p.coefficient(0) == 1
            assert p.coefficient(1) == g.n
            assert p.coefficient(2) == comb(g.n, 2) - g.m


class TestForestPath:
    def test_forest_matches_recursion(self):
        rng = random.Random(26)
        for _ in range(25):
            # random forest: a few random recursive trees glued side by side
            edges = []
            base = 0
            for _ in range(rng.randint(1, 3)):
                k = rng.randint(1, 7)
                edges += [
                    (base + rng.randint(0, i - 1), base + i) for i in range(1, k)
                ]
                base += k
            g = Graph.from_edges(edges, vertices=range(base))
            assert g.is_forest()
            assert _forest_indpoly(g) == _memoized_indpoly(g)

    def test_forest_method_validates(self):
        triangle = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
        with pytest.raises(ValueError):
            independence_polynomial(triangle, method="forest")

    def test_method_dispatch(self):
        path = Graph.from_edges([(0, 1), (1, 2)])
        expected = Poly((1, 3, 1))
        assert independence_polynomial(path, method="forest") == expected
        assert independence_polynomial(path, method="recursion") == expected
        assert independence_polynomial(path, method="auto") == expected
        with pytest.raises(ValueError):
            independence_polynomial(path, method="nope")

    def test_large_path(self):
        # I(P_n) coefficients are binomials C(n-k+1, k)
        n = 40
        g = Graph.from_edges([(i, i + 1) for i in range(n - 1)])
        p = independence_polynomial(g)
        assert p.coeffs == tuple(
            comb(n - k + 1, k) for k in range(p.degree + 1)
        )
