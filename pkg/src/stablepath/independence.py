"""Independence polynomials: I(G, x) = sum over k of i_k x^k, where i_k
counts the independent sets of size k.

Three evaluation routes, all exact:

* a memoized deletion recursion I(G) = I(G - v) + x * I(G - N[v]) over
  bitmask subsets of the host graph, splitting into connected components
  (the polynomial is multiplicative over components);
* a leaves-first dynamic program for forests, which scales to forests with
  tens of thousands of vertices;
* brute-force subset enumeration, deliberately unoptimized, used as the
  independent oracle in tests.
"""

from __future__ import annotations

from .graph import Graph, _positions_from_mask
from .poly import ONE, Poly, X

__all__ = [
    "independence_polynomial",
    "independence_polynomial_bruteforce",
]


def independence_polynomial(g: Graph, method: str = "auto") -> Poly:
    """Exact independence polynomial of g.

    ``method`` selects the evaluation route: "auto" uses the forest dynamic
    program when g is a forest and the memoized deletion recursion otherwise;
    "forest" and "recursion" force a route ("forest" rejects non-forests).
    """
    if method == "auto":
        return _forest_indpoly(g) if g.is_forest() else _memoized_indpoly(g)
    if method == "forest":
        if not g.is_forest():
            raise ValueError("forest method requires a forest")
        return _forest_indpoly(g)
    if method == "recursion":
        return _memoized_indpoly(g)
    raise ValueError(f"unknown method {method!r}")


def _memoized_indpoly(g: Graph, pivot: str = "max-degree") -> Poly:
    """Deletion recursion with memoization on vertex-subset bitmasks.

    The pivot is the maximum-degree vertex of the current component with ties
    broken by smallest label; the result is pivot-independent (tested), the
    choice only affects how many subsets get memoized.  The memo table lives
    for one call and is discarded.
    """
    adj = g._adj_masks
    memo: dict[int, Poly] = {}

    def pick(mask: int) -> int:
        positions = _positions_from_mask(mask)
        if pivot == "max-degree":
            return max(positions, key=lambda p: ((adj[p] & mask).bit_count(), -p))
        if pivot == "min-label":
            return positions[0]
        if pivot == "max-label":
            return positions[-1]
        raise ValueError(f"unknown pivot rule {pivot!r}")

    def rec(mask: int) -> Poly:
        if mask == 0:
            return ONE
        got = memo.get(mask)
        if got is not None:
            return got
        comps = g._component_masks_within(mask)
        if len(comps) > 1:
            result = ONE
            for comp in comps:
                result = result * rec(comp)
        else:
            v = pick(mask)
            bit = 1 << v
            result = rec(mask & ~bit) + rec(mask & ~(adj[v] | bit)).times_x()
        memo[mask] = result
        return result

    return rec(g._full_mask)


def _forest_indpoly(g: Graph) -> Poly:
    """Leaves-first dynamic program over a forest.

    For each vertex v, ``excl[v]`` counts independent sets of v's subtree
    avoiding v and ``incl[v]`` those containing v; children are combined by
    convolution.  Traversal is iterative so very deep trees are fine.
    """
    nbr = g._nbr
    n = g.n
    visited = bytearray(n)
    total = ONE
    for root in range(n):
        if visited[root]:
            continue
        order: list[int] = []
        parent = {root: -1}
        stack = [root]
        visited[root] = 1
        while stack:
            v = stack.pop()
            order.append(v)
            for w in nbr[v]:
                if not visited[w]:
                    visited[w] = 1
                    parent[w] = v
                    stack.append(w)
        excl: dict[int, Poly] = {}
        incl: dict[int, Poly] = {}
        for v in reversed(order):
            e = ONE
            i = ONE
            for w in nbr[v]:
                if w != parent[v]:
                    e = e * (excl[w] + incl[w])
                    i = i * excl[w]
                    del excl[w], incl[w]
            excl[v] = e
            incl[v] = i.times_x()
        total = total * (excl[root] + incl[root])
    return total


def independence_polynomial_bruteforce(g: Graph, max_vertices: int = 24) -> Poly:
    """Count independent sets by enumerating all 2^n vertex subsets.

    Exponential on purpose (this is the trusted oracle); refuses graphs with
    more than ``max_vertices`` vertices.
    """
    n = g.n
    if n > max_vertices:
        raise ValueError(f"brute force capped at {max_vertices} vertices, got {n}")
    adj = g._adj_masks
    counts = [0] * (n + 1)
    for mask in range(1 << n):
        rest = mask
        independent = True
        while rest:
            low = rest & -rest
            p = low.bit_length() - 1
            if adj[p] & mask:
                independent = False
                break
            rest ^= low
        if independent:
            counts[mask.bit_count()] += 1
    return Poly(counts)
