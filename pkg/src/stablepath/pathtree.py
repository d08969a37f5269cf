"""Stable-path trees of rooted graphs and the identities they satisfy.

A path P = (v0, ..., vk) from the root u is *stable* for a decision rule
sigma when for every graph edge (v_i, v_j) with i + 1 < j <= k the rule ranks
the step actually taken below the skipped edge:
sigma(P[:i+1], (v_i, v_{i+1})) < sigma(P[:i+1], (v_i, v_j)).  The stable paths
form a tree T under prefix order, and T satisfies, exactly:

* the ratio identity  I(G - u) * I(T) == I(G) * I(T - root);
* the factor identity I(T) == I(G) * product of independence polynomials of
  the recorded factor subgraphs (see ``factor_decomposition``);
* consequently I(G) divides I(T).

Two decision rules are provided: "label-order" (rank a step by the label of
the vertex stepped to; this reproduces ``stable_path_tree``) and "edge-label"
(rank by a fixed injective numbering of the edges).  A depth-first spanning
tree driven by the same rule (``sigma_dfs_tree``) selects the tree nodes
whose deletion from T leaves quotient exactly I(G) (``reconstruct_from_tree``).
"""

from __future__ import annotations

import random
from collections import Counter, deque
from typing import Iterable, Mapping, Optional, Sequence, Union

from .graph import Graph, VertexSubset, _positions_from_mask
from .independence import independence_polynomial
from .poly import NotDivisibleError, Poly, exact_div

__all__ = [
    "InvalidDecisionError",
    "DeepDecision",
    "RootedTree",
    "FactorList",
    "stable_path_tree",
    "sigma_stable_path_tree",
    "sigma_dfs_tree",
    "factor_decomposition",
    "reconstruct_from_tree",
    "verify_ratio_identity",
    "divides_tree_polynomial",
    "tree_isomorphic",
    "tree_indpoly",
    "to_dot",
]


class InvalidDecisionError(ValueError):
    """The decision rule is incomplete or not injective where required."""


_Edge = Union[tuple[int, int], frozenset]


class DeepDecision:
    """Rule assigning a rank to every (path, incident edge) pair.

    Kinds:

    * ``label-order``: the rank of stepping from the path's endpoint to w is
      the label w itself.
    * ``edge-label``: a fixed integer rank per edge; ranks of edges sharing a
      vertex must be distinct (checked), which is exactly the injectivity the
      stability predicate needs.
    """

    __slots__ = ("kind", "_ranks")

    def __init__(self, kind: str, edge_ranks: Optional[Mapping[_Edge, int]] = None):
        if kind not in ("label-order", "edge-label"):
            raise InvalidDecisionError(f"unknown decision kind {kind!r}")
        ranks = None
        if kind == "edge-label":
            if edge_ranks is None:
                raise InvalidDecisionError("edge-label decision needs edge ranks")
            ranks = {}
            for e, r in edge_ranks.items():
                key = frozenset(e)
                if len(key) != 2:
                    raise InvalidDecisionError(f"bad edge key {e!r}")
                ranks[key] = int(r)
        elif edge_ranks is not None:
            raise InvalidDecisionError("label-order decision takes no edge ranks")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "_ranks", ranks)

    def __setattr__(self, name, value):
        raise AttributeError("DeepDecision is immutable")

    @classmethod
    def label_order(cls) -> "DeepDecision":
        return cls("label-order")

    @classmethod
    def edge_label(cls, edge_ranks: Mapping[_Edge, int]) -> "DeepDecision":
        return cls("edge-label", edge_ranks)

    @classmethod
    def lexicographic(cls, g: Graph) -> "DeepDecision":
        """Edge-label rule ranking edges in sorted (u, v) order."""
        return cls("edge-label", {e: i for i, e in enumerate(g.edges())})

    @classmethod
    def shuffled(cls, g: Graph, rng: random.Random) -> "DeepDecision":
        """Edge-label rule with a uniformly random edge order."""
        es = g.edges()
        rng.shuffle(es)
        return cls("edge-label", {e: i for i, e in enumerate(es)})

    def rank(self, path: Sequence[int], w: int) -> int:
        """Rank of extending ``path`` along the edge (path[-1], w)."""
        if self.kind == "label-order":
            return w
        r = self._ranks.get(frozenset((path[-1], w)))
        if r is None:
            raise InvalidDecisionError(f"no rank for edge ({path[-1]}, {w})")
        return r

    def validate_for(self, g: Graph) -> None:
        """Check the rule covers g and is injective on shared-vertex edges."""
        if self.kind == "label-order":
            return
        for u, v in g.edges():
            if frozenset((u, v)) not in self._ranks:
                raise InvalidDecisionError(f"no rank for edge ({u}, {v})")
        for u in g.vertices:
            seen = {}
            for w in g.neighbors(u):
                r = self._ranks[frozenset((u, w))]
                other = seen.get(r)
                if other is not None:
                    raise InvalidDecisionError(
                        f"edges ({u}, {other}) and ({u}, {w}) share rank {r}"
                    )
                seen[r] = w

    def describe(self) -> str:
        return self.kind

    def __repr__(self) -> str:
        return f"DeepDecision({self.kind!r})"


class RootedTree:
    """Rooted tree whose node i carries the path ``paths[i]`` from the root.

    Node 0 is the root; every child index is larger than its parent's, and
    ``children[i]`` preserves construction order.  Trees are path-closed:
    the parent of a node holds exactly its path minus the last vertex.
    """

    def __init__(
        self,
        paths: list[tuple[int, ...]],
        children: list[list[int]],
        parent: list[int],
    ):
        self.paths = paths
        self.children = children
        self.parent = parent
        self._graph: Optional[Graph] = None
        self._index: Optional[dict[tuple[int, ...], int]] = None

    def __len__(self) -> int:
        return len(self.paths)

    @property
    def size(self) -> int:
        return len(self.paths)

    @property
    def root_label(self) -> int:
        return self.paths[0][0]

    def endpoint(self, i: int) -> int:
        return self.paths[i][-1]

    def node_index(self) -> dict[tuple[int, ...], int]:
        """Map from path to node index (built once, cached)."""
        if self._index is None:
            self._index = {p: i for i, p in enumerate(self.paths)}
        return self._index

    def as_graph(self) -> Graph:
        """The tree as a Graph whose labels are the node indices (cached)."""
        if self._graph is None:
            self._graph = Graph.from_edges(
                ((self.parent[i], i) for i in range(1, len(self.paths))),
                vertices=range(len(self.paths)),
            )
        return self._graph

    def edges_by_endpoint(self) -> list[tuple[int, int]]:
        """Tree edges written as (parent endpoint, child endpoint) pairs."""
        return [
            (self.paths[self.parent[i]][-1], self.paths[i][-1])
            for i in range(1, len(self.paths))
        ]

    def __repr__(self) -> str:
        return f"RootedTree(size={len(self.paths)}, root={self.root_label})"


class _TreeBuilder:
    __slots__ = ("paths", "children", "parent")

    def __init__(self):
        self.paths: list[tuple[int, ...]] = []
        self.children: list[list[int]] = []
        self.parent: list[int] = []

    def add(self, parent: int, path: tuple[int, ...]) -> int:
        idx = len(self.paths)
        self.paths.append(path)
        self.children.append([])
        self.parent.append(parent)
        if parent >= 0:
            self.children[parent].append(idx)
        return idx

    def build(self) -> RootedTree:
        return RootedTree(self.paths, self.children, self.parent)


# -- builders ---------------------------------------------------------------


def stable_path_tree(g: Graph, u: int) -> RootedTree:
    """Stable-path tree of (g, u) under the vertex-label order.

    Defined by the deletion recursion: with N(u) = {u_1 < ... < u_d}, the
    i-th child subtree is the stable-path tree of u_i in the graph with
    u, u_1, ..., u_{i-1} deleted.  Equals ``sigma_stable_path_tree`` with the
    label-order rule (tested).  For forests this is just the tree rooted at
    u, so that case runs without bitmask bookkeeping.
    """
    up = g._position(u)
    if g.is_forest():
        return _rooted_forest_tree(g, up)
    adj = g._adj_masks
    b = _TreeBuilder()
    root = b.add(-1, (u,))
    stack = [(g._full_mask & ~(1 << up), up, root)]
    while stack:
        avail, vpos, node = stack.pop()
        frames = []
        cur = avail
        for w in _positions_from_mask(adj[vpos] & avail):
            cur &= ~(1 << w)
            child = b.add(node, b.paths[node] + (g._labels[w],))
            frames.append((cur, w, child))
        stack.extend(reversed(frames))
    return b.build()


def _rooted_forest_tree(g: Graph, root_pos: int) -> RootedTree:
    b = _TreeBuilder()
    root = b.add(-1, (g._labels[root_pos],))
    stack = [(root_pos, -1, root)]
    while stack:
        vpos, par, node = stack.pop()
        for w in g._nbr[vpos]:
            if w != par:
                child = b.add(node, b.paths[node] + (g._labels[w],))
                stack.append((w, vpos, child))
    return b.build()


def sigma_stable_path_tree(g: Graph, u: int, sigma: Optional[DeepDecision] = None) -> RootedTree:
    """Tree of all sigma-stable paths from u, children ordered by rank.

    Grows paths forward: a stable path stays stable under truncation, so each
    node's children are exactly its one-vertex stable extensions.  With the
    label-order rule this reproduces ``stable_path_tree``.
    """
    if sigma is None:
        sigma = DeepDecision.label_order()
    up = g._position(u)
    sigma.validate_for(g)
    b = _TreeBuilder()
    root = b.add(-1, (u,))
    queue = deque([(root, 1 << up)])
    while queue:
        node, mask = queue.popleft()
        path = b.paths[node]
        vpos = g._pos[path[-1]]
        ranked = []
        for wpos in g._nbr[vpos]:
            if (mask >> wpos) & 1:
                continue
            w = g._labels[wpos]
            if _extension_stable(g, sigma, path, w):
                ranked.append((sigma.rank(path, w), w, wpos))
        ranked.sort()
        for _, w, wpos in ranked:
            child = b.add(node, path + (w,))
            queue.append((child, mask | (1 << wpos)))
    return b.build()


def _extension_stable(g: Graph, sigma: DeepDecision, path: tuple[int, ...], w: int) -> bool:
    # path is stable; check the new pairs (path[i], w) for i < len(path) - 1.
    for i in range(len(path) - 1):
        if g.has_edge(path[i], w):
            prefix = path[: i + 1]
            if not sigma.rank(prefix, path[i + 1]) < sigma.rank(prefix, w):
                return False
    return True


def sigma_dfs_tree(g: Graph, u: int, sigma: Optional[DeepDecision] = None) -> RootedTree:
    """Depth-first spanning tree of u's component driven by the rank rule.

    After arriving at v along path P, the remaining vertices split into
    connected components; each component is entered at its neighbor of v
    with the smallest rank sigma(P, (v, w)), and components are visited in
    ascending rank of their entry edge.  Every path from the root in the
    result is a sigma-stable path of g.
    """
    if sigma is None:
        sigma = DeepDecision.label_order()
    up = g._position(u)
    sigma.validate_for(g)
    adj = g._adj_masks
    comp_mask = _component_mask_of(g, up, g._full_mask)
    b = _TreeBuilder()
    root = b.add(-1, (u,))
    stack = [(comp_mask & ~(1 << up), up, root)]
    while stack:
        rest, vpos, node = stack.pop()
        if not rest:
            continue
        path = b.paths[node]
        entries = []
        for comp in g._component_masks_within(rest):
            cands = _positions_from_mask(adj[vpos] & comp)
            best = min(cands, key=lambda p: sigma.rank(path, g._labels[p]))
            entries.append((sigma.rank(path, g._labels[best]), best, comp))
        entries.sort()
        frames = []
        for _, wpos, comp in entries:
            child = b.add(node, path + (g._labels[wpos],))
            frames.append((comp & ~(1 << wpos), wpos, child))
        stack.extend(reversed(frames))
    return b.build()


def _component_mask_of(g: Graph, start: int, mask: int) -> int:
    adj = g._adj_masks
    comp = 1 << start
    frontier = comp
    while frontier:
        grow = 0
        for p in _positions_from_mask(frontier):
            grow |= adj[p]
        grow &= mask & ~comp
        comp |= grow
        frontier = grow
    return comp


# -- factor decomposition -----------------------------------------------------


class FactorList:
    """Multiset of induced subgraphs with multiplicities.

    Produced by ``factor_decomposition``; satisfies, exactly,
    I(T) == I(G) * product over entries of I(subgraph) ** multiplicity,
    where T is the sigma-stable path tree of the same (g, u, sigma).
    """

    def __init__(self, graph: Graph, entries: Sequence[tuple[VertexSubset, int]]):
        self.graph = graph
        self.entries = tuple(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def factor_polynomials(self) -> list[tuple[Poly, int]]:
        """Independence polynomial and multiplicity of each factor."""
        return [
            (independence_polynomial(self.graph.induced_subgraph(s)), mult)
            for s, mult in self.entries
        ]

    def product_with(self, base: Poly) -> Poly:
        """base * product of factor polynomials raised to multiplicities."""
        out = base
        for p, mult in self.factor_polynomials():
            out = out * p**mult
        return out

    def __repr__(self) -> str:
        inner = ", ".join(f"{set(s.labels)}x{m}" for s, m in self.entries)
        return f"FactorList([{inner}])"


def factor_decomposition(g: Graph, u: int, sigma: Optional[DeepDecision] = None) -> FactorList:
    """Factor subgraphs relating I(T) to I(G) for the tree of (g, u, sigma).

    Mirrors the recursive structure of the path tree: at a node reached along
    P with endpoint v and surviving vertex set S, order the available
    neighbors u_1, ..., u_d of v by rank.  The i-th recursive call descends
    into C_i, the component of u_i in S minus {v, u_1, ..., u_{i-1}}; whenever
    u_i is not the first entry into its component of S - v, that C_i is
    recorded as a factor.  Requires a connected graph.
    """
    if sigma is None:
        sigma = DeepDecision.label_order()
    up = g._position(u)
    if not g.is_connected():
        raise ValueError("factor decomposition requires a connected graph")
    sigma.validate_for(g)
    adj = g._adj_masks
    factors: Counter[int] = Counter()
    stack: list[tuple[int, int, tuple[int, ...]]] = [(g._full_mask & ~(1 << up), up, (u,))]
    while stack:
        rest, vpos, path = stack.pop()
        nbrs = _positions_from_mask(adj[vpos] & rest)
        if not nbrs:
            continue
        order = sorted(nbrs, key=lambda p: sigma.rank(path, g._labels[p]))
        comps = g._component_masks_within(rest)
        entered = [False] * len(comps)
        comp_of = {}
        for ci, comp in enumerate(comps):
            for p in order:
                if (comp >> p) & 1:
                    comp_of[p] = ci
        cur = rest
        for p in order:
            c_i = _component_mask_of(g, p, cur)
            ci = comp_of[p]
            if entered[ci]:
                factors[c_i] += 1
            else:
                entered[ci] = True
            stack.append((c_i & ~(1 << p), p, path + (g._labels[p],)))
            cur &= ~(1 << p)
    entries = [
        (VertexSubset(g, mask), mult)
        for mask, mult in factors.items()
    ]
    entries.sort(key=lambda e: (len(e[0]), e[0].labels))
    return FactorList(g, entries)


# -- identities ---------------------------------------------------------------


def tree_indpoly(t: RootedTree, removed: Iterable[int] = ()) -> Poly:
    """Independence polynomial of the tree, optionally with nodes deleted.

    ``removed`` holds node indices; deletion happens on the tree viewed as a
    graph on its node indices, so the forest dynamic program applies.
    """
    g = t.as_graph()
    removed = set(removed)
    if removed:
        g = g.induced_subgraph(i for i in range(len(t)) if i not in removed)
    return independence_polynomial(g)


def verify_ratio_identity(g: Graph, u: int, sigma: Optional[DeepDecision] = None) -> bool:
    """Check I(G - u) * I(T) == I(G) * I(T - root) in cross-multiplied form."""
    t = sigma_stable_path_tree(g, u, sigma)
    left = independence_polynomial(g.without(u)) * tree_indpoly(t)
    right = independence_polynomial(g) * tree_indpoly(t, removed=(0,))
    return left == right


def divides_tree_polynomial(g: Graph, u: int, sigma: Optional[DeepDecision] = None) -> bool:
    """Whether I(G) exactly divides I(T) for the tree of (g, u, sigma)."""
    if not g.is_connected():
        raise ValueError("divisibility check requires a connected graph")
    t = sigma_stable_path_tree(g, u, sigma)
    try:
        exact_div(tree_indpoly(t), independence_polynomial(g))
    except NotDivisibleError:
        return False
    return True


def reconstruct_from_tree(g: Graph, u: int, sigma: Optional[DeepDecision] = None) -> Poly:
    """Recover I(G) from the path tree alone: I(T) / I(T - F̄), where F̄ is
    the set of tree nodes whose paths occur in the sigma-DFS spanning tree.

    Requires a connected graph.  Raises RuntimeError if the spanning paths
    are not all tree nodes or the division leaves a remainder; both would be
    internal consistency failures, not data errors.
    """
    if not g.is_connected():
        raise ValueError("reconstruction requires a connected graph")
    t = sigma_stable_path_tree(g, u, sigma)
    f = sigma_dfs_tree(g, u, sigma)
    index = t.node_index()
    removed = set()
    for p in f.paths:
        i = index.get(p)
        if i is None:
            raise RuntimeError(f"spanning path {p} is not a stable path of the tree")
        removed.add(i)
    try:
        return exact_div(tree_indpoly(t), tree_indpoly(t, removed=removed))
    except NotDivisibleError:
        raise RuntimeError("tree polynomial not divisible by pruned tree polynomial") from None


# -- rooted-tree isomorphism ----------------------------------------------------


def _canonical_code(t: RootedTree, intern: dict) -> int:
    codes = [0] * len(t)
    for i in range(len(t) - 1, -1, -1):
        key = tuple(sorted(codes[c] for c in t.children[i]))
        code = intern.get(key)
        if code is None:
            code = len(intern)
            intern[key] = code
        codes[i] = code
    return codes[0]


def tree_isomorphic(a: RootedTree, b: RootedTree) -> bool:
    """Rooted-tree isomorphism (labels ignored), canonical-code comparison."""
    if len(a) != len(b):
        return False
    intern: dict = {}
    return _canonical_code(a, intern) == _canonical_code(b, intern)


# -- rendering -------------------------------------------------------------------


def to_dot(t: RootedTree, name: str = "pathtree") -> str:
    """Graphviz DOT text; node ids are full paths, labels are endpoints."""
    def node_id(path: tuple[int, ...]) -> str:
        return '"' + "-".join(map(str, path)) + '"'

    lines = [f"digraph {name} {{"]
    for i, path in enumerate(t.paths):
        lines.append(f"  {node_id(path)} [label=\"{path[-1]}\"];")
    for i in range(1, len(t)):
        lines.append(f"  {node_id(t.paths[t.parent[i]])} -> {node_id(t.paths[i])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
