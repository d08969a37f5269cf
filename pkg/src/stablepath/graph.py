"""Immutable simple graphs with nonnegative integer vertex labels.

Vertices keep their labels through every operation, so deleting vertex 3 from
a graph leaves vertices named exactly as before.  Internally vertices are
indexed by position in the sorted label tuple; small-graph algorithms work on
bitmask subsets of positions while traversals that must scale to very large
forests (tens of thousands of vertices) use adjacency lists directly.
"""

from __future__ import annotations

from bisect import bisect_left
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

__all__ = ["Graph", "VertexSubset", "parse_edge_list", "format_edge_list"]


def _mask_from_positions(positions: Iterable[int]) -> int:
    ps = list(positions)
    if not ps:
        return 0
    buf = bytearray((max(ps) >> 3) + 1)
    for p in ps:
        buf[p >> 3] |= 1 << (p & 7)
    return int.from_bytes(buf, "little")


def _positions_from_mask(mask: int) -> list[int]:
    out: list[int] = []
    base = 0
    while mask:
        chunk = mask & 0xFFFFFFFFFFFFFFFF
        while chunk:
            low = chunk & -chunk
            out.append(base + low.bit_length() - 1)
            chunk ^= low
        mask >>= 64
        base += 64
    return out


class VertexSubset:
    """Set of vertices of a fixed host graph, stored as a position bitmask.

    Supports iteration in ascending label order, membership tests, and
    set algebra (``|``, ``&``, ``-``) between subsets of the same host.
    """

    __slots__ = ("graph", "mask")

    def __init__(self, graph: "Graph", mask: int):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSubset is immutable")

    @property
    def labels(self) -> tuple[int, ...]:
        host = self.graph._labels
        return tuple(host[p] for p in _positions_from_mask(self.mask))

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, label) -> bool:
        pos = self.graph._pos.get(label)
        return pos is not None and (self.mask >> pos) & 1 == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSubset):
            return self.graph is other.graph and self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.graph), self.mask))

    def _check_host(self, other: "VertexSubset") -> None:
        if self.graph is not other.graph:
            raise ValueError("subsets belong to different graphs")

    def __or__(self, other: "VertexSubset") -> "VertexSubset":
        self._check_host(other)
        return VertexSubset(self.graph, self.mask | other.mask)

    def __and__(self, other: "VertexSubset") -> "VertexSubset":
        self._check_host(other)
        return VertexSubset(self.graph, self.mask & other.mask)

    def __sub__(self, other: "VertexSubset") -> "VertexSubset":
        self._check_host(other)
        return VertexSubset(self.graph, self.mask & ~other.mask)

    def complement(self) -> "VertexSubset":
        return VertexSubset(self.graph, self.graph._full_mask & ~self.mask)

    def __repr__(self) -> str:
        return f"VertexSubset({{{', '.join(map(str, self.labels))}}})"


class Graph:
    """Undirected simple graph; vertices are nonnegative integer labels."""

    def __init__(self, labels: Sequence[int], neighbor_positions: Sequence[Sequence[int]]):
        # Internal constructor; use Graph.from_edges.
        self._labels = tuple(labels)
        self._pos = {lab: i for i, lab in enumerate(self._labels)}
        self._nbr = tuple(tuple(ns) for ns in neighbor_positions)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]] = (),
        vertices: Iterable[int] = (),
    ) -> "Graph":
        """Build a graph from an edge list plus optional extra vertices.

        Labels must be nonnegative integers; self-loops are rejected and
        duplicate edges collapse.
        """
        labels = set()
        pairs = []
        for v in vertices:
            labels.add(_check_label(v))
        for u, v in edges:
            u = _check_label(u)
            v = _check_label(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            labels.add(u)
            labels.add(v)
            pairs.append((u, v))
        ordered = sorted(labels)
        pos = {lab: i for i, lab in enumerate(ordered)}
        nbrs: list[set[int]] = [set() for _ in ordered]
        for u, v in pairs:
            nbrs[pos[u]].add(pos[v])
            nbrs[pos[v]].add(pos[u])
        return cls(ordered, [tuple(sorted(s)) for s in nbrs])

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._labels

    @property
    def n(self) -> int:
        return len(self._labels)

    @cached_property
    def m(self) -> int:
        return sum(len(ns) for ns in self._nbr) // 2

    def has_vertex(self, u: int) -> bool:
        return u in self._pos

    def _position(self, u: int) -> int:
        try:
            return self._pos[u]
        except KeyError:
            raise ValueError(f"vertex {u} is not in the graph") from None

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(self._labels[p] for p in self._nbr[self._position(u)])

    def degree(self, u: int) -> int:
        return len(self._nbr[self._position(u)])

    def _has_edge_pos(self, a: int, b: int) -> bool:
        ns = self._nbr[a]
        i = bisect_left(ns, b)
        return i < len(ns) and ns[i] == b

    def has_edge(self, u: int, v: int) -> bool:
        return self._has_edge_pos(self._position(u), self._position(v))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for a in range(self.n):
            la = self._labels[a]
            for b in self._nbr[a]:
                lb = self._labels[b]
                if la < lb:
                    out.append((la, lb))
        out.sort()
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Graph):
            return self._labels == other._labels and self._nbr == other._nbr
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._labels, self._nbr))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- subsets ------------------------------------------------------------

    @cached_property
    def _full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _adj_masks(self) -> tuple[int, ...]:
        """Neighbor bitmask per position (built on demand; quadratic memory)."""
        return tuple(_mask_from_positions(ns) for ns in self._nbr)

    def subset(self, labels: Iterable[int]) -> VertexSubset:
        return VertexSubset(self, _mask_from_positions(self._position(u) for u in labels))

    def full_subset(self) -> VertexSubset:
        return VertexSubset(self, self._full_mask)

    def empty_subset(self) -> VertexSubset:
        return VertexSubset(self, 0)

    def closed_neighborhood(self, u: int) -> VertexSubset:
        p = self._position(u)
        return VertexSubset(self, _mask_from_positions(self._nbr[p]) | (1 << p))

    # -- derived graphs -----------------------------------------------------

    def _induced_by_positions(self, keep: Sequence[int]) -> "Graph":
        keep = sorted(keep)
        remap = {p: i for i, p in enumerate(keep)}
        labels = [self._labels[p] for p in keep]
        nbrs = []
        for p in keep:
            nbrs.append(tuple(remap[q] for q in self._nbr[p] if q in remap))
        return Graph(labels, nbrs)

    def _subset_positions(self, s: Union[VertexSubset, Iterable[int]]) -> list[int]:
        if isinstance(s, VertexSubset):
            if s.graph is not self:
                raise ValueError("subset belongs to a different graph")
            return _positions_from_mask(s.mask)
        return sorted({self._position(u) for u in s})

    def induced_subgraph(self, s: Union[VertexSubset, Iterable[int]]) -> "Graph":
        """Subgraph on the given vertices, labels preserved."""
        return self._induced_by_positions(self._subset_positions(s))

    def without(self, s: Union[VertexSubset, Iterable[int], int]) -> "Graph":
        """Delete a vertex or a set of vertices (labels preserved)."""
        if isinstance(s, int):
            s = (s,)
        drop = set(self._subset_positions(s))
        return self._induced_by_positions([p for p in range(self.n) if p not in drop])

    # -- connectivity ---------------------------------------------------------

    def connected_components(self) -> list[VertexSubset]:
        """Components as vertex subsets, ordered by smallest member."""
        seen = bytearray(self.n)
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = 1
            members = []
            while stack:
                v = stack.pop()
                members.append(v)
                for w in self._nbr[v]:
                    if not seen[w]:
                        seen[w] = 1
                        stack.append(w)
            comps.append(VertexSubset(self, _mask_from_positions(members)))
        return comps

    def _component_positions(self, start: int) -> list[int]:
        seen = bytearray(self.n)
        stack = [start]
        seen[start] = 1
        members = []
        while stack:
            v = stack.pop()
            members.append(v)
            for w in self._nbr[v]:
                if not seen[w]:
                    seen[w] = 1
                    stack.append(w)
        return members

    def _component_masks_within(self, mask: int) -> list[int]:
        """Connected components of the induced subgraph on a position mask."""
        adj = self._adj_masks
        comps = []
        rest = mask
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                grow = 0
                for p in _positions_from_mask(frontier):
                    grow |= adj[p]
                grow &= rest & ~comp
                comp |= grow
                frontier = grow
            comps.append(comp)
            rest &= ~comp
        return comps

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(self._component_positions(0)) == self.n

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.connected_components())

    # -- structure predicates ---------------------------------------------

    def is_claw_free(self) -> bool:
        """True iff no induced K_{1,3}: every vertex's neighborhood has no
        independent triple."""
        for v in range(self.n):
            ns = self._nbr[v]
            if len(ns) < 3:
                continue
            for a, b, c in combinations(ns, 3):
                if not (
                    self._has_edge_pos(a, b)
                    or self._has_edge_pos(a, c)
                    or self._has_edge_pos(b, c)
                ):
                    return False
        return True


def _check_label(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"vertex label {v!r} is not an integer")
    if v < 0:
        raise ValueError(f"vertex label {v} is negative")
    return v


# -- edge-list text format --------------------------------------------------
#
#   # optional comments
#   n m
#   u v          (m edge lines)
#   w            (optional single-label lines declaring isolated vertices)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format; raises ValueError with line numbers."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body.split()))
    if not rows:
        raise ValueError("empty input: missing 'n m' header line")
    lineno, header = rows[0]
    if len(header) != 2:
        raise ValueError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"line {lineno}: header must be two integers") from None
    if n < 0 or m < 0:
        raise ValueError(f"line {lineno}: negative counts in header")
    body_rows = rows[1:]
    if len(body_rows) < m:
        raise ValueError(f"header promises {m} edges but only {len(body_rows)} data lines follow")
    edges = []
    for lineno, toks in body_rows[:m]:
        if len(toks) != 2:
            raise ValueError(f"line {lineno}: expected an edge 'u v'")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ValueError(f"line {lineno}: edge endpoints must be integers") from None
        edges.append((u, v))
    isolated = []
    for lineno, toks in body_rows[m:]:
        if len(toks) != 1:
            raise ValueError(f"line {lineno}: expected a single isolated-vertex label")
        try:
            isolated.append(int(toks[0]))
        except ValueError:
            raise ValueError(f"line {lineno}: vertex label must be an integer") from None
    try:
        g = Graph.from_edges(edges, vertices=isolated)
    except ValueError as exc:
        raise ValueError(str(exc)) from None
    if g.n != n:
        raise ValueError(f"header says {n} vertices but {g.n} distinct labels appear")
    if g.m != m:
        raise ValueError(f"header says {m} edges but {g.m} distinct edges appear")
    return g


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    """Render a graph in the edge-list format (inverse of parse_edge_list)."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    lines.extend(str(u) for u in g.vertices if g.degree(u) == 0)
    return "\n".join(lines) + "\n"
