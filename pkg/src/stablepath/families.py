"""Generators for the named graph families, with fixed vertex labelings.

Every generator returns a ``FamilyGraph`` carrying the graph, the designated
root used by the path-tree identities, and the family name and index.  The
labelings matter: stable-path trees depend on the vertex order, so each
family pins down explicit labels (auxiliary vertices always get labels larger
than the core vertices, preserving the intended tree shapes).

Families:

* ``centipede``        W_n: path 1..n, one pendant per spine vertex.
* ``caterpillar``      H_n: path 1..n, two pendants per spine vertex.
* ``fibonacci``        F_n: F_0 = K_1, F_1 = K_2, and F_n is a new root
                       joined to the roots of disjoint F_{n-1} and F_{n-2}.
* ``centipede_tilde``  W-tilde_n: path 1..n, a triangle over each edge
                       (2k+1, 2k+2); for odd n a pendant at n.
* ``caterpillar_tilde``H-tilde_n: path 0..n+1, a triangle over each interior
                       edge (i, i+1), 1 <= i <= n-1.
* ``fibonacci_tilde``  F-tilde_n: vertices 0..n-1, edges 0 < |i-j| <= 2.
* ``apple``            A_n: path 1..n plus the chord (2, n).
* ``apple_tilde``      A-tilde_n: path 1..n plus the chord (2, 4).
* ``sunlet``           N_n: cycle 1..n, one pendant per cycle vertex.
* ``m_graph``          M_n: path 1..n, two triangles over each edge
                       (2k+1, 2k+2); for odd n two pendants at n.
* ``counterexample9``  the fixed 9-vertex tree whose independence polynomial
                       is (1+x)(1+8x+20x^2+16x^3+x^4).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .graph import Graph

__all__ = [
    "FamilyGraph",
    "FamilySpec",
    "FAMILY_NAMES",
    "generate",
    "fibonacci_weights",
    "centipede",
    "caterpillar",
    "fibonacci",
    "centipede_tilde",
    "caterpillar_tilde",
    "fibonacci_tilde",
    "apple",
    "apple_tilde",
    "sunlet",
    "m_graph",
    "counterexample9",
]


@dataclass(frozen=True)
class FamilyGraph:
    """A generated family member: graph, designated root, and identity."""

    family: str
    n: int
    graph: Graph
    root: Optional[int]


@dataclass(frozen=True)
class FamilySpec:
    """Family name plus index, validated against the family's domain."""

    family: str
    n: int

    def validate(self) -> None:
        if self.family not in _BUILDERS:
            raise ValueError(f"unknown family {self.family!r}")
        lo = _MIN_N[self.family]
        if self.family == "counterexample9":
            if self.n not in (9,):
                raise ValueError("counterexample9 is a single graph; use n=9")
        elif self.n < lo:
            raise ValueError(f"{self.family} requires n >= {lo}, got {self.n}")


def generate(family: str, n: int = 9) -> FamilyGraph:
    """Build a family member after validating (family, n)."""
    FamilySpec(family, n).validate()
    return _BUILDERS[family](n)


def _path_edges(lo: int, hi: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(lo, hi)]


def centipede(n: int) -> FamilyGraph:
    edges = _path_edges(1, n) + [(i, n + i) for i in range(1, n + 1)]
    return FamilyGraph("centipede", n, Graph.from_edges(edges), 1)


def caterpillar(n: int) -> FamilyGraph:
    edges = _path_edges(1, n)
    for i in range(1, n + 1):
        edges.append((i, n + 2 * i - 1))
        edges.append((i, n + 2 * i))
    return FamilyGraph("caterpillar", n, Graph.from_edges(edges), 1)


def fibonacci(n: int) -> FamilyGraph:
    # Iterative bottom-up assembly; vertex count c_n satisfies
    # c_n = c_{n-1} + c_{n-2} + 1 with c_0 = 1, c_1 = 2.
    if n == 0:
        return FamilyGraph("fibonacci", 0, Graph.from_edges(vertices=[0]), 0)
    prev_edges: list[tuple[int, int]] = []
    prev_root, prev_count = 0, 1
    cur_edges: list[tuple[int, int]] = [(0, 1)]
    cur_root, cur_count = 1, 2
    for _ in range(n - 1):
        shift = cur_count
        edges = cur_edges + [(u + shift, v + shift) for u, v in prev_edges]
        root = cur_count + prev_count
        edges.append((root, cur_root))
        edges.append((root, prev_root + shift))
        prev_edges, prev_root, prev_count = cur_edges, cur_root, cur_count
        cur_edges, cur_root, cur_count = edges, root, root + 1
    return FamilyGraph("fibonacci", n, Graph.from_edges(cur_edges), cur_root)


def centipede_tilde(n: int) -> FamilyGraph:
    edges = _path_edges(1, n)
    for a in range(1, n, 2):  # triangle over each edge (2k+1, 2k+2)
        apex = n + a
        edges.append((a, apex))
        edges.append((a + 1, apex))
    if n % 2 == 1:
        edges.append((n, 2 * n))
    return FamilyGraph("centipede_tilde", n, Graph.from_edges(edges), 1)


def caterpillar_tilde(n: int) -> FamilyGraph:
    edges = _path_edges(0, n + 1)
    for i in range(1, n):  # triangle over each interior edge (i, i+1)
        apex = n + 1 + i
        edges.append((i, apex))
        edges.append((i + 1, apex))
    return FamilyGraph("caterpillar_tilde", n, Graph.from_edges(edges), 0)


def fibonacci_tilde(n: int) -> FamilyGraph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, min(i + 3, n))
    ]
    g = Graph.from_edges(edges, vertices=range(n))
    return FamilyGraph("fibonacci_tilde", n, g, 0 if n else None)


def apple(n: int) -> FamilyGraph:
    edges = _path_edges(1, n) + [(2, n)]
    return FamilyGraph("apple", n, Graph.from_edges(edges), 1)


def apple_tilde(n: int) -> FamilyGraph:
    edges = _path_edges(1, n) + [(2, 4)]
    return FamilyGraph("apple_tilde", n, Graph.from_edges(edges), 1)


def sunlet(n: int) -> FamilyGraph:
    edges = _path_edges(1, n) + [(n, 1)]
    edges.extend((i, n + i) for i in range(1, n + 1))
    return FamilyGraph("sunlet", n, Graph.from_edges(edges), 1)


def m_graph(n: int) -> FamilyGraph:
    edges = _path_edges(1, n)
    nxt = n + 1
    for a in range(1, n, 2):  # two triangles over each edge (2k+1, 2k+2)
        for apex in (nxt, nxt + 1):
            edges.append((a, apex))
            edges.append((a + 1, apex))
        nxt += 2
    if n % 2 == 1:
        edges.append((n, nxt))
        edges.append((n, nxt + 1))
    return FamilyGraph("m_graph", n, Graph.from_edges(edges), 1)


def counterexample9(n: int = 9) -> FamilyGraph:
    edges = [
        (1, 2), (2, 3), (3, 4),      # spine
        (1, 5), (5, 6), (6, 7),      # length-3 branch at 1
        (2, 8), (8, 9),              # length-2 branch at 2
    ]
    return FamilyGraph("counterexample9", 9, Graph.from_edges(edges), 1)


_BUILDERS: dict[str, Callable[[int], FamilyGraph]] = {
    "centipede": centipede,
    "caterpillar": caterpillar,
    "fibonacci": fibonacci,
    "centipede_tilde": centipede_tilde,
    "caterpillar_tilde": caterpillar_tilde,
    "fibonacci_tilde": fibonacci_tilde,
    "apple": apple,
    "apple_tilde": apple_tilde,
    "sunlet": sunlet,
    "m_graph": m_graph,
    "counterexample9": counterexample9,
}

_MIN_N = {
    "centipede": 1,
    "caterpillar": 1,
    "fibonacci": 0,
    "centipede_tilde": 1,
    "caterpillar_tilde": 2,
    "fibonacci_tilde": 0,
    "apple": 4,
    "apple_tilde": 4,
    "sunlet": 3,
    "m_graph": 1,
    "counterexample9": 9,
}

FAMILY_NAMES = tuple(_BUILDERS)


def fibonacci_weights(n: int) -> list[int]:
    """Weights f_0..f_n with f_0 = 1, f_1 = 0, f_k = f_{k-1} + f_{k-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = [1, 0]
    for _ in range(n - 1):
        out.append(out[-1] + out[-2])
    return out[: n + 1]
