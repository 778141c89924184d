"""Undirected trees on vertices 0..n-1: validation, parsing, classification."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Tuple


class TreeError(ValueError):
    """Structurally invalid tree or invalid parameters."""


class ParseError(TreeError):
    """Malformed tree file input."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Tree:
    """Immutable tree with a canonical, lexicographically sorted edge list.

    Construction validates everything: endpoint ranges, no self-loops or
    duplicate edges, exactly n-1 edges, connectivity (acyclicity follows).
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]]):
        if not isinstance(n, int) or n < 1:
            raise TreeError("vertex count must be a positive integer")
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"edge endpoint out of range [0, {n}): ({u}, {v})")
            if u == v:
                raise TreeError(f"self-loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise TreeError(f"duplicate edge {a}")
        if len(norm) != n - 1:
            raise TreeError(f"edge count {len(norm)} != n-1 = {n - 1}")
        adj = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        seen = bytearray(n)
        seen[0] = 1
        reached = 1
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    reached += 1
                    queue.append(w)
        if reached != n:
            raise TreeError("graph is not connected")
        self.n = n
        self.edges = tuple(norm)
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other):
        return isinstance(other, Tree) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Tree(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class VertexClassification:
    leaves: frozenset
    internal: frozenset
    twigs: frozenset
    leaves_adjacent_to_twig: frozenset
    leaves_not_adjacent_to_twig: frozenset
    per_twig_leaf_count: dict


def parse_tree(text: str) -> Tree:
    """Parse the tree file format: first line n, then n-1 lines "u v".

    '#' starts a comment; blank lines are ignored.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError("expected a single vertex count", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError(f"invalid vertex count {fields[0]!r}", lineno) from None
            continue
        if len(fields) != 2:
            raise ParseError(f"expected an edge 'u v', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer edge endpoint in {line!r}", lineno) from None
        edges.append((u, v))
    if n is None:
        raise ParseError("empty input: missing vertex count")
    return Tree(n, edges)


def serialize(tree: Tree) -> str:
    """Canonical text form; parse(serialize(t)) == t."""
    lines = [str(tree.n)]
    lines.extend(f"{u} {v}" for u, v in tree.edges)
    return "\n".join(lines) + "\n"


def leaves(tree: Tree) -> list:
    """Degree-1 vertices; the sole vertex of the one-vertex tree counts."""
    if tree.n == 1:
        return [0]
    return [v for v in range(tree.n) if tree.degree(v) == 1]


def classify_vertices(tree: Tree) -> VertexClassification:
    """Partition vertices into leaves/internal and identify twigs.

    A twig is an internal vertex with at least d(v)-1 leaf neighbours,
    equivalently a leaf of the leaf-deleted tree.
    """
    if tree.n == 1:
        raise TreeError("classification undefined for single vertex")
    leaf_set = frozenset(v for v in range(tree.n) if tree.degree(v) == 1)
    internal = frozenset(v for v in range(tree.n) if tree.degree(v) >= 2)
    twigs = set()
    per_twig = {}
    for v in internal:
        a = sum(1 for w in tree.adj[v] if w in leaf_set)
        if a >= tree.degree(v) - 1:
            twigs.add(v)
            per_twig[v] = a
    l1 = frozenset(v for v in leaf_set if any(w in twigs for w in tree.adj[v]))
    return VertexClassification(
        leaves=leaf_set,
        internal=internal,
        twigs=frozenset(twigs),
        leaves_adjacent_to_twig=l1,
        leaves_not_adjacent_to_twig=leaf_set - l1,
        per_twig_leaf_count=per_twig,
    )


def is_series_reduced(tree: Tree) -> bool:
    """True iff the tree has an internal vertex and all internal degrees are >= 3."""
    if tree.n < 3:
        return False
    return all(tree.degree(v) != 2 for v in range(tree.n))


def leaf_deleted(tree: Tree) -> Tuple[Tree, Tuple[int, ...]]:
    """Induced tree on internal vertices plus the relabeling (new -> old)."""
    kept = [v for v in range(tree.n) if tree.degree(v) >= 2]
    if not kept:
        raise TreeError("no internal vertices: leaf-deleted tree is empty")
    index = {v: i for i, v in enumerate(kept)}
    edges = [
        (index[u], index[v])
        for u, v in tree.edges
        if u in index and v in index
    ]
    return Tree(len(kept), edges), tuple(kept)


def _farthest(tree: Tree, start: int) -> Tuple[int, int]:
    dist = [-1] * tree.n
    dist[start] = 0
    queue = deque([start])
    far, fdist = start, 0
    while queue:
        u = queue.popleft()
        for w in tree.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                if dist[w] > fdist or (dist[w] == fdist and w < far):
                    far, fdist = w, dist[w]
                queue.append(w)
    return far, fdist


def diameter(tree: Tree) -> int:
    """Edge count of a longest path, by two breadth-first sweeps."""
    a, _ = _farthest(tree, 0)
    _, d = _farthest(tree, a)
    return d
