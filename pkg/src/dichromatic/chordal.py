"""Chordal graphs: recognition, clique trees and valid tree-decompositions.

The prefix-bounded ordering built here walks a valid tree-decomposition in
post-order along a longest path of its tree; every prefix of the resulting
vertex ordering has a small closed neighbourhood.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .exceptions import DecompositionError, NotChordalError
from .graphs import CheckResult, UndirectedGraph, clique_number


@dataclass(frozen=True)
class Ordering:
    """A permutation of the vertex set, tagged with how it was produced.

    ``role`` is one of ``"PEO"``, ``"LexBFS"`` or ``"LemmaOrdering"``.
    """

    sequence: tuple
    role: str = "PEO"

    def __post_init__(self):
        seq = tuple(int(v) for v in self.sequence)
        if sorted(seq) != list(range(len(seq))):
            raise ValueError("ordering must be a permutation of 0..n-1")
        object.__setattr__(self, "sequence", seq)

    @cached_property
    def position(self) -> dict:
        return {v: i for i, v in enumerate(self.sequence)}

    def reversed(self, role: str | None = None) -> "Ordering":
        return Ordering(self.sequence[::-1], role or self.role)

    def __len__(self):
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    def __getitem__(self, i):
        return self.sequence[i]


def _as_ordering(o, role="PEO") -> Ordering:
    return o if isinstance(o, Ordering) else Ordering(tuple(o), role)


def lex_bfs(G: UndirectedGraph) -> Ordering:
    """Lexicographic breadth-first search, ties broken by smallest vertex index.

    For a chordal graph the reverse of the returned order is a perfect
    elimination ordering.
    """
    n = G.n
    labels = [[] for _ in range(n)]
    done = [False] * n
    order = []
    for i in range(n):
        v = max((x for x in range(n) if not done[x]), key=lambda x: (labels[x], -x))
        done[v] = True
        order.append(v)
        for w in G.neighbours(v):
            if not done[w]:
                labels[w].append(n - i)
    return Ordering(tuple(order), "LexBFS")


def is_perfect_elimination_ordering(G: UndirectedGraph, o) -> CheckResult:
    """Check that the later neighbourhood of every vertex is a clique.

    Uses the parent test: each vertex's later neighbours other than the
    earliest one must all be adjacent to that earliest one.  The witness of a
    failure is ``(v, x, y)`` with ``x, y`` later non-adjacent neighbours of ``v``.
    """
    o = _as_ordering(o)
    if len(o) != G.n:
        raise ValueError("ordering does not cover the vertex set")
    pos = o.position
    for v in o:
        later = [w for w in G.neighbours(v) if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=pos.__getitem__)
        for w in sorted(later):
            if w != parent and not G.has_edge(parent, w):
                return CheckResult(False, (v, parent, w), "later neighbourhood is not a clique")
    return CheckResult(True)


def recognize_chordal(G: UndirectedGraph) -> Ordering | None:
    """Return a verified perfect elimination ordering, or ``None`` if ``G`` is not chordal."""
    peo = lex_bfs(G).reversed("PEO")
    return peo if is_perfect_elimination_ordering(G, peo) else None


def is_chordal(G: UndirectedGraph) -> bool:
    return recognize_chordal(G) is not None


def require_peo(G: UndirectedGraph) -> Ordering:
    peo = recognize_chordal(G)
    if peo is None:
        raise NotChordalError("graph is not chordal")
    return peo


def _later_neighbours(G: UndirectedGraph, peo: Ordering) -> list[set]:
    pos = peo.position
    return [{w for w in G.neighbours(v) if pos[w] > pos[v]} for v in range(G.n)]


def clique_number_chordal(G: UndirectedGraph, peo) -> int:
    """Clique number from a perfect elimination ordering in linear time."""
    peo = _as_ordering(peo)
    check = is_perfect_elimination_ordering(G, peo)
    if not check:
        raise ValueError(f"not a perfect elimination ordering: {check.witness}")
    if G.n == 0:
        return 0
    return 1 + max(len(s) for s in _later_neighbours(G, peo))


def maximal_cliques_chordal(G: UndirectedGraph, peo: Ordering) -> list[frozenset]:
    later = _later_neighbours(G, peo)
    candidates = []
    for v in peo:
        c = frozenset(later[v] | {v})
        if c not in candidates:
            candidates.append(c)
    return [c for c in candidates if not any(c < other for other in candidates)]


@dataclass(frozen=True)
class TreeDecomposition:
    """A tree of bags.  Nodes are ``0..num_nodes-1``; ``edges`` are node pairs."""

    bags: tuple
    edges: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        object.__setattr__(
            self, "edges", tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))
        )

    @property
    def num_nodes(self) -> int:
        return len(self.bags)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in self.bags]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return [sorted(x) for x in adj]

    def is_tree(self) -> bool:
        n = self.num_nodes
        if n == 0 or len(self.edges) != n - 1:
            return False
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == n

    def check(self, G: UndirectedGraph) -> CheckResult:
        """Check the tree shape and the three tree-decomposition axioms against ``G``."""
        if not self.is_tree():
            return CheckResult(False, None, "node graph is not a tree")
        covered = set().union(*self.bags) if self.bags else set()
        missing = set(range(G.n)) - covered
        if missing:
            return CheckResult(False, min(missing), "vertex in no bag")
        extra = covered - set(range(G.n))
        if extra:
            return CheckResult(False, min(extra), "bag holds a vertex outside the graph")
        for u, v in G.edges:
            if not any(u in b and v in b for b in self.bags):
                return CheckResult(False, (u, v), "edge in no bag")
        adj = self.adjacency()
        for v in range(G.n):
            nodes = {t for t, b in enumerate(self.bags) if v in b}
            start = min(nodes)
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y in nodes and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if seen != nodes:
                return CheckResult(False, v, "bags containing vertex are not connected")
        return CheckResult(True)

    def is_full(self) -> bool:
        w = self.width
        return all(len(b) == w + 1 for b in self.bags)

    def is_reduced(self) -> bool:
        return all(
            self.bags[a] - self.bags[b] and self.bags[b] - self.bags[a] for a, b in self.edges
        )

    def is_valid(self) -> bool:
        return all(
            len(self.bags[a] - self.bags[b]) == 1 and len(self.bags[b] - self.bags[a]) == 1
            for a, b in self.edges
        )


def clique_tree(G: UndirectedGraph, peo) -> TreeDecomposition:
    """Tree-decomposition whose bags are the maximal cliques of a chordal graph.

    Built as a maximum-weight spanning tree of the clique intersection graph
    (Prim from clique 0, ties to the smallest index).  Cliques of different
    components are joined through empty intersections.
    """
    peo = _as_ordering(peo)
    check = is_perfect_elimination_ordering(G, peo)
    if not check:
        raise NotChordalError(f"not a perfect elimination ordering: {check.witness}")
    if G.n == 0:
        return TreeDecomposition((), ())
    cliques = maximal_cliques_chordal(G, peo)
    k = len(cliques)
    in_tree = [False] * k
    best = [-1] * k
    link = [-1] * k
    in_tree[0] = True
    for j in range(1, k):
        best[j] = len(cliques[0] & cliques[j])
        link[j] = 0
    edges = []
    for _ in range(k - 1):
        j = max((x for x in range(k) if not in_tree[x]), key=lambda x: (best[x], -x))
        in_tree[j] = True
        edges.append((link[j], j))
        for x in range(k):
            if not in_tree[x]:
                w = len(cliques[j] & cliques[x])
                if w > best[x]:
                    best[x], link[x] = w, j
    return TreeDecomposition(tuple(cliques), tuple(edges))


def make_valid(td: TreeDecomposition, G: UndirectedGraph) -> TreeDecomposition:
    """Turn a tree-decomposition into a valid one of the same width.

    The decomposition is first reduced (contracting edges whose bags are
    nested), then made full by copying vertices from full neighbours, then
    every edge whose bags differ by two or more vertices is subdivided.  All
    choices take the smallest vertex or edge.
    """
    check = td.check(G)
    if not check:
        raise DecompositionError(f"{check.reason}: {check.witness}")
    bags = {t: set(b) for t, b in enumerate(td.bags)}
    adj = {t: set() for t in bags}
    for a, b in td.edges:
        adj[a].add(b)
        adj[b].add(a)

    def sorted_edges():
        return sorted((a, b) for a in adj for b in adj[a] if a < b)

    # reduce
    changed = True
    while changed:
        changed = False
        for a, b in sorted_edges():
            for small, big in ((a, b), (b, a)):
                if bags[small] <= bags[big]:
                    for x in adj[small] - {big}:
                        adj[x].discard(small)
                        adj[x].add(big)
                        adj[big].add(x)
                    adj[big].discard(small)
                    del adj[small], bags[small]
                    changed = True
                    break
            if changed:
                break

    size = max(len(b) for b in bags.values())
    # fullify
    changed = True
    while changed:
        changed = False
        for a, b in sorted_edges():
            for t, full in ((a, b), (b, a)):
                if len(bags[t]) < len(bags[full]) == size:
                    bags[t].add(min(bags[full] - bags[t]))
                    changed = True
    # subdivide
    next_id = max(bags) + 1
    changed = True
    while changed:
        changed = False
        for a, b in sorted_edges():
            if len(bags[a] - bags[b]) >= 2:
                x = min(bags[a] - bags[b])
                u = min(bags[b] - bags[a])
                c = next_id
                next_id += 1
                bags[c] = (bags[b] - {u}) | {x}
                adj[a].discard(b)
                adj[b].discard(a)
                adj[c] = {a, b}
                adj[a].add(c)
                adj[b].add(c)
                changed = True
                break

    ids = sorted(bags)
    index = {t: i for i, t in enumerate(ids)}
    out = TreeDecomposition(
        tuple(frozenset(bags[t]) for t in ids),
        tuple((index[a], index[b]) for a, b in sorted_edges()),
    )
    return out


def valid_decomposition(G: UndirectedGraph) -> TreeDecomposition:
    """Valid tree-decomposition of width ``omega - 1`` of a chordal graph."""
    peo = require_peo(G)
    return make_valid(clique_tree(G, peo), G)


def _tree_path(adj: list[list[int]], start: int, end: int) -> list[int]:
    parent = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [end]
    while path[-1] != start:
        path.append(parent[path[-1]])
    return path[::-1]


def _farthest(adj: list[list[int]], start: int) -> int:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    top = max(dist.values())
    return min(t for t, d in dist.items() if d == top)


def longest_tree_path(td: TreeDecomposition) -> list[int]:
    """Longest path of the decomposition tree by two BFS sweeps."""
    adj = td.adjacency()
    a = _farthest(adj, 0)
    b = _farthest(adj, a)
    return _tree_path(adj, a, b)


def ordering_from_valid_decomposition(
    td: TreeDecomposition, path: Sequence[int] | None = None
) -> Ordering:
    """Read the prefix-bounded vertex ordering off a valid decomposition.

    ``path`` is a longest path ``u_0..u_r`` of the tree; the tree is rooted at
    ``u_r`` and nodes are labelled in DFS post-order, children on the path
    first.  Each non-root node contributes the vertex its bag adds to its
    father's bag; the root bag follows in ascending order.
    """
    if not td.is_valid():
        raise DecompositionError("decomposition is not valid")
    if td.num_nodes == 1:
        return Ordering(tuple(sorted(td.bags[0])), "LemmaOrdering")
    adj = td.adjacency()
    if path is None:
        path = longest_tree_path(td)
    path = list(path)
    on_path = set(path)
    root = path[-1]
    parent = {root: None}
    children = {t: [] for t in range(td.num_nodes)}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                children[x].append(y)
                queue.append(y)
    for t in children:
        children[t].sort(key=lambda c: (c not in on_path, c))

    labelled = []
    stack = [(root, iter(children[root]))]
    while stack:
        node, it = stack[-1]
        child = next(it, None)
        if child is None:
            labelled.append(node)
            stack.pop()
        else:
            stack.append((child, iter(children[child])))

    sequence = []
    for t in labelled[:-1]:
        (a,) = td.bags[t] - td.bags[parent[t]]
        sequence.append(a)
    sequence.extend(sorted(td.bags[root]))
    return Ordering(tuple(sequence), "LemmaOrdering")


def lemma_ordering(G: UndirectedGraph) -> Ordering:
    """Ordering ``a_1..a_n`` of a connected chordal graph with bounded prefix neighbourhoods.

    See :func:`check_prefix_properties` for the two guarantees.
    """
    if G.n == 0:
        return Ordering((), "LemmaOrdering")
    if not G.is_connected():
        raise ValueError("lemma_ordering requires a connected graph; split it into components")
    return ordering_from_valid_decomposition(valid_decomposition(G))


def check_prefix_properties(G: UndirectedGraph, o) -> CheckResult:
    """Check, for every ``k``, that ``|N(a_k)| <= omega + k - 2`` (P1) and
    ``|N[a_1] u ... u N[a_k]| <= omega + 2k - 1`` (P2).

    The witness of a failure is ``(k, "P1" | "P2")`` with ``k`` 1-based.
    """
    o = _as_ordering(o, "LemmaOrdering")
    if len(o) != G.n:
        raise ValueError("ordering does not cover the vertex set")
    peo = recognize_chordal(G)
    omega = clique_number_chordal(G, peo) if peo is not None else clique_number(G)
    union = set()
    for k, a in enumerate(o, start=1):
        if G.degree(a) > omega + k - 2:
            return CheckResult(False, (k, "P1"), "neighbourhood too large")
        union |= G.neighbours(a)
        union.add(a)
        if len(union) > omega + 2 * k - 1:
            return CheckResult(False, (k, "P2"), "prefix neighbourhood too large")
    return CheckResult(True)
