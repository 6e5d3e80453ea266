"""Digraphs, undirected graphs, colourings and the checks shared by every module.

Vertices are always the dense integers ``0..n-1``.  All objects are immutable
once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .exceptions import InvalidColouringError


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"endpoint out of range [0, {n}) in pair ({u}, {v})")
    if u == v:
        raise ValueError(f"self-loop ({u}, {v}) is not allowed")


class Digraph:
    """A loopless digraph without parallel arcs.

    A digon is the pair of arcs ``(u, v)`` and ``(v, u)``; an arc whose
    reverse is absent is a simple arc.
    """

    __slots__ = ("_n", "_out", "_in", "_arcs")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        out = [set() for _ in range(n)]
        inn = [set() for _ in range(n)]
        arc_set = set()
        for u, v in arcs:
            u, v = int(u), int(v)
            _check_pair(n, u, v)
            arc_set.add((u, v))
            out[u].add(v)
            inn[v].add(u)
        self._n = n
        self._out = tuple(frozenset(s) for s in out)
        self._in = tuple(frozenset(s) for s in inn)
        self._arcs = frozenset(arc_set)

    @property
    def n(self) -> int:
        return self._n

    @property
    def arcs(self) -> list[tuple[int, int]]:
        """All arcs, sorted."""
        return sorted(self._arcs)

    @property
    def num_arcs(self) -> int:
        return len(self._arcs)

    def vertices(self) -> range:
        return range(self._n)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs

    def is_digon(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs and (v, u) in self._arcs

    def out_neighbours(self, v: int) -> frozenset:
        return self._out[v]

    def in_neighbours(self, v: int) -> frozenset:
        return self._in[v]

    def neighbours(self, v: int) -> frozenset:
        return self._out[v] | self._in[v]

    def digons(self) -> list[tuple[int, int]]:
        """Digons as pairs ``(u, v)`` with ``u < v``."""
        return sorted((u, v) for u, v in self._arcs if u < v and (v, u) in self._arcs)

    def simple_arcs(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in self._arcs if (v, u) not in self._arcs)

    def is_oriented(self) -> bool:
        return not any((v, u) in self._arcs for u, v in self._arcs)

    def induced_subdigraph(self, vertices: Iterable[int]) -> tuple["Digraph", list[int]]:
        """Return the subdigraph induced by ``vertices`` and the old index of each new vertex.

        New indices follow the sorted order of ``vertices``.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        arcs = [(index[u], index[v]) for u, v in self._arcs if u in index and v in index]
        return Digraph(len(keep), arcs), keep

    def with_arcs(self, extra: Iterable[tuple[int, int]]) -> "Digraph":
        return Digraph(self._n, list(self._arcs) + list(extra))

    def without_arcs(self, removed: Iterable[tuple[int, int]]) -> "Digraph":
        removed = set(removed)
        return Digraph(self._n, [a for a in self._arcs if a not in removed])

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._n, self._arcs))

    def __repr__(self):
        return f"Digraph(n={self._n}, arcs={self.num_arcs}, digons={len(self.digons())})"


def build_digraph(n: int, arc_list: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph on ``0..n-1``; duplicate arcs collapse to one."""
    return Digraph(n, arc_list)


class UndirectedGraph:
    """A simple undirected graph on ``0..n-1``."""

    __slots__ = ("_n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        edge_set = set()
        for u, v in edges:
            u, v = int(u), int(v)
            _check_pair(n, u, v)
            edge_set.add((min(u, v), max(u, v)))
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._edges = frozenset(edge_set)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs ``(u, v)`` with ``u < v``."""
        return sorted(self._edges)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def neighbours(self, v: int) -> frozenset:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def adjacency_masks(self) -> list[int]:
        masks = []
        for nbrs in self._adj:
            m = 0
            for w in nbrs:
                m |= 1 << w
            masks.append(m)
        return masks

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["UndirectedGraph", list[int]]:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        return UndirectedGraph(len(keep), edges), keep

    def complement(self) -> "UndirectedGraph":
        return UndirectedGraph(
            self._n,
            [(u, v) for u, v in combinations(range(self._n), 2) if (u, v) not in self._edges],
        )

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self._n
        components = []
        for s in range(self._n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            components.append(sorted(comp))
        return components

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"UndirectedGraph(n={self._n}, edges={self.num_edges})"


class Colouring:
    """A total map vertex -> colour in ``1..num_colours`` with every colour used."""

    __slots__ = ("_colours",)

    def __init__(self, colours: Sequence[int]):
        colours = tuple(int(c) for c in colours)
        used = set(colours)
        if used and used != set(range(1, max(used) + 1)):
            raise ValueError(
                "colours must be 1-based without gaps; use Colouring.from_labels to normalize"
            )
        self._colours = colours

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Colouring":
        """Normalize arbitrary sortable labels to ``1..k``, keeping their relative order."""
        rank = {c: i + 1 for i, c in enumerate(sorted(set(labels)))}
        return cls([rank[c] for c in labels])

    @property
    def colours(self) -> tuple[int, ...]:
        return self._colours

    @property
    def num_colours(self) -> int:
        return max(self._colours, default=0)

    def classes(self) -> list[list[int]]:
        out = [[] for _ in range(self.num_colours)]
        for v, c in enumerate(self._colours):
            out[c - 1].append(v)
        return out

    def __len__(self):
        return len(self._colours)

    def __getitem__(self, v):
        return self._colours[v]

    def __iter__(self):
        return iter(self._colours)

    def __eq__(self, other):
        if not isinstance(other, Colouring):
            return NotImplemented
        return self._colours == other._colours

    def __hash__(self):
        return hash(self._colours)

    def __repr__(self):
        return f"Colouring(num_colours={self.num_colours}, colours={list(self._colours)})"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a verification: truthy iff ``ok``; ``witness`` explains a failure."""

    ok: bool
    witness: object = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def underlying_graph(D: Digraph) -> UndirectedGraph:
    return UndirectedGraph(D.n, D.arcs)


def bidirected_graph(D: Digraph) -> UndirectedGraph:
    return UndirectedGraph(D.n, D.digons())


def digon_degrees(D: Digraph) -> list[int]:
    """Number of digons incident to each vertex (a digon counts once per endpoint)."""
    deg = [0] * D.n
    for u, v in D.digons():
        deg[u] += 1
        deg[v] += 1
    return deg


def digon_count(D: Digraph) -> int:
    """Number of digons of ``D``, each counted once."""
    return len(D.digons())


def max_bidegree(D: Digraph) -> int:
    return max(digon_degrees(D), default=0)


def _find_cycle_in_class(D: Digraph, members: set) -> list[int] | None:
    state = dict.fromkeys(members, 0)  # 0 new, 1 on stack, 2 done
    for root in sorted(members):
        if state[root]:
            continue
        state[root] = 1
        path = [root]
        iters = [iter(sorted(D.out_neighbours(root) & members))]
        while iters:
            advanced = False
            for w in iters[-1]:
                if state[w] == 1:
                    return path[path.index(w):]
                if state[w] == 0:
                    state[w] = 1
                    path.append(w)
                    iters.append(iter(sorted(D.out_neighbours(w) & members)))
                    advanced = True
                    break
            if not advanced:
                state[path.pop()] = 2
                iters.pop()
    return None


def find_monochromatic_cycle(D: Digraph, colouring) -> list[int] | None:
    """Return a directed cycle inside one colour class, or ``None``.

    A digon is reported as a cycle of length two.
    """
    colours = colouring.colours if isinstance(colouring, Colouring) else tuple(colouring)
    if len(colours) != D.n:
        raise InvalidColouringError(
            f"colouring covers {len(colours)} vertices but the digraph has {D.n}"
        )
    classes: dict = {}
    for v, c in enumerate(colours):
        classes.setdefault(c, set()).add(v)
    for c in sorted(classes):
        cycle = _find_cycle_in_class(D, classes[c])
        if cycle is not None:
            return cycle
    return None


def validate_dicolouring(D: Digraph, colouring) -> CheckResult:
    """Check that every colour class induces an acyclic subdigraph.

    On failure the witness is one monochromatic directed cycle.
    """
    cycle = find_monochromatic_cycle(D, colouring)
    if cycle is None:
        return CheckResult(True)
    return CheckResult(False, tuple(cycle), "monochromatic directed cycle")


def is_acyclic(D: Digraph) -> bool:
    return _find_cycle_in_class(D, set(D.vertices())) is None


def _max_clique_size(masks: list[int], candidates: int) -> int:
    best = 0

    def expand(size, cand, excl):
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        pivot_pool = cand | excl
        pivot = max(
            (i for i in _bits(pivot_pool)), key=lambda i: (masks[i] & cand).bit_count()
        )
        for v in _bits(cand & ~masks[pivot]):
            expand(size + 1, cand & masks[v], excl & masks[v])
            cand &= ~(1 << v)
            excl |= 1 << v
            if size + cand.bit_count() <= best:
                return

    expand(0, candidates, 0)
    return best


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def clique_number(G: UndirectedGraph) -> int:
    """Exact clique number by pivoting Bron-Kerbosch with size pruning."""
    if G.n == 0:
        return 0
    return _max_clique_size(G.adjacency_masks(), (1 << G.n) - 1)


def find_c4(G: UndirectedGraph) -> tuple[int, int, int, int] | None:
    """Return a 4-cycle ``(u, a, v, b)`` contained in ``G`` as a subgraph, or ``None``."""
    masks = G.adjacency_masks()
    for u in range(G.n):
        for v in range(u + 1, G.n):
            common = masks[u] & masks[v]
            if common.bit_count() >= 2:
                a, b = list(_bits(common))[:2]
                return (u, a, v, b)
    return None


def is_c4_free(G: UndirectedGraph) -> bool:
    return find_c4(G) is None


def find_induced_p4(G: UndirectedGraph) -> tuple[int, int, int, int] | None:
    """Return an induced path ``a-b-c-d`` on four vertices, or ``None``."""
    for b, c in G.edges:
        for x, y in ((b, c), (c, b)):
            left = G.neighbours(x) - G.neighbours(y) - {y}
            right = G.neighbours(y) - G.neighbours(x) - {x}
            for a in sorted(left):
                for d in sorted(right):
                    if a != d and not G.has_edge(a, d):
                        return (a, x, y, d)
    return None


def is_cograph(G: UndirectedGraph) -> bool:
    """Recognize P4-free graphs through their complement-connectivity decomposition."""

    def rec(H: UndirectedGraph) -> bool:
        if H.n <= 1:
            return True
        comps = H.connected_components()
        if len(comps) > 1:
            return all(rec(H.induced_subgraph(c)[0]) for c in comps)
        co = H.complement()
        cocomps = co.connected_components()
        if len(cocomps) == 1:
            return False
        return all(rec(H.induced_subgraph(c)[0]) for c in cocomps)

    return rec(G)


def proper_colouring(G: UndirectedGraph) -> Colouring:
    """DSatur proper colouring; every proper colouring is also a dicolouring."""
    n = G.n
    colour = [0] * n
    seen = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (x for x in range(n) if not colour[x]),
            key=lambda x: (len(seen[x]), G.degree(x), -x),
        )
        c = 1
        while c in seen[v]:
            c += 1
        colour[v] = c
        for w in G.neighbours(v):
            seen[w].add(c)
    return Colouring.from_labels(colour)
