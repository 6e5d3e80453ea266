"""Exact maximum average degree.

Small graphs are searched exhaustively over induced subgraphs.  Larger ones
use parametric search on the density with a minimum cut on the edge/vertex
closure network: for a trial density ``p/q`` the source side of a minimum cut
is a subgraph maximizing ``q|E(H)| - p|V(H)|``.
"""

from __future__ import annotations

from fractions import Fraction

import networkx as nx

from .graphs import UndirectedGraph

BRUTE_FORCE_LIMIT = 20


def max_average_degree(G: UndirectedGraph, method: str = "auto") -> Fraction:
    """Return ``Mad(G)`` as a reduced fraction (0 for the empty or edgeless graph).

    ``method`` is ``"auto"``, ``"brute"`` or ``"flow"``.
    """
    if method not in ("auto", "brute", "flow"):
        raise ValueError(f"unknown method {method!r}")
    if G.n == 0 or G.num_edges == 0:
        return Fraction(0)
    if method == "brute" or (method == "auto" and G.n <= BRUTE_FORCE_LIMIT):
        return 2 * _densest_brute(G)
    return 2 * _densest_flow(G)


def _densest_brute(G: UndirectedGraph) -> Fraction:
    # edges[S] = edges[S minus lowest vertex] + |N(lowest) & S|
    n = G.n
    masks = G.adjacency_masks()
    edges = [0] * (1 << n)
    best = Fraction(0)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        e = edges[rest] + (masks[low] & rest).bit_count()
        edges[s] = e
        if e and e * best.denominator > best.numerator * s.bit_count():
            best = Fraction(e, s.bit_count())
    return best


def _best_closure(G: UndirectedGraph, p: int, q: int) -> tuple[int, list[int]]:
    """Maximize ``q|E(H)| - p|V(H)|`` over subgraphs; return value and vertex set."""
    net = nx.DiGraph()
    m = G.num_edges
    for i, (u, v) in enumerate(G.edges):
        e = ("e", i)
        net.add_edge("s", e, capacity=q)
        net.add_edge(e, ("v", u))
        net.add_edge(e, ("v", v))
    for v in range(G.n):
        net.add_edge(("v", v), "t", capacity=p)
    cut, (source_side, _) = nx.minimum_cut(net, "s", "t")
    chosen = sorted(node[1] for node in source_side if node != "s" and node[0] == "v")
    return q * m - cut, chosen


def _densest_flow(G: UndirectedGraph) -> Fraction:
    density = Fraction(G.num_edges, G.n)
    while True:
        value, chosen = _best_closure(G, density.numerator, density.denominator)
        if value <= 0 or not chosen:
            return density
        sub, _ = G.induced_subgraph(chosen)
        candidate = Fraction(sub.num_edges, sub.n)
        if candidate <= density:
            return density
        density = candidate
