"""Generators for extremal digraph families and random chordal super-orientations.

Every family generator returns the digraph together with a
:class:`FamilyCertificate` listing the claims it is built to satisfy, so the
claims can be re-checked independently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exceptions import InvalidColouringError, InvariantError
from .chordal import clique_number_chordal, recognize_chordal
from .graphs import Colouring, Digraph, max_bidegree, underlying_graph, validate_dicolouring


@dataclass(frozen=True)
class FamilyCertificate:
    """Claims about a generated digraph.

    ``chi`` is set when the exact value is claimed; ``chi_lower`` and
    ``chi_upper`` carry one-sided claims.  ``structure`` holds tags among
    ``chordal``, ``cograph``, ``oriented`` and ``b-paths``.
    """

    family: str
    params: dict
    vertices: int
    omega: int
    delta_b: int
    chi: int | None = None
    chi_lower: int | None = None
    chi_upper: int | None = None
    structure: tuple = field(default=())


def bidirected_complete(n: int) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def add_source(D: Digraph) -> Digraph:
    """Add a vertex with a simple arc to every existing vertex.

    A source lies on no directed cycle, so the dichromatic number and the
    bidirected graph are unchanged while the clique number grows by one.
    """
    s = D.n
    return Digraph(D.n + 1, D.arcs + [(s, v) for v in range(D.n)])


def tournament_wrap(inner: Digraph, m: int) -> Digraph:
    """Transitive tournament on ``0..m-1`` (arcs ``i -> j`` for ``i < j``) with one copy
    of ``inner`` per tournament arc ``x -> y``, receiving arcs from ``y`` and sending
    arcs to ``x``.  Copies follow the lexicographic order of the arcs.
    """
    arcs = [(x, y) for x, y in combinations(range(m), 2)]
    n = m
    for x, y in combinations(range(m), 2):
        offset = n
        arcs.extend((offset + a, offset + b) for a, b in inner.arcs)
        for z in range(offset, offset + inner.n):
            arcs.append((y, z))
            arcs.append((z, x))
        n += inner.n
    return Digraph(n, arcs)


# interval family


@dataclass(frozen=True)
class IntervalMeta:
    """Per-vertex data of the nested interval construction (all tuples indexed by vertex).

    ``ancestors[v][j - 1]`` is the level-``j`` interval containing ``v``.
    """

    k: int
    level: tuple
    label: tuple
    interval: tuple
    ancestors: tuple
    children: tuple

    def level_vertices(self, i: int) -> list[int]:
        return [v for v, lv in enumerate(self.level) if lv == i]


def interval_family(k: int):
    """Oriented interval graph with clique number ``k`` and dichromatic number ``ceil(k/2)``.

    Each level-``i`` interval holds ``2**i`` disjoint children labelled by
    every ``i``-bit string.  Bit ``j`` of a label (read left to right) orients
    the edge to the level-``j`` ancestor: ``1`` points at the ancestor.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    level = [1]
    label = [""]
    interval = [(Fraction(0), Fraction(1))]
    ancestors = [()]
    children = [[]]
    arcs = []
    frontier = [0]
    for i in range(2, k + 1):
        count = 2 ** (i - 1)
        nxt = []
        for p in frontier:
            a, b = interval[p]
            width = (b - a) / count
            margin = width / (2 * count)
            for j in range(count):
                v = len(level)
                level.append(i)
                label.append(format(j, f"0{i - 1}b"))
                interval.append((a + j * width + margin, a + (j + 1) * width - margin))
                ancestors.append(ancestors[p] + (p,))
                children.append([])
                children[p].append(v)
                for depth, bit in enumerate(label[v]):
                    anc = ancestors[v][depth]
                    arcs.append((v, anc) if bit == "1" else (anc, v))
                nxt.append(v)
        frontier = nxt
    D = Digraph(len(level), arcs)
    meta = IntervalMeta(
        k=k,
        level=tuple(level),
        label=tuple(label),
        interval=tuple(interval),
        ancestors=tuple(ancestors),
        children=tuple(tuple(c) for c in children),
    )
    chi = -(-k // 2)
    cert = FamilyCertificate(
        family="interval",
        params={"k": k},
        vertices=D.n,
        omega=k,
        delta_b=0,
        chi=chi,
        chi_lower=chi,
        chi_upper=chi,
        structure=("chordal", "oriented"),
    )
    return D, meta, cert


def interval_lowerbound_witness(k: int, meta: IntervalMeta, colouring) -> list[int]:
    """Nested chain of ``k`` intervals in which no colour appears three times.

    The chain is a tournament; each new interval is the child (smallest label
    first) closing a directed triangle with the monochromatic arc of every
    colour already used twice, so a valid dicolouring cannot repeat that
    colour a third time.  The chain therefore certifies at least
    ``ceil(k / 2)`` colours.
    """
    if meta.k != k:
        raise ValueError("meta was built for a different k")
    n = len(meta.level)
    D = Digraph(n, _interval_arcs(meta))
    check = validate_dicolouring(D, colouring)
    if not check:
        raise InvalidColouringError("colouring is not a dicolouring", check.witness)
    colours = colouring.colours if isinstance(colouring, Colouring) else tuple(colouring)

    chain = [0]
    for _ in range(2, k + 1):
        by_colour: dict = {}
        for z in chain:
            by_colour.setdefault(colours[z], []).append(z)
        wanted = {}
        for members in by_colour.values():
            if len(members) == 2:
                a, b = members
                x, y = (a, b) if D.has_arc(a, b) else (b, a)
                # need y -> child and child -> x
                wanted[meta.level[y]] = "0"
                wanted[meta.level[x]] = "1"
        last = chain[-1]
        child = next(
            (
                c
                for c in meta.children[last]
                if all(meta.label[c][lv - 1] == bit for lv, bit in wanted.items())
            ),
            None,
        )
        if child is None:
            raise InvariantError("no child closes the required triangles")
        chain.append(child)
    counts: dict = {}
    for z in chain:
        counts[colours[z]] = counts.get(colours[z], 0) + 1
    if max(counts.values()) > 2:
        raise InvariantError("a colour appears three times on the chain")
    return chain


def _interval_arcs(meta: IntervalMeta):
    for v in range(len(meta.level)):
        for depth, bit in enumerate(meta.label[v]):
            anc = meta.ancestors[v][depth]
            yield (v, anc) if bit == "1" else (anc, v)


# cograph family


def cograph_family(k: int):
    """Oriented cograph with dichromatic number equal to its clique number ``k``.

    Step ``k -> k+1`` takes ``k+1`` copies of the previous digraph and new
    vertices ``v_1..v_{k+1}``; ``v_i`` sends arcs to copy ``i`` and receives
    arcs from every other copy.  Copies come first in the numbering.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    D = Digraph(1)
    for j in range(1, k):
        copies = j + 1
        size = D.n
        arcs = []
        for c in range(copies):
            arcs.extend((c * size + a, c * size + b) for a, b in D.arcs)
        base = copies * size
        for i in range(copies):
            v = base + i
            for c in range(copies):
                for z in range(c * size, (c + 1) * size):
                    arcs.append((v, z) if c == i else (z, v))
        D = Digraph(base + copies, arcs)
    cert = FamilyCertificate(
        family="cograph",
        params={"k": k},
        vertices=D.n,
        omega=k,
        delta_b=0,
        chi=k,
        structure=("cograph", "oriented"),
    )
    return D, cert


# Hajos join


def hajos_join(D1: Digraph, u1: int, v1: int, D2: Digraph, v2: int, u2: int) -> Digraph:
    """Directed Hajos join.

    Deletes ``u1 -> v1`` from ``D1`` and ``v2 -> u2`` from ``D2``, identifies
    ``v1`` with ``v2`` and adds ``u1 -> u2``.  ``D1`` keeps its numbering (the
    merged vertex is ``v1``); the other vertices of ``D2`` follow in order.
    """
    if not D1.has_arc(u1, v1):
        raise ValueError(f"({u1}, {v1}) is not an arc of the first digraph")
    if not D2.has_arc(v2, u2):
        raise ValueError(f"({v2}, {u2}) is not an arc of the second digraph")
    n1 = D1.n

    def image(w):
        if w == v2:
            return v1
        return n1 + w - (1 if w > v2 else 0)

    arcs = [a for a in D1.arcs if a != (u1, v1)]
    arcs.extend((image(a), image(b)) for a, b in D2.arcs if (a, b) != (v2, u2))
    arcs.append((u1, image(u2)))
    return Digraph(n1 + D2.n - 1, arcs)


# D_{k,l}


def _chordal_kl(k: int, l: int) -> Digraph:
    if k == l + 1:
        return bidirected_complete(l + 1)
    if (k + l) % 2 == 0:
        return add_source(_chordal_kl(k - 1, l))
    return tournament_wrap(_chordal_kl(k - 2, l), (k + l + 1) // 2)


def chordal_kl_family(k: int, l: int):
    """Chordal super-orientation with clique number ``k``, ``Delta(B) = l`` and
    dichromatic number ``ceil((k + l) / 2)``.
    """
    if l < 0 or k <= l:
        raise ValueError("need k >= l + 1 and l >= 0")
    D = _chordal_kl(k, l)
    cert = FamilyCertificate(
        family="chordal-kl",
        params={"k": k, "l": l},
        vertices=D.n,
        omega=k,
        delta_b=l,
        chi=-(-(k + l) // 2),
        structure=("chordal",) + (("oriented",) if l == 0 else ()),
    )
    return D, cert


# C4-free family


def _c4free_base(n: int) -> Digraph:
    # strip of bidirected triangles; each join splits the digon between the
    # two newest vertices of the previous triangle.  At least one join is
    # made: B of a lone triangle is a cycle, not a path.
    K3 = bidirected_complete(3)
    D = K3
    b, c = 1, 2
    while D.n < max(n, 5):
        size = D.n
        D = hajos_join(D, c, b, K3, 0, 2)
        b, c = size, size + 1
    return D


def _c4free(k: int, n: int) -> Digraph:
    if k == 3:
        return _c4free_base(n)
    if k % 2 == 0:
        return add_source(_c4free(k - 1, n))
    return tournament_wrap(_c4free(k - 2, n), (k + 3) // 2)


def c4free_family(k: int, n: int):
    """Chordal super-orientation on at least ``n`` vertices whose bidirected graph is a
    disjoint union of paths, with clique number ``k`` and dichromatic number
    ``floor((k + 3) / 2)``.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if n < 1:
        raise ValueError("n must be at least 1")
    D = _c4free(k, n)
    cert = FamilyCertificate(
        family="c4free",
        params={"k": k, "n": n},
        vertices=D.n,
        omega=k,
        delta_b=2,
        chi=(k + 3) // 2,
        structure=("chordal", "b-paths"),
    )
    return D, cert


# random instances


def random_chordal_graph_edges(n: int, target_omega: int, rng: random.Random) -> list:
    """Edges of a random chordal graph with clique number at most ``target_omega``.

    Each new vertex picks a maximal clique; while that clique is below the
    target the vertex joins all of it, otherwise it attaches to a random
    proper part of it.  With ``target_omega >= 2`` the graph is connected.
    """
    cliques = [[0]]
    edges = []
    for v in range(1, n):
        idx = rng.randrange(len(cliques))
        C = cliques[idx]
        if len(C) < target_omega:
            S = list(C)
            cliques[idx] = C + [v]
        else:
            s = rng.randint(1, target_omega - 1) if target_omega > 1 else 0
            S = rng.sample(C, s)
            cliques.append(S + [v])
        edges.extend((u, v) for u in sorted(S))
    return edges


def random_chordal_superorientation(
    n: int, target_omega: int, digon_prob=Fraction(0), seed: int = 0
) -> Digraph:
    """Random super-orientation of a random chordal graph, fully determined by ``seed``.

    Each edge becomes a digon with probability ``digon_prob`` and otherwise a
    simple arc in a uniformly random direction.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 1 <= target_omega <= n:
        raise ValueError("need 1 <= target_omega <= n")
    p = Fraction(digon_prob)
    if not 0 <= p <= 1:
        raise ValueError("digon_prob must lie in [0, 1]")
    rng = random.Random(seed)
    arcs = []
    for u, v in random_chordal_graph_edges(n, target_omega, rng):
        if rng.random() < p:
            arcs += [(u, v), (v, u)]
        elif rng.random() < 0.5:
            arcs.append((u, v))
        else:
            arcs.append((v, u))
    return Digraph(n, arcs)


def random_chordal_certificate(D: Digraph, n: int, target_omega: int, digon_prob, seed: int):
    G = underlying_graph(D)
    omega = clique_number_chordal(G, recognize_chordal(G))
    delta = max_bidegree(D)
    return FamilyCertificate(
        family="random-chordal",
        params={"n": n, "omega_target": target_omega, "digon_prob": str(Fraction(digon_prob)), "seed": seed},
        vertices=D.n,
        omega=omega,
        delta_b=delta,
        chi_upper=-(-(omega + delta) // 2),
        structure=("chordal",),
    )
