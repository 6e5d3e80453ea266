import random
from fractions import Fraction

import pytest

from dichromatic.chordal import is_chordal
from dichromatic.colouring import exact_dichromatic
from dichromatic.constructions import (
    add_source,
    bidirected_complete,
    c4free_family,
    chordal_kl_family,
    cograph_family,
    hajos_join,
    interval_family,
    interval_lowerbound_witness,
    random_chordal_certificate,
    random_chordal_superorientation,
    tournament_wrap,
)
from dichromatic.exceptions import InvalidColouringError
from dichromatic.graphs import (
    Colouring,
    Digraph,
    bidirected_graph,
    clique_number,
    is_cograph,
    max_bidegree,
    underlying_graph,
)
from dichromatic.io import format_certificate, format_digraph

C3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])


class TestHelpers:
    def test_add_source(self):
        D = add_source(C3)
        assert D.n == 4 and D.out_neighbours(3) == {0, 1, 2} and not D.in_neighbours(3)

    def test_tournament_wrap_counts(self):
        D = tournament_wrap(Digraph(1), 3)
        # TT_3 plus one vertex per arc, forming a directed triangle with it
        assert D.n == 6 and D.num_arcs == 3 + 3 * 2
        assert exact_dichromatic(D)[0] == 2


class TestInterval:
    @pytest.mark.parametrize("k,size", [(1, 1), (2, 3), (3, 11), (4, 75)])
    def test_sizes(self, k, size):
        D, meta, cert = interval_family(k)
        assert D.n == size == cert.vertices
        assert all(len(meta.level_vertices(i)) == 2 ** (i * (i - 1) // 2) for i in range(1, k + 1))
        assert D.is_oriented()

    def test_each_vertex_sees_its_ancestors(self):
        D, meta, _ = interval_family(4)
        G = underlying_graph(D)
        for v in range(D.n):
            below = {w for w in G.neighbours(v) if meta.level[w] < meta.level[v]}
            assert below == set(meta.ancestors[v])
            assert len(below) == meta.level[v] - 1

    def test_intervals_nest_and_separate(self):
        _, meta, _ = interval_family(3)
        for v, kids in enumerate(meta.children):
            a, b = meta.interval[v]
            spans = sorted(meta.interval[c] for c in kids)
            assert all(a < lo < hi < b for lo, hi in spans)
            assert all(spans[i][1] < spans[i + 1][0] for i in range(len(spans) - 1))

    def test_bit_convention(self):
        D, meta, _ = interval_family(2)
        # label "1" points the child at the root, "0" the other way
        for v in (1, 2):
            assert D.has_arc(v, 0) == (meta.label[v] == "1")

    def test_witness_examples(self):
        D, meta, _ = interval_family(2)
        chain = interval_lowerbound_witness(2, meta, Colouring([1, 1, 1]))
        assert chain[0] == 0 and meta.level[chain[1]] == 2
        D3, meta3, _ = interval_family(3)
        chain = interval_lowerbound_witness(3, meta3, Colouring(list(range(1, D3.n + 1))))
        assert len(chain) == 3

    def test_witness_rejects_invalid(self):
        D, meta, _ = interval_family(3)
        with pytest.raises(InvalidColouringError):
            interval_lowerbound_witness(3, meta, Colouring([1] * D.n))
        with pytest.raises(ValueError):
            interval_lowerbound_witness(2, meta, Colouring([1] * D.n))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            interval_family(0)


class TestCograph:
    def test_k2_is_directed_four_cycle(self):
        D, _ = cograph_family(2)
        assert D.n == 4 and D.num_arcs == 4
        assert all(len(D.out_neighbours(v)) == 1 == len(D.in_neighbours(v)) for v in range(4))

    @pytest.mark.parametrize("k,size", [(1, 1), (2, 4), (3, 15), (4, 64)])
    def test_sizes_and_structure(self, k, size):
        D, cert = cograph_family(k)
        assert D.n == size and cert.chi == k and D.is_oriented()
        assert is_cograph(underlying_graph(D))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            cograph_family(0)


class TestHajos:
    def test_two_bidirected_triangles(self):
        K3 = bidirected_complete(3)
        J = hajos_join(K3, 0, 1, K3, 0, 1)
        B = bidirected_graph(J)
        assert J.n == 5 and J.num_arcs == 6 + 6 - 1
        assert B.num_edges == 4 and B.max_degree() == 2 and len(B.connected_components()) == 1
        assert max_bidegree(J) == 2
        G = underlying_graph(J)
        assert is_chordal(G) and clique_number(G) == 3 and G.num_edges == 2 * 5 - 3
        assert exact_dichromatic(J)[0] == 3

    def test_two_directed_triangles(self):
        J = hajos_join(C3, 0, 1, C3, 0, 1)
        assert J.n == 5 and J.is_oriented() and exact_dichromatic(J)[0] >= 2

    def test_missing_arc(self):
        with pytest.raises(ValueError):
            hajos_join(C3, 1, 0, C3, 0, 1)
        with pytest.raises(ValueError):
            hajos_join(C3, 0, 1, C3, 1, 0)


class TestChordalKL:
    def test_examples(self):
        assert chordal_kl_family(1, 0)[0].n == 1
        assert chordal_kl_family(3, 0)[0] == C3
        assert chordal_kl_family(5, 0)[0].n == 12
        D, cert = chordal_kl_family(2, 1)
        assert D == bidirected_complete(2) and cert.chi == 2

    @pytest.mark.parametrize("k,l", [(0, 0), (2, 2), (1, -1)])
    def test_rejects(self, k, l):
        with pytest.raises(ValueError):
            chordal_kl_family(k, l)

    @pytest.mark.parametrize("k,l", [(6, 1), (5, 2), (7, 0), (4, 3)])
    def test_structure(self, k, l):
        D, cert = chordal_kl_family(k, l)
        G = underlying_graph(D)
        assert is_chordal(G) and clique_number(G) == k and max_bidegree(D) == l
        assert cert.chi == -(-(k + l) // 2)


class TestC4Free:
    def test_base_strip(self):
        D, cert = c4free_family(3, 5)
        assert D.n == 5 and cert.chi == 3
        assert D == hajos_join(bidirected_complete(3), 2, 1, bidirected_complete(3), 0, 2)

    def test_n3_still_has_path_b(self):
        D, _ = c4free_family(3, 3)
        assert D.n == 5 and bidirected_graph(D).max_degree() == 2

    def test_even_step_adds_source(self):
        D3, _ = c4free_family(3, 5)
        D4, cert = c4free_family(4, 5)
        assert D4 == add_source(D3) and cert.chi == 3 and exact_dichromatic(D4)[0] == 3

    def test_larger_k(self):
        D, cert = c4free_family(6, 3)
        G = underlying_graph(D)
        assert is_chordal(G) and clique_number(G) == 6 and cert.chi == 4
        assert exact_dichromatic(D)[0] == 4

    def test_rejects(self):
        with pytest.raises(ValueError):
            c4free_family(2, 5)


class TestRandom:
    def test_complete_when_forced(self):
        assert random_chordal_superorientation(5, 5, 1, seed=7) == bidirected_complete(5)

    def test_edgeless_when_omega_one(self):
        assert random_chordal_superorientation(9, 1, Fraction(1, 2), seed=3).num_arcs == 0

    def test_example(self):
        D = random_chordal_superorientation(30, 6, Fraction(1, 4), seed=42)
        G = underlying_graph(D)
        assert is_chordal(G) and clique_number(G) <= 6

    def test_deterministic(self):
        a = random_chordal_superorientation(25, 4, Fraction(1, 3), seed=11)
        b = random_chordal_superorientation(25, 4, Fraction(1, 3), seed=11)
        assert format_digraph(a) == format_digraph(b)
        cert = random_chordal_certificate(a, 25, 4, Fraction(1, 3), 11)
        assert format_certificate(cert) == format_certificate(
            random_chordal_certificate(b, 25, 4, Fraction(1, 3), 11)
        )

    @pytest.mark.parametrize("args", [(0, 1, 0), (3, 4, 0), (3, 0, 0), (3, 2, 2), (3, 2, -1)])
    def test_rejects(self, args):
        with pytest.raises(ValueError):
            random_chordal_superorientation(*args)

    def test_generators_deterministic(self):
        for make in (lambda: interval_family(3)[0], lambda: cograph_family(3)[0],
                     lambda: chordal_kl_family(4, 1)[0], lambda: c4free_family(5, 7)[0]):
            assert format_digraph(make()) == format_digraph(make())

    def test_certificates_hold(self):
        rng = random.Random(51)
        for _ in range(30):
            n = rng.randint(1, 12)
            omega = rng.randint(1, n)
            p = Fraction(rng.randint(0, 2), 2)
            seed = rng.randrange(1000)
            D = random_chordal_superorientation(n, omega, p, seed)
            cert = random_chordal_certificate(D, n, omega, p, seed)
            assert clique_number(underlying_graph(D)) == cert.omega <= omega
            assert exact_dichromatic(D)[0] <= cert.chi_upper
