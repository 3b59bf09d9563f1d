import random
from itertools import combinations, permutations

import pytest

from graphcomplex import (
    Graph,
    InvariantError,
    NotAutomorphismError,
    ParseError,
    VertexPermutation,
    automorphisms,
    canonicalize,
    enumerate_graphs,
    induced_edge_sign,
    is_leafless,
    is_zero_graph,
    parse_graph,
    serialize_graph,
)
from graphcomplex.graphs import all_graphs_up_to, canonical_class

from oracles import brute_automorphisms, brute_is_zero, perm_parity


def all_labeled_graphs(n, min_k=1, max_k=None):
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    top = len(pairs) if max_k is None else min(max_k, len(pairs))
    for k in range(min_k, top + 1):
        for sub in combinations(pairs, k):
            yield Graph(n, sub)


class TestParse:
    def test_triangle(self):
        g = parse_graph("3: (1,2),(1,3),(2,3)")
        assert g.n == 3
        assert g.edges == ((1, 2), (1, 3), (2, 3))

    def test_pair_normalization(self):
        assert parse_graph("2: (2,1)").edges == ((1, 2),)

    def test_duplicate_edge(self):
        with pytest.raises(InvariantError):
            parse_graph("3: (1,2),(1,2)")

    def test_normalized_duplicate(self):
        with pytest.raises(InvariantError):
            parse_graph("3: (1,2),(2,1)")

    def test_loop(self):
        with pytest.raises(InvariantError):
            parse_graph("2: (1,1)")

    def test_out_of_range(self):
        with pytest.raises(InvariantError):
            parse_graph("2: (1,3)")

    def test_optional_spaces(self):
        g = parse_graph("4: (1,2), (1,3), (1,4)")
        assert g.edges == ((1, 2), (1, 3), (1, 4))
        assert parse_graph("2:(1,2)").edges == ((1, 2),)

    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "3:",
            "3: (1,2),",
            "3: (1, 2)",  # no spaces inside a pair
            "(1,2)",
            "3 (1,2)",
            "3: 1,2",
            "x: (1,2)",
            "3: (1,2) (1,3)",
        ],
    )
    def test_malformed(self, bad):
        with pytest.raises(ParseError):
            parse_graph(bad)

    def test_edge_order_is_kept(self):
        g = parse_graph("3: (2,3),(1,2)")
        assert g.edges == ((2, 3), (1, 2))


class TestSerialize:
    def test_edge(self, edge):
        assert serialize_graph(edge) == "2: (1,2)"

    def test_triangle(self, triangle):
        assert serialize_graph(triangle) == "3: (1,2),(1,3),(2,3)"

    def test_round_trip_everywhere(self):
        rng = random.Random(5)
        for g in all_labeled_graphs(4):
            edges = list(g.edges)
            rng.shuffle(edges)
            h = Graph(g.n, tuple(edges))
            assert parse_graph(serialize_graph(h)) == h


class TestGraphInvariants:
    def test_empty_edge_list_rejected(self):
        with pytest.raises(InvariantError):
            Graph(1, ())

    def test_single_vertex_cannot_carry_an_edge(self):
        with pytest.raises(InvariantError):
            Graph(1, ((1, 1),))

    def test_vertex_count_positive(self):
        with pytest.raises(InvariantError):
            Graph(0, ((1, 2),))

    def test_isolated_vertices_allowed(self):
        g = Graph(4, ((1, 2),))
        assert g.degrees() == (1, 1, 0, 0)


class TestInducedEdgeSign:
    def test_triangle_flip_is_odd(self, triangle):
        assert induced_edge_sign(triangle, VertexPermutation((1, 3, 2))) == -1

    def test_identity_is_even(self, k4, triangle, path3):
        for g in (k4, triangle, path3):
            assert induced_edge_sign(g, VertexPermutation.identity(g.n)) == 1

    def test_k4_transposition_by_explicit_positions(self, k4):
        # swap vertices 1,2: track each of the 6 edges by hand
        p = VertexPermutation((2, 1, 3, 4))
        # (1,2)->(1,2) pos0, (1,3)->(2,3) pos3, (1,4)->(2,4) pos4,
        # (2,3)->(1,3) pos1, (2,4)->(1,4) pos2, (3,4)->(3,4) pos5
        assert perm_parity([0, 3, 4, 1, 2, 5]) == 1
        assert induced_edge_sign(k4, p) == 1

    def test_not_an_automorphism(self, path3):
        with pytest.raises(NotAutomorphismError):
            induced_edge_sign(path3, VertexPermutation((2, 1, 3)))

    def test_sign_is_multiplicative(self):
        for g in all_labeled_graphs(4, min_k=2):
            auts = automorphisms(g)
            if len(auts) < 2:
                continue
            signs = {a.images: induced_edge_sign(g, a) for a in auts}
            for p in auts[:4]:
                for q in auts[:4]:
                    pq = p.compose(q)
                    assert signs[pq.images] == signs[p.images] * signs[q.images]


class TestAutomorphisms:
    def test_edge(self, edge):
        assert [a.images for a in automorphisms(edge)] == [(1, 2), (2, 1)]

    def test_triangle_is_s3(self, triangle):
        assert [a.images for a in automorphisms(triangle)] == sorted(
            permutations((1, 2, 3))
        )

    def test_path_brute_force(self, path3):
        assert [a.images for a in automorphisms(path3)] == [(1, 2, 3), (3, 2, 1)]

    def test_matches_brute_force_up_to_5(self):
        for n in (3, 4):
            for g in all_labeled_graphs(n):
                assert [a.images for a in automorphisms(g)] == brute_automorphisms(
                    g.n, g.edges
                )
        rng = random.Random(11)
        sample = [g for g in all_labeled_graphs(5) if rng.random() < 0.05]
        for g in sample:
            assert [a.images for a in automorphisms(g)] == brute_automorphisms(
                g.n, g.edges
            )

    def test_group_structure(self, square):
        auts = automorphisms(square)
        images = {a.images for a in auts}
        assert VertexPermutation.identity(4).images in images
        for a in auts:
            assert a.inverse().images in images
            for b in auts:
                assert a.compose(b).images in images


class TestZeroGraphs:
    def test_triangle(self, triangle):
        zero, witness = is_zero_graph(triangle)
        assert zero
        assert induced_edge_sign(triangle, witness) == -1

    def test_square_cyclic_symmetry(self, square):
        zero, witness = is_zero_graph(square)
        assert zero
        assert induced_edge_sign(square, witness) == -1

    def test_k4_not_zero(self, k4):
        zero, witness = is_zero_graph(k4)
        assert not zero and witness is None
        # oracle: all 24 automorphisms are edge-even
        assert not brute_is_zero(k4.n, k4.edges)
        assert all(induced_edge_sign(k4, a) == 1 for a in automorphisms(k4))

    def test_path_flip(self, path3):
        zero, witness = is_zero_graph(path3)
        assert zero
        assert induced_edge_sign(path3, witness) == -1

    def test_brute_force_up_to_5(self):
        for n in (3, 4, 5):
            for g in all_labeled_graphs(n, max_k=6 if n == 5 else None):
                zero, witness = is_zero_graph(g)
                assert zero == brute_is_zero(g.n, g.edges)
                if zero:
                    assert induced_edge_sign(g, witness) == -1


class TestCanonicalize:
    def test_k4_reversed_is_odd(self, k4):
        r = canonicalize(Graph(4, tuple(reversed(k4.edges))))
        assert r.canonical == k4
        assert r.sign == -1 and not r.is_zero

    def test_triangle_verdict(self, triangle):
        r = canonicalize(Graph(3, ((2, 3), (1, 2), (1, 3))))
        assert r.is_zero and r.sign is None
        assert r.canonical == triangle

    def test_idempotent(self):
        for g in enumerate_graphs(4, 3) + enumerate_graphs(5, 5):
            r = canonicalize(g)
            assert r.canonical == g
            if not r.is_zero:
                assert r.sign == 1

    def test_relabeling_does_not_move_the_canonical_form(self):
        rng = random.Random(3)
        for g in all_labeled_graphs(4, min_k=2):
            base = canonicalize(g)
            for _ in range(3):
                images = list(range(1, g.n + 1))
                rng.shuffle(images)
                h = g.relabel(VertexPermutation(tuple(images)))
                r = canonicalize(h)
                assert r.canonical == base.canonical
                # vertex relabeling keeps edge positions: same sign
                if not base.is_zero:
                    assert r.sign == base.sign

    def test_edge_permutation_flips_sign_by_parity(self, k4):
        rng = random.Random(4)
        for g in [k4] + list(all_labeled_graphs(4, min_k=3)):
            base = canonicalize(g)
            if base.is_zero:
                continue
            order = list(range(g.k))
            rng.shuffle(order)
            h = Graph(g.n, tuple(g.edges[i] for i in order))
            positions = [order.index(i) for i in range(g.k)]
            assert canonicalize(h).sign == base.sign * perm_parity(
                [order[i] for i in range(g.k)]
            )

    def test_canonical_class_agrees(self):
        for g in all_labeled_graphs(4):
            edges, sign = canonical_class(g.n, g.edges)
            r = canonicalize(g)
            assert edges == r.canonical.edges
            assert sign == (0 if r.is_zero else r.sign)


class TestLeafless:
    def test_path_has_leaves(self, path3):
        assert not is_leafless(path3)

    def test_triangle_and_k4(self, triangle, k4):
        assert is_leafless(triangle) and is_leafless(k4)

    def test_isolated_vertex_counts_as_leafy(self):
        assert not is_leafless(Graph(4, ((1, 2), (2, 3), (1, 3))))


class TestEnumerate:
    def test_k4_is_the_only_6_edge_class(self, k4):
        assert enumerate_graphs(4, 6, exclude_zero=True) == [k4]

    def test_triangle_class_is_zero(self):
        assert enumerate_graphs(3, 3, exclude_zero=True) == []

    def test_single_edge(self, edge):
        assert enumerate_graphs(2, 1) == [edge]

    def test_counts_on_four_vertices(self):
        # classes with exactly 4 vertices: 3 with k=3; 10 with any k >= 1
        assert len(enumerate_graphs(4, 3)) == 3
        assert sum(len(enumerate_graphs(4, k)) for k in range(1, 7)) == 10

    def test_counts_on_five_vertices(self):
        assert sum(len(enumerate_graphs(5, k)) for k in range(1, 11)) == 33

    def test_connected_flag(self):
        for k in range(1, 7):
            for g in enumerate_graphs(4, k, connected=True):
                seen = {1}
                frontier = [1]
                while frontier:
                    v = frontier.pop()
                    for a, b in g.edges:
                        if a == v and b not in seen:
                            seen.add(b)
                            frontier.append(b)
                        if b == v and a not in seen:
                            seen.add(a)
                            frontier.append(a)
                assert len(seen) == g.n

    def test_leafless_flag(self):
        for k in range(1, 11):
            got = enumerate_graphs(5, k, leafless=True)
            assert all(min(g.degrees()) >= 2 for g in got)
        full = [g for g in enumerate_graphs(5, 5) if min(g.degrees()) >= 2]
        assert enumerate_graphs(5, 5, leafless=True) == full

    def test_every_output_is_self_canonical(self):
        for g in enumerate_graphs(5, 6):
            r = canonicalize(g)
            assert r.canonical == g
            if not r.is_zero:
                assert r.sign == 1

    def test_duplicate_free_and_sorted(self):
        got = enumerate_graphs(5, 4)
        assert len({g.edges for g in got}) == len(got)
        assert [g.edges for g in got] == sorted(g.edges for g in got)

    def test_bad_edge_count(self):
        with pytest.raises(InvariantError):
            enumerate_graphs(3, 0)
        with pytest.raises(InvariantError):
            enumerate_graphs(3, 4)

    def test_all_graphs_up_to_orders_by_bigrade(self):
        seq = list(all_graphs_up_to(4, max_edges=3))
        grades = [(g.n, g.k) for g in seq]
        assert grades == sorted(grades)
