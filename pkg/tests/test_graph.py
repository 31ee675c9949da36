import io

import numpy as np
import pytest

from privcc.graph import (EdgeListParseError, SignedGraph, as_signed_graph,
                          dump_edge_list, load_edge_list)


def closed_set_oracle(g, v):
    """Independent closed-neighborhood construction from the edge list."""
    nbrs = {v}
    for a, b in g.edge_array():
        if a == v:
            nbrs.add(int(b))
        if b == v:
            nbrs.add(int(a))
    return nbrs


class TestLoadEdgeList:
    def test_empty_stream_with_header(self):
        g = load_edge_list("# n=3\n")
        assert g.n == 3 and g.num_pos_edges == 0

    def test_two_edges(self):
        g = load_edge_list("0 1\n1 2\n")
        assert g.n == 3
        assert list(g.neighbors(1)) == [0, 2]

    def test_duplicate_and_reversed_collapse(self):
        g = load_edge_list("0 1\n1 0\n0 1\n")
        assert g.num_pos_edges == 1

    def test_comments_and_blank_lines(self):
        g = load_edge_list("# a comment\n\n0 2\n# another\n")
        assert g.n == 3 and g.num_pos_edges == 1

    @pytest.mark.parametrize("text,fragment", [
        ("0 1 2\n", "line 1"),
        ("0 1\nx y\n", "line 2"),
        ("3 3\n", "self-loop"),
        ("-1 2\n", "negative"),
    ])
    def test_parse_errors_name_the_line(self, text, fragment):
        with pytest.raises(EdgeListParseError, match=fragment):
            load_edge_list(text)

    def test_header_too_small(self):
        with pytest.raises(EdgeListParseError, match="exceeds"):
            load_edge_list("# n=2\n0 5\n")

    def test_remap_labels(self):
        g, labels = load_edge_list("10 30\n30 20\n", remap=True)
        assert g.n == 3 and labels == [10, 20, 30]
        assert g.has_edge(0, 2) and g.has_edge(1, 2)

    def test_round_trip_bit_exact(self):
        g = load_edge_list("# n=6\n0 1\n2 5\n1 4\n")
        buf1 = io.StringIO()
        dump_edge_list(g, buf1)
        g2 = load_edge_list(buf1.getvalue())
        assert g == g2
        buf2 = io.StringIO()
        dump_edge_list(g2, buf2)
        assert buf1.getvalue() == buf2.getvalue()


class TestClosedNeighborhood:
    def test_isolated_vertex(self):
        g = SignedGraph(4, [(0, 1)])
        assert list(g.closed_neighborhood(3)) == [3]
        assert g.degree(3) == 1

    def test_single_edge(self):
        g = SignedGraph(2, [(0, 1)])
        assert list(g.closed_neighborhood(0)) == [0, 1]
        assert g.degree(0) == 2

    def test_star_center(self):
        g = SignedGraph(5, [(0, i) for i in range(1, 5)])
        assert len(g.closed_neighborhood(0)) == 5

    def test_out_of_range(self):
        g = SignedGraph(2, [(0, 1)])
        with pytest.raises(ValueError, match="out of range"):
            g.closed_neighborhood(2)


class TestSymDiff:
    def test_single_edge_identical_neighborhoods(self):
        g = SignedGraph(2, [(0, 1)])
        assert g.sym_diff_size(0, 1) == 0

    def test_path(self):
        g = SignedGraph(3, [(0, 1), (1, 2)])
        expected = len(closed_set_oracle(g, 0) ^ closed_set_oracle(g, 2))
        assert expected == 2
        assert g.sym_diff_size(0, 2) == expected

    def test_k4_any_pair(self):
        g = SignedGraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        for u in range(4):
            for v in range(u + 1, 4):
                expected = len(closed_set_oracle(g, u)
                               ^ closed_set_oracle(g, v))
                assert expected == 0
                assert g.sym_diff_size(u, v) == expected

    def test_same_vertex_rejected(self):
        g = SignedGraph(3, [(0, 1)])
        with pytest.raises(ValueError):
            g.sym_diff_size(1, 1)

    def test_random_graphs_against_set_oracle(self):
        rng = np.random.default_rng(42)
        for _ in range(30):
            n = int(rng.integers(2, 65))
            density = rng.uniform(0.05, 0.5)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < density]
            g = SignedGraph(n, pairs)
            deg = g.degrees
            for _ in range(20):
                u, v = rng.choice(n, 2, replace=False)
                u, v = int(u), int(v)
                expected = len(closed_set_oracle(g, u)
                               ^ closed_set_oracle(g, v))
                got = g.sym_diff_size(u, v)
                assert got == expected
                assert got == g.sym_diff_size(v, u)
                assert abs(deg[u] - deg[v]) <= got
                common = len(closed_set_oracle(g, u)
                             & closed_set_oracle(g, v))
                assert got == deg[u] + deg[v] - 2 * common

    def test_vectorized_matches_scalar(self):
        rng = np.random.default_rng(7)
        n = 40
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.2]
        g = SignedGraph(n, pairs)
        edges = g.edge_array()
        vec = g.sym_diff_sizes(edges[:, 0], edges[:, 1])
        scalar = [g.sym_diff_size(int(u), int(v)) for u, v in edges]
        assert list(vec) == scalar


class TestGraphInvariants:
    def test_symmetry_and_counts(self):
        g = SignedGraph(5, [(0, 1), (1, 2), (3, 4), (0, 4)])
        total = sum(len(g.neighbors(v)) for v in range(5))
        assert total == 2 * g.num_pos_edges
        for u, v in g.edge_array():
            assert g.has_edge(int(v), int(u))

    def test_rejects_bad_edges(self):
        with pytest.raises(ValueError):
            SignedGraph(3, [(0, 3)])
        with pytest.raises(ValueError):
            SignedGraph(3, [(1, 1)])
        with pytest.raises(ValueError):
            SignedGraph(-1)


class TestAsSignedGraph:
    def test_identity(self):
        g = SignedGraph(3, [(0, 1)])
        assert as_signed_graph(g) is g

    def test_tuple_form(self):
        g = as_signed_graph((4, [(0, 2), (1, 3)]))
        assert g.n == 4 and g.num_pos_edges == 2

    def test_dense_adjacency(self):
        mat = np.zeros((3, 3), dtype=int)
        mat[0, 1] = mat[1, 0] = 1
        g = as_signed_graph(mat)
        assert g.has_edge(0, 1) and g.num_pos_edges == 1

    def test_sparse_adjacency(self):
        import scipy.sparse as sp
        mat = sp.csr_matrix(([1, 1], ([0, 1], [1, 0])), shape=(3, 3))
        g = as_signed_graph(mat)
        assert g.has_edge(0, 1) and g.num_pos_edges == 1

    def test_asymmetric_rejected(self):
        mat = np.zeros((3, 3), dtype=int)
        mat[0, 1] = 1
        with pytest.raises(ValueError, match="symmetric"):
            as_signed_graph(mat)
