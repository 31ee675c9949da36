"""Signed complete graphs represented by their "+" edges.

A graph on vertices 0..n-1 stores only the positive adjacency; every absent
pair is an implicit "-" edge of the complete signed graph.  All neighborhood
arithmetic uses closed neighborhoods (every vertex belongs to its own
neighborhood), so an isolated vertex has degree 1.
"""

from __future__ import annotations

import io
from typing import Iterable

import numpy as np
import scipy.sparse as sp


class EdgeListParseError(ValueError):
    """Malformed edge-list input; the message names the offending line."""


class SignedGraph:
    """Immutable undirected graph over dense integer vertex ids.

    Stored adjacency excludes self-loops; the self-inclusion convention is
    applied virtually by the neighborhood accessors.
    """

    __slots__ = ("n", "_indptr", "_indices", "_csr_closed")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = int(n)
        pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if pairs.size:
            if pairs.min() < 0 or pairs.max() >= self.n:
                raise ValueError("edge endpoint out of range")
            if np.any(pairs[:, 0] == pairs[:, 1]):
                raise ValueError("self-loops are not allowed")
        # Symmetrize, deduplicate, and freeze as CSR.
        both = np.concatenate([pairs, pairs[:, ::-1]], axis=0)
        mat = sp.csr_matrix(
            (np.ones(len(both), dtype=np.int8), (both[:, 0], both[:, 1])),
            shape=(self.n, self.n),
        )
        mat.data[:] = 1
        mat.sum_duplicates()
        mat.sort_indices()
        self._indptr = mat.indptr
        self._indices = mat.indices.astype(np.int64)
        self._csr_closed = None

    # -- basic accessors ---------------------------------------------------

    @property
    def num_pos_edges(self) -> int:
        return len(self._indices) // 2

    def neighbors(self, v: int) -> np.ndarray:
        """Stored positive neighbors of v, sorted, excluding v itself."""
        self._check_vertex(v)
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def closed_neighborhood(self, v: int) -> np.ndarray:
        """Sorted neighbor set of v including v itself."""
        nbrs = self.neighbors(v)
        pos = int(np.searchsorted(nbrs, v))
        return np.insert(nbrs, pos, v)

    def degree(self, v: int) -> int:
        """Closed degree |N(v)| (counts v itself)."""
        self._check_vertex(v)
        return int(self._indptr[v + 1] - self._indptr[v]) + 1

    @property
    def degrees(self) -> np.ndarray:
        """Closed degrees of all vertices."""
        return np.diff(self._indptr) + 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        nbrs = self.neighbors(u)
        pos = np.searchsorted(nbrs, v)
        return bool(pos < len(nbrs) and nbrs[pos] == v)

    def edge_array(self) -> np.ndarray:
        """All positive edges as an (m, 2) array with u < v, lexicographic."""
        us = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self._indptr))
        vs = self._indices
        keep = us < vs
        return np.column_stack([us[keep], vs[keep]])

    def closed_csr(self) -> sp.csr_matrix:
        """0/1 CSR of closed neighborhoods (adjacency plus the identity)."""
        if self._csr_closed is None:
            adj = sp.csr_matrix(
                (np.ones(len(self._indices), dtype=np.int8), self._indices,
                 self._indptr),
                shape=(self.n, self.n),
            )
            closed = adj + sp.identity(self.n, dtype=np.int8, format="csr")
            closed.sort_indices()
            self._csr_closed = closed
        return self._csr_closed

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- neighborhood arithmetic --------------------------------------------

    def sym_diff_size(self, u: int, v: int) -> int:
        """|N(u) △ N(v)| under the closed-neighborhood convention.

        Sorted-merge intersection, O(d(u) + d(v)).
        """
        if u == v:
            raise ValueError("symmetric difference requires distinct vertices")
        au, av = self.neighbors(u), self.neighbors(v)
        common = np.intersect1d(au, av, assume_unique=True).size
        if self.has_edge(u, v):
            common += 2  # u sits in N(v) and v in N(u)
        return self.degree(u) + self.degree(v) - 2 * common

    def sym_diff_sizes(self, us: np.ndarray, vs: np.ndarray,
                       chunk: int = 65536) -> np.ndarray:
        """Vectorized |N(u) △ N(v)| for parallel arrays of vertex pairs."""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if np.any(us == vs):
            raise ValueError("symmetric difference requires distinct vertices")
        closed = self.closed_csr()
        deg = self.degrees
        out = np.empty(len(us), dtype=np.int64)
        for lo in range(0, len(us), chunk):
            hi = min(lo + chunk, len(us))
            inter = closed[us[lo:hi]].multiply(closed[vs[lo:hi]]).sum(axis=1)
            inter = np.asarray(inter).ravel()
            out[lo:hi] = deg[us[lo:hi]] + deg[vs[lo:hi]] - 2 * inter
        return out

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, SignedGraph) and self.n == other.n
                and np.array_equal(self._indptr, other._indptr)
                and np.array_equal(self._indices, other._indices))

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, pos_edges={self.num_pos_edges})"


def closed_neighborhood(g: SignedGraph, v: int) -> np.ndarray:
    return g.closed_neighborhood(v)


def sym_diff_size(g: SignedGraph, u: int, v: int) -> int:
    return g.sym_diff_size(u, v)


# -- edge-list text format ---------------------------------------------------
#
#   # n=<count>          optional header (must come before any edge)
#   # free-form comment
#   u v                  one positive edge per line, whitespace separated
#
# Duplicate lines and both orientations collapse to a single edge.

def load_edge_list(stream, remap: bool = False):
    """Parse the edge-list text format into a SignedGraph.

    With remap=True, vertex labels may be arbitrary nonnegative integers;
    they are renumbered densely and the label table is returned alongside
    the graph as (graph, labels).
    """
    if isinstance(stream, (str, bytes)):
        stream = io.StringIO(stream.decode() if isinstance(stream, bytes)
                             else stream)
    declared_n = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n=") and declared_n is None and not edges:
                try:
                    declared_n = int(body[2:])
                except ValueError:
                    raise EdgeListParseError(
                        f"line {lineno}: bad header {line!r}") from None
                if declared_n < 0:
                    raise EdgeListParseError(
                        f"line {lineno}: negative vertex count")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(
                f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(
                f"line {lineno}: non-integer vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(f"line {lineno}: negative vertex id")
        if u == v:
            raise EdgeListParseError(f"line {lineno}: self-loop {u}")
        edges.append((u, v))
        max_id = max(max_id, u, v)

    if remap:
        labels = sorted({x for e in edges for x in e})
        index = {lab: i for i, lab in enumerate(labels)}
        g = SignedGraph(len(labels), [(index[u], index[v]) for u, v in edges])
        return g, labels

    n = declared_n if declared_n is not None else max_id + 1
    if max_id >= n:
        raise EdgeListParseError(
            f"vertex id {max_id} exceeds declared count n={n}")
    return SignedGraph(n, edges)


def dump_edge_list(g: SignedGraph, stream) -> None:
    """Write the bit-exact round-trip form: header plus sorted edges."""
    stream.write(f"# n={g.n}\n")
    for u, v in g.edge_array():
        stream.write(f"{u} {v}\n")


def as_signed_graph(X) -> SignedGraph:
    """Coerce estimator input into a SignedGraph.

    Accepts a SignedGraph, a square (sparse or dense) symmetric 0/1
    adjacency matrix, or a tuple (n, edge_array).
    """
    if isinstance(X, SignedGraph):
        return X
    if isinstance(X, tuple) and len(X) == 2:
        n, edges = X
        return SignedGraph(int(n), np.asarray(edges, dtype=np.int64)
                           .reshape(-1, 2))
    if sp.issparse(X):
        X = X.tocoo()
        if X.shape[0] != X.shape[1]:
            raise ValueError("adjacency matrix must be square")
        mask = (X.row < X.col) & (X.data != 0)
        return SignedGraph(X.shape[0],
                           np.column_stack([X.row[mask], X.col[mask]]))
    arr = np.asarray(X)
    if arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
        if not np.array_equal(arr, arr.T):
            raise ValueError("adjacency matrix must be symmetric")
        us, vs = np.nonzero(np.triu(arr, k=1))
        return SignedGraph(arr.shape[0], np.column_stack([us, vs]))
    raise ValueError(
        "expected SignedGraph, square adjacency matrix, or (n, edges) tuple")
