"""Non-private reference clustering with per-pair and per-vertex thresholds.

This is the analysis oracle: the same four-phase structure as the private
pipeline but noise-free, with an agreement threshold beta per vertex pair,
a lightness threshold lambda per vertex, and a forced-removal edge set
applied before anything else.  Unlike the private pipeline, the discarded
count l(v) includes the forced removals ("discarded in the previous
steps"), so the two procedures coincide only when the forced set is empty.

A second variant keeps light vertices inside their component's cluster
instead of splitting them into singletons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .cluster import Clustering
from .graph import SignedGraph
from .unionfind import UnionFind


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass
class AgreementVectors:
    """Thresholds driving the reference algorithm.

    beta: constant or mapping (u, v) -> value (symmetric; missing pairs fall
    back to default_beta).  lambda_: constant, mapping, or per-vertex array.
    e_rem: edges removed up front; must all exist in the graph.
    """
    beta: float | Mapping = 0.0
    lambda_: float | Mapping | np.ndarray = 0.0
    e_rem: frozenset = field(default_factory=frozenset)
    default_beta: float = 0.0

    def __post_init__(self):
        self.e_rem = frozenset(_edge_key(int(u), int(v))
                               for u, v in self.e_rem)

    def beta_for_edges(self, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
        if isinstance(self.beta, Mapping):
            return np.array(
                [self.beta.get(_edge_key(int(u), int(v)), self.default_beta)
                 for u, v in zip(us, vs)], dtype=np.float64)
        return np.full(len(us), float(self.beta))

    def lambda_per_vertex(self, n: int) -> np.ndarray:
        if isinstance(self.lambda_, Mapping):
            return np.array([self.lambda_.get(v, 0.0) for v in range(n)],
                            dtype=np.float64)
        if isinstance(self.lambda_, np.ndarray):
            if len(self.lambda_) != n:
                raise ValueError("lambda vector length must equal n")
            return self.lambda_.astype(np.float64)
        return np.full(n, float(self.lambda_))


@dataclass
class ReferenceTrace:
    edges: np.ndarray
    forced: np.ndarray            # bool per edge: in e_rem
    agreement_yes: np.ndarray     # bool per edge, original neighborhoods
    removed: np.ndarray           # bool per edge: forced or not in agreement
    removed_count: np.ndarray     # l(v)
    light: np.ndarray
    sparsified_edges: np.ndarray


def sparsify(g: SignedGraph, vectors: AgreementVectors) -> ReferenceTrace:
    """Run the removal phases and the light/heavy split; no clustering yet."""
    n = g.n
    deg = g.degrees.astype(np.float64)
    edges = g.edge_array()
    us, vs = edges[:, 0], edges[:, 1]

    edge_set = {_edge_key(int(u), int(v)) for u, v in edges}
    missing = vectors.e_rem - edge_set
    if missing:
        raise ValueError(f"forced-removal edges not in graph: {sorted(missing)[:3]}")
    forced = np.array([_edge_key(int(u), int(v)) in vectors.e_rem
                       for u, v in edges], dtype=bool)

    # Agreement against the original neighborhoods, decided for all edges
    # as one batch (forced edges keep their would-be status for bookkeeping).
    if len(edges):
        sym = g.sym_diff_sizes(us, vs)
        beta_uv = vectors.beta_for_edges(us, vs)
        agree = sym < beta_uv * np.maximum(deg[us], deg[vs])
    else:
        agree = np.zeros(0, dtype=bool)

    removed = forced | ~agree
    removed_count = (np.bincount(us[removed], minlength=n)
                     + np.bincount(vs[removed], minlength=n))
    lam = vectors.lambda_per_vertex(n)
    light = removed_count > lam * deg

    keep = ~removed & ~(light[us] & light[vs])
    return ReferenceTrace(
        edges=edges, forced=forced, agreement_yes=agree, removed=removed,
        removed_count=removed_count, light=light, sparsified_edges=edges[keep],
    )


def _component_roots(n: int, edges: np.ndarray) -> np.ndarray:
    uf = UnionFind(n)
    for u, v in edges:
        uf.union(int(u), int(v))
    return uf.roots()


def alg_cc(g: SignedGraph, vectors: AgreementVectors) -> Clustering:
    """Reference clustering: light vertices become singletons."""
    trace = sparsify(g, vectors)
    roots = _component_roots(g.n, trace.sparsified_edges)
    groups: dict[int, list[int]] = {}
    light_singletons = []
    for v in range(g.n):
        if trace.light[v]:
            light_singletons.append(v)
        else:
            groups.setdefault(int(roots[v]), []).append(v)
    all_groups = list(groups.values()) + [[v] for v in light_singletons]
    return Clustering.from_groups(g.n, all_groups, light_singletons)


def alg_cc_prime(g: SignedGraph, vectors: AgreementVectors) -> Clustering:
    """No-singleton variant: every component stays one cluster."""
    trace = sparsify(g, vectors)
    roots = _component_roots(g.n, trace.sparsified_edges)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(int(roots[v]), []).append(v)
    return Clustering.from_groups(g.n, list(groups.values()))
