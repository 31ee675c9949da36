"""The differentially private clustering pipeline.

Four phases, each instrumented into a RunTrace:

1. noised degrees; vertices whose noised degree clears the threshold form
   the high-degree set,
2. batch agreement filtering: the keep/discard decision of every edge is
   computed against the original neighborhoods, then all discards happen
   at once (edges with an endpoint outside the high-degree set are
   discarded unconditionally),
3. noised count of discarded incident edges decides light versus heavy,
4. edges between two light vertices are dropped, connected components of
   the surviving graph are computed, the heavy vertices of each component
   form one cluster, and every light vertex becomes a singleton.

Ties resolve exactly as the strict comparisons dictate: an exact tie in
the agreement test means "not in agreement", an exact tie in the lightness
test means "heavy".  Those ties are reachable in zero-noise testing mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .graph import SignedGraph
from .noise import (TAG_AGREEMENT, TAG_DEGREE, TAG_LIGHT, NoiseLedger,
                    agreement_scale, agreement_scales, laplace_array)
from .params import PrivacyParams
from .unionfind import UnionFind


@dataclass
class Clustering:
    """A partition of 0..n-1 with per-vertex light-singleton flags."""

    assignment: np.ndarray
    singleton_light: np.ndarray

    @classmethod
    def from_groups(cls, n: int, groups, light_singletons=()) -> "Clustering":
        """Build from vertex groups; cluster ids follow each group's minimum."""
        assignment = np.full(n, -1, dtype=np.int64)
        light = np.zeros(n, dtype=bool)
        ordered = sorted(groups, key=min)
        for cid, members in enumerate(ordered):
            assignment[list(members)] = cid
        for v in light_singletons:
            light[v] = True
        if np.any(assignment < 0):
            raise ValueError("groups do not cover every vertex")
        return cls(assignment, light)

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def num_clusters(self) -> int:
        return int(self.assignment.max()) + 1 if self.n else 0

    def groups(self) -> list[np.ndarray]:
        order = np.argsort(self.assignment, kind="stable")
        return [order[self.assignment[order] == cid]
                for cid in range(self.num_clusters)]

    def partition(self) -> frozenset:
        """Label-free view for exact partition comparisons."""
        return frozenset(frozenset(int(v) for v in grp)
                         for grp in self.groups())

    def same_cluster(self, u: int, v: int) -> bool:
        return bool(self.assignment[u] == self.assignment[v])


@dataclass
class RunTrace:
    """Everything one pipeline run decided, for audit and replay."""

    noised_degree: np.ndarray
    high_degree: np.ndarray          # bool mask: noised degree >= threshold
    edges: np.ndarray                # all positive edges, u < v
    agreement_yes: np.ndarray        # bool per edge; False outside H
    removed_agreement: np.ndarray    # bool per edge (phase-2 discards)
    removed_count: np.ndarray        # l(v): discarded incident edges
    noised_removed_count: np.ndarray
    light: np.ndarray                # bool mask
    sparsified_edges: np.ndarray     # edges of the sparsified graph
    ledger: NoiseLedger
    num_components: int = 0
    params: PrivacyParams | None = None

    @cached_property
    def agreement(self) -> dict:
        return {(int(u), int(v)): bool(a)
                for (u, v), a in zip(self.edges, self.agreement_yes)}

    def summary(self) -> dict:
        return {
            "n": len(self.noised_degree),
            "high_degree_count": int(self.high_degree.sum()),
            "edges_total": len(self.edges),
            "edges_removed_agreement": int(self.removed_agreement.sum()),
            "edges_removed_light_light": int(
                len(self.edges) - self.removed_agreement.sum()
                - len(self.sparsified_edges)),
            "edges_sparsified": len(self.sparsified_edges),
            "light_count": int(self.light.sum()),
            "component_count": self.num_components,
        }


def noised_agreement(g: SignedGraph, u: int, v: int, high_degree,
                     i: float, params: PrivacyParams,
                     ledger: NoiseLedger) -> bool:
    """The pairwise i-noised agreement test for two high-degree vertices.

    True iff |N(u) △ N(v)| + noise < i * beta * max(d(u), d(v)), with the
    pair's noise drawn from (or replayed out of) the ledger.
    """
    if u == v:
        raise ValueError("agreement requires two distinct vertices")
    if isinstance(high_degree, np.ndarray):
        inside = bool(high_degree[u]) and bool(high_degree[v])
    else:
        inside = u in high_degree and v in high_degree
    if not inside:
        raise ValueError("agreement is defined only within the high-degree set")
    d_u, d_v = g.degree(u), g.degree(v)
    noise = ledger.draw(TAG_AGREEMENT, (u, v),
                        agreement_scale(d_u, d_v, params))
    return g.sym_diff_size(u, v) + noise < i * params.beta * max(d_u, d_v)


def run(g: SignedGraph, params: PrivacyParams,
        seed: int) -> tuple[Clustering, RunTrace]:
    """Execute the full pipeline; deterministic in (graph, params, seed)."""
    n = g.n
    deg = g.degrees.astype(np.float64)
    ledger = NoiseLedger(seed)
    ids = np.arange(n, dtype=np.int64)
    vertex_scale = params.noise_multiplier * 8.0 / params.epsilon

    # Phase 1: noised degrees and the high-degree set.
    z = laplace_array(seed, TAG_DEGREE, ids, np.zeros(n, dtype=np.int64),
                      vertex_scale)
    ledger.record_array(TAG_DEGREE, ids, None, vertex_scale, z)
    noised_deg = deg + z
    high = noised_deg >= params.t0_effective

    # Phase 2: batch agreement decisions against the original graph.
    edges = g.edge_array()
    us, vs = edges[:, 0], edges[:, 1]
    candidate = high[us] & high[vs]
    agree = np.zeros(len(edges), dtype=bool)
    if candidate.any():
        cu, cv = us[candidate], vs[candidate]
        sym = g.sym_diff_sizes(cu, cv)
        scales = agreement_scales(deg[cu], deg[cv], params)
        noise = laplace_array(seed, TAG_AGREEMENT, cu, cv, scales)
        ledger.record_array(TAG_AGREEMENT, cu, cv, scales, noise)
        max_d = np.maximum(deg[cu], deg[cv])
        agree[candidate] = (sym + noise) < params.beta * max_d
    removed = ~agree

    # Phase 3: light vertices by noised count of discarded incident edges.
    removed_count = (np.bincount(us[removed], minlength=n)
                     + np.bincount(vs[removed], minlength=n)).astype(np.float64)
    y = laplace_array(seed, TAG_LIGHT, ids, np.zeros(n, dtype=np.int64),
                      vertex_scale)
    ledger.record_array(TAG_LIGHT, ids, None, vertex_scale, y)
    noised_removed = removed_count + y
    light = noised_removed > params.lambda_ * deg

    # Phase 4: drop light-light edges, then components -> clusters.
    keep = agree & ~(light[us] & light[vs])
    sparsified = edges[keep]
    clustering, num_components = _components_to_clusters(n, sparsified, light)

    trace = RunTrace(
        noised_degree=noised_deg, high_degree=high, edges=edges,
        agreement_yes=agree, removed_agreement=removed,
        removed_count=removed_count, noised_removed_count=noised_removed,
        light=light, sparsified_edges=sparsified, ledger=ledger,
        num_components=num_components, params=params,
    )
    return clustering, trace


def _components_to_clusters(n: int, sparsified: np.ndarray,
                            light: np.ndarray) -> tuple[Clustering, int]:
    """Heavy vertices of each component form a cluster; light ones split off."""
    uf = UnionFind(n)
    for u, v in sparsified:
        uf.union(int(u), int(v))
    roots = uf.roots()

    groups: dict[int, list[int]] = {}
    light_singletons = []
    for v in range(n):
        if light[v]:
            light_singletons.append(v)
        else:
            groups.setdefault(int(roots[v]), []).append(v)
    all_groups = list(groups.values()) + [[v] for v in light_singletons]
    clustering = Clustering.from_groups(n, all_groups, light_singletons)
    return clustering, uf.num_components


# -- clustering text format ---------------------------------------------------
#
#   # key=value headers, then one line per vertex: "vertex cluster_id flag"
#   where flag is 1 for a light singleton.

def write_clustering(clustering: Clustering, stream,
                     header: dict | None = None,
                     banners: tuple[str, ...] = ()) -> None:
    for line in banners:
        stream.write(f"# {line}\n")
    for key, value in (header or {}).items():
        stream.write(f"# {key}={value}\n")
    for v in range(clustering.n):
        flag = 1 if clustering.singleton_light[v] else 0
        stream.write(f"{v} {clustering.assignment[v]} {flag}\n")


def parse_clustering(stream) -> Clustering:
    assign: dict[int, int] = {}
    light = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'vertex cluster flag'")
        v, cid, flag = int(parts[0]), int(parts[1]), int(parts[2])
        assign[v] = cid
        if flag:
            light.add(v)
    n = max(assign) + 1 if assign else 0
    if sorted(assign) != list(range(n)):
        raise ValueError("clustering must cover vertices 0..n-1")
    assignment = np.array([assign[v] for v in range(n)], dtype=np.int64)
    flags = np.array([v in light for v in range(n)], dtype=bool)
    return Clustering(assignment, flags)
