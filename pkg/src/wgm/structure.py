"""Clustering coefficients (exact and node-sampled with convergence
traces) and sampled shortest-path length.

Clustering works on the undirected projection of the graph (u~v iff
u->v or v->u) with the standard local coefficient; nodes with fewer
than two neighbors contribute 0, so the sampling target equals the
plain mean over all nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EmptyGraph, SingleNode
from .graph import ArticleGraph

__all__ = [
    "ClusteringTrace",
    "PathSampleResult",
    "local_clustering",
    "exact_clustering",
    "sampled_clustering",
    "sampled_avg_path",
    "trace_csv",
]


@dataclass(frozen=True)
class ClusteringTrace:
    """Running-average clustering estimates along a sampling run."""

    estimates: tuple[tuple[int, float], ...]
    final_estimate: float
    seed: int


@dataclass(frozen=True)
class PathSampleResult:
    mean_path_length: float
    reachable_pairs: int
    sampled_pairs: int
    unreachable_fraction: float
    seed: int


def _sorted_common(a: np.ndarray, b: np.ndarray) -> int:
    """Count common elements of two sorted unique int arrays."""
    if a.size == 0 or b.size == 0:
        return 0
    pos = np.searchsorted(b, a)
    pos[pos == b.size] = b.size - 1
    return int(np.count_nonzero(b[pos] == a))


def _coefficient(indptr: np.ndarray, indices: np.ndarray, node: int) -> float:
    start, end = indptr[node], indptr[node + 1]
    deg = int(end - start)
    if deg < 2:
        return 0.0
    nbrs = indices[start:end]
    links = 0
    for v in nbrs:
        links += _sorted_common(nbrs, indices[indptr[v] : indptr[v + 1]])
    # links counts each closed neighbor pair twice
    return links / (deg * (deg - 1))


def local_clustering(graph: ArticleGraph, node: int) -> float:
    """Watts-Strogatz local coefficient on the undirected projection."""
    graph.undirected_neighbors(node)  # range check
    indptr, indices = graph.undirected_csr()
    return _coefficient(indptr, indices, int(node))


def exact_clustering(graph: ArticleGraph) -> float:
    """Mean local coefficient over every node."""
    if graph.node_count == 0:
        raise EmptyGraph("clustering of an empty graph is undefined")
    indptr, indices = graph.undirected_csr()
    return math.fsum(_coefficient(indptr, indices, u) for u in range(graph.node_count)) / graph.node_count


def sampled_clustering(
    graph: ArticleGraph, n_samples: int, seed: int, trace_stride: int = 100
) -> ClusteringTrace:
    """Estimate the mean clustering by uniform node sampling.

    Nodes are drawn with replacement from a generator seeded with
    `seed`; the running mean is recorded every `trace_stride` samples
    and at the end. Identical (graph, n_samples, seed) runs produce
    identical traces.
    """
    if graph.node_count == 0:
        raise EmptyGraph("cannot sample nodes of an empty graph")
    if n_samples < 1:
        raise DomainError(f"n_samples must be >= 1, got {n_samples}")
    if trace_stride < 1:
        raise DomainError(f"trace_stride must be >= 1, got {trace_stride}")

    rng = np.random.default_rng(seed)
    picks = rng.integers(0, graph.node_count, size=n_samples)

    indptr, indices = graph.undirected_csr()
    coeff = np.full(graph.node_count, np.nan)
    for u in np.unique(picks):
        coeff[u] = _coefficient(indptr, indices, int(u))

    running = np.cumsum(coeff[picks]) / np.arange(1, n_samples + 1)
    marks = list(range(trace_stride - 1, n_samples, trace_stride))
    if not marks or marks[-1] != n_samples - 1:
        marks.append(n_samples - 1)
    estimates = tuple((m + 1, float(running[m])) for m in marks)
    return ClusteringTrace(estimates=estimates, final_estimate=float(running[-1]), seed=seed)


def _bfs_distances(indptr: np.ndarray, indices: np.ndarray, source: int, n: int) -> np.ndarray:
    """Hop distances from `source`; -1 where unreachable."""
    dist = np.full(n, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    depth = 0
    while frontier.size:
        starts = indptr[frontier]
        counts = indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        cum = np.cumsum(counts)
        gather = np.arange(total) + np.repeat(starts - np.concatenate(([0], cum[:-1])), counts)
        nbrs = indices[gather]
        nbrs = nbrs[dist[nbrs] < 0]
        if nbrs.size == 0:
            break
        frontier = np.unique(nbrs)
        depth += 1
        dist[frontier] = depth
    return dist


def sampled_avg_path(
    graph: ArticleGraph,
    n_pairs: int,
    seed: int,
    directed: bool = True,
    exhaustive: bool = False,
) -> PathSampleResult:
    """Mean BFS distance over sampled ordered node pairs.

    Pairs (s, t) with s != t are drawn uniformly with replacement;
    unreachable pairs are excluded from the mean and reported as a
    fraction. With `exhaustive=True` every ordered pair is covered once
    and `n_pairs` is ignored.
    """
    n = graph.node_count
    if n == 0:
        raise EmptyGraph("cannot sample pairs of an empty graph")
    if n == 1:
        raise SingleNode("pair sampling needs at least two nodes")

    indptr, indices = graph.directed_csr() if directed else graph.undirected_csr()

    if exhaustive:
        sampled = n * (n - 1)
        total = 0
        reachable = 0
        for s in range(n):
            dist = _bfs_distances(indptr, indices, s, n)
            hit = dist > 0
            reachable += int(hit.sum())
            total += int(dist[hit].sum())
    else:
        if n_pairs < 1:
            raise DomainError(f"n_pairs must be >= 1, got {n_pairs}")
        rng = np.random.default_rng(seed)
        src = rng.integers(0, n, size=n_pairs)
        dst = rng.integers(0, n, size=n_pairs)
        clash = src == dst
        while clash.any():
            m = int(clash.sum())
            src[clash] = rng.integers(0, n, size=m)
            dst[clash] = rng.integers(0, n, size=m)
            clash = src == dst

        sampled = n_pairs
        total = 0
        reachable = 0
        # distances are order-independent, so pairs are batched by source
        for s in np.unique(src):
            dist = _bfs_distances(indptr, indices, int(s), n)
            d = dist[dst[src == s]]
            hit = d > 0
            reachable += int(hit.sum())
            total += int(d[hit].sum())

    mean = total / reachable if reachable else math.nan
    return PathSampleResult(
        mean_path_length=mean,
        reachable_pairs=reachable,
        sampled_pairs=sampled,
        unreachable_fraction=(sampled - reachable) / sampled,
        seed=seed,
    )


def trace_csv(trace: ClusteringTrace) -> str:
    """CSV export `samples,running_mean` of a sampling trace."""
    lines = ["samples,running_mean"]
    lines += [f"{s},{m!r}" for s, m in trace.estimates]
    return "\n".join(lines) + "\n"
