"""Independent checks: brute-force triple sums and an exact radio-number solver.

The solver runs depth-first over vertex orderings, labels each prefix
greedily (the least labels consistent with the order), and prunes a
prefix once its last label plus the number of unplaced vertices reaches
the incumbent span. Exhausting the tree proves optimality.
"""
from __future__ import annotations

import itertools
import math
import threading
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DomainError
from .radio_core import Labeling, next_greedy_label, span, verify_full
from .torus_graph import Torus, diameter


@dataclass(frozen=True)
class GraphInstance:
    """Connected simple graph given by its all-pairs distance matrix.

    ``vertex_transitive`` is a declaration by the caller; the solver only
    uses it to fix the first vertex of every ordering.
    """

    vertex_count: int
    distances: tuple[tuple[int, ...], ...]
    name: str = "graph"
    vertex_transitive: bool = False

    def __post_init__(self):
        if self.vertex_count < 1:
            raise DomainError("graph needs at least one vertex")
        m = np.asarray(self.distances)
        if m.shape != (self.vertex_count, self.vertex_count):
            raise DomainError(f"distance matrix has shape {m.shape}, expected {self.vertex_count} square")
        if (np.diag(m) != 0).any() or (m != m.T).any():
            raise DomainError("distance matrix must be symmetric with zero diagonal")
        off = m[~np.eye(self.vertex_count, dtype=bool)]
        if (off < 1).any():
            raise DomainError("distinct vertices must be at distance >= 1")
        # d(u, w) <= d(u, v) + d(v, w) for all v
        if (m[:, None, :] > m[:, :, None] + m[None, :, :]).any():
            raise DomainError("distance matrix violates the triangle inequality")

    @cached_property
    def diameter(self) -> int:
        return max(max(row) for row in self.distances)

    def vertices(self):
        return range(self.vertex_count)

    def distance(self, u: int, v: int) -> int:
        return self.distances[u][v]

    def distance_matrix(self) -> np.ndarray:
        return np.asarray(self.distances, dtype=np.int64)


def graph_from_edges(vertex_count, edges, name="graph", vertex_transitive=False) -> GraphInstance:
    """All-pairs BFS over an undirected simple graph with 0-indexed vertices."""
    adj = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
        if u == v:
            raise DomainError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    rows = []
    for s in range(vertex_count):
        dist = [-1] * vertex_count
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if -1 in dist:
            raise DomainError("graph is disconnected; radio labelings need a connected graph")
        rows.append(tuple(dist))
    return GraphInstance(vertex_count, tuple(rows), name, vertex_transitive)


def read_dimacs(text: str, name="dimacs") -> GraphInstance:
    """Parse ``p edge V E`` followed by ``e u v`` lines (1-indexed); ``c`` lines are comments."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if header is not None or len(parts) != 4 or parts[1] != "edge":
                    raise ValueError
                header = int(parts[2]), int(parts[3])
            elif parts[0] == "e":
                if header is None or len(parts) != 3:
                    raise ValueError
                edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise ValueError
        except ValueError:
            raise DomainError(f"line {lineno}: cannot parse {raw.strip()!r}") from None
    if header is None:
        raise DomainError("missing 'p edge <vertices> <edges>' header")
    if len(edges) != header[1]:
        raise DomainError(f"header announces {header[1]} edges, found {len(edges)}")
    return graph_from_edges(header[0], edges, name)


# graph families


def torus_instance(n: int) -> GraphInstance:
    t = Torus(n)
    index = {v: i for i, v in enumerate(t.vertices())}
    edges = set()
    for v in t.vertices():
        for shift in ((1, 0), (0, 1)):
            w = v + shift
            if w != v:
                edges.add(tuple(sorted((index[v], index[w]))))
    return graph_from_edges(n * n, sorted(edges), f"C{n}xC{n}", vertex_transitive=True)


def cycle_instance(m: int) -> GraphInstance:
    if m < 3:
        raise DomainError(f"cycle needs m >= 3, got {m}")
    return graph_from_edges(m, [(i, (i + 1) % m) for i in range(m)], f"C{m}", vertex_transitive=True)


def complete_instance(m: int) -> GraphInstance:
    return graph_from_edges(m, list(itertools.combinations(range(m), 2)), f"K{m}", vertex_transitive=True)


def complete_product_instance(m: int, p: int) -> GraphInstance:
    """K_m x K_p (the m-by-p rook's graph); vertex (a, b) has index a*p + b."""
    edges = []
    for u, v in itertools.combinations(range(m * p), 2):
        (ua, ub), (va, vb) = divmod(u, p), divmod(v, p)
        if ua == va or ub == vb:
            edges.append((u, v))
    return graph_from_edges(m * p, edges, f"K{m}xK{p}", vertex_transitive=True)


# triple distance sums


def triple_sum_bound(n: int) -> int:
    """Largest possible d(u,v) + d(v,w) + d(u,w) on C_n x C_n."""
    return 2 * diameter(n) + 2 * (n % 2)


def _max_triple_sum(dist: np.ndarray) -> int:
    count = len(dist)
    best = 0
    for u in range(count - 2):
        for v in range(u + 1, count - 1):
            best = max(best, int((dist[u, v] + dist[v, v + 1:] + dist[u, v + 1:]).max()))
    return best


def max_triple_distance_sum(n: int) -> int:
    """Brute-force maximum over all triples of distinct vertices of C_n x C_n."""
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    return _max_triple_sum(Torus(n).distance_matrix())


def gap_lower_bound(g: GraphInstance) -> int:
    """Minimum difference between every second label, for any graph.

    Summing the radio condition over three vertices gives
    2 (c(w) - c(u)) >= 3 + 3 diam - (d(u,v) + d(v,w) + d(u,w)).
    Labels are distinct, so the gap is at least 2 regardless.
    """
    if g.vertex_count < 3:
        return 2
    worst = _max_triple_sum(g.distance_matrix())
    return max(2, math.ceil((3 + 3 * g.diameter - worst) / 2))


def span_lower_bound(g: GraphInstance) -> int:
    from .constructions import rank_lower_bound

    return rank_lower_bound(g.vertex_count, gap_lower_bound(g))


# exact solver


@dataclass(frozen=True)
class SearchConfig:
    node_limit: int = 10_000_000
    fix_first_vertex: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.node_limit < 1:
            raise DomainError("node_limit must be >= 1")
        if self.workers < 1:
            raise DomainError("workers must be >= 1")


@dataclass(frozen=True)
class RnCertificate:
    optimal_span: int
    witness: Labeling = field(repr=False)
    exhausted: bool
    nodes: int = 0


class _OutOfBudget(Exception):
    pass


class _Search:
    def __init__(self, g, cfg, upper_span, upper_order):
        self.dist = g.distances
        self.diam = g.diameter
        self.count = g.vertex_count
        self.limit = cfg.node_limit
        self.best_span = upper_span
        self.best_order = upper_order
        self._lock = threading.Lock()
        self._nodes = itertools.count(1)
        self.nodes = 0

    def _offer(self, order, last):
        with self._lock:
            if self.best_span is None or last < self.best_span:
                self.best_span = last
                self.best_order = list(order)

    def run_from(self, prefix):
        order, labels = [], []
        remaining = set(range(self.count))
        for v in prefix:
            labels.append(next_greedy_label(order, labels, v, self._d, self.diam))
            order.append(v)
            remaining.discard(v)
        self._dfs(order, labels, remaining)

    def _d(self, u, v):
        return self.dist[u][v]

    def _dfs(self, order, labels, remaining):
        self.nodes = next(self._nodes)
        if self.nodes > self.limit:
            raise _OutOfBudget
        if not remaining:
            self._offer(order, labels[-1])
            return
        left = len(remaining) - 1
        children = []
        for v in remaining:
            c = next_greedy_label(order, labels, v, self._d, self.diam)
            children.append((c, v))
        children.sort()
        for c, v in children:
            # every later vertex needs a strictly larger label
            if self.best_span is not None and c + left >= self.best_span:
                break
            order.append(v)
            labels.append(c)
            remaining.remove(v)
            self._dfs(order, labels, remaining)
            remaining.add(v)
            order.pop()
            labels.pop()


def _greedy_labels(order, g):
    labels = []
    for i, v in enumerate(order):
        labels.append(next_greedy_label(order[:i], labels, v, g.distance, g.diameter))
    return labels


def exact_rn(g: GraphInstance, cfg: SearchConfig = SearchConfig(), upper: Labeling | None = None) -> RnCertificate:
    """Radio number of ``g`` by exhaustive branch and bound.

    ``upper`` is an optional known radio labeling of ``g`` used as the
    starting incumbent. If the node budget runs out the certificate holds
    the best span found with ``exhausted=False``.
    """
    upper_span = upper_order = None
    if upper is not None:
        if upper.space != g:
            raise DomainError("warm-start labeling belongs to a different graph")
        if not verify_full(upper).ok:
            raise DomainError("warm-start labeling is not a radio labeling")
        upper_order = sorted(g.vertices(), key=upper.labels.__getitem__)
        upper_span = _greedy_labels(upper_order, g)[-1]

    search = _Search(g, cfg, upper_span, upper_order)
    if cfg.fix_first_vertex:
        roots = [[0, v] for v in range(1, g.vertex_count)] or [[0]]
    else:
        roots = [[v] for v in range(g.vertex_count)]

    exhausted = True
    try:
        if cfg.workers == 1:
            for root in roots:
                search.run_from(root)
        else:
            with ThreadPoolExecutor(cfg.workers) as pool:
                for fut in [pool.submit(search.run_from, root) for root in roots]:
                    fut.result()
    except _OutOfBudget:
        exhausted = False

    if search.best_order is None:
        # budget ran out before any complete ordering; fall back to a plain greedy one
        search.best_order = list(g.vertices())
        search.best_span = _greedy_labels(search.best_order, g)[-1]
    labels = _greedy_labels(search.best_order, g)
    witness = Labeling(g, dict(zip(search.best_order, labels)))
    return RnCertificate(span(witness), witness, exhausted, min(search.nodes, cfg.node_limit))


def torus_warm_start(n: int, g: GraphInstance | None = None) -> tuple[GraphInstance, Labeling]:
    """Torus instance plus the constructed optimal labeling moved onto it."""
    from .constructions import build_labeling

    g = g or torus_instance(n)
    _, lab = build_labeling(n)
    return g, Labeling(g, {v.a * n + v.b: c for v, c in lab.labels.items()})


# comparison formulas, exposed exactly as printed


def rn_cycle_as_printed(m: int) -> int:
    if m < 3:
        raise DomainError(f"cycle needs m >= 3, got {m}")
    k = m // 2
    if m % 2 == 0:
        return k * k + k + 2
    return k * k + k + 1 if k % 2 == 0 else k * k + 2 * k + 1


def rn_complete_product_as_printed(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise DomainError("complete graph orders must be >= 1")
    return m * n
