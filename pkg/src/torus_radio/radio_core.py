"""Radio labelings: the radio condition, verification and greedy labels.

A labeling lives on a *space*: any object exposing ``vertices()``,
``distance(u, v)``, ``distance_matrix()`` and a ``diameter`` attribute.
Both :class:`~torus_radio.torus_graph.Torus` and
:class:`~torus_radio.bounds_oracle.GraphInstance` qualify, so generic
graphs share the same verifier.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable, Mapping, Sequence

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class Labeling:
    space: Any
    labels: Mapping[Hashable, int] = field(repr=False)

    @property
    def diameter(self) -> int:
        return self.space.diameter

    def __getitem__(self, v) -> int:
        return self.labels[v]

    def check_total(self):
        vertices = self.space.vertices()
        missing = [v for v in vertices if v not in self.labels]
        if missing:
            raise DomainError(f"labeling is partial: {len(missing)} vertices unlabeled, e.g. {missing[0]!r}")
        if len(self.labels) != len(vertices):
            raise DomainError("labeling assigns labels to vertices outside the graph")
        bad = [v for v in vertices if not isinstance(self.labels[v], (int, np.integer)) or self.labels[v] < 1]
        if bad:
            raise DomainError(f"labels must be positive integers; vertex {bad[0]!r} has {self.labels[bad[0]]!r}")


@dataclass(frozen=True)
class Violation:
    u: Hashable
    v: Hashable
    distance: int
    label_diff: int
    deficit: int


@dataclass(frozen=True)
class ViolationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)


def radio_ok(distance: int, label_u: int, label_v: int, diam: int) -> bool:
    return distance + abs(label_u - label_v) >= diam + 1


def verify_full(labeling: Labeling) -> ViolationReport:
    """Check the radio condition on every unordered pair of vertices."""
    labeling.check_total()
    space = labeling.space
    vertices = space.vertices()
    count = len(vertices)
    if count < 2:
        return ViolationReport()
    labels = np.array([labeling.labels[v] for v in vertices], dtype=np.int64)
    dist = np.asarray(space.distance_matrix(), dtype=np.int64)
    upper_u, upper_v = np.triu_indices(count, 1)
    d = dist[upper_u, upper_v]
    diff = np.abs(labels[upper_u] - labels[upper_v])
    deficit = (space.diameter + 1) - (d + diff)
    bad = np.flatnonzero(deficit > 0)
    return ViolationReport(tuple(
        Violation(vertices[upper_u[t]], vertices[upper_v[t]], int(d[t]), int(diff[t]), int(deficit[t]))
        for t in bad
    ))


def verify_pruned(labeling: Labeling) -> ViolationReport:
    """Same report as :func:`verify_full`, scanning only label-close pairs.

    Vertices are sorted by label; a pair whose labels differ by at least
    the diameter always passes (distance >= 1), so each scan stops there.
    """
    labeling.check_total()
    space = labeling.space
    vertices = space.vertices()
    labels = [labeling.labels[v] for v in vertices]
    diam = space.diameter
    by_label = sorted(range(len(vertices)), key=labels.__getitem__)
    found = []
    for pos, i in enumerate(by_label):
        for j in by_label[pos + 1:]:
            diff = labels[j] - labels[i]
            if diff >= diam:
                break
            d = space.distance(vertices[i], vertices[j])
            if d + diff < diam + 1:
                found.append((min(i, j), max(i, j), d, diff))
    found.sort()
    return ViolationReport(tuple(
        Violation(vertices[i], vertices[j], d, diff, diam + 1 - d - diff) for i, j, d, diff in found
    ))


def span(labeling: Labeling) -> int:
    return max(labeling.labels.values())


def next_greedy_label(placed: Sequence, placed_labels: Sequence[int], v, dist, diam: int) -> int:
    """Smallest label for ``v`` above every placed label that keeps the radio condition.

    ``placed_labels`` must be increasing. A placed vertex x constrains v
    to at least c(x) + max(1, diam + 1 - d(x, v)), never more than
    c(x) + diam, so the scan runs backwards and stops once no earlier
    vertex can raise the bound.
    """
    if not placed:
        return 1
    best = 0
    for x, cx in zip(reversed(placed), reversed(placed_labels)):
        if cx + diam <= best:
            break
        need = cx + max(1, diam + 1 - dist(x, v))
        if need > best:
            best = need
    return best


def greedy_span_for_ordering(order: Sequence, space) -> tuple[Labeling, int]:
    """Minimal radio labeling whose increasing label order is ``order``.

    Returns the labeling and its span. Any radio labeling inducing this
    order dominates the greedy one label by label, so the span is minimal
    for the order.
    """
    vertices = space.vertices()
    if len(order) != len(vertices) or set(order) != set(vertices):
        raise DomainError("ordering is not a permutation of the vertex set")
    diam = space.diameter
    labels = []
    for i, v in enumerate(order):
        labels.append(next_greedy_label(order[:i], labels, v, space.distance, diam))
    labeling = Labeling(space, dict(zip(order, labels)))
    return labeling, labels[-1]


def ordering_of(labeling: Labeling) -> list:
    """Vertices sorted by increasing label (ties broken by vertex order)."""
    vertices = labeling.space.vertices()
    return sorted(vertices, key=lambda v: labeling.labels[v])
