"""Vertex model and metric for the torus graph C_n x C_n.

Vertices are pairs (a, b) of cycle coordinates, always stored reduced
modulo n. Distance is the sum of the two cyclic distances.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError


@dataclass(frozen=True, order=True, slots=True)
class TorusVertex:
    a: int
    b: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"cycle order must be >= 1, got {self.n}")
        object.__setattr__(self, "a", self.a % self.n)
        object.__setattr__(self, "b", self.b % self.n)

    def __add__(self, shift):
        da, db = shift
        return TorusVertex(self.a + da, self.b + db, self.n)

    def __iter__(self):
        yield self.a
        yield self.b

    def __repr__(self):
        return f"({self.a},{self.b})"


def _check_order(n):
    if n < 1:
        raise DomainError(f"cycle order must be >= 1, got {n}")


def cycle_distance(n: int, u: int, v: int) -> int:
    _check_order(n)
    if not (0 <= u < n and 0 <= v < n):
        raise DomainError(f"cycle coordinates {u}, {v} out of range for n={n}")
    delta = abs(u - v)
    return min(delta, n - delta)


def torus_distance(n: int, u: TorusVertex, v: TorusVertex) -> int:
    if u.n != n or v.n != n:
        raise DomainError(f"vertices {u!r} (n={u.n}) and {v!r} (n={v.n}) do not belong to n={n}")
    return cycle_distance(n, u.a, v.a) + cycle_distance(n, u.b, v.b)


def diameter(n: int) -> int:
    _check_order(n)
    return 2 * (n // 2)


def all_vertices(n: int) -> list[TorusVertex]:
    """Every vertex of C_n x C_n in row-major order."""
    _check_order(n)
    return [TorusVertex(a, b, n) for a in range(n) for b in range(n)]


def diagonal_of(n: int, v: TorusVertex) -> int:
    """Index i of the diagonal {(a, b) : a - b = i mod n} containing v."""
    if v.n != n:
        raise DomainError(f"vertex {v!r} does not belong to n={n}")
    return (v.a - v.b) % n


@dataclass(frozen=True)
class Torus:
    """C_n x C_n as a metric space; n = 2k or n = 2k + 1.

    n = 2 is accepted here (C_2 is a single edge) although no labeling
    construction supports it.
    """

    n: int

    def __post_init__(self):
        _check_order(self.n)

    @property
    def k(self) -> int:
        return self.n // 2

    @property
    def degenerate(self) -> bool:
        return self.n == 2

    @property
    def diameter(self) -> int:
        return diameter(self.n)

    @cached_property
    def _vertices(self):
        return tuple(all_vertices(self.n))

    def vertices(self):
        return self._vertices

    def index(self, v: TorusVertex) -> int:
        return v.a * self.n + v.b

    def vertex(self, a: int, b: int) -> TorusVertex:
        return TorusVertex(a, b, self.n)

    def distance(self, u: TorusVertex, v: TorusVertex) -> int:
        return torus_distance(self.n, u, v)

    def distance_matrix(self) -> np.ndarray:
        n = self.n
        idx = np.arange(n * n)
        a, b = idx // n, idx % n
        da = np.abs(a[:, None] - a[None, :])
        db = np.abs(b[:, None] - b[None, :])
        return np.minimum(da, n - da) + np.minimum(db, n - db)

    def diagonal(self, index: int) -> list[TorusVertex]:
        return [TorusVertex(index + b, b, self.n) for b in range(self.n)]
