"""Optimal radio labelings of C_n x C_n and the matching bounds.

Each scheme is a position function p (rank i -> vertex x_i) together with
a strictly increasing label c(x_i). Three schemes cover every supported
order: n = 2k, n = 2k + 1 with k odd, and n = 2k + 1 with k even; n = 1
is the single vertex labeled 1. n = 0 and n = 2 are rejected.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import UnsupportedOrderError
from .radio_core import Labeling
from .torus_graph import Torus, TorusVertex


class ParityCase(enum.Enum):
    TRIVIAL_ONE = "n = 1"
    EVEN = "n = 2k"
    ODD_K_ODD = "n = 2k + 1, k odd"
    ODD_K_EVEN = "n = 2k + 1, k even"


def parity_case(n: int) -> ParityCase:
    if n == 1:
        return ParityCase.TRIVIAL_ONE
    if n < 3:
        raise UnsupportedOrderError(f"n={n} is not supported (need n = 1 or n >= 3)")
    k = n // 2
    if n % 2 == 0:
        return ParityCase.EVEN
    return ParityCase.ODD_K_ODD if k % 2 else ParityCase.ODD_K_EVEN


def _require(n, i, case):
    if parity_case(n) is not case:
        raise UnsupportedOrderError(f"n={n} does not fall under {case.value}")
    if not 0 <= i < n * n:
        raise IndexError(f"index {i} out of range for n={n}")


@dataclass(frozen=True)
class EvenIndexDecomposition:
    i: int
    residue: int
    r: int
    s: int

    @classmethod
    def of(cls, n: int, i: int) -> EvenIndexDecomposition:
        k = n // 2
        return cls(i, i % 4, i // (2 * n), (i // 4) % k)


@dataclass(frozen=True)
class LastDiagonalDecomposition:
    """i = (n - 1)n + 4j + r with r in {0, 1, 2, 3}."""

    i: int
    j: int
    r: int

    @classmethod
    def of(cls, n: int, i: int) -> LastDiagonalDecomposition:
        offset = i - (n - 1) * n
        if not 0 <= offset <= n - 2:
            raise IndexError(f"index {i} is not a last-diagonal step for n={n}")
        return cls(i, offset // 4, offset % 4)


# n = 2k


def position_even(n: int, i: int) -> TorusVertex:
    _require(n, i, ParityCase.EVEN)
    k = n // 2
    dec = EvenIndexDecomposition.of(n, i)
    r, s = dec.r, dec.s
    a, b = {
        0: (r, k * r + s),
        1: (r + k, k * r + s + k),
        2: (r, k * r + s + k),
        3: (r + k, k * r + s),
    }[dec.residue]
    return TorusVertex(a, b, n)


def label_even(n: int, i: int) -> int:
    _require(n, i, ParityCase.EVEN)
    k = n // 2
    if i % 2 == 0:
        return 1 + (i // 2) * (k + 2)
    return 2 + ((i - 1) // 2) * (k + 2)


# n = 2k + 1, k odd


def position_odd_k_odd(n: int, i: int) -> TorusVertex:
    _require(n, i, ParityCase.ODD_K_ODD)
    k = n // 2
    r = i // n
    return TorusVertex(i * k, r + i * ((k + 1) // 2), n)


def label_odd_k_odd(n: int, i: int) -> int:
    _require(n, i, ParityCase.ODD_K_ODD)
    k = n // 2
    return 1 + i * ((k + 1) // 2)


# n = 2k + 1, k even: defined recursively, so built in one forward pass


@lru_cache(maxsize=None)
def _odd_k_even_scheme(n: int) -> tuple[tuple[TorusVertex, ...], tuple[int, ...]]:
    k = n // 2
    last_start = (n - 1) * n
    pos = [TorusVertex(0, 0, n), TorusVertex(k + 1, k, n)]
    for i in range(2, 2 * n):
        pos.append(pos[i - 2] + (k // 2, k // 2))
    for i in range(2 * n, last_start + 1):
        pos.append(pos[i - 2 * n] + (k + 2, k))
    for i in range(last_start, n * n - 1):
        dec = LastDiagonalDecomposition.of(n, i)
        step = k - dec.j if dec.r in (0, 2) else k // 2 + 1 + dec.j
        pos.append(pos[i] + (step, step))

    labels = [1]
    for i in range(last_start):
        labels.append(labels[i] + (1 if i % 2 == 0 else k))
    for i in range(last_start, n * n - 1):
        dec = LastDiagonalDecomposition.of(n, i)
        labels.append(labels[i] + (2 * dec.j + 1 if dec.r in (0, 2) else k - 2 * dec.j))
    return tuple(pos), tuple(labels)


def position_odd_k_even(n: int, i: int) -> TorusVertex:
    _require(n, i, ParityCase.ODD_K_EVEN)
    return _odd_k_even_scheme(n)[0][i]


def label_odd_k_even(n: int, i: int) -> int:
    _require(n, i, ParityCase.ODD_K_EVEN)
    return _odd_k_even_scheme(n)[1][i]


_SCHEMES = {
    ParityCase.EVEN: (position_even, label_even),
    ParityCase.ODD_K_ODD: (position_odd_k_odd, label_odd_k_odd),
    ParityCase.ODD_K_EVEN: (position_odd_k_even, label_odd_k_even),
}


def position(n: int, i: int) -> TorusVertex:
    case = parity_case(n)
    if case is ParityCase.TRIVIAL_ONE:
        if i != 0:
            raise IndexError(f"index {i} out of range for n=1")
        return TorusVertex(0, 0, 1)
    return _SCHEMES[case][0](n, i)


def label(n: int, i: int) -> int:
    case = parity_case(n)
    if case is ParityCase.TRIVIAL_ONE:
        if i != 0:
            raise IndexError(f"index {i} out of range for n=1")
        return 1
    return _SCHEMES[case][1](n, i)


def build_labeling(n: int) -> tuple[list[TorusVertex], Labeling]:
    """Ordered vertex list x_0..x_{n^2-1} and the optimal labeling on it."""
    parity_case(n)
    order = [position(n, i) for i in range(n * n)]
    labels = [label(n, i) for i in range(n * n)]
    return order, Labeling(Torus(n), dict(zip(order, labels)))


# closed forms


def rn_formula(n: int) -> int:
    """Radio number of C_n x C_n."""
    case = parity_case(n)
    if case is ParityCase.TRIVIAL_ONE:
        return 1
    k = n // 2
    if n % 2 == 0:
        return (n * n - 2) // 2 * (k + 2) + 2
    return (n * n - 1) // 2 * (k + 1) + 1


def min_gap(n: int) -> int:
    """Forced difference between the i-th and (i+2)-nd smallest labels."""
    if n < 3:
        raise UnsupportedOrderError(f"gap is only defined for n >= 3, got n={n}")
    k = n // 2
    return k + 2 if n % 2 == 0 else k + 1


def rank_lower_bound(rank: int, gap: int) -> int:
    """Least possible value of the rank-th smallest label (rank counted from 1)."""
    if rank % 2:
        return 1 + (rank - 1) // 2 * gap
    return 2 + (rank - 2) // 2 * gap


def lower_bound(n: int) -> int:
    if parity_case(n) is ParityCase.TRIVIAL_ONE:
        return 1
    return rank_lower_bound(n * n, min_gap(n))
