"""Classical and weighted Catalan numbers in exact integer arithmetic.

``C_n^b`` is computed three ways that share no code beyond weight
evaluation: a lattice DP over (step, height), the truncated continued
fraction ``1/(1 - b_0 x/(1 - b_1 x/(1 - ...)))`` expanded as a power series,
and explicit enumeration of Dyck paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .weights import WeightSequence, evaluate, geometric, odd_squares

BRUTE_FORCE_BOUND = 14

UP, DOWN = 1, -1


class BoundExceededError(ValueError):
    """An enumeration was asked for more than its configured bound."""


@dataclass(frozen=True)
class DyckPath:
    """Up/down steps (``+1``/``-1``) of a path from height 0 back to 0."""

    steps: tuple[int, ...]

    def __post_init__(self):
        h = 0
        for s in self.steps:
            if s not in (UP, DOWN):
                raise ValueError(f"bad step {s!r}")
            h += s
            if h < 0:
                raise ValueError("path dips below the axis")
        if h:
            raise ValueError("path does not return to height 0")

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def order(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> list[int]:
        """Starting height of every step."""
        out, h = [], 0
        for s in self.steps:
            out.append(h)
            h += s
        return out

    def ascent_heights(self) -> list[int]:
        return [h for h, s in zip(self.heights(), self.steps) if s == UP]

    def area(self) -> int:
        """Full lattice cells between the path and the sawtooth path."""
        return sum(self.ascent_heights())

    def weight(self, b: WeightSequence) -> int:
        w = 1
        for h in self.ascent_heights():
            w *= evaluate(b, h)
        return w

    def __str__(self) -> str:
        return "".join("U" if s == UP else "D" for s in self.steps)


@dataclass(frozen=True)
class WeightedCount:
    n: int
    value: int
    method: str
    terms: int | None = None


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


def iter_catalan() -> Iterator[int]:
    """Yield ``C_0, C_1, C_2, ...`` by the exact ratio recurrence."""
    c, k = 1, 0
    while True:
        yield c
        c = c * 2 * (2 * k + 1) // (k + 2)
        k += 1


def _weights_upto(b: WeightSequence, count: int) -> list[int]:
    return [evaluate(b, h) for h in range(count)]


def weighted_catalan_dp_sequence(n_max: int, b: WeightSequence) -> list[int]:
    """``C_0^b .. C_{n_max}^b`` from one pass of the height DP.

    An up step from height ``h`` multiplies by ``b(h)``; down steps carry
    weight 1. The mass at height 0 after ``2k`` steps is ``C_k^b``.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    bw = _weights_upto(b, n_max)
    total = 2 * n_max
    cur = [1]
    out = [1]
    for step in range(total):
        top = min(step + 1, total - step - 1)
        nxt = [0] * (top + 1)
        for h, v in enumerate(cur):
            if not v:
                continue
            if h + 1 <= top:
                nxt[h + 1] += v * bw[h]
            if h:
                nxt[h - 1] += v
        cur = nxt
        if step % 2:
            out.append(cur[0])
    return out


def weighted_catalan_dp(n: int, b: WeightSequence) -> WeightedCount:
    return WeightedCount(n, weighted_catalan_dp_sequence(n, b)[n], "DP")


def _series_inverse(g: list[int], order: int) -> list[int]:
    """Power series ``1/g`` to ``x^order`` for integer ``g`` with ``g[0] = 1``."""
    h = [0] * (order + 1)
    h[0] = 1
    for m in range(1, order + 1):
        acc = 0
        for j in range(1, min(m, len(g) - 1) + 1):
            acc += g[j] * h[m - j]
        h[m] = -acc
    return h


def weighted_catalan_series(n_max: int, b: WeightSequence, depth: int | None = None) -> list[int]:
    """Coefficients ``C_0^b .. C_{n_max}^b`` of the truncated continued fraction.

    The fraction is cut after ``depth`` levels (default ``n_max``) and folded
    bottom-up with ``F <- 1/(1 - b_k x F)``. ``b_k`` first reaches the
    coefficient of ``x^(k+1)``, so any ``depth >= n_max`` gives the same
    result.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    depth = n_max if depth is None else depth
    if depth < n_max:
        raise ValueError("truncation depth must be at least n_max")
    f = [1] + [0] * n_max
    for k in range(depth - 1, -1, -1):
        bk = evaluate(b, k)
        g = [1] + [-bk * c for c in f[:n_max]]
        f = _series_inverse(g, n_max)
    return f


def dyck_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of length ``2n`` in lexicographic order (up first)."""
    steps: list[int] = []

    def rec(ups: int, downs: int) -> Iterator[DyckPath]:
        if ups == n and downs == n:
            yield DyckPath(tuple(steps))
            return
        if ups < n:
            steps.append(UP)
            yield from rec(ups + 1, downs)
            steps.pop()
        if downs < ups:
            steps.append(DOWN)
            yield from rec(ups, downs + 1)
            steps.pop()

    yield from rec(0, 0)


def weighted_catalan_bruteforce(n: int, b: WeightSequence,
                                bound: int = BRUTE_FORCE_BOUND) -> WeightedCount:
    """Sum of ``wt(P)`` over every Dyck path of length ``2n``.

    A test oracle: each path is walked explicitly and its ascent-height
    product formed on the way down the recursion.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise BoundExceededError(f"brute force refuses n={n} > bound {bound}")
    bw = _weights_upto(b, n)
    total = 0
    count = 0
    # explicit stack of (ups, downs, height, weight so far)
    stack = [(0, 0, 0, 1)]
    while stack:
        ups, downs, h, w = stack.pop()
        if ups == n and downs == n:
            total += w
            count += 1
            continue
        if downs < ups:
            stack.append((ups, downs + 1, h - 1, w))
        if ups < n:
            stack.append((ups + 1, downs, h + 1, w * bw[h]))
    return WeightedCount(n, total, "BruteForce", terms=count)


def q_catalan(n: int, q: int) -> int:
    """``sum over P of q^area(P)``, i.e. ``C_n^b`` with ``b = (1, q, q^2, ...)``."""
    return weighted_catalan_dp(n, geometric(q)).value


def morse_link_number(n: int) -> int:
    """``L_n``: the weighted Catalan number with weights ``1^2, 3^2, 5^2, ...``."""
    return weighted_catalan_dp(n, odd_squares()).value

