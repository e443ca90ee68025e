"""Binary trees, their orbits under left/right reflections, and orbit weights.

Binary trees are nested ``Node(left, right)`` tuples with ``None`` for the
empty tree. Reflection orbits are never generated by acting with the group;
each orbit is named by its canonical shape, the tree with left and right
forgotten.

A shape is a plain tuple: ``()`` for the empty tree and ``(size, lo, hi)``
for a node whose two (possibly empty) child shapes satisfy ``lo <= hi``.
Tuple comparison then orders shapes by vertex count first, then by the
smaller child, then the larger one, with empty below everything.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import NamedTuple, Optional

from .catalan import BoundExceededError, DOWN, UP, DyckPath, weighted_catalan_dp
from .valuation import digit_sum, double_factorial
from .weights import (BracketExactnessError, FunctionWindow, WeightSequence,
                      check_membership, evaluate)

TREE_BOUND = 14
ORBIT_BOUND = 18


class Node(NamedTuple):
    left: Optional["Node"]
    right: Optional["Node"]


BinaryTree = Optional[Node]
TreeShape = tuple

EMPTY_SHAPE: TreeShape = ()
LEAF = Node(None, None)


class OrbitWeightError(ArithmeticError):
    """An orbit's reduced weight could not be formed exactly."""

    def __init__(self, shape: TreeShape, x: int, detail: str):
        super().__init__(f"orbit {shape_to_parens(shape)} at x={x}: {detail}")
        self.shape = shape
        self.x = x


class DecompositionError(AssertionError):
    def __init__(self, message: str, shape: TreeShape | None = None):
        super().__init__(message)
        self.shape = shape


# --------------------------------------------------------------------------
# ordered binary trees
# --------------------------------------------------------------------------

def tree_size(t: BinaryTree) -> int:
    if t is None:
        return 0
    return 1 + tree_size(t.left) + tree_size(t.right)


def enumerate_trees(n: int, bound: int = TREE_BOUND) -> list[BinaryTree]:
    """Every binary tree on ``n`` vertices, each once."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise BoundExceededError(f"tree enumeration refuses n={n} > bound {bound}")
    by_size: list[list[BinaryTree]] = [[None]]
    for m in range(1, n + 1):
        by_size.append([Node(l, r)
                        for k in range(m)
                        for l in by_size[k]
                        for r in by_size[m - 1 - k]])
    return by_size[n]


def left_depths(t: BinaryTree, depth: int = 0) -> list[int]:
    """Number of left edges from the root to each vertex, preorder."""
    if t is None:
        return []
    return [depth] + left_depths(t.left, depth + 1) + left_depths(t.right, depth)


def _path_steps(t: BinaryTree, out: list[int]) -> None:
    if t is None:
        return
    out.append(UP)
    _path_steps(t.left, out)
    out.append(DOWN)
    _path_steps(t.right, out)


def tree_to_path(t: BinaryTree) -> DyckPath:
    """Depth-first bijection ``P(T) = U P(left) D P(right)``."""
    steps: list[int] = []
    _path_steps(t, steps)
    return DyckPath(tuple(steps))


def tree_weight(t: BinaryTree, b: WeightSequence, x: int = 0) -> int:
    """``prod over vertices v of b(x + l_v)``."""
    w = 1
    for l in left_depths(t):
        w *= evaluate(b, x + l)
    return w


def reflect(t: BinaryTree, path: tuple[int, ...] = ()) -> BinaryTree:
    """Swap the children of the vertex reached by ``path`` (0 = left, 1 = right)."""
    if t is None:
        raise ValueError("no vertex at this address")
    if not path:
        return Node(t.right, t.left)
    if path[0] == 0:
        return Node(reflect(t.left, path[1:]), t.right)
    return Node(t.left, reflect(t.right, path[1:]))


def vertex_addresses(t: BinaryTree, prefix: tuple[int, ...] = ()) -> list[tuple[int, ...]]:
    if t is None:
        return []
    return ([prefix] + vertex_addresses(t.left, prefix + (0,))
            + vertex_addresses(t.right, prefix + (1,)))


# --------------------------------------------------------------------------
# shapes
# --------------------------------------------------------------------------

def make_shape(a: TreeShape, b: TreeShape) -> TreeShape:
    size = 1 + shape_size(a) + shape_size(b)
    return (size, a, b) if a <= b else (size, b, a)


def shape_size(s: TreeShape) -> int:
    return s[0] if s else 0


def canonical_shape(t: BinaryTree) -> TreeShape:
    if t is None:
        return EMPTY_SHAPE
    return make_shape(canonical_shape(t.left), canonical_shape(t.right))


def shape_to_tree(s: TreeShape) -> BinaryTree:
    """A representative of the orbit: smaller child on the left."""
    if not s:
        return None
    return Node(shape_to_tree(s[1]), shape_to_tree(s[2]))


def shape_to_parens(s: TreeShape) -> str:
    """``"(" + children + ")"``; an empty child contributes nothing."""
    if not s:
        return ""
    return "(" + shape_to_parens(s[1]) + shape_to_parens(s[2]) + ")"


def parens_to_shape(text: str) -> TreeShape:
    pos = 0

    def node() -> TreeShape:
        nonlocal pos
        if text[pos] != "(":
            raise ValueError(f"expected '(' at {pos}")
        pos += 1
        kids = []
        while pos < len(text) and text[pos] == "(":
            kids.append(node())
        if pos >= len(text) or text[pos] != ")" or len(kids) > 2:
            raise ValueError(f"malformed shape string {text!r}")
        pos += 1
        kids += [EMPTY_SHAPE] * (2 - len(kids))
        return make_shape(*kids)

    if not text:
        return EMPTY_SHAPE
    s = node()
    if pos != len(text):
        raise ValueError(f"trailing characters in {text!r}")
    return s


def enumerate_shapes(n: int, bound: int = ORBIT_BOUND) -> list[TreeShape]:
    """All canonical shapes on ``n`` vertices, sorted."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise BoundExceededError(f"shape enumeration refuses n={n} > bound {bound}")
    by_size: list[list[TreeShape]] = [[EMPTY_SHAPE]]
    for m in range(1, n + 1):
        level = []
        for k in range((m - 1) // 2 + 1):
            j = m - 1 - k
            if k == j:
                level.extend((m, a, b) for a, b in combinations_with_replacement(by_size[k], 2))
            else:
                level.extend((m, a, b) for a in by_size[k] for b in by_size[j])
        level.sort()
        by_size.append(level)
    return by_size[n]


def orbit_size(s: TreeShape) -> int:
    """Size of the reflection orbit named by ``s``; always a power of two."""
    return 1 << orbit_size_exponent(s)


def orbit_size_exponent(s: TreeShape, _memo: dict | None = None) -> int:
    memo = {} if _memo is None else _memo

    def rec(s: TreeShape) -> int:
        if not s:
            return 0
        hit = memo.get(s)
        if hit is None:
            _, a, b = s
            hit = rec(a) + rec(b) + (a != b)
            memo[s] = hit
        return hit

    return rec(s)


# --------------------------------------------------------------------------
# reduced orbit weights
# --------------------------------------------------------------------------

class _ReducedWeights:
    """Memoized ``r_b(O; x)`` for one weight and one computation."""

    def __init__(self, b: WeightSequence):
        self.b = b
        self.memo: dict[tuple[TreeShape, int], int] = {}
        self.bvals: dict[int, int] = {}

    def bx(self, x: int) -> int:
        v = self.bvals.get(x)
        if v is None:
            v = self.bvals[x] = evaluate(self.b, x)
        return v

    def __call__(self, s: TreeShape, x: int) -> int:
        if not s:
            return 1
        key = (s, x)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        _, a, c = s
        num = self(a, x + 1) * self(c, x) + self(a, x) * self(c, x + 1)
        if num & 1:
            raise OrbitWeightError(s, x, str(BracketExactnessError(x, num)))
        val = self.bx(x) * (num >> 1)
        self.memo[key] = val
        return val


def reduced_weight(s: TreeShape, b: WeightSequence, length: int = 1,
                   origin: int = 0) -> FunctionWindow:
    """``r_b(O; x) = w_b(O; x) / #O`` for ``x`` in ``[origin, origin + length)``.

    Built recursively from the child orbits as
    ``b(x) * <r_1, r_2>(x)`` with the halved bracket, which must be exact.
    """
    r = _ReducedWeights(b)
    return FunctionWindow(origin, tuple(r(s, x) for x in range(origin, origin + length)))


@dataclass(frozen=True)
class OrbitRecord:
    shape: TreeShape
    size_exponent: int
    reduced_weight: FunctionWindow

    @property
    def size(self) -> int:
        return 1 << self.size_exponent

    def to_dict(self) -> dict:
        return {"shape": shape_to_parens(self.shape), "t": self.size_exponent,
                "r": str(self.reduced_weight.values[0])}


def orbit_census(n: int, b: WeightSequence, length: int = 1, origin: int = 0,
                 bound: int = ORBIT_BOUND) -> list[OrbitRecord]:
    """One record per reflection orbit on binary trees with ``n`` vertices."""
    shapes = enumerate_shapes(n, bound)
    r = _ReducedWeights(b)
    sizes: dict = {}
    out = []
    for s in shapes:
        t = orbit_size_exponent(s, sizes)
        vals = tuple(r(s, x) for x in range(origin, origin + length))
        out.append(OrbitRecord(s, t, FunctionWindow(origin, vals)))
    return out


def size_histogram(records: list[OrbitRecord]) -> dict[int, int]:
    """Number of orbits of each size ``2^t``, keyed by ``t``."""
    return dict(sorted(Counter(rec.size_exponent for rec in records).items()))


@dataclass(frozen=True)
class CensusSummary:
    n: int
    orbits: int
    total_size: int
    min_exponent: int
    min_count: int
    predicted_exponent: int
    predicted_count: int

    @property
    def match(self) -> bool:
        return (self.min_exponent == self.predicted_exponent
                and self.min_count == self.predicted_count)


def census_summary(n: int, records: list[OrbitRecord]) -> CensusSummary:
    hist = size_histogram(records)
    t_min = min(hist)
    s = digit_sum(n + 1) - 1
    return CensusSummary(n, len(records), sum(rec.size for rec in records), t_min,
                         hist[t_min], s, double_factorial(2 * s - 1))


def orbit_decomposition_check(n: int, b: WeightSequence, bound: int = ORBIT_BOUND,
                              records: list[OrbitRecord] | None = None) -> int:
    """``sum over orbits of #O * r_b(O; 0)``, checked against the DP value.

    Raises :class:`DecompositionError` if ``b`` is shown not to be in F,
    if some ``r_b(O; 0)`` is even, or if the sum disagrees with ``C_n^b``.
    """
    verdict = check_membership(b)
    if not verdict.is_member:
        raise DecompositionError(f"weight {b} rejected: {verdict.describe()}")
    if records is None:
        records = orbit_census(n, b, bound=bound)
    total = 0
    for rec in records:
        r0 = rec.reduced_weight[0]
        if not r0 & 1:
            raise DecompositionError(
                f"r_b(O;0) = {r0} is even for orbit {shape_to_parens(rec.shape)}", rec.shape)
        total += rec.size * r0
    expected = weighted_catalan_dp(n, b).value
    if total != expected:
        raise DecompositionError(f"orbit sum {total} != C_{n}^b = {expected}")
    return total
