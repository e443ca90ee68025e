"""Weight sequences and the difference/shift calculus on integer functions.

A weight sequence ``b`` is an integer function on the nonnegative integers.
Finite stretches of such functions are handled as :class:`FunctionWindow`
objects, on which the shift ``S``, the forward difference ``Delta``, the
pointwise product and the halved symmetric bracket act exactly.

Weights are written in a small text grammar shared by the whole package::

    const:<c>   poly:<c0>,<c1>,...   geom:<q>   oddsq   table:<v0>,<v1>,...
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

DEFAULT_WINDOW_N = 8
DEFAULT_WINDOW_X = 64


class WeightDomainError(ValueError):
    """A weight or window was asked for a value it cannot provide."""


class BracketExactnessError(ArithmeticError):
    """The bracket numerator was odd, so halving is not exact."""

    def __init__(self, x: int, numerator: int):
        super().__init__(f"bracket numerator {numerator} is odd at x={x}")
        self.x = x
        self.numerator = numerator


# --------------------------------------------------------------------------
# weight sequences
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightSequence:
    """An exactly evaluable weight ``b``.

    ``kind`` is one of ``const``, ``poly``, ``geom``, ``oddsq``, ``table``;
    ``params`` holds the constant, the monomial coefficients, the ratio or
    the stored table values respectively.
    """

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise WeightDomainError(f"unknown weight kind {self.kind!r}")
        if self.kind in ("const", "geom") and len(self.params) != 1:
            raise WeightDomainError(f"{self.kind} takes exactly one integer")
        if self.kind == "oddsq" and self.params:
            raise WeightDomainError("oddsq takes no parameters")
        if self.kind == "table" and not self.params:
            raise WeightDomainError("table needs at least one value")
        if self.kind == "poly" and self.params and self.params[-1] == 0:
            raise WeightDomainError("polynomial coefficients must be trimmed; use polynomial()")

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __str__(self) -> str:
        if self.kind == "oddsq":
            return "oddsq"
        return f"{self.kind}:" + ",".join(str(v) for v in self.params)

    @property
    def window_length(self) -> int | None:
        """Number of stored values for tables, ``None`` for closed forms."""
        return len(self.params) if self.kind == "table" else None

    def coefficients(self) -> tuple[int, ...] | None:
        """Monomial coefficients when ``b`` is a polynomial in disguise."""
        if self.kind == "poly":
            return self.params
        if self.kind == "const":
            return _trim(self.params)
        if self.kind == "oddsq":
            return (1, 4, 4)
        return None


_KINDS = ("const", "poly", "geom", "oddsq", "table")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def constant(c: int) -> WeightSequence:
    return WeightSequence("const", (int(c),))


def polynomial(coeffs: Iterable[int]) -> WeightSequence:
    return WeightSequence("poly", _trim(int(c) for c in coeffs))


def geometric(q: int) -> WeightSequence:
    return WeightSequence("geom", (int(q),))


def odd_squares() -> WeightSequence:
    return WeightSequence("oddsq")


def table(values: Iterable[int]) -> WeightSequence:
    return WeightSequence("table", tuple(int(v) for v in values))


ONE = constant(1)


def parse_weight(text: str) -> WeightSequence:
    """Parse the weight grammar, e.g. ``geom:5`` or ``poly:1,4``."""
    text = text.strip()
    if text == "oddsq":
        return odd_squares()
    kind, sep, rest = text.partition(":")
    if not sep or kind not in _KINDS or kind == "oddsq":
        raise WeightDomainError(f"cannot parse weight {text!r}")
    try:
        values = [int(tok) for tok in rest.split(",")] if rest.strip() else []
    except ValueError:
        raise WeightDomainError(f"non-integer value in weight {text!r}") from None
    if kind == "const" or kind == "geom":
        if len(values) != 1:
            raise WeightDomainError(f"{kind} takes exactly one integer: {text!r}")
        return WeightSequence(kind, (values[0],))
    if kind == "poly":
        return polynomial(values)
    return table(values)


def evaluate(b: WeightSequence, x: int) -> int:
    """Exact value ``b(x)``; tables refuse to extrapolate."""
    if x < 0:
        raise WeightDomainError(f"weights live on x >= 0, got {x}")
    kind, params = b.kind, b.params
    if kind == "const":
        return params[0]
    if kind == "oddsq":
        return (2 * x + 1) ** 2
    if kind == "geom":
        return params[0] ** x
    if kind == "poly":
        acc = 0
        for c in reversed(params):
            acc = acc * x + c
        return acc
    if x >= len(params):
        raise WeightDomainError(f"table of length {len(params)} has no value at x={x}")
    return params[x]


def values(b: WeightSequence, count: int, origin: int = 0) -> list[int]:
    return [evaluate(b, x) for x in range(origin, origin + count)]


# --------------------------------------------------------------------------
# finite windows of integer functions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FunctionWindow:
    """Values ``f(origin), f(origin + 1), ...`` of an integer function."""

    origin: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.origin < 0:
            raise WeightDomainError("window origin must be nonnegative")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, x: int) -> int:
        i = x - self.origin
        if not 0 <= i < len(self.values):
            raise WeightDomainError(f"x={x} outside window [{self.origin}, {self.end})")
        return self.values[i]

    @property
    def end(self) -> int:
        return self.origin + len(self.values)

    def points(self) -> range:
        return range(self.origin, self.end)


def window(b: WeightSequence, length: int, origin: int = 0) -> FunctionWindow:
    return FunctionWindow(origin, tuple(values(b, length, origin)))


def shift(f: FunctionWindow) -> FunctionWindow:
    """Window of ``(Sf)(x) = f(x + 1)``; one point shorter."""
    if not f.values:
        raise WeightDomainError("cannot shift an empty window")
    return FunctionWindow(f.origin, f.values[1:])


def _diff_once(vals: Sequence[int]) -> list[int]:
    return [b - a for a, b in zip(vals, vals[1:])]


def difference(f: FunctionWindow, n: int = 1) -> FunctionWindow:
    """Window of the ``n``-fold forward difference; ``n`` points shorter."""
    if n < 0:
        raise WeightDomainError("difference order must be nonnegative")
    if len(f) <= n:
        raise WeightDomainError(f"window of length {len(f)} is too short for Delta^{n}")
    vals = list(f.values)
    for _ in range(n):
        vals = _diff_once(vals)
    return FunctionWindow(f.origin, tuple(vals))


def _overlap(f: FunctionWindow, g: FunctionWindow) -> range:
    lo, hi = max(f.origin, g.origin), min(f.end, g.end)
    if lo >= hi:
        raise WeightDomainError("windows do not overlap")
    return range(lo, hi)


def product(f: FunctionWindow, g: FunctionWindow) -> FunctionWindow:
    pts = _overlap(f, g)
    return FunctionWindow(pts.start, tuple(f[x] * g[x] for x in pts))


def bracket(f: FunctionWindow, g: FunctionWindow) -> FunctionWindow:
    """Exact ``(f(x+1) g(x) + f(x) g(x+1)) / 2`` on the common window."""
    pts = _overlap(f, g)
    if len(pts) < 2:
        raise WeightDomainError("bracket needs an overlap of at least two points")
    out = []
    for x in pts[:-1]:
        num = f[x + 1] * g[x] + f[x] * g[x + 1]
        if num & 1:
            raise BracketExactnessError(x, num)
        out.append(num >> 1)
    return FunctionWindow(pts.start, tuple(out))


# --------------------------------------------------------------------------
# integer polynomials
# --------------------------------------------------------------------------

def poly_shift(coeffs: Sequence[int]) -> tuple[int, ...]:
    """Coefficients of ``p(x + 1)``."""
    out = [0] * len(coeffs)
    for k, c in enumerate(coeffs):
        if c:
            for j in range(k + 1):
                out[j] += c * comb(k, j)
    return tuple(out)


def poly_difference(coeffs: Sequence[int]) -> tuple[int, ...]:
    """Coefficients of ``p(x + 1) - p(x)``; degree drops by one."""
    shifted = poly_shift(coeffs)
    return _trim(a - b for a, b in zip(shifted, coeffs))


def poly_eval(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# --------------------------------------------------------------------------
# membership in the class F
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of the class check.

    ``status`` is ``proven-member``, ``proven-non-member`` or
    ``window-verified``. A non-member verdict always carries a witness
    ``(n, x, value)`` with ``value = Delta^n b(x)``; for ``n = 0`` the
    witness records an even ``b(0)``.
    """

    status: str
    witness: tuple[int, int, int] | None = None
    n_max: int | None = None
    x_max: int | None = None

    @property
    def is_member(self) -> bool:
        return self.status != NON_MEMBER

    def describe(self) -> str:
        if self.status == NON_MEMBER:
            n, x, v = self.witness
            if n == 0:
                return f"not in F: b(0) = {v} is even"
            return f"not in F: Delta^{n} b({x}) = {v} is not divisible by 2^{n + 1}"
        if self.status == WINDOW_VERIFIED:
            return f"in F on window n <= {self.n_max}, x <= {self.x_max}"
        return "in F (proven)"

    def to_dict(self) -> dict:
        d = {"status": self.status}
        if self.witness is not None:
            n, x, v = self.witness
            d["witness"] = {"n": n, "x": x, "value": str(v)}
        if self.status == WINDOW_VERIFIED:
            d["n_max"], d["x_max"] = self.n_max, self.x_max
        return d


MEMBER = "proven-member"
NON_MEMBER = "proven-non-member"
WINDOW_VERIFIED = "window-verified"


def divides_pow2(e: int, v: int) -> bool:
    return v & ((1 << e) - 1) == 0


def window_witness(f: FunctionWindow, n_max: int | None = None) -> tuple[int, int, int] | None:
    """First violation of the class conditions visible in ``f``.

    Checks oddness at every point and ``2^(n+1) | Delta^n f`` for
    ``1 <= n <= n_max`` wherever the window allows. Returns ``(n, x, value)``
    or ``None``.
    """
    for x, v in zip(f.points(), f.values):
        if not v & 1:
            return (0, x, v)
    top = len(f) - 1 if n_max is None else min(n_max, len(f) - 1)
    vals = list(f.values)
    for n in range(1, top + 1):
        vals = _diff_once(vals)
        for i, v in enumerate(vals):
            if not divides_pow2(n + 1, v):
                return (n, f.origin + i, v)
    return None


def _polynomial_verdict(coeffs: tuple[int, ...]) -> MembershipVerdict:
    b0 = poly_eval(coeffs, 0)
    if not b0 & 1:
        return MembershipVerdict(NON_MEMBER, (0, 0, b0))
    # 2^e divides q(x) for all x >= 0 iff it divides every Newton coefficient
    # Delta^k q(0); so Delta^n b is fine iff 2^(n+1) | Delta^m b(0) for m >= n.
    deg = len(coeffs) - 1
    diffs = [coeffs]
    for _ in range(deg):
        diffs.append(poly_difference(diffs[-1]))
    for n in range(1, deg + 1):
        dn = diffs[n]
        # Delta^n b is determined by its values at x = 0..deg-n
        for x in range(deg - n + 1):
            v = poly_eval(dn, x)
            if not divides_pow2(n + 1, v):
                return MembershipVerdict(NON_MEMBER, (n, x, v))
    return MembershipVerdict(MEMBER)


def check_membership(b: WeightSequence, n_max: int = DEFAULT_WINDOW_N,
                     x_max: int = DEFAULT_WINDOW_X) -> MembershipVerdict:
    """Decide whether ``b(0)`` is odd and ``2^(n+1) | Delta^n b(x)`` for all n >= 1, x >= 0.

    Polynomials (including constants and ``oddsq``) and geometric weights are
    decided exactly. Tables can only be refuted or verified on the window
    ``1 <= n <= n_max``, ``0 <= x <= x_max``.
    """
    coeffs = b.coefficients()
    if coeffs is not None:
        return _polynomial_verdict(coeffs)
    if b.kind == "geom":
        q = b.params[0]
        # Delta^n q^x = (q-1)^n q^x; the n=1, x=0 case is the binding one
        if q % 4 == 1:
            return MembershipVerdict(MEMBER)
        return MembershipVerdict(NON_MEMBER, (1, 0, q - 1))
    if n_max < 1 or x_max < 0:
        raise WeightDomainError("window needs n_max >= 1 and x_max >= 0")
    need = x_max + n_max + 1
    if len(b.params) < need:
        raise WeightDomainError(
            f"table of length {len(b.params)} cannot cover x_max + n_max = {need - 1}")
    b0 = b.params[0]
    if not b0 & 1:
        return MembershipVerdict(NON_MEMBER, (0, 0, b0))
    vals = list(b.params[:need])
    for n in range(1, n_max + 1):
        vals = _diff_once(vals)
        for x in range(x_max + 1):
            if not divides_pow2(n + 1, vals[x]):
                return MembershipVerdict(NON_MEMBER, (n, x, vals[x]))
    return MembershipVerdict(WINDOW_VERIFIED, n_max=n_max, x_max=x_max)
