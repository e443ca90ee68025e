"""p-adic valuations, digit sums, and the valuation sweeps.

Also scans ``C_n mod p`` for maximal zero runs and compares their lengths
with the Alter-Kubota block formula (``2^k - 1`` for ``p = 2``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .catalan import iter_catalan, weighted_catalan_dp_sequence
from .weights import DEFAULT_WINDOW_N, DEFAULT_WINDOW_X, MembershipVerdict, WeightSequence, check_membership


class NonMemberError(ValueError):
    """The weight was proven to violate the theorem's hypotheses."""

    def __init__(self, b: WeightSequence, verdict: MembershipVerdict):
        super().__init__(f"weight {b} rejected: {verdict.describe()}")
        self.verdict = verdict


def xi(m: int, base: int = 2) -> int:
    """Largest ``e`` with ``base**e`` dividing ``m``."""
    if m == 0:
        raise ValueError("valuation of 0 is infinite")
    if base < 2:
        raise ValueError("base must be at least 2")
    if base == 2:
        return (m & -m).bit_length() - 1
    e = 0
    m = abs(m)
    while m % base == 0:
        m //= base
        e += 1
    return e


def digit_sum(n: int, base: int = 2) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if base < 2:
        raise ValueError("base must be at least 2")
    if base == 2:
        return bin(n).count("1")
    s = 0
    while n:
        n, d = divmod(n, base)
        s += d
    return s


def double_factorial(m: int) -> int:
    """``m!!`` with ``(-1)!! = 0!! = 1``."""
    if m < -1:
        raise ValueError("double factorial undefined below -1")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class ValuationReport:
    """``xi`` is the 2-adic valuation of the value at ``n``; ``predicted`` is ``s(n+1) - 1``."""

    n: int
    xi: int
    predicted: int

    @property
    def match(self) -> bool:
        return self.xi == self.predicted

    def to_dict(self) -> dict:
        return {"n": self.n, "xi": self.xi, "predicted": self.predicted, "match": self.match}


def _report(n: int, value: int) -> ValuationReport:
    return ValuationReport(n, xi(value), digit_sum(n + 1) - 1)


def verify_classical(n_max: int) -> list[ValuationReport]:
    return [_report(n, c) for n, c in enumerate(islice(iter_catalan(), n_max + 1))]


def verify_weighted(n_max: int, b: WeightSequence, window_n: int = DEFAULT_WINDOW_N,
                    window_x: int = DEFAULT_WINDOW_X, check: bool = True) -> list[ValuationReport]:
    """Valuation reports for ``C_0^b .. C_{n_max}^b``.

    With ``check`` set, a weight proven to break the hypotheses is refused
    with :class:`NonMemberError` before anything is computed.
    """
    if check:
        verdict = check_membership(b, window_n, window_x)
        if not verdict.is_member:
            raise NonMemberError(b, verdict)
    return [_report(n, v) for n, v in enumerate(weighted_catalan_dp_sequence(n_max, b))]


@dataclass(frozen=True)
class ZeroBlockReport:
    p: int
    k: int
    start: int
    observed: int
    predicted: int
    complete: bool

    @property
    def match(self) -> bool | None:
        """``None`` for a block cut off by the horizon; those are not compared."""
        if not self.complete:
            return None
        return self.observed == self.predicted

    def to_dict(self) -> dict:
        return {"p": self.p, "k": self.k, "observed": self.observed,
                "predicted": self.predicted, "match": self.match, "complete": self.complete}


def predicted_block_length(p: int, k: int) -> int:
    if k < 1:
        raise ValueError("blocks are numbered from 1")
    if p == 2:
        return 2 ** k - 1
    q = (p + 1) // 2
    return (p ** (xi(k, q) + (p == 3) + 1) - 3) // 2


def catalan_residues(p: int, n_max: int) -> list[int]:
    """``C_n mod p`` for ``0 <= n <= n_max``, reduced from the exact values."""
    return [c % p for c in islice(iter_catalan(), n_max + 1)]


def zero_runs(residues: list[int]) -> list[tuple[int, int, bool]]:
    """Maximal runs of zeros as ``(start, length, complete)``.

    A run touching the end of the list is reported as incomplete.
    """
    runs = []
    start = None
    for n, r in enumerate(residues):
        if r == 0:
            if start is None:
                start = n
        elif start is not None:
            runs.append((start, n - start, True))
            start = None
    if start is not None:
        runs.append((start, len(residues) - start, False))
    return runs


def zero_blocks(p: int, n_max: int, k_max: int) -> list[ZeroBlockReport]:
    if p != 2 and not (p > 2 and is_prime(p)):
        raise ValueError(f"p={p} is not a prime")
    runs = zero_runs(catalan_residues(p, n_max))
    return [ZeroBlockReport(p, k, start, length, predicted_block_length(p, k), complete)
            for k, (start, length, complete) in enumerate(runs[:k_max], start=1)]
