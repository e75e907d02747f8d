"""Exact irregularity metrics over degree sequences.

Three metrics, each a sum over unordered vertex pairs of absolute weight
differences:

* ``irr_t``   with weight d (the degree itself),
* ``firr_t``  with the Fibonacci weight f_d,
* ``firr_pm`` with the signed weight -f_d for odd d, +f_d for even d.

Every metric can be evaluated two ways: the quadratic pairwise oracle
(``naive``) or the O(n log n) sorted prefix path (``sorted-prefix``), which
uses the identity  sum_{u<v} |w_u - w_v| = sum_k w_(k) * (2k - 1 - n)  over
the ascending order statistics w_(1) <= ... <= w_(n).  The two must agree
exactly on every input; all arithmetic is integer.

Metrics consume plain degree sequences rather than graphs: all three indices
are functions of the degree sequence alone, and large graphs are handled
through their O(n) degree data.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .fibonacci import fib, signed_weight_of_degree

__all__ = [
    "METHOD_NAIVE",
    "METHOD_SORTED",
    "METHOD_CLOSED",
    "IrrValue",
    "pair_sum_naive",
    "pair_sum_sorted",
    "irr_t",
    "firr_t",
    "firr_pm",
    "star_firr_closed",
    "biclique_firr_closed",
    "is_f_regular",
]

METHOD_NAIVE = "naive"
METHOD_SORTED = "sorted-prefix"
METHOD_CLOSED = "closed-form"


@dataclass(frozen=True)
class IrrValue:
    """Exact metric value together with the evaluation path that produced it."""

    value: int
    method: str


def pair_sum_naive(weights: Sequence[int]) -> int:
    """Oracle: literal sum of |w_u - w_v| over all unordered pairs."""
    ws = list(weights)
    total = 0
    for idx, wi in enumerate(ws):
        for wj in ws[idx + 1 :]:
            total += abs(wi - wj)
    return total


def pair_sum_sorted(weights: Iterable[int]) -> int:
    """Fast path: sort, then accumulate w_(k) * (2k - 1 - n)."""
    ws = sorted(weights)
    n = len(ws)
    total = 0
    for k, w in enumerate(ws, 1):
        total += w * (2 * k - 1 - n)
    return total


def _checked_degrees(degrees: Iterable[int]) -> list[int]:
    ds = list(degrees)
    for d in ds:
        if d < 0:
            raise ValueError(f"degrees must be non-negative, got {d}")
    return ds


def _check_method(method: str) -> None:
    if method not in (METHOD_NAIVE, METHOD_SORTED):
        raise ValueError(f"unknown method {method!r}")


def irr_t(degrees: Iterable[int], method: str = METHOD_SORTED) -> IrrValue:
    """Total irregularity: pair sum of absolute degree differences.

    Empty and single-entry sequences give 0.
    """
    _check_method(method)
    ds = _checked_degrees(degrees)
    if method == METHOD_NAIVE:
        return IrrValue(pair_sum_naive(ds), METHOD_NAIVE)
    return IrrValue(pair_sum_sorted(ds), METHOD_SORTED)


def firr_t(degrees: Iterable[int], method: str = METHOD_SORTED) -> IrrValue:
    """Total fibonaccian irregularity: pair sum over the weights f_d."""
    _check_method(method)
    ds = _checked_degrees(degrees)
    if method == METHOD_NAIVE:
        return IrrValue(pair_sum_naive([fib(d) for d in ds]), METHOD_NAIVE)
    # d -> f_d is non-decreasing, so sorting the (small) degrees first puts
    # the big-integer weights in order without comparing them.
    ds.sort()
    n = len(ds)
    total = 0
    for k, d in enumerate(ds, 1):
        total += fib(d) * (2 * k - 1 - n)
    return IrrValue(total, METHOD_SORTED)


def firr_pm(degrees: Iterable[int], method: str = METHOD_SORTED) -> IrrValue:
    """Signed-weight irregularity: pair sum over -f_d (odd d) / +f_d (even d).

    The signed weight map is not monotone in d, so the fast path sorts the
    weights themselves.  The result is a non-negative integer.
    """
    _check_method(method)
    weights = [signed_weight_of_degree(d) for d in _checked_degrees(degrees)]
    if method == METHOD_NAIVE:
        return IrrValue(pair_sum_naive(weights), METHOD_NAIVE)
    return IrrValue(pair_sum_sorted(weights), METHOD_SORTED)


def star_firr_closed(n: int) -> IrrValue:
    """Closed form for the star with n leaves: n * (f_n - 1)."""
    if n < 1:
        raise ValueError(f"star closed form needs n >= 1, got {n}")
    return IrrValue(n * (fib(n) - 1), METHOD_CLOSED)


def biclique_firr_closed(n: int, m: int) -> IrrValue:
    """Closed form for the complete bipartite graph, n >= m >= 1: nm * (f_n - f_m)."""
    if not n >= m >= 1:
        raise ValueError(f"biclique closed form needs n >= m >= 1, got ({n}, {m})")
    return IrrValue(n * m * (fib(n) - fib(m)), METHOD_CLOSED)


def is_f_regular(degrees: Iterable[int]) -> bool:
    """True when all Fibonacci weights are equal.

    Since f is injective except for f_1 = f_2, that means all degrees are
    equal or all degrees lie in {1, 2}.
    """
    ds = set(_checked_degrees(degrees))
    return len(ds) <= 1 or ds <= {1, 2}
