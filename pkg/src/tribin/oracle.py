"""Slow, exhaustive reference implementations.

Nothing here calls into :mod:`tribin.function` or :mod:`tribin.numsys`; the
value digits are regenerated from the defining recurrences and evaluated
with a separate geometric-series formula, so agreement with the fast paths
is evidence rather than tautology.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from .codes import DigitCode, Prefix
from .errors import GuardExceededError
from .function import TribinConfig

__all__ = [
    "GUARD",
    "enumerate_prefixes",
    "naive_betas",
    "naive_eval",
    "brute_image_bounds",
    "brute_level_set",
    "brute_variation",
]

GUARD = 10**7


def _guard(count: int) -> None:
    if count > GUARD:
        raise GuardExceededError(f"{count} cases exceed the oracle guard of {GUARD}")


def enumerate_prefixes(s: int, n: int) -> list[Prefix]:
    _guard(s**n)
    return [Prefix(s, word) for word in product(range(s), repeat=n)]


def naive_betas(config: TribinConfig, alpha: Sequence[int]) -> list[int]:
    a1 = config.partition.a1
    flipped = int(config.rule) == 7
    out: list[int] = []
    for n, a in enumerate(alpha):
        if n == 0:
            out.append(1 if a in a1 else 0)
            continue
        same = a == alpha[n - 1]
        if same != flipped:
            out.append(out[-1])
        else:
            out.append(1 - out[-1])
    return out


def _series_value(weights: Sequence[Fraction], digits: Sequence[int]) -> tuple[Fraction, Fraction]:
    """Left end and width of the cylinder over ``digits``, summed term by term."""
    left, width = Fraction(0), Fraction(1)
    for d in digits:
        left += width * sum(weights[:d], Fraction(0))
        width *= weights[d]
    return left, width


def _find_period(seq: Sequence[int], max_period: int) -> tuple[int, int]:
    """Smallest period, then earliest start, verified over at least ``3 * max_period`` terms."""
    n = len(seq)
    for p in range(1, max_period + 1):
        for start in range(0, n - 3 * max_period + 1):
            if all(seq[i] == seq[i + p] for i in range(start, n - p)):
                return start, p
    raise AssertionError("sequence window too short for period detection")


def naive_eval(config: TribinConfig, code: DigitCode) -> Fraction:
    """f at ``code`` from a long expansion plus brute-force period detection."""
    lead, p = len(code.preperiod), len(code.period)
    expansion = list(code.preperiod) + list(code.period) * (8 + lead)
    betas = naive_betas(config, expansion)
    start, q = _find_period(betas, 2 * p)
    weights = config.value_system.weights
    head_left, head_width = _series_value(weights, betas[:start])
    block_left, block_width = _series_value(weights, betas[start : start + q])
    return head_left + head_width * block_left / (1 - block_width)


def brute_image_bounds(
    config: TribinConfig,
    base: Sequence[int] | Prefix,
    depth: int,
    tails: Sequence[int] | None = None,
) -> tuple[Fraction, Fraction]:
    """Exact min and max of f over ``base + w + (t)^omega`` for all words ``w``.

    ``w`` ranges over all ``depth``-digit words and ``t`` over ``tails``,
    which defaults to every digit.  With only the tails ``0`` and ``s-1``
    the extremes are missed when the base ends in an interior digit.
    """
    s = config.s
    base = tuple(base)
    if not base:
        raise ValueError("brute_image_bounds needs a nonempty base")
    tails = tuple(range(s)) if tails is None else tuple(tails)
    _guard(s**depth * len(tails))
    weights = config.value_system.weights
    head_betas = naive_betas(config, base)
    left, width = _series_value(weights, head_betas)
    offsets = [sum(weights[:b], Fraction(0)) for b in (0, 1)]
    tail_values: dict[tuple[int, bool], Fraction] = {}
    lo = hi = None

    def tail_value(last: int, beta: int, t: int) -> Fraction:
        # the digits t, t, t, ... only see whether t repeats the last digit
        key = (beta, t == last)
        if key not in tail_values:
            betas = _continue(config, last, beta, [t] * 8)
            start, q = _find_period(betas, 2)
            l1, w1 = _series_value(weights, betas[:start])
            l2, w2 = _series_value(weights, betas[start : start + q])
            tail_values[key] = l1 + w1 * l2 / (1 - w2)
        return tail_values[key]

    def walk(last: int, beta: int, left: Fraction, width: Fraction, remaining: int) -> None:
        nonlocal lo, hi
        if remaining == 0:
            for t in tails:
                v = left + width * tail_value(last, beta, t)
                if lo is None or v < lo:
                    lo = v
                if hi is None or v > hi:
                    hi = v
            return
        for d in range(s):
            b = _continue(config, last, beta, [d])[0]
            walk(d, b, left + width * offsets[b], width * weights[b], remaining - 1)

    walk(base[-1], head_betas[-1], left, width, depth)
    return lo, hi


def _continue(config: TribinConfig, last: int, beta: int, digits: Sequence[int]) -> list[int]:
    """Value digits produced by ``digits`` after an argument digit ``last`` with value digit ``beta``."""
    flipped = int(config.rule) == 7
    out = []
    for d in digits:
        if (d == last) != flipped:
            out.append(beta)
        else:
            beta = 1 - beta
            out.append(beta)
        last = d
    return out


def brute_level_set(config: TribinConfig, beta: Sequence[int] | Prefix, rank: int | None = None) -> list[Prefix]:
    beta = list(beta)
    if rank is None:
        rank = len(beta)
    if rank != len(beta):
        raise ValueError("rank must equal the length of beta")
    return [p for p in enumerate_prefixes(config.s, rank) if naive_betas(config, p.digits) == beta]


def brute_variation(config: TribinConfig, k: int) -> Fraction:
    weights = config.value_system.weights
    total = Fraction(0)
    for p in enumerate_prefixes(config.s, k):
        _, width = _series_value(weights, naive_betas(config, p.digits))
        total += width
    return total
