"""The Tribin-class function f and the computations built on it.

``f`` reads the s-symbol code ``a_1 a_2 ...`` of its argument and writes a
two-symbol code ``b_1 b_2 ...`` for its value: ``b_1`` records whether
``a_1`` lies in ``A_0`` or ``A_1``, and every later value digit flips exactly
when the argument digit changes (standard rule).  The flipped rule swaps the
two cases and is kept to exhibit the failure of well-definedness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from . import _kernels
from .codes import Alphabet, DigitCode, Prefix, dual_representation, normalize_code
from .errors import (
    AlphabetMismatchError,
    GuardExceededError,
    NotFoundError,
    PartitionError,
    TribinError,
)
from .numsys import RepresentationSystem, code_value, cylinder_length

__all__ = [
    "ENUMERATION_GUARD",
    "Rule",
    "Partition",
    "TribinConfig",
    "WellDefinedReport",
    "LevelSetReport",
    "Witness",
    "VariationReport",
    "admissible_partitions",
    "binary_point_bases",
    "beta_prefix",
    "transduce_code",
    "eval_f",
    "check_well_defined",
    "cylinder_image",
    "level_set_cylinders",
    "level_set_classify",
    "monotonicity_witness",
    "variation_Wk_brute",
    "variation_Wk_dp",
    "variation_report",
    "refinement_rank",
    "variation_growth_schedule",
]

ENUMERATION_GUARD = 10**7

BINARY = Alphabet(2)


class Rule(enum.IntEnum):
    STANDARD = 3
    FLIPPED = 7

    def step(self, beta: int, prev: int, cur: int) -> int:
        """The next value digit given the current one and two argument digits."""
        changed = prev != cur
        if self is Rule.FLIPPED:
            changed = not changed
        return 1 - beta if changed else beta

    @property
    def holds_on_equal(self) -> bool:
        return self is Rule.STANDARD


@dataclass(frozen=True)
class Partition:
    alphabet: Alphabet
    a0: frozenset[int]
    a1: frozenset[int]

    def __post_init__(self) -> None:
        a0, a1 = frozenset(self.a0), frozenset(self.a1)
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "a1", a1)
        s = self.alphabet.s
        if s < 3:
            raise PartitionError(f"f needs an alphabet with s >= 3, got s = {s}")
        if a0 & a1:
            raise PartitionError(f"A_0 and A_1 overlap in {sorted(a0 & a1)}")
        if a0 | a1 != frozenset(range(s)):
            raise PartitionError(f"A_0 and A_1 must cover 0..{s - 1}")
        if not a0 or not a1:
            raise PartitionError("A_0 and A_1 must both be nonempty")

    @classmethod
    def from_a0(cls, s: int, a0: Iterable[int]) -> "Partition":
        a0 = frozenset(a0)
        bad = [d for d in a0 if not 0 <= d < s]
        if bad:
            raise PartitionError(f"digits {sorted(bad)} are not in A_{s}")
        return cls(Alphabet(s), a0, frozenset(range(s)) - a0)

    def part(self, bit: int) -> frozenset[int]:
        return self.a1 if bit else self.a0

    def first_beta(self, digit: int) -> int:
        return 1 if digit in self.a1 else 0


def admissible_partitions(s: int) -> list[Partition]:
    """All ``2**s - 2`` splits with both parts nonempty."""
    out = []
    for mask in range(1, 2**s - 1):
        out.append(Partition.from_a0(s, [d for d in range(s) if mask >> d & 1]))
    return out


@dataclass(frozen=True)
class TribinConfig:
    argument_system: RepresentationSystem
    value_system: RepresentationSystem
    partition: Partition
    rule: Rule = Rule.STANDARD

    def __post_init__(self) -> None:
        object.__setattr__(self, "rule", Rule(self.rule))
        if self.partition.alphabet != self.argument_system.alphabet:
            raise AlphabetMismatchError("partition and argument system use different alphabets")
        if self.value_system.s != 2:
            raise AlphabetMismatchError("the value system must be two-symbol")

    @classmethod
    def build(
        cls,
        s: int = 3,
        a0: Iterable[int] | None = None,
        arg_weights: Sequence | None = None,
        val_weights: Sequence | None = None,
        rule: Rule | int = Rule.STANDARD,
    ) -> "TribinConfig":
        """Convenience constructor; all defaults give the classical setup.

        ``a0`` defaults to ``{0, ..., s-2}`` so that ``A_1 = {s-1}``.
        """
        if a0 is None:
            a0 = range(s - 1)
        arg = RepresentationSystem.uniform(s) if arg_weights is None else RepresentationSystem.from_weights(arg_weights)
        val = RepresentationSystem.uniform(2) if val_weights is None else RepresentationSystem.from_weights(val_weights)
        if arg.s != s:
            raise AlphabetMismatchError(f"{arg.s} argument weights given for s = {s}")
        return cls(arg, val, Partition.from_a0(s, a0), Rule(rule))

    @property
    def s(self) -> int:
        return self.argument_system.s

    @property
    def alphabet(self) -> Alphabet:
        return self.argument_system.alphabet


# -- transducer -----------------------------------------------------------------


def _betas(config: TribinConfig, digits: Sequence[int]) -> list[int]:
    if not digits:
        return []
    beta = config.partition.first_beta(digits[0])
    out = [beta]
    step = config.rule.step
    for prev, cur in zip(digits, digits[1:]):
        beta = step(beta, prev, cur)
        out.append(beta)
    return out


def beta_prefix(config: TribinConfig, alpha: Prefix | Sequence[int]) -> Prefix:
    alpha = Prefix.coerce(config.alphabet, alpha)
    if not alpha.digits:
        raise TribinError("beta_prefix needs a nonempty argument prefix")
    return Prefix(BINARY, tuple(_betas(config, alpha.digits)))


def _check_code(config: TribinConfig, code: DigitCode) -> DigitCode:
    if code.alphabet != config.alphabet:
        raise AlphabetMismatchError(f"code over A_{code.s} given to f over A_{config.s}")
    return normalize_code(code)


def transduce_code(config: TribinConfig, alpha: DigitCode) -> DigitCode:
    """The value code of ``alpha`` as a canonical binary code.

    After the first pass through the period the transducer state repeats
    every one or two passes, so ``len(pre) + p`` digits of preperiod and a
    window of ``2p`` digits are always enough.
    """
    alpha = _check_code(config, alpha)
    lead, p = len(alpha.preperiod), len(alpha.period)
    betas = _betas(config, alpha.digits(lead + 3 * p))
    return DigitCode.make(BINARY, betas[: lead + p], betas[lead + p :])


def eval_f(config: TribinConfig, x: DigitCode) -> Fraction:
    return code_value(config.value_system, transduce_code(config, x))


# -- well-definedness ----------------------------------------------------------


@dataclass(frozen=True)
class WellDefinedReport:
    ok: bool
    checked: int
    code: DigitCode | None = None
    dual: DigitCode | None = None
    value: Fraction | None = None
    dual_value: Fraction | None = None


def binary_point_bases(s: int, max_rank: int) -> Iterable[tuple[int, ...]]:
    """Bases ``c_1..c_m`` with ``c_m != 0``, ``m <= max_rank``, by rank then lex."""
    for m in range(1, max_rank + 1):
        for head in product(range(s), repeat=m - 1):
            for last in range(1, s):
                yield head + (last,)


def check_well_defined(config: TribinConfig, max_rank: int) -> WellDefinedReport:
    """Compare f on both codes of every binary point up to ``max_rank``."""
    if max_rank < 1:
        raise ValueError("max_rank must be at least 1")
    checked = 0
    for base in binary_point_bases(config.s, max_rank):
        code = DigitCode(config.alphabet, base, (0,))
        dual = dual_representation(code)
        left, right = eval_f(config, code), eval_f(config, dual)
        checked += 1
        if left != right:
            return WellDefinedReport(False, checked, code, dual, left, right)
    return WellDefinedReport(True, checked)


# -- images and level sets -------------------------------------------------------


def cylinder_image(config: TribinConfig, base: Prefix | Sequence[int]) -> Prefix:
    """Base of the value cylinder that is the exact image of the argument cylinder."""
    return beta_prefix(config, base)


def level_set_cylinders(config: TribinConfig, beta: Prefix | Sequence[int]) -> list[Prefix]:
    """All argument bases of rank ``len(beta)`` whose beta word is ``beta``, in lex order."""
    beta = Prefix.coerce(BINARY, beta).digits
    if not beta:
        raise TribinError("level_set_cylinders needs a nonempty beta prefix")
    s = config.s
    hold = config.rule.holds_on_equal
    words = [(a,) for a in sorted(config.partition.part(beta[0]))]
    for prev_b, cur_b in zip(beta, beta[1:]):
        keep_digit = (prev_b == cur_b) == hold
        if keep_digit:
            words = [w + (w[-1],) for w in words]
        else:
            words = [w + (a,) for w in words for a in range(s) if a != w[-1]]
    return [Prefix(config.alphabet, w) for w in words]


class LevelKind(enum.Enum):
    FINITE = "finite"
    CONTINUUM = "continuum"


@dataclass(frozen=True)
class LevelSetReport:
    kind: LevelKind
    points: tuple[DigitCode, ...] = ()
    rank_cylinders: tuple[Prefix, ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.kind is LevelKind.FINITE


def _tail_is_rigid(config: TribinConfig, beta: DigitCode) -> bool:
    """True when the beta tail forces the argument digit to stay fixed forever."""
    pattern = beta.period * (2 if len(beta.period) == 1 else 1)
    steps = list(zip(pattern, pattern[1:] + pattern[:1]))
    hold = config.rule.holds_on_equal
    return all((a == b) == hold for a, b in steps)


def level_set_classify(config: TribinConfig, y: DigitCode, rank: int | None = None) -> LevelSetReport:
    """Classify ``f^{-1}(y)`` as finite (listing its points) or continuum.

    When ``y`` is a binary point of the value system the preimages of both
    of its codes are merged.
    """
    if y.alphabet != BINARY:
        raise AlphabetMismatchError("level sets take a two-symbol value code")
    y = normalize_code(y)
    targets = [y]
    other = dual_representation(y)
    if other is not None:
        targets.append(other)

    finite = True
    points: dict[Fraction, DigitCode] = {}
    for target in targets:
        if not _tail_is_rigid(config, target):
            finite = False
            continue
        lead = len(target.preperiod) + 1
        for base in level_set_cylinders(config, target.digits(lead)):
            code = DigitCode.make(config.alphabet, base.digits, base.digits[-1:])
            x = code_value(config.argument_system, code)
            # two codes of one argument point are one point of the level set
            if x not in points or _code_key(code) < _code_key(points[x]):
                points[x] = code

    cylinders: tuple[Prefix, ...] = ()
    if rank is not None:
        if rank < 1:
            raise ValueError("rank must be at least 1")
        seen: dict[tuple[int, ...], Prefix] = {}
        for target in targets:
            for base in level_set_cylinders(config, target.digits(rank)):
                seen.setdefault(base.digits, base)
        cylinders = tuple(seen[k] for k in sorted(seen))

    if not finite:
        return LevelSetReport(LevelKind.CONTINUUM, (), cylinders)
    ordered = tuple(points[x] for x in sorted(points))
    return LevelSetReport(LevelKind.FINITE, ordered, cylinders)


def _code_key(code: DigitCode) -> tuple:
    return (len(code.preperiod), code.preperiod, code.period)


# -- nowhere monotonicity ----------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    base: Prefix
    codes: tuple[DigitCode, DigitCode, DigitCode]
    points: tuple[Fraction, Fraction, Fraction]
    values: tuple[Fraction, Fraction, Fraction]

    @property
    def is_peak(self) -> bool:
        f0, f1, f2 = self.values
        return f1 > f0 and f1 > f2


def monotonicity_witness(config: TribinConfig, base: Prefix | Sequence[int]) -> Witness:
    """Three ordered points inside the cylinder on which f is not monotone.

    For a base ending in 0 or s-1 the search first steps into the
    sub-cylinder with one extra digit 1.
    """
    base = Prefix.coerce(config.alphabet, base)
    if not base.digits:
        raise TribinError("monotonicity_witness needs a nonempty base")
    top = config.s - 1
    used = base if base.digits[-1] not in (0, top) else base.extend(1)
    head, last = used.digits[:-1], used.digits[-1]
    codes = (
        DigitCode.make(config.alphabet, used.digits, (0,)),
        DigitCode.make(config.alphabet, head, (last,)),
        DigitCode.make(config.alphabet, used.digits, (top,)),
    )
    points = tuple(code_value(config.argument_system, c) for c in codes)
    values = tuple(eval_f(config, c) for c in codes)
    return Witness(used, codes, points, values)


# -- variation -------------------------------------------------------------------


def _check_guard(s: int, k: int) -> None:
    if s**k > ENUMERATION_GUARD:
        raise GuardExceededError(f"{s}^{k} prefixes exceed the enumeration guard of {ENUMERATION_GUARD}")


def variation_Wk_brute(config: TribinConfig, k: int) -> Fraction:
    """Total value-length of the images of all rank-``k`` cylinders, by enumeration."""
    if k < 1:
        raise ValueError("k must be at least 1")
    _check_guard(config.s, k)
    hist = _kernels.beta_weight_histogram(config.s, k, config.partition.a1, config.rule.holds_on_equal)
    q0, q1 = config.value_system.weights
    return sum((int(n) * q0 ** (k - ones) * q1**ones for ones, n in enumerate(hist) if n), Fraction(0))


def _dp_states(config: TribinConfig, seed: dict[tuple[int, int], Fraction], steps: int):
    """Push the weight of each (last digit, beta) state ``steps`` digits forward."""
    q = config.value_system.weights
    step = config.rule.step
    s = config.s
    states = seed
    yield states
    for _ in range(steps):
        nxt: dict[tuple[int, int], Fraction] = {}
        for (a, b), w in sorted(states.items()):
            for c in range(s):
                nb = step(b, a, c)
                nxt[(c, nb)] = nxt.get((c, nb), Fraction(0)) + w * q[nb]
        states = nxt
        yield states


def _initial_states(config: TribinConfig) -> dict[tuple[int, int], Fraction]:
    q = config.value_system.weights
    out = {}
    for a in range(config.s):
        b = config.partition.first_beta(a)
        out[(a, b)] = q[b]
    return out


def variation_Wk_dp(config: TribinConfig, k: int) -> Fraction:
    """Same sum as :func:`variation_Wk_brute` in ``O(k s^2)`` exact steps."""
    if k < 1:
        raise ValueError("k must be at least 1")
    states = None
    for states in _dp_states(config, _initial_states(config), k - 1):
        pass
    return sum(states.values(), Fraction(0))


def _dp_totals(config: TribinConfig, max_rank: int) -> list[Fraction]:
    return [sum(st.values(), Fraction(0)) for st in _dp_states(config, _initial_states(config), max_rank - 1)]


@dataclass(frozen=True)
class VariationReport:
    values: tuple[Fraction, ...]
    method: str
    growth_schedule: tuple[int, ...] = field(default=())

    def W(self, k: int) -> Fraction:
        return self.values[k - 1]


def _greedy_schedule(values: Sequence[Fraction], n_target: int | None = None) -> tuple[int, ...]:
    ranks: list[int] = []
    for k, w in enumerate(values, start=1):
        if n_target is not None and len(ranks) == n_target:
            break
        if w >= 2 ** (len(ranks) + 1):
            ranks.append(k)
    return tuple(ranks)


def variation_report(config: TribinConfig, max_rank: int, method: str = "dp") -> VariationReport:
    """``W_1 .. W_max_rank`` by ``dp``, ``brute`` or ``both`` (which must agree)."""
    if max_rank < 1:
        raise ValueError("max_rank must be at least 1")
    if method not in ("dp", "brute", "both"):
        raise ValueError(f"unknown method {method!r}")
    if method in ("brute", "both"):
        _check_guard(config.s, max_rank)
        brute = [variation_Wk_brute(config, k) for k in range(1, max_rank + 1)]
    if method in ("dp", "both"):
        dp = _dp_totals(config, max_rank)
    if method == "both" and brute != dp:
        bad = next(k for k in range(max_rank) if brute[k] != dp[k]) + 1
        raise TribinError(f"brute and dp disagree at k = {bad}: {brute[bad - 1]} != {dp[bad - 1]}")
    values = tuple(dp if method != "brute" else brute)
    return VariationReport(values, method, _greedy_schedule(values))


def refinement_rank(config: TribinConfig, base: Prefix | Sequence[int], max_k: int) -> int:
    """Smallest ``k <= max_k`` at which refining ``base`` by ``k`` digits doubles its image length."""
    base = Prefix.coerce(config.alphabet, base)
    if not base.digits:
        raise TribinError("refinement_rank needs a nonempty base")
    image = cylinder_length(config.value_system, beta_prefix(config, base))
    last_beta = beta_prefix(config, base).digits[-1]
    seed = {(base.digits[-1], last_beta): image}
    for k, states in enumerate(_dp_states(config, seed, max_k)):
        if k and sum(states.values(), Fraction(0)) >= 2 * image:
            return k
    raise NotFoundError(f"refinements of {base} do not double the image length within {max_k} digits")


def variation_growth_schedule(config: TribinConfig, n_target: int, max_rank: int) -> VariationReport:
    """Ranks ``r_1 < ... < r_n`` with ``W_{r_i} >= 2**i``, each the smallest available."""
    if n_target < 1:
        raise ValueError("n_target must be at least 1")
    values = _dp_totals(config, max_rank)
    schedule = _greedy_schedule(values, n_target)
    if len(schedule) < n_target:
        raise NotFoundError(
            f"only {len(schedule)} of {n_target} doublings of W_k reached within rank {max_rank}"
        )
    return VariationReport(tuple(values[: schedule[-1]]), "dp", schedule)
