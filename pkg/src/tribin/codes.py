"""Alphabets, finite prefixes and eventually periodic digit codes.

A point of ``[0, 1]`` is addressed by an infinite digit sequence.  Only the
eventually periodic sequences are representable here: a :class:`DigitCode`
stores a finite preperiod followed by a period that repeats forever.  All
comparisons are syntactic; equality of the *points* two codes name is a
question for :mod:`tribin.numsys`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetMismatchError, DigitRangeError, MalformedCodeError

__all__ = [
    "Alphabet",
    "DigitCode",
    "Prefix",
    "as_alphabet",
    "normalize_code",
    "digit_at",
    "compare_lex",
    "dual_representation",
    "LESS",
    "EQUAL",
    "GREATER",
]

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class Alphabet:
    """The digit set ``{0, 1, ..., s-1}``."""

    s: int

    def __post_init__(self) -> None:
        if not isinstance(self.s, int) or self.s < 2:
            raise DigitRangeError(f"alphabet size must be an integer >= 2, got {self.s!r}")

    @property
    def digits(self) -> range:
        return range(self.s)

    def check(self, digits: Iterable[int]) -> tuple[int, ...]:
        out = tuple(int(d) for d in digits)
        for d in out:
            if not 0 <= d < self.s:
                raise DigitRangeError(f"digit {d} is not in A_{self.s} = {{0..{self.s - 1}}}")
        return out


def as_alphabet(alphabet: Alphabet | int) -> Alphabet:
    return alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)


@dataclass(frozen=True)
class Prefix:
    """A finite digit word; the base of a cylinder.  May be empty."""

    alphabet: Alphabet
    digits: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        alphabet = as_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "digits", alphabet.check(self.digits))

    @classmethod
    def coerce(cls, alphabet: Alphabet | int, base: "Prefix | Sequence[int]") -> "Prefix":
        """Accept either a :class:`Prefix` or a plain digit sequence."""
        alphabet = as_alphabet(alphabet)
        if isinstance(base, Prefix):
            if base.alphabet != alphabet:
                raise AlphabetMismatchError(
                    f"prefix over A_{base.alphabet.s} used where A_{alphabet.s} is expected"
                )
            return base
        return cls(alphabet, tuple(base))

    @property
    def rank(self) -> int:
        return len(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __getitem__(self, item):
        return self.digits[item]

    def extend(self, *digits: int) -> "Prefix":
        return Prefix(self.alphabet, self.digits + tuple(digits))

    def __str__(self) -> str:
        return ",".join(map(str, self.digits))


@dataclass(frozen=True)
class DigitCode:
    """Eventually periodic sequence ``preperiod + period + period + ...``.

    Construction validates digits but does not canonicalize; use
    :func:`normalize_code` (or :meth:`make`) for the canonical form.
    """

    alphabet: Alphabet
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        alphabet = as_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        if len(self.period) == 0:
            raise MalformedCodeError("a digit code needs a nonempty period")
        object.__setattr__(self, "preperiod", alphabet.check(self.preperiod))
        object.__setattr__(self, "period", alphabet.check(self.period))

    @classmethod
    def make(cls, alphabet: Alphabet | int, preperiod: Sequence[int], period: Sequence[int]) -> "DigitCode":
        """Build and canonicalize in one step."""
        return normalize_code(cls(as_alphabet(alphabet), tuple(preperiod), tuple(period)))

    @property
    def s(self) -> int:
        return self.alphabet.s

    def digits(self, n: int) -> tuple[int, ...]:
        """The first ``n`` digits of the expansion."""
        pre, per = self.preperiod, self.period
        if n <= len(pre):
            return pre[:n]
        rest = n - len(pre)
        reps = -(-rest // len(per))
        return pre + (per * reps)[:rest]

    def __str__(self) -> str:
        body = "(" + ",".join(map(str, self.period)) + ")"
        if self.preperiod:
            return ",".join(map(str, self.preperiod)) + ":" + body
        return body


def _primitive_root(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def normalize_code(code: DigitCode) -> DigitCode:
    """Canonical form: primitive period, then the shortest preperiod."""
    if len(code.period) == 0:
        raise MalformedCodeError("a digit code needs a nonempty period")
    period = _primitive_root(code.period)
    pre = list(code.preperiod)
    # absorb trailing preperiod digits into a rotated period
    while pre and pre[-1] == period[-1]:
        pre.pop()
        period = period[-1:] + period[:-1]
    return DigitCode(code.alphabet, tuple(pre), period)


def digit_at(code: DigitCode, n: int) -> int:
    """The ``n``-th digit, counting from 1."""
    if n < 1:
        raise ValueError(f"digit positions start at 1, got {n}")
    pre = code.preperiod
    if n <= len(pre):
        return pre[n - 1]
    return code.period[(n - 1 - len(pre)) % len(code.period)]


def compare_lex(a: DigitCode, b: DigitCode) -> int:
    """Lexicographic order of the infinite sequences: LESS, EQUAL or GREATER."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"cannot compare codes over A_{a.s} and A_{b.s}")
    # past this horizon both sequences are periodic with a common period
    horizon = max(len(a.preperiod), len(b.preperiod)) + lcm(len(a.period), len(b.period))
    da, db = a.digits(horizon), b.digits(horizon)
    if da < db:
        return LESS
    if da > db:
        return GREATER
    return EQUAL


def dual_representation(code: DigitCode) -> DigitCode | None:
    """The other code of the same binary point, or ``None`` for unary points.

    ``c_1..c_m (0)`` pairs with ``c_1..[c_m - 1] (s-1)`` whenever ``c_m != 0``.
    """
    code = normalize_code(code)
    top = code.s - 1
    if code.period == (0,) and code.preperiod:
        pivot = code.preperiod[-1]
        return DigitCode(code.alphabet, code.preperiod[:-1] + (pivot - 1,), (top,))
    if code.period == (top,) and code.preperiod:
        pivot = code.preperiod[-1]
        return DigitCode(code.alphabet, code.preperiod[:-1] + (pivot + 1,), (0,))
    return None
