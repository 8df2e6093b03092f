"""Q-weighted s-symbol representation systems with exact cylinder geometry.

Digit ``i`` occupies the fraction ``q_i`` of every cylinder, and the
sub-cylinders are laid out left to right in ascending digit order.  Uniform
weights ``q_i = 1/s`` give the classical s-adic system.  Every quantity is
an exact :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .codes import Alphabet, DigitCode, Prefix, as_alphabet, normalize_code
from .errors import AlphabetMismatchError, TribinError, WeightError

__all__ = [
    "RepresentationSystem",
    "Cylinder",
    "cylinder_length",
    "cylinder_bounds",
    "code_value",
    "value_digits",
    "project",
]


@dataclass(frozen=True)
class RepresentationSystem:
    alphabet: Alphabet
    weights: tuple[Fraction, ...]
    offsets: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        alphabet = as_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        weights = tuple(Fraction(w) for w in self.weights)
        if len(weights) != alphabet.s:
            raise WeightError(f"expected {alphabet.s} weights, got {len(weights)}")
        if any(w <= 0 for w in weights):
            raise WeightError("weights must be positive")
        if sum(weights) != 1:
            raise WeightError(f"weights must sum to 1, got {sum(weights)}")
        object.__setattr__(self, "weights", weights)
        acc, offsets = Fraction(0), []
        for w in weights:
            offsets.append(acc)
            acc += w
        object.__setattr__(self, "offsets", tuple(offsets))

    @classmethod
    def uniform(cls, s: int) -> "RepresentationSystem":
        return cls(Alphabet(s), (Fraction(1, s),) * s)

    @classmethod
    def from_weights(cls, weights: Sequence[Fraction | int | str]) -> "RepresentationSystem":
        return cls(Alphabet(len(weights)), tuple(Fraction(w) for w in weights))

    @property
    def s(self) -> int:
        return self.alphabet.s

    @property
    def is_uniform(self) -> bool:
        return all(w == self.weights[0] for w in self.weights)

    def cylinder(self, base: Prefix | Sequence[int]) -> "Cylinder":
        return Cylinder(self, Prefix.coerce(self.alphabet, base))


@dataclass(frozen=True)
class Cylinder:
    """The closed interval of points whose codes start with ``base``."""

    system: RepresentationSystem
    base: Prefix

    @property
    def length(self) -> Fraction:
        return cylinder_length(self.system, self.base)

    @property
    def bounds(self) -> tuple[Fraction, Fraction]:
        return cylinder_bounds(self.system, self.base)

    def __contains__(self, x: Fraction) -> bool:
        lo, hi = self.bounds
        return lo <= x <= hi


def _digits(system: RepresentationSystem, base: Prefix | Sequence[int]) -> tuple[int, ...]:
    return Prefix.coerce(system.alphabet, base).digits


def cylinder_length(system: RepresentationSystem, base: Prefix | Sequence[int]) -> Fraction:
    length = Fraction(1)
    for d in _digits(system, base):
        length *= system.weights[d]
    return length


def cylinder_bounds(system: RepresentationSystem, base: Prefix | Sequence[int]) -> tuple[Fraction, Fraction]:
    lo, length = Fraction(0), Fraction(1)
    for d in _digits(system, base):
        lo += system.offsets[d] * length
        length *= system.weights[d]
    return lo, lo + length


def code_value(system: RepresentationSystem, code: DigitCode) -> Fraction:
    """The point named by ``code``, in closed form.

    The periodic tail's value ``v`` satisfies ``v = delta + rho * v`` where
    ``rho`` is the length and ``delta`` the left end of the period's cylinder.
    """
    if code.alphabet != system.alphabet:
        raise AlphabetMismatchError(f"code over A_{code.s} evaluated in a system over A_{system.s}")
    lo, length = cylinder_bounds(system, code.preperiod)
    length -= lo
    delta, end = cylinder_bounds(system, code.period)
    rho = end - delta
    return lo + length * delta / (1 - rho)


def value_digits(system: RepresentationSystem, x: Fraction | int | str, depth: int) -> tuple[Prefix, bool]:
    """Greedy digit extraction of ``x`` to ``depth`` digits.

    At a shared cylinder endpoint the right-hand cylinder (the ``(0)``-tail
    code) is chosen and the returned flag is set.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise TribinError(f"x = {x} is outside [0, 1]")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    top = system.s - 1
    digits: list[int] = []
    on_boundary = False
    r = x
    for _ in range(depth):
        c = top
        for i in range(1, system.s):
            if r < system.offsets[i]:
                c = i - 1
                break
        if r == system.offsets[c] and c > 0:
            on_boundary = True
        digits.append(c)
        r = (r - system.offsets[c]) / system.weights[c]
    return Prefix(system.alphabet, tuple(digits)), on_boundary


def project(source: RepresentationSystem, target: RepresentationSystem, code: DigitCode) -> Fraction:
    """Carry a point of ``source`` to the point of ``target`` with the same code."""
    if source.alphabet != target.alphabet:
        raise AlphabetMismatchError("projector needs systems over one alphabet")
    if code.alphabet != source.alphabet:
        raise AlphabetMismatchError(f"code over A_{code.s} is not a code of the source system")
    return code_value(target, normalize_code(code))
