import re
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from src.exactnum import IntVec, int_vec, negative_part, positive_part
from src.exceptions import InputError

_FACTOR = re.compile(r"([a-z])(?:\^(\d+))?")


def _exponent_vector(v: Sequence[int], n: int, what: str) -> IntVec:
    v = int_vec(v)
    if len(v) != n:
        raise InputError(f"{what} has length {len(v)}, expected {n}")
    if any(x < 0 for x in v):
        raise InputError(f"{what} {v} has a negative exponent")
    return v


def monomial_value(x: Sequence[Fraction], exponents: Sequence[int]) -> Fraction:
    """Exact value of x^a, with 0^0 = 1."""
    value = Fraction(1)
    for xi, a in zip(x, exponents):
        if a:
            value *= Fraction(xi) ** a
    return value


def format_monomial(exponents: Sequence[int]) -> str:
    names = string.ascii_lowercase if len(exponents) <= 26 else None
    parts = []
    for i, a in enumerate(exponents):
        if a == 0:
            continue
        name = names[i] if names else f"x{i}"
        parts.append(name if a == 1 else f"{name}^{a}")
    return ("*" if names is None else "").join(parts) or "1"


def parse_monomial(text: str, n: int) -> IntVec:
    """
    Read a monomial written in the letters a, b, c, ... such as ``a^2bc`` or ``1``.

    Raises
    ------
    InputError
        On unknown letters or leftover characters
    """
    text = text.replace(" ", "").replace("*", "")
    exponents = [0] * n
    if text == "1":
        return tuple(exponents)
    pos = 0
    for match in _FACTOR.finditer(text):
        if match.start() != pos:
            break
        i = ord(match.group(1)) - ord("a")
        if i >= n:
            raise InputError(f"variable {match.group(1)!r} out of range for dimension {n}")
        exponents[i] += int(match.group(2) or 1)
        pos = match.end()
    if pos != len(text) or not text:
        raise InputError(f"cannot parse monomial {text!r}")
    return tuple(exponents)


@dataclass(frozen=True)
class BinomialInequality:
    """
    The inequality x^u <= x^v on [0,1]^n.

    u and v are kept as given; common factors are never cancelled because
    that changes the solution set where a shared coordinate vanishes.
    """

    u: IntVec
    v: IntVec

    def __post_init__(self):
        if len(self.u) != len(self.v):
            raise InputError(f"exponent vectors of lengths {len(self.u)} and {len(self.v)}")
        object.__setattr__(self, "u", _exponent_vector(self.u, len(self.u), "u"))
        object.__setattr__(self, "v", _exponent_vector(self.v, len(self.u), "v"))

    @property
    def n(self) -> int:
        return len(self.u)

    @classmethod
    def from_log_normal(cls, w: Sequence[int]) -> "BinomialInequality":
        """x^{w+} <= x^{w-}, the exponential form of w . y >= 0 with y = -log x."""
        return cls(positive_part(w), negative_part(w))

    @classmethod
    def parse(cls, text: str, n: int) -> "BinomialInequality":
        """Parse ``lhs <= rhs`` or ``lhs >= rhs`` in the letters a, b, c, ..."""
        if "<=" in text:
            left, right = text.split("<=")
            return cls(parse_monomial(left, n), parse_monomial(right, n))
        if ">=" in text:
            left, right = text.split(">=")
            return cls(parse_monomial(right, n), parse_monomial(left, n))
        raise InputError(f"no <= or >= in inequality {text!r}")

    @property
    def log_normal(self) -> IntVec:
        return tuple(a - b for a, b in zip(self.u, self.v))

    @property
    def is_trivial(self) -> bool:
        """True when x^u <= x^v holds on all of [0,1]^n, i.e. u >= v coordinatewise."""
        return all(a >= b for a, b in zip(self.u, self.v))

    def holds_at(self, x: Sequence[Fraction]) -> bool:
        return monomial_value(x, self.u) <= monomial_value(x, self.v)

    def __str__(self) -> str:
        return f"{format_monomial(self.u)} <= {format_monomial(self.v)}"


@dataclass(frozen=True)
class BinomialSystem:
    """Finite list of binomial inequalities in n variables; empty means all of [0,1]^n."""

    n: int
    inequalities: tuple[BinomialInequality, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"negative dimension {self.n}")
        object.__setattr__(self, "inequalities", tuple(self.inequalities))
        for k, ineq in enumerate(self.inequalities):
            if ineq.n != self.n:
                raise InputError(f"inequality {k} has length {ineq.n}, expected {self.n}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[Sequence[int], Sequence[int]]]) -> "BinomialSystem":
        return cls(n, tuple(BinomialInequality(int_vec(u), int_vec(v)) for u, v in pairs))

    @classmethod
    def parse(cls, n: int, lines: Iterable[str]) -> "BinomialSystem":
        return cls(n, tuple(BinomialInequality.parse(line, n) for line in lines))

    def __len__(self) -> int:
        return len(self.inequalities)

    def __iter__(self):
        return iter(self.inequalities)

    def extended(self, more: Iterable[BinomialInequality]) -> "BinomialSystem":
        return BinomialSystem(self.n, self.inequalities + tuple(more))

    def __str__(self) -> str:
        return "{" + ", ".join(str(i) for i in self.inequalities) + "}"
