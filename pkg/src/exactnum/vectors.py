from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from src.exceptions import InputError

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


def int_vec(entries: Iterable[int]) -> IntVec:
    """Build an IntVec, rejecting non-integral entries."""
    out = []
    for x in entries:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise InputError(f"non-integral entry {x} in integer vector")
            x = x.numerator
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f"entry {x!r} is not an integer")
        out.append(x)
    return tuple(out)


def primitive(v: Sequence[int]) -> IntVec:
    """
    Scale an integer vector to the primitive vector in its direction.

    Parameters
    ----------
    v : Sequence[int]
        Nonzero integer vector

    Returns
    -------
    IntVec
        v divided by the gcd of its entries; the sign is preserved
    """
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise InputError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def primitive_rational(v: Sequence[Fraction]) -> IntVec:
    """Clear denominators of a nonzero rational vector and make it primitive."""
    m = 1
    for x in v:
        m = lcm(m, Fraction(x).denominator)
    return primitive([int(Fraction(x) * m) for x in v])


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def combine(a_coef, a: Sequence, b_coef, b: Sequence) -> tuple:
    """a_coef * a + b_coef * b."""
    return tuple(a_coef * x + b_coef * y for x, y in zip(a, b))


def support(v: Sequence) -> frozenset[int]:
    """Indices of nonzero entries."""
    return frozenset(i for i, x in enumerate(v) if x != 0)


def positive_part(v: Sequence[int]) -> IntVec:
    return tuple(x if x > 0 else 0 for x in v)


def negative_part(v: Sequence[int]) -> IntVec:
    return tuple(-x if x < 0 else 0 for x in v)


def unit(n: int, i: int) -> IntVec:
    return tuple(1 if j == i else 0 for j in range(n))


def restrict(v: Sequence, indices: Sequence[int]) -> tuple:
    """Coordinate projection onto the listed indices, in the given order."""
    return tuple(v[i] for i in indices)


def lift(v: Sequence, indices: Sequence[int], n: int) -> tuple:
    """Inverse of restrict: place v on the listed indices of a length-n zero vector."""
    out = [0] * n
    for x, i in zip(v, indices):
        out[i] = x
    return tuple(out)
