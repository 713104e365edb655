"""Rationals and square classes of Q.

Rationals are :class:`fractions.Fraction`.  A square class of ``Q^x`` is
stored canonically as a signed squarefree integer.

Examples
========

>>> squarefree_reduce(18)
SquareClass(2)
>>> squarefree_reduce(Fraction(5, 45))
SquareClass(1)
>>> SquareClass(-2) * SquareClass(6)
SquareClass(-3)
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering

from sympy import factorint

from ..errors import DegenerateClass, InvalidInput

__all__ = ["Fraction", "as_fraction", "format_fraction", "squarefree_reduce",
           "SquareClass", "is_squarefree_int"]


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction.

    Floats are refused: no floating point enters the exact layer.
    """
    if isinstance(x, bool):
        raise InvalidInput("booleans are not rationals")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            raise InvalidInput(f"not a rational: {x!r}") from None
    if hasattr(x, "p") and hasattr(x, "q"):  # sympy Rational
        return Fraction(int(x.p), int(x.q))
    raise InvalidInput(f"not an exact rational: {x!r}")


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _squarefree_part(n: int) -> int:
    out = 1
    for p, e in factorint(n).items():
        if e % 2:
            out *= p
    return out


def is_squarefree_int(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorint(abs(n)).values())


@total_ordering
class SquareClass:
    """Element of ``Q^x / (Q^x)^2`` held as a signed squarefree integer."""

    __slots__ = ("rep",)

    def __init__(self, rep: int):
        rep = int(rep)
        if not is_squarefree_int(rep) and rep not in (1, -1):
            raise InvalidInput(f"{rep} is not a signed squarefree integer")
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("SquareClass is immutable")

    def __mul__(self, other):
        other = _coerce_sc(other)
        if other is NotImplemented:
            return other
        return squarefree_reduce(self.rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return self if k % 2 else SquareClass(1)

    def __eq__(self, other):
        other = _coerce_sc(other)
        if other is NotImplemented:
            return other
        return self.rep == other.rep

    def __lt__(self, other):
        return self.rep < _coerce_sc(other).rep

    def __hash__(self):
        return hash(("SquareClass", self.rep))

    def __int__(self):
        return self.rep

    def __repr__(self):
        return f"SquareClass({self.rep})"

    def is_trivial(self) -> bool:
        return self.rep == 1


def _coerce_sc(x):
    if isinstance(x, SquareClass):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return squarefree_reduce(x)
    return NotImplemented


def squarefree_reduce(x) -> SquareClass:
    """Return the signed squarefree integer in the square class of ``x``."""
    x = as_fraction(x)
    if x == 0:
        raise DegenerateClass("zero has no square class")
    # num/den and num*den differ by the square den^2
    n = x.numerator * x.denominator
    s = -1 if n < 0 else 1
    return SquareClass(s * _squarefree_part(abs(n)))
