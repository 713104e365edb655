"""Grothendieck-Witt classes modulo J, over Q and over number fields.

A class over Q is determined by ``(rank, sign, disc)``.  Addition adds rank
and sign and multiplies discriminants; multiplication follows the rule of
the elementary augmented ring ``E(M)``::

    disc(x*y) = disc(x)**rank(y) * disc(y)**rank(x)

Examples
========

>>> H = hyperbolic(1)
>>> H
GWClass(2, 0, -1)
>>> H * GWClass(1, 1, 3)
GWClass(2, 0, -1)
>>> gw_from_diagonal([2, 3])
GWClass(2, 2, 6)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from sympy import factorint

from .errors import DegenerateClass, InvalidInput
from .exactalg import (NFElement, NumberField, SquareClass, SymMatrix, as_fraction,
                       congruence_diagonalize, embedding_signs, field_disc, field_norm,
                       squarefree_reduce, trace_form_gram)


def _sc(d) -> SquareClass:
    return d if isinstance(d, SquareClass) else squarefree_reduce(d)


@dataclass(frozen=True, init=False)
class GWClass:
    rank: int
    sign: int
    disc: SquareClass

    def __init__(self, rank: int, sign: int, disc=1):
        rank, sign = int(rank), int(sign)
        if (rank - sign) % 2:
            raise InvalidInput(f"rank {rank} and signature {sign} differ in parity")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "disc", _sc(disc))

    @classmethod
    def zero(cls):
        return cls(0, 0, 1)

    @classmethod
    def one(cls):
        return cls(1, 1, 1)

    @classmethod
    def from_int(cls, n: int):
        """Image of the integer ``n`` (``n`` copies of ``<1>``)."""
        return cls(n, n, 1)

    def _coerce(self, other):
        if isinstance(other, GWClass):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return GWClass.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GWClass(self.rank + other.rank, self.sign + other.sign, self.disc * other.disc)

    __radd__ = __add__

    def __neg__(self):
        return GWClass(-self.rank, -self.sign, self.disc)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        disc = self.disc ** other.rank * other.disc ** self.rank
        return GWClass(self.rank * other.rank, self.sign * other.sign, disc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInput("negative powers are not defined in the ring")
        out = GWClass.one()
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return f"GWClass({self.rank}, {self.sign}, {self.disc.rep})"

    def to_json(self):
        return {"rank": self.rank, "sign": self.sign, "disc": self.disc.rep}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["rank"], obj["sign"], int(obj["disc"]))


def gw_add(x: GWClass, y: GWClass) -> GWClass:
    return x + y


def gw_mul(x: GWClass, y: GWClass) -> GWClass:
    return x * y


def hyperbolic(n: int = 1) -> GWClass:
    return GWClass(2 * n, 0, (-1) ** (n % 2))


def gw_from_diagonal(entries) -> GWClass:
    """Class of ``<a_1> + ... + <a_r>`` over Q."""
    vals = [as_fraction(a) for a in entries]
    if any(a == 0 for a in vals):
        raise DegenerateClass("diagonal entry is zero")
    prod = 1
    for a in vals:
        prod *= a
    return GWClass(len(vals), sum(1 if a > 0 else -1 for a in vals), squarefree_reduce(prod))


# ------------------------------------------------------------- over a field L

@dataclass(frozen=True)
class DiagonalForm:
    """``<a_1> + ... + <a_r>`` over ``field``."""

    field: NumberField
    entries: tuple

    def __init__(self, field, entries):
        ents = tuple(field(e) for e in entries)
        if any(e.is_zero() for e in ents):
            raise DegenerateClass("diagonal entry is zero")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", ents)


def _parity_exp(e: NFElement, k: int) -> NFElement:
    # square classes only see the exponent mod 2
    return e if k % 2 else e.field.one


class GWClassOverL:
    """Class in ``GW(L)/J`` by rank, per-embedding signatures and a raw discriminant.

    ``disc_rep`` is an unreduced element of ``L``; equality of classes is
    only decided after transfer to Q, so ``__eq__`` compares the raw data.
    """

    __slots__ = ("field", "rank", "sign", "disc_rep")

    def __init__(self, field: NumberField, rank: int, sign, disc_rep=1):
        sign = tuple(int(s) for s in sign)
        if len(sign) != field.real_embedding_count:
            raise InvalidInput("one signature per real embedding is required")
        if any((rank - s) % 2 for s in sign):
            raise InvalidInput("rank and signatures differ in parity")
        disc_rep = field(disc_rep)
        if disc_rep.is_zero():
            raise DegenerateClass("discriminant representative is zero")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rank", int(rank))
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "disc_rep", disc_rep)

    def __setattr__(self, name, value):
        raise AttributeError("GWClassOverL is immutable")

    @classmethod
    def one(cls, field):
        return cls(field, 1, [1] * field.real_embedding_count, 1)

    @classmethod
    def zero(cls, field):
        return cls(field, 0, [0] * field.real_embedding_count, 1)

    def _check(self, other):
        if not isinstance(other, GWClassOverL) or other.field != self.field:
            raise InvalidInput("classes over different fields")

    def __add__(self, other):
        self._check(other)
        return GWClassOverL(self.field, self.rank + other.rank,
                            [a + b for a, b in zip(self.sign, other.sign)],
                            self.disc_rep * other.disc_rep)

    def __neg__(self):
        return GWClassOverL(self.field, -self.rank, [-a for a in self.sign], self.disc_rep)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        disc = _parity_exp(self.disc_rep, other.rank) * _parity_exp(other.disc_rep, self.rank)
        return GWClassOverL(self.field, self.rank * other.rank,
                            [a * b for a, b in zip(self.sign, other.sign)], disc)

    def __eq__(self, other):
        return (isinstance(other, GWClassOverL) and self.field == other.field
                and (self.rank, self.sign, self.disc_rep) == (other.rank, other.sign, other.disc_rep))

    def __hash__(self):
        return hash((self.field, self.rank, self.sign, self.disc_rep))

    def __repr__(self):
        return (f"GWClassOverL({self.field.coeffs()}, rank={self.rank}, sign={list(self.sign)}, "
                f"disc_rep={[str(a) for a in self.disc_rep.coords]})")

    def to_json(self):
        from .exactalg import format_fraction
        return {"field": self.field.coeffs(), "rank": self.rank, "sign": list(self.sign),
                "disc_rep": [format_fraction(a) for a in self.disc_rep.coords]}


def gw_over_field_from_diagonal(q: DiagonalForm) -> GWClassOverL:
    L = q.field
    sign = [0] * L.real_embedding_count
    disc = L.one
    for a in q.entries:
        sign = [s + t for s, t in zip(sign, embedding_signs(L, a))]
        disc = disc * a
    return GWClassOverL(L, len(q.entries), sign, disc)


# ------------------------------------------------------------------ transfers

def trace_transfer(L: NumberField, q) -> GWClass:
    """``Tr_{L/Q}`` of a diagonal form, computed from Gram matrices.

    Each entry ``beta`` contributes the block ``Tr(beta * w_i * w_j)``; the
    blocks are diagonalized by congruence and read off over Q.  For a
    virtual class transfer the two parts and subtract.
    """
    if not isinstance(q, DiagonalForm):
        q = DiagonalForm(L, q)
    out = GWClass.zero()
    for beta in q.entries:
        D = congruence_diagonalize(SymMatrix(trace_form_gram(L, beta)))
        out = out + gw_from_diagonal(D)
    return out


def trace_transfer_closed_form(L: NumberField, w: GWClassOverL) -> GWClass:
    """``([L:Q] rank, sum of signatures, disc(L)^rank * N(disc_rep))``."""
    if w.field != L:
        raise InvalidInput("class is not over the given field")
    disc = field_disc(L) ** w.rank * squarefree_reduce(field_norm(L, w.disc_rep))
    return GWClass(L.degree * w.rank, sum(w.sign), disc)


def norm_rank_one(L: NumberField, b) -> GWClass:
    """Rost norm of ``<b>``, which is ``<N(b)>``."""
    b = L(b)
    if b.is_zero():
        raise DegenerateClass("norm of <0> is undefined")
    return gw_from_diagonal([field_norm(L, b)])


# ------------------------------------------------------------------ Delta_g

def delta_g_bound(g: int) -> int:
    if g < 1:
        raise InvalidInput("g must be positive")
    return comb(2 * g, g)


def reduce_disc_mod_delta_g(d: SquareClass, g: int) -> SquareClass:
    bound = delta_g_bound(g)
    keep = 1
    for p in factorint(abs(d.rep)):
        if p > bound:
            keep *= p
    return SquareClass(keep)


def reduce_mod_delta_g(x: GWClass, g: int) -> GWClass:
    """Strip the sign and every prime ``p <= C(2g, g)`` from ``disc``."""
    return GWClass(x.rank, x.sign, reduce_disc_mod_delta_g(x.disc, g))
