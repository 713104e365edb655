"""Gauss sums, Jacobi sums, ``S_V`` values and the characters ``kappa_d``.

Conventions: ``psi(x) = zeta_p^(c Tr(x))`` for a selector ``1 <= c < p``;
a multiplicative character of order ``d`` with exponent ``s`` sends the
field generator ``g`` to ``zeta_d^s``;

    G(chi, psi) = - sum_{a != 0} chi^(-1)(a) psi(a).

Examples
========

>>> F = FiniteField(5)
>>> gauss_sum(F, MultChar(F, 1)) == 1
True
>>> gauss_sum(F, MultChar(F, 2)).abs2() == 5
True
>>> s_v(FiniteField(13), 4), s_v(FiniteField(7), 6)
(-1, -1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm

import numpy as np
from sympy import factorint, legendre_symbol, primerange
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add_mul, gf_mul, gf_neg, gf_pow_mod, gf_rem

from ..errors import IdentificationFailure, InvalidInput
from ..exactalg import SquareClass
from .cyclotomic import CycNumber
from .finitefield import FiniteField

SUPPORTED_D = (1, 2, 3, 4, 6)


@dataclass(frozen=True)
class MultChar:
    """``chi(g^k) = zeta_d^(s k)`` on ``field``; ``chi(0)`` is left undefined."""

    field: FiniteField
    order: int
    exponent: int = 1

    def __post_init__(self):
        if self.order < 1 or (self.field.q - 1) % self.order:
            raise InvalidInput(f"order {self.order} does not divide q - 1 = {self.field.q - 1}")
        object.__setattr__(self, "exponent", self.exponent % self.order)

    def conj(self):
        return MultChar(self.field, self.order, -self.exponent)

    def frobenius(self):
        """``chi^p``, the Frobenius conjugate."""
        return MultChar(self.field, self.order, self.exponent * self.field.p)

    def is_trivial(self):
        return self.exponent == 0


def gauss_sum(F: FiniteField, chi: MultChar, c: int = 1) -> CycNumber:
    """``-sum_{a != 0} chi^(-1)(a) zeta_p^(c Tr(a))`` exactly."""
    if chi.field != F:
        raise InvalidInput("character is defined on a different field")
    p = F.p
    if not 1 <= c < p:
        raise InvalidInput(f"additive selector must lie in 1..{p - 1}")
    d, s = chi.order, chi.exponent
    N = d * p  # gcd(d, p) = 1 since d | q - 1
    tr = F.trace_table()
    k = np.arange(F.q - 1, dtype=np.int64)
    e = (((-s * k) % d) * (N // d) + ((c * tr) % p) * (N // p)) % N
    vec = np.bincount(e, minlength=N).astype(np.int64)
    return CycNumber.from_group_ring(N, -vec)


# ---------------------------------------------------------------- Jacobi data

@dataclass(frozen=True)
class JacobiEntry:
    """Character of order ``order`` and exponent ``exponent`` on the degree-``degree``
    extension of the base field, with multiplicity ``mult``."""

    degree: int
    order: int
    exponent: int
    mult: int


class JacobiDatum:
    """Finite formal combination of characters on extensions of a base field.

    The generators of all extensions are chosen compatibly (as powers of a
    generator of their compositum), and the norm product condition
    ``prod N(chi_i)^(n_i) = 1`` is checked on construction.
    """

    def __init__(self, base: FiniteField, entries):
        self.base = base
        self.entries = tuple(e if isinstance(e, JacobiEntry) else JacobiEntry(*e) for e in entries)
        q = base.q
        total = Fraction(0)
        for e in self.entries:
            qi = q ** e.degree
            if e.degree < 1 or e.order < 1 or (qi - 1) % e.order:
                raise InvalidInput(f"order {e.order} does not divide q^{e.degree} - 1")
            # restriction of chi_i to the base multiplicative group, as a fraction of a turn
            total += Fraction(e.mult * e.exponent * ((qi - 1) // (q - 1)), e.order)
        if total.denominator != 1:
            raise InvalidInput("norm product of the characters is not trivial")
        self._fields = None

    def rank(self) -> int:
        return sum(e.mult * e.degree for e in self.entries)

    def fields(self):
        """One :class:`FiniteField` per entry, with compatible generators."""
        if self._fields is None:
            self._fields = self._build_fields()
        return self._fields

    def _build_fields(self):
        if not self.entries:
            return ()
        p, n = self.base.p, self.base.n
        L = lcm(*(e.degree for e in self.entries))
        big = FiniteField(p, n * L)
        Q = big.q
        out = []
        cache = {}
        for e in self.entries:
            if e.degree not in cache:
                qi = self.base.q ** e.degree
                if e.degree == L:
                    cache[e.degree] = big
                else:
                    cache[e.degree] = FiniteField(p, n * e.degree,
                                                  _min_poly_of_power(big, (Q - 1) // (qi - 1)))
            out.append(cache[e.degree])
        return tuple(out)


def _min_poly_of_power(F: FiniteField, M: int):
    """Minimal polynomial over ``F_p`` (low first) of ``g^M``."""
    p = F.p
    f = list(reversed(F.modulus))
    h = gf_pow_mod([1, 0], M, f, p, ZZ)
    conj = [h]
    while True:
        nxt = gf_pow_mod(conj[-1], p, f, p, ZZ)
        if nxt == h:
            break
        conj.append(nxt)
    # prod (X - c) with coefficients in F, each coefficient a gf element
    poly = [[1]]
    for c in conj:
        shifted = [[]] + poly  # X * poly
        new = []
        for i in range(len(shifted)):
            term = shifted[i]
            if i < len(poly):
                term = gf_add_mul(term, gf_neg(c, p, ZZ), poly[i], p, ZZ)
            new.append(gf_rem(term, f, p, ZZ))
        poly = new
    out = []
    for coeff in poly:
        if len(coeff) > 1:
            raise InvalidInput("conjugate product is not defined over the prime field")  # pragma: no cover
        out.append(int(coeff[0]) if coeff else 0)
    return tuple(out)


def jacobi_sum(J: JacobiDatum, c: int = 1) -> CycNumber:
    """``prod_i G_{F_i}(conj(chi_i), psi_0 o Tr)^(n_i)``."""
    out = CycNumber.rational(1)
    for e, F in zip(J.entries, J.fields()):
        G = gauss_sum(F, MultChar(F, e.order, -e.exponent), c)
        if e.mult >= 0:
            out = out * G ** e.mult
        else:
            # G * conj(G) = |G|^2 is a positive rational
            inv = G.conjugate() / G.abs2()
            out = out * inv ** (-e.mult)
    return out


# ----------------------------------------------------------------------- S_V

def _field(F):
    return F if isinstance(F, FiniteField) else FiniteField.of_order(F)


def s_v_datum(F: FiniteField, d: int) -> JacobiDatum:
    """Datum of ``chi + chi^(-1) - 2 trv`` for ``chi`` of order ``d``."""
    q = F.q
    if d not in SUPPORTED_D:
        raise InvalidInput(f"d must be one of {SUPPORTED_D}")
    if gcd(q, d) != 1:
        raise InvalidInput(f"gcd(q, d) = gcd({q}, {d}) is not 1")
    if d == 1:
        return JacobiDatum(F, [])
    trv = JacobiEntry(1, 1, 0, -2)
    if (q - 1) % d == 0:
        if d == 2:
            return JacobiDatum(F, [JacobiEntry(1, 2, 1, 2), trv])
        return JacobiDatum(F, [JacobiEntry(1, d, 1, 1), JacobiEntry(1, d, -1, 1), trv])
    # q = -1 mod d: chi and chi^-1 form one Frobenius orbit, induced from F_{q^2}
    return JacobiDatum(F, [JacobiEntry(2, d, 1, 1), trv])


def s_v(F, d: int, c: int = 1) -> int:
    """``S_V`` for ``V = chi + chi^(-1)``, normalized by ``q``; always ``+-1``."""
    F = _field(F)
    J = s_v_datum(F, d)
    val = jacobi_sum(J, c)
    if d > 1:
        val = val / F.q
    if not val.is_rational() or val.to_fraction() not in (1, -1):
        raise IdentificationFailure(f"S_V is not +-1 for q={F.q}, d={d}")  # pragma: no cover
    return int(val.to_fraction())


# ------------------------------------------------------------------- kappa_d

def kappa_frobenius(d: int, q: int) -> int:
    """Value of ``kappa_d`` at Frobenius, from the printed table."""
    if d not in SUPPORTED_D:
        raise InvalidInput(f"d must be one of {SUPPORTED_D}")
    if gcd(q, d) != 1:
        raise InvalidInput(f"gcd(q, d) = gcd({q}, {d}) is not 1")
    if d in (1, 3):
        return 1
    if d == 2:
        if q % 4 != 1:
            raise InvalidInput("the d = 2 table value (-1)^((q-1)/4) needs q = 1 mod 4")
        return (-1) ** ((q - 1) // 4)
    if d == 4:
        return -1 if q % 8 in (5, 7) else 1
    return -1 if q % 12 in (7, 11) else 1


def derivation_value(d: int, q: int):
    """For ``d = 2`` the value ``chi(-1) = (-1)^((q-1)/2)``; ``None`` otherwise."""
    if d == 2 and q % 2:
        return (-1) ** ((q - 1) // 2)
    return None


KAPPA_SQUARE_CLASS = {2: 2, 4: -2, 6: -1}


def kappa_square_class(d: int) -> SquareClass:
    """Square class whose Kronecker character matches ``kappa_d``."""
    if d not in KAPPA_SQUARE_CLASS:
        raise InvalidInput("kappa square classes are defined for d in {2, 4, 6}")
    return SquareClass(KAPPA_SQUARE_CLASS[d])


def verify_kappa_identification(d: int, qmax: int = 10 ** 4) -> int:
    """Compare the shipped class with the table on all odd primes ``< qmax``.

    Returns the number of primes compared; raises on the first mismatch.
    """
    D = KAPPA_SQUARE_CLASS[d]
    checked = 0
    for q in primerange(3, qmax):
        if gcd(q, 2 * d * D) != 1 or (d == 2 and q % 4 != 1):
            continue
        if legendre_symbol(D % q, q) != kappa_frobenius(d, q):
            raise IdentificationFailure(f"kappa_{d} <-> {D} fails at q = {q}")
        checked += 1
    return checked


def delta_g_membership(chi, g: int) -> bool:
    """True iff every odd prime dividing ``chi`` is at most ``C(2g, g)``."""
    if g < 1:
        raise InvalidInput("g must be positive")
    rep = chi.rep if isinstance(chi, SquareClass) else int(chi)
    bound = comb(2 * g, g)
    return all(p <= bound for p in factorint(abs(rep)) if p != 2)


# --------------------------------------------------------------------- table

def gauss_table(qmax: int, ds=SUPPORTED_D):
    """Rows ``{q, d, s_v, kappa, match}`` for primes ``q < qmax`` coprime to ``d``.

    ``kappa`` is the printed table value (``None`` where it is undefined) and
    ``match`` says which closed form the exact value agrees with.
    """
    rows = []
    for d in ds:
        for q in primerange(2, qmax):
            if gcd(q, d) != 1:
                continue
            val = s_v(FiniteField(q), d)
            try:
                table = kappa_frobenius(d, q)
            except InvalidInput:
                table = None
            deriv = derivation_value(d, q)
            hits = [name for name, v in (("table", table), ("derivation", deriv)) if v == val]
            match = "both" if len(hits) == 2 else (hits[0] if hits else "none")
            rows.append({"q": q, "d": d, "s_v": val, "kappa": table, "match": match})
    return rows
