"""Exact elements of cyclotomic fields ``Q(zeta_N)``.

An element is stored as an integer array in the basis

    zeta_{m_1}^{i_1} * ... * zeta_{m_r}^{i_r},   0 <= i_k < phi(m_k),

where ``N = m_1 ... m_r`` is the prime-power factorization, together with a
positive common denominator.  For a prime power ``m = p^a`` the relation
``sum_{j<p} zeta_m^(r + j p^(a-1)) = 0`` rewrites every exponent
``>= phi(m)`` in one subtraction, so reduction never grows coefficients by
more than a factor ``2^r``.  Equality is coordinatewise.

Examples
========

>>> z = CycNumber.zeta(4)
>>> z * z == CycNumber.rational(-1)
True
>>> (z + z.conjugate()).is_rational()
True
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np
from sympy import factorint

from ..errors import InvalidInput

_INT64_SAFE = 2 ** 62


@lru_cache(maxsize=None)
def _layout(N: int):
    """Prime-power moduli with their primes, the CRT exponent table, and phi of each modulus."""
    parts = tuple((p, p ** a) for p, a in sorted(factorint(N).items())) if N > 1 else ()
    if not parts:
        return (), np.zeros((), dtype=np.int64), ()
    grids = np.meshgrid(*[np.arange(m) for _, m in parts], indexing="ij")
    # exponent e with e = i_k mod m_k for every k
    exps = np.zeros(grids[0].shape, dtype=np.int64)
    for (_, m), g in zip(parts, grids):
        rest = N // m
        exps = (exps + g * (rest * pow(rest, -1, m) % N)) % N
    phis = tuple(m // p * (p - 1) for p, m in parts)
    return parts, exps, phis


def _reduce_tensor(T, parts):
    for axis, (p, m) in enumerate(parts):
        block = m // p
        T = np.moveaxis(T, axis, 0)
        head, tail = T[: m - block], T[m - block:]
        T = head - np.tile(tail, (p - 1,) + (1,) * (T.ndim - 1))
        T = np.moveaxis(T, 0, axis)
    return T


def _as_int_array(v):
    v = np.asarray(v)
    if v.dtype == object:
        big = max((abs(int(x)) for x in v.ravel()), default=0)
        if big < _INT64_SAFE:
            return v.astype(np.int64)
        return v
    return v.astype(np.int64)


class CycNumber:
    """Element of ``Q(zeta_N)``."""

    __slots__ = ("conductor", "coords", "den")

    def __init__(self, conductor: int, coords, den: int = 1):
        # coords: canonical tensor for this conductor
        if den <= 0:
            raise InvalidInput("denominator must be positive")
        coords = _as_int_array(coords)
        g = int(den)
        for x in coords.ravel():
            g = gcd(g, int(x))
            if g == 1:
                break
        if g > 1:
            coords = coords // g if coords.dtype != object else np.array([int(x) // g for x in coords.ravel()], dtype=object).reshape(coords.shape)
            den //= g
        object.__setattr__(self, "conductor", int(conductor))
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "den", int(den))

    def __setattr__(self, name, value):
        raise AttributeError("CycNumber is immutable")

    # -- construction
    @classmethod
    def from_group_ring(cls, N: int, vec, den: int = 1):
        """``sum_e vec[e] zeta_N^e / den``."""
        vec = _as_int_array(vec)
        if vec.shape != (N,):
            raise InvalidInput("group ring vector must have length N")
        parts, exps, phis = _layout(N)
        if not parts:
            return cls(1, vec.reshape(()), den)
        T = _reduce_tensor(vec[exps], parts)
        return cls(N, T, den)

    @classmethod
    def rational(cls, x, N: int = 1):
        x = Fraction(x)
        vec = np.zeros(N, dtype=object)
        vec[0] = x.numerator
        return cls.from_group_ring(N, vec, x.denominator)

    @classmethod
    def zeta(cls, N: int, k: int = 1):
        vec = np.zeros(N, dtype=np.int64)
        vec[k % N] = 1
        return cls.from_group_ring(N, vec)

    # -- conversion
    def group_ring(self, N: int | None = None):
        """A group ring vector of length ``N`` (multiple of the conductor) representing ``self``."""
        N = self.conductor if N is None else N
        if N % self.conductor:
            raise InvalidInput("target conductor must be a multiple")
        parts, exps, phis = _layout(self.conductor)
        dtype = self.coords.dtype
        vec = np.zeros(self.conductor, dtype=dtype)
        if not parts:
            vec[0] = self.coords.item() if dtype != object else self.coords.ravel()[0]
        else:
            sl = tuple(slice(0, f) for f in phis)
            np.add.at(vec, exps[sl].ravel(), self.coords.ravel())
        if N == self.conductor:
            return vec
        out = np.zeros(N, dtype=dtype)
        out[np.arange(self.conductor) * (N // self.conductor)] = vec
        return out

    def lift(self, N: int):
        if N == self.conductor:
            return self
        return CycNumber.from_group_ring(N, self.group_ring(N), self.den)

    def _align(self, other):
        if not isinstance(other, CycNumber):
            other = CycNumber.rational(other)
        N = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.lift(N), other.lift(N), N

    # -- arithmetic
    def __add__(self, other):
        a, b, N = self._align(other)
        den = a.den * b.den // gcd(a.den, b.den)
        ca = a.coords.astype(object) * (den // a.den)
        cb = b.coords.astype(object) * (den // b.den)
        return CycNumber(N, ca + cb, den)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.conductor, -self.coords, self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, CycNumber) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b, N = self._align(other)
        u, v = a.group_ring(), b.group_ring()
        bound = int(np.max(np.abs(u.astype(object)), initial=0)) * int(np.max(np.abs(v.astype(object)), initial=0)) * N
        if bound < _INT64_SAFE and u.dtype != object and v.dtype != object:
            full = np.convolve(u, v)
        else:
            full = np.convolve(u.astype(object), v.astype(object))
        folded = np.zeros(N, dtype=full.dtype)
        folded[: len(full[:N])] += full[:N]
        folded[: len(full) - N] += full[N:]
        return CycNumber.from_group_ring(N, folded, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CycNumber):
            if not other.is_rational():
                raise InvalidInput("division only by rational cyclotomic numbers")
            other = other.to_fraction()
        other = Fraction(other)
        if other == 0:
            raise ZeroDivisionError("division by zero")
        num = self.coords.astype(object) * other.denominator
        den = self.den * abs(other.numerator)
        if other < 0:
            num = -num
        return CycNumber(self.conductor, num, den)

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInput("negative powers need an explicit inverse")
        out = CycNumber.rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, k: int):
        """Image under ``zeta_N -> zeta_N^k`` (``gcd(k, N) = 1``)."""
        N = self.conductor
        if gcd(k, N) != 1:
            raise InvalidInput("k must be a unit mod N")
        vec = self.group_ring()
        out = np.zeros_like(vec)
        out[(np.arange(N) * k) % N] = vec
        return CycNumber.from_group_ring(N, out, self.den)

    def conjugate(self):
        return self.galois(-1)

    def abs2(self):
        """``z * conj(z)``, which is a non-negative real in ``Q(zeta_N)``."""
        return self * self.conjugate()

    # -- predicates
    def is_zero(self) -> bool:
        return not np.any(self.coords != 0)

    def is_rational(self) -> bool:
        flat = self.coords.ravel()
        return not np.any(flat[1:] != 0)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise InvalidInput("not a rational number")
        return Fraction(int(self.coords.ravel()[0]), self.den)

    def __eq__(self, other):
        if not isinstance(other, CycNumber):
            try:
                other = CycNumber.rational(other)
            except (TypeError, ValueError):
                return NotImplemented
        a, b, _ = self._align(other)
        return a.den == b.den and a.coords.shape == b.coords.shape and bool(np.all(a.coords == b.coords))

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_fraction())
        return hash((self.conductor, self.den, tuple(int(x) for x in self.coords.ravel())))

    def __repr__(self):
        if self.is_rational():
            return f"CycNumber({self.to_fraction()})"
        terms = {int(e): int(c) for e, c in enumerate(self.group_ring()) if c}
        return f"CycNumber(N={self.conductor}, {terms}/{self.den})"
