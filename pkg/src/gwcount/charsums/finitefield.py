"""Finite fields ``F_p[x]/(f)`` with ``f`` primitive, and their trace tables.

The class of ``x`` is the fixed generator ``g`` of ``F_q^x``; every
multiplicative character is described by its value on ``g``.  The only
field data the character sums need is the sequence ``Tr(g^k)`` for
``0 <= k < q - 1``, computed here blockwise with numpy.

Examples
========

>>> F = FiniteField(5)
>>> F.q, F.modulus
(5, (3, 1))
>>> F.trace_table()[:4].tolist()
[1, 2, 4, 3]
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import isqrt

import numpy as np
from sympy import factorint, isprime, primitive_root
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod

from ..errors import InvalidInput

Q_LIMIT = 2 ** 31


def _is_primitive(f_high, p, n):
    # f monic of degree n, high-first; x generates F_q^x iff x^((q-1)/r) != 1 for all r | q-1
    if not gf_irreducible_p(f_high, p, ZZ):
        return False
    q1 = p ** n - 1
    for r in factorint(q1):
        if gf_pow_mod([1, 0], q1 // r, f_high, p, ZZ) == [1]:
            return False
    return True


@lru_cache(maxsize=None)
def primitive_modulus(p: int, n: int) -> tuple:
    """Lexicographically first primitive polynomial of degree ``n`` mod ``p`` (low first)."""
    if n == 1:
        return ((-primitive_root(p)) % p, 1)
    for tail in product(range(p), repeat=n):
        if tail[-1] == 0:
            continue
        low_first = tail + (1,)
        if _is_primitive(list(reversed(low_first)), p, n):
            return low_first
    raise InvalidInput(f"no primitive polynomial of degree {n} mod {p}")  # pragma: no cover


class FiniteField:
    """``F_q`` with ``q = p^n`` given by a primitive modulus."""

    def __init__(self, p: int, n: int = 1, modulus=None):
        if not isprime(p):
            raise InvalidInput(f"{p} is not prime")
        if n < 1:
            raise InvalidInput("extension degree must be positive")
        if p ** n >= Q_LIMIT:
            raise InvalidInput("field too large for desk-scale tables")
        if modulus is None:
            modulus = primitive_modulus(p, n)
        modulus = tuple(int(a) % p for a in modulus[:-1]) + (1,)
        if len(modulus) != n + 1 or not _is_primitive(list(reversed(modulus)), p, n):
            raise InvalidInput("modulus must be a primitive polynomial of degree n")
        self.p, self.n, self.q = p, n, p ** n
        self.modulus = modulus
        self._traces = None

    @classmethod
    def of_order(cls, q: int):
        f = factorint(q)
        if len(f) != 1:
            raise InvalidInput(f"{q} is not a prime power")
        (p, n), = f.items()
        return cls(p, n)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"FiniteField(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    def companion(self):
        """Matrix of multiplication by ``x`` on coordinate columns."""
        n, p = self.n, self.p
        M = np.zeros((n, n), dtype=object)
        for i in range(1, n):
            M[i, i - 1] = 1
        for i in range(n):
            M[i, n - 1] = (-self.modulus[i]) % p
        return M

    def _trace_functional(self):
        # Tr(x^i) = trace of the i-th power of the companion matrix
        M = self.companion()
        P = np.identity(self.n, dtype=object)
        out = []
        for _ in range(self.n):
            out.append(int(np.trace(P)) % self.p)
            P = P.dot(M) % self.p
        return np.array(out, dtype=object)

    def trace_table(self):
        """``Tr_{F_q/F_p}(g^k)`` for ``k = 0 .. q-2`` as an int64 array."""
        if self._traces is None:
            self._traces = self._compute_traces()
        return self._traces

    def _compute_traces(self):
        n, p, N = self.n, self.p, self.q - 1
        small = n * p * p < 2 ** 62
        dt = np.int64 if small else object
        M = self.companion().astype(dt)
        ell = self._trace_functional().astype(dt)
        B = max(1, isqrt(N))
        V = np.zeros((n, B), dtype=dt)
        v = np.zeros(n, dtype=dt)
        v[0] = 1
        for k in range(B):
            V[:, k] = v
            v = M.dot(v) % p
        MB = np.identity(n, dtype=dt)
        base, e = M, B
        while e:
            if e & 1:
                MB = MB.dot(base) % p
            base = base.dot(base) % p
            e >>= 1
        out = np.empty(N, dtype=np.int64)
        W = V
        for start in range(0, N, B):
            chunk = ell.dot(W) % p
            stop = min(start + B, N)
            out[start:stop] = np.asarray(chunk[: stop - start], dtype=np.int64)
            W = MB.dot(W) % p
        return out

    # element arithmetic (coefficient lists mod p, high first for galoistools)
    def gen_power(self, k: int):
        """Coordinates (low first) of ``g^k``."""
        hi = gf_pow_mod([1, 0], k % (self.q - 1), list(reversed(self.modulus)), self.p, ZZ)
        low = list(reversed(hi))
        return low + [0] * (self.n - len(low))
