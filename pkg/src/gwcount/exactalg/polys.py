"""Dense univariate polynomials over Q and real root isolation.

A polynomial is a tuple of Fractions, lowest degree first, with no trailing
zeros; the zero polynomial is ``()``.  Root counting defers to sympy's Sturm
sequence implementation; isolation and sign determination at a root are done
here by bisection with exact interval arithmetic.

Examples
========

>>> real_root_count([-2, 0, 1])
2
>>> real_root_count([-2, 0, 0, 1])
1
>>> [r.sign_of([0, 1]) for r in isolate_real_roots([-2, 0, 1])]
[-1, 1]
"""

from __future__ import annotations

from fractions import Fraction

from sympy import Poly, QQ, Symbol

from ..errors import ContractViolation, InvalidInput
from .rational import as_fraction

_X = Symbol("x")


def poly(coeffs) -> tuple:
    c = [as_fraction(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p) -> int:
    return len(p) - 1


def padd(p, q):
    n = max(len(p), len(q))
    return poly([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def pneg(p):
    return tuple(-a for a in p)


def psub(p, q):
    return padd(p, pneg(q))


def pscale(p, c):
    return poly([c * a for a in p])


def pmul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def pdivmod(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq, lq = len(q) - 1, q[-1]
    quo = [Fraction(0)] * max(len(p) - dq, 0)
    for k in range(len(p) - 1, dq - 1, -1):
        c = r[k] / lq
        if c:
            quo[k - dq] = c
            for j in range(dq + 1):
                r[k - dq + j] -= c * q[j]
    return poly(quo), poly(r[:dq] if dq else [])


def pmod(p, q):
    return pdivmod(p, q)[1]


def pderiv(p):
    return poly([i * p[i] for i in range(1, len(p))])


def pmonic(p):
    return pscale(p, 1 / p[-1]) if p else ()


def pgcd(p, q):
    while q:
        p, q = q, pmod(p, q)
    return pmonic(p)


def peval(p, x):
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * x + a
    return acc


def is_squarefree(p) -> bool:
    return degree(pgcd(p, pderiv(p))) <= 0


def to_sympy(p) -> Poly:
    return Poly([QQ(a.numerator, a.denominator) for a in reversed(p)] or [0], _X, domain=QQ)


def from_sympy(P: Poly) -> tuple:
    return poly(reversed([as_fraction(c) for c in P.all_coeffs()]))


def real_root_count(p, interval=None) -> int:
    """Number of distinct real roots of squarefree ``p``, optionally in a closed interval.

    The count comes from Sturm sequences and is exact.
    """
    p = poly(p)
    if not p:
        raise InvalidInput("zero polynomial has no finite root count")
    if not is_squarefree(p):
        raise ContractViolation("real_root_count expects a squarefree polynomial")
    if degree(p) == 0:
        return 0
    P = to_sympy(p)
    if interval is None:
        return int(P.count_roots())
    lo, hi = (as_fraction(v) for v in interval)
    return int(P.count_roots(QQ(lo.numerator, lo.denominator), QQ(hi.numerator, hi.denominator)))


def interval_eval(p, lo: Fraction, hi: Fraction):
    """Enclosure of ``p([lo, hi])`` by Horner's scheme in interval arithmetic."""
    a = b = Fraction(0)
    for c in reversed(p):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


class RealRoot:
    """A real root of a squarefree rational polynomial.

    Either ``exact`` holds the rational value, or the root is the unique one
    in the open interval ``(lo, hi)`` where the polynomial changes sign.
    Refinement mutates only this private cache; the root itself is fixed.
    """

    def __init__(self, p, lo, hi):
        self.p = p
        self.exact = None
        self.lo, self.hi = Fraction(lo), Fraction(hi)
        if self.lo == self.hi:
            self.exact = self.lo
        else:
            for end in (self.lo, self.hi):
                if peval(p, end) == 0:
                    self._shrink_around(end)
                    break

    def _shrink_around(self, r):
        # isolating interval touches a root at its end: only possible for a rational root
        self.exact = r
        self.lo = self.hi = r

    def bisect(self):
        if self.exact is not None:
            return
        mid = (self.lo + self.hi) / 2
        vm = peval(self.p, mid)
        if vm == 0:
            self._shrink_around(mid)
        elif (vm > 0) == (peval(self.p, self.lo) > 0):
            self.lo = mid
        else:
            self.hi = mid

    def enclosure(self):
        if self.exact is not None:
            return self.exact, self.exact
        return self.lo, self.hi

    def sign_of(self, q) -> int:
        """Sign of ``q`` at this root; ``q`` must not vanish there."""
        q = poly(q)
        if not q:
            raise InvalidInput("sign of the zero polynomial")
        while True:
            lo, hi = self.enclosure()
            a, b = interval_eval(q, lo, hi)
            if a > 0:
                return 1
            if b < 0:
                return -1
            if self.exact is not None:
                raise InvalidInput("polynomial vanishes at the root")
            self.bisect()

    def approx(self) -> float:
        lo, hi = self.enclosure()
        return float((lo + hi) / 2)

    def __repr__(self):
        lo, hi = self.enclosure()
        return f"RealRoot(in [{lo}, {hi}])"


def isolate_real_roots(p):
    """Isolate the real roots of squarefree ``p``, sorted ascending."""
    p = poly(p)
    if not is_squarefree(p):
        raise ContractViolation("root isolation expects a squarefree polynomial")
    if degree(p) < 1:
        return []
    ivs = to_sympy(p).intervals()
    roots = [RealRoot(p, as_fraction(a), as_fraction(b)) for (a, b), _ in ivs]
    roots.sort(key=lambda r: r.enclosure()[0])
    # make the enclosures pairwise disjoint so later containment tests are unambiguous
    for r, s in zip(roots, roots[1:]):
        while r.enclosure()[1] >= s.enclosure()[0]:
            r.bisect()
            s.bisect()
    return roots
