"""Number fields ``Q[x]/(m)`` and their elements.

Examples
========

>>> L = NumberField([-2, 0, 1])
>>> r2 = L.gen
>>> field_norm(L, r2), field_trace(L, r2)
(Fraction(-2, 1), Fraction(0, 1))
>>> embedding_signs(L, r2)
[-1, 1]
>>> field_disc(NumberField([-5, 0, 1]))
SquareClass(5)
"""

from __future__ import annotations

from fractions import Fraction
from itertools import count

from sympy import Poly, QQ, Symbol, factor_list, resultant

from ..errors import DegenerateClass, InvalidInput, NotInvertible, NotIrreducible
from . import polys as P
from .linalg import det, solve
from .rational import SquareClass, as_fraction, squarefree_reduce

MAX_DEGREE = 6


def _is_irreducible(p) -> bool:
    if P.degree(p) == 1:
        return True
    _, factors = factor_list(P.to_sympy(p).as_expr(), P._X, domain=QQ)
    return len(factors) == 1 and factors[0][1] == 1


class NumberField:
    """``Q(theta)`` with ``theta`` a root of a monic irreducible integer polynomial.

    ``min_poly`` is given lowest degree first.  Real embeddings are the real
    roots of ``min_poly`` sorted ascending; that order is part of every
    signature vector this package reports.
    """

    def __init__(self, min_poly):
        p = P.poly(min_poly)
        if len(p) < 2:
            raise InvalidInput("minimal polynomial must have degree at least 1")
        if p[-1] != 1 or any(a.denominator != 1 for a in p):
            raise InvalidInput("minimal polynomial must be monic with integer coefficients")
        if P.degree(p) > MAX_DEGREE:
            raise InvalidInput(f"degree {P.degree(p)} exceeds the cap {MAX_DEGREE}")
        if not _is_irreducible(p):
            raise NotIrreducible(f"{[int(a) for a in p]} is reducible over Q")
        self.min_poly = p
        self.degree = P.degree(p)
        self._roots = P.isolate_real_roots(p)
        self.real_embedding_count = len(self._roots)

    @classmethod
    def rationals(cls):
        return cls([0, 1])

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(("NumberField", self.min_poly))

    def __repr__(self):
        return f"NumberField({[int(a) for a in self.min_poly]})"

    def coeffs(self):
        return [int(a) for a in self.min_poly]

    def real_roots(self):
        return self._roots

    def element(self, coords) -> "NFElement":
        return NFElement(self, coords)

    def __call__(self, coords) -> "NFElement":
        if isinstance(coords, NFElement):
            if coords.field != self:
                raise InvalidInput("element belongs to a different field")
            return coords
        if isinstance(coords, (list, tuple)):
            return NFElement(self, coords)
        return NFElement(self, [coords])

    @property
    def one(self):
        return NFElement(self, [1])

    @property
    def zero(self):
        return NFElement(self, [])

    @property
    def gen(self):
        if self.degree == 1:
            return NFElement(self, [-self.min_poly[0]])
        return NFElement(self, [0, 1])

    def is_rational_field(self) -> bool:
        return self.degree == 1


class NFElement:
    """Element of a :class:`NumberField` in the power basis."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        p = P.pmod(P.poly(coords), field.min_poly)
        c = tuple(p) + (Fraction(0),) * (field.degree - len(p))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", c)

    def __setattr__(self, name, value):
        raise AttributeError("NFElement is immutable")

    def _poly(self):
        return P.poly(self.coords)

    def _lift(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise InvalidInput("elements of different fields")
            return other
        return NFElement(self.field, [as_fraction(other)])

    def __add__(self, other):
        other = self._lift(other)
        return NFElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return NFElement(self.field, P.pmul(self._poly(), other._poly()))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coords))

    def __repr__(self):
        return f"NFElement({[str(a) for a in self.coords]} mod {self.field.coeffs()})"

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def mult_matrix(self):
        """Matrix of ``x -> self*x``; column j holds the coordinates of ``self*theta^j``."""
        n = self.field.degree
        cols = []
        for j in range(n):
            basis = [0] * j + [1]
            cols.append((self * NFElement(self.field, basis)).coords)
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def inverse(self):
        if self.is_zero():
            raise NotInvertible("zero is not invertible")
        n = self.field.degree
        x = solve(self.mult_matrix(), [1] + [0] * (n - 1))
        return NFElement(self.field, x)

    def norm(self) -> Fraction:
        return det(self.mult_matrix())

    def trace(self) -> Fraction:
        M = self.mult_matrix()
        return sum((M[i][i] for i in range(len(M))), Fraction(0))


def field_norm(L: NumberField, beta) -> Fraction:
    """Determinant of multiplication by ``beta``."""
    return L(beta).norm()


def field_trace(L: NumberField, beta) -> Fraction:
    """Trace of multiplication by ``beta``."""
    return L(beta).trace()


def trace_form_gram(L: NumberField, beta=1):
    """Gram matrix of ``(x, y) -> Tr(beta*x*y)`` in the power basis."""
    beta = L(beta)
    n = L.degree
    powers = [L.one]
    for _ in range(2 * n - 2):
        powers.append(powers[-1] * L.gen)
    tr = [field_trace(L, beta * pw) for pw in powers]
    return [[tr[i + j] for j in range(n)] for i in range(n)]


def field_disc(L: NumberField) -> SquareClass:
    """Square class of the discriminant of the trace form."""
    return squarefree_reduce(det(trace_form_gram(L)))


def embedding_signs(L: NumberField, beta) -> list:
    """Sign of ``sigma(beta)`` for each real embedding, in ascending-root order."""
    beta = L(beta)
    if beta.is_zero():
        raise DegenerateClass("signs of zero are undefined")
    return [root.sign_of(beta._poly()) for root in L.real_roots()]


def real_root_count(p, interval=None) -> int:
    return P.real_root_count(p, interval)


# ---------------------------------------------------------------- towers

class Tower:
    """Absolute model of ``L[y]/(f)``.

    Attributes
    ----------
    field : NumberField
        The absolute field ``K``.
    theta, y : NFElement
        Images in ``K`` of the generator of ``L`` and of the root ``y`` of ``f``.
    base_of : list[int]
        For each real embedding of ``K`` the index of the real embedding of
        ``L`` below it.
    places_over : list[tuple[list[int], int]]
        For each real embedding of ``L``: the real embeddings of ``K`` above
        it and the number of complex places above it.
    """

    def __init__(self, base, rel, field, theta, y, base_of):
        self.base = base
        self.rel = rel
        self.rel_degree = len(rel) - 1
        self.field = field
        self.theta = theta
        self.y = y
        self.base_of = base_of
        self.places_over = []
        for s in range(base.real_embedding_count):
            real = [i for i, b in enumerate(base_of) if b == s]
            self.places_over.append((real, (self.rel_degree - len(real)) // 2))

    def embed(self, value) -> NFElement:
        """Image in ``K`` of an element of ``L[y]/(f)``.

        ``value`` is an element of ``L`` (NFElement) or a sequence of
        coefficients (each an element of ``L`` or a coordinate list) of
        ``1, y, y^2, ...``.
        """
        K = self.field
        if isinstance(value, NFElement):
            coeffs = [value]
        else:
            coeffs = list(value)
        out = K.zero
        ypow = K.one
        for c in coeffs:
            out = out + self.embed_base(c) * ypow
            ypow = ypow * self.y
        return out

    def embed_base(self, c) -> NFElement:
        c = _as_base_element(self.base, c)
        out = self.field.zero
        tpow = self.field.one
        for a in c.coords:
            out = out + tpow * a
            tpow = tpow * self.theta
        return out


def _as_base_element(L, c):
    if isinstance(c, NFElement):
        if c.field != L:
            raise InvalidInput("coefficient lies in a different field")
        return c
    if isinstance(c, (list, tuple)):
        return L(list(c))
    return L([c])


def _relative_poly(L, rel):
    coeffs = [_as_base_element(L, c) for c in rel]
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if len(coeffs) < 2:
        raise InvalidInput("relative polynomial must have degree at least 1")
    lead = coeffs[-1].inverse()
    return [c * lead for c in coeffs]


class _TowerAlgebra:
    # elements of L[y]/(f) as lists of d NFElements; f monic over L
    def __init__(self, f):
        self.f = f
        self.d = len(f) - 1
        self.L = f[0].field

    def mul(self, a, b):
        out = [self.L.zero] * (2 * self.d - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, z in enumerate(b):
                out[i + j] = out[i + j] + x * z
        for k in range(len(out) - 1, self.d - 1, -1):
            c = out[k]
            if not c.is_zero():
                for j in range(self.d + 1):
                    out[k - self.d + j] = out[k - self.d + j] - c * self.f[j]
        return out[: self.d]

    def flat(self, a):
        return [x for c in a for x in c.coords]


def _charpoly_resultant(L, f, k):
    T, Z = Symbol("T"), Symbol("Z")
    m = sum(QQ(a.numerator, a.denominator) * T ** i for i, a in enumerate(L.min_poly))
    F = 0
    for j, c in enumerate(f):
        cj = sum(QQ(a.numerator, a.denominator) * T ** i for i, a in enumerate(c.coords))
        F += cj * (Z - k * T) ** j
    R = Poly(resultant(m, F.expand(), T), Z, domain=QQ)
    return P.pmonic(P.from_sympy(R))


def _integral_scaling(R):
    # smallest-ish c with c^n R(z/c) integral: lcm of denominators works
    from math import lcm
    c = 1
    for a in R:
        c = lcm(c, a.denominator)
    n = len(R) - 1
    return c, P.poly([R[i] * Fraction(c) ** (n - i) for i in range(n + 1)])


def absolute_field(L: NumberField, rel_min_poly) -> Tower:
    """Flatten ``L[y]/(rel_min_poly)`` to a single number field.

    The primitive element is ``z = y + k*theta`` for the first ``k`` in
    ``0, 1, -1, 2, -2, ...`` making ``Res_theta(m(theta), f(z - k theta))``
    squarefree; that resultant then is the characteristic polynomial of
    ``z`` and is irreducible exactly when ``f`` is irreducible over ``L``.
    """
    f = _relative_poly(L, rel_min_poly)
    d = len(f) - 1
    n = L.degree
    if n * d > MAX_DEGREE:
        raise InvalidInput(f"absolute degree {n * d} exceeds the cap {MAX_DEGREE}")
    if d == 1:
        root = -f[0]
        base_of = list(range(L.real_embedding_count))
        return Tower(L, f, L, L.gen, root, base_of)

    for tries in count():
        k = (tries + 1) // 2 * (1 if tries % 2 else -1)
        R = _charpoly_resultant(L, f, k)
        if P.is_squarefree(R):
            break
        if tries > 4 * (n * d) ** 2:
            raise NotIrreducible("relative polynomial is not squarefree over the base")
    if not _is_irreducible(R):
        raise NotIrreducible("relative polynomial is reducible over the base field")
    c, Rint = _integral_scaling(R)
    K = NumberField([int(a) for a in Rint])

    # express theta through z in the tower algebra, then move to K where z = gen/c
    alg = _TowerAlgebra(f)
    z_el = [L.gen * k] + [L.one] + [L.zero] * (d - 2)
    zpows = [[L.one] + [L.zero] * (d - 1)]
    for _ in range(n * d - 1):
        zpows.append(alg.mul(zpows[-1], z_el))
    cols = [alg.flat(zp) for zp in zpows]
    A = [[cols[j][i] for j in range(n * d)] for i in range(n * d)]
    theta_el = [L.gen] + [L.zero] * (d - 1)
    h = solve(A, alg.flat(theta_el))
    zK = K.gen * Fraction(1, c)
    theta = K.zero
    zp = K.one
    for a in h:
        theta = theta + zp * a
        zp = zp * zK
    y = zK - theta * k
    base_of = _restrict_embeddings(K, theta, L)
    return Tower(L, f, K, theta, y, base_of)


def _restrict_embeddings(K, theta, L):
    # sigma(theta) = h(rho) lands in exactly one isolating interval of L
    if L.degree == 1:
        return [0] * K.real_embedding_count
    h = theta._poly()
    targets = [r.enclosure() for r in L.real_roots()]
    out = []
    for rho in K.real_roots():
        while True:
            lo, hi = rho.enclosure()
            a, b = P.interval_eval(h, lo, hi)
            hits = [i for i, (tl, th) in enumerate(targets) if tl <= a and b <= th]
            if len(hits) == 1:
                out.append(hits[0])
                break
            rho.bisect()
    return out
