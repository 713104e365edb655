"""Truncated power series over GW classes and the augmented ring.

The augmented ring ``E(M)`` has elements ``(a, m)`` with ``a`` an integer
and ``m`` in the character group ``M`` of pairs (square class, Tate twist):

    (a, m) + (b, n) = (a + b, m n)
    (a, m) * (b, n) = (a b, m^b n^a)

The generating series for a surface ``X`` with Euler number ``e``, real
Euler number ``eps`` and determinant character ``(kappa, -e)`` are
assembled from the classes of the symmetric powers ``X^(a)`` as

    sum_n chi(X^[n]) t^n = prod_{i >= 1} sum_{a >= 0} chi(X^(a)) L^(a(i-1)) t^(ia)

with ``L`` the Lefschetz class: ``<-1>`` in GW, ``(1, twist -1)`` in
``E(M)``.  On ranks this is ``prod (1 - t^m)^(-e)``.

Examples
========

>>> yz_rank_series(24, 4)
[1, 24, 324, 3200, 25650]
>>> sym_power_sign(2, 11, 2)
14
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import (InvalidInput, InvalidWeight, NotInvertible,
                     TwistMismatch)
from .exactalg import SquareClass, squarefree_reduce
from .gwring import GWClass

DEFAULT_ORDER = 12


# ------------------------------------------------------------ augmented ring

@dataclass(frozen=True)
class AugChar:
    """Character ``kappa (x) Q_l(twist)``; the group law is componentwise."""

    kappa: SquareClass
    twist: int

    def __init__(self, kappa=1, twist: int = 0):
        object.__setattr__(self, "kappa", kappa if isinstance(kappa, SquareClass) else squarefree_reduce(kappa))
        object.__setattr__(self, "twist", int(twist))

    def __mul__(self, other):
        return AugChar(self.kappa * other.kappa, self.twist + other.twist)

    def __pow__(self, k: int):
        return AugChar(self.kappa ** k, self.twist * k)

    def inverse(self):
        return AugChar(self.kappa, -self.twist)

    def is_trivial(self) -> bool:
        return self.kappa.is_trivial() and self.twist == 0

    def __repr__(self):
        return f"AugChar({self.kappa.rep}, {self.twist})"

    def to_json(self):
        return {"kappa": self.kappa.rep, "twist": self.twist}


@dataclass(frozen=True)
class AugClass:
    aug: int
    chr: AugChar

    def __init__(self, aug: int, chr: AugChar | None = None):
        object.__setattr__(self, "aug", int(aug))
        object.__setattr__(self, "chr", chr if chr is not None else AugChar())

    @classmethod
    def zero(cls):
        return cls(0)

    @classmethod
    def one(cls):
        return cls(1)

    def _coerce(self, other):
        if isinstance(other, AugClass):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return AugClass(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AugClass(self.aug + other.aug, self.chr * other.chr)

    __radd__ = __add__

    def __neg__(self):
        return AugClass(-self.aug, self.chr.inverse())

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
        return AugClass(self.aug * other.aug, self.chr ** other.aug * other.chr ** self.aug)

    __rmul__ = __mul__

    def __repr__(self):
        return f"AugClass({self.aug}, {self.chr!r})"

    def to_json(self):
        return {"aug": self.aug, **self.chr.to_json()}


def aug_disc(c: AugClass) -> SquareClass:
    """Discriminant read off an augmented class: ``kappa * (-1)^twist``.

    This is the one place where the factor ``(-1)^w`` of the determinant of
    cohomology is turned into the square class of ``Q(sqrt(-1))``.
    """
    return c.chr.kappa * SquareClass(-1) ** c.chr.twist


# ---------------------------------------------------------------- series

@dataclass(frozen=True)
class Ring:
    name: str
    zero: object
    one: object


INT = Ring("int", 0, 1)
GW = Ring("gw", GWClass.zero(), GWClass.one())
AUG = Ring("aug", AugClass.zero(), AugClass.one())


class Series:
    """Power series truncated after ``t^order``."""

    ring = INT

    def __init__(self, coeffs, order: int | None = None, ring: Ring | None = None):
        coeffs = list(coeffs)
        if ring is not None:
            self.ring = ring
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise InvalidInput("order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs += [self.ring.zero] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    def _like(self, coeffs):
        return type(self)(coeffs, self.order, self.ring)

    def _check(self, other):
        if not isinstance(other, Series) or other.ring != self.ring:
            raise InvalidInput("series over different coefficient rings")
        if other.order != self.order:
            raise InvalidInput(f"truncation orders differ ({self.order} vs {other.order})")

    def __getitem__(self, g):
        return self.coeffs[g]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Series) and self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __add__(self, other):
        self._check(other)
        return self._like([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return self._like([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        return series_mul(self, other)

    def __pow__(self, k: int):
        return series_pow(self, k)

    def to_json(self):
        enc = (lambda c: c) if self.ring is INT else (lambda c: c.to_json())
        return {"order": self.order, "coeffs": [enc(c) for c in self.coeffs]}


class GWSeries(Series):
    ring = GW


class AugSeries(Series):
    ring = AUG


def monomial_series(c, m: int, order: int, ring: Ring = INT, cls=Series):
    """``1 + c t^m`` truncated at ``order``."""
    coeffs = [ring.one] + [ring.zero] * order
    if m <= order:
        coeffs[m] = coeffs[m] + c
    return cls(coeffs, order, ring)


def series_mul(A: Series, B: Series) -> Series:
    """Cauchy product truncated at the common order."""
    A._check(B)
    zero = A.ring.zero
    a, b = A.coeffs, B.coeffs
    out = []
    for n in range(A.order + 1):
        acc = zero
        for k in range(n + 1):
            acc = acc + a[k] * b[n - k]
        out.append(acc)
    return A._like(out)


def series_inverse(A: Series) -> Series:
    """Inverse of a series whose constant term is the identity."""
    if A.coeffs[0] != A.ring.one:
        raise NotInvertible("constant coefficient is not the multiplicative identity")
    a = A.coeffs
    zero = A.ring.zero
    b = [A.ring.one]
    for n in range(1, A.order + 1):
        acc = zero
        for k in range(1, n + 1):
            acc = acc + a[k] * b[n - k]
        b.append(-acc)
    return A._like(b)


def series_pow(A: Series, k: int) -> Series:
    if k < 0:
        return series_pow(series_inverse(A), -k)
    out = A._like([A.ring.one])
    base = A
    while k:
        if k & 1:
            out = series_mul(out, base)
        base = series_mul(base, base)
        k >>= 1
    return out


# ------------------------------------------------ symmetric power invariants

def total_weight(e: int, n: int) -> int:
    """``e n / 2`` for a variety of dimension ``n`` and Euler number ``e``."""
    if (e * n) % 2:
        raise InvalidWeight(f"e*n = {e * n} is odd")
    return e * n // 2


def disc_from_kappa(e: int, n: int, kappa) -> SquareClass:
    """``(-1)^(e n/2) kappa`` for even dimension ``n``."""
    if n % 2:
        raise InvalidInput("dimension must be even")
    kappa = kappa if isinstance(kappa, SquareClass) else squarefree_reduce(kappa)
    return SquareClass(-1) ** ((n // 2) * e) * kappa


def _multichoose(n: int, k: int) -> int:
    # coefficient of u^k in (1-u)^(-n), n >= 0
    if k == 0:
        return 1
    return comb(n + k - 1, k)


def sym_power_rank(e: int, m: int) -> int:
    """``C(e + m - 1, m)``, the Euler number of the m-th symmetric power."""
    if m < 0:
        raise InvalidInput("m must be non-negative")
    return _multichoose(e, m) if e >= 0 else _signed_multichoose(e, m)


def _signed_multichoose(e, m):
    # (1-u)^(-e) with e negative: binomial series
    return (-1) ** m * comb(-e, m)


def sym_power_sign(a: int, b: int, m: int, negative: bool = False) -> int:
    """Signature of ``X^(m)`` for ``|eps(X)| = a`` and ``b = (e - a)/2`` pairs.

    ``sum_j C(a+m-2j-1, m-2j) C(b+j-1, j)``, times ``(-1)^m`` if ``eps < 0``.
    """
    if b < 0 or a < 0:
        raise InvalidInput("a and b must be non-negative")
    total = sum(_multichoose(a, m - 2 * j) * _multichoose(b, j) for j in range(m // 2 + 1))
    return (-1) ** m * total if negative else total


def det_sym_power(det: AugChar, e: int, m: int) -> AugChar:
    """``det^C(m + e - 1, m - 1)``."""
    if m < 1:
        raise InvalidInput("m must be positive")
    return det ** comb(m + e - 1, m - 1)


# -------------------------------------------------------- generating series

def yz_rank_series(e: int, order: int = DEFAULT_ORDER) -> list:
    """Coefficients of ``prod_{m>=1} (1 - t^m)^(-e)`` via the Euler transform.

    ``n a_n = e sum_{k=1}^n sigma(k) a_{n-k}``.
    """
    if order < 0:
        raise InvalidInput("order must be non-negative")
    sigma = [0] * (order + 1)
    for d in range(1, order + 1):
        for k in range(d, order + 1, d):
            sigma[k] += d
    a = [1]
    for n in range(1, order + 1):
        s = sum(sigma[k] * a[n - k] for k in range(1, n + 1))
        a.append(e * s // n)
    return a


def _int_product(factors, order):
    out = Series([1], order)
    for base, exponent in factors:
        if exponent:
            out = out * series_pow(base, exponent)
    return out


def _one_minus(sign: int, m: int, order: int) -> Series:
    # 1 + sign * t^m
    return monomial_series(sign, m, order)


def real_goettsche_series(a: int, b: int, order: int = DEFAULT_ORDER) -> list:
    """Coefficients of ``prod_i (1 - (-t)^i)^a * prod_j (1 - t^(2j))^b``."""
    factors = [(_one_minus(-(-1) ** i, i, order), a) for i in range(1, order + 1)]
    factors += [(_one_minus(-1, 2 * j, order), b) for j in range(1, order // 2 + 1)]
    return list(_int_product(factors, order).coeffs)


def yz_real_series(a: int, e: int, order: int = DEFAULT_ORDER) -> list:
    """Coefficients of ``prod_i (1 + t^i)^a * prod_j (1 - t^(2j))^b``, ``b = e - a/2``."""
    if a % 2:
        raise InvalidInput("a must be even so that b = e - a/2 is an integer")
    b = e - a // 2
    factors = [(_one_minus(1, i, order), a) for i in range(1, order + 1)]
    factors += [(_one_minus(-1, 2 * j, order), b) for j in range(1, order // 2 + 1)]
    return list(_int_product(factors, order).coeffs)


def welschinger_series(eps: int, e: int, order: int = DEFAULT_ORDER) -> list:
    """Welschinger counts ``(-1)^g sign(B_g)`` in closed form.

    ``prod_i (1 - t^i)^eps * prod_i (1 - t^(2i))^(-(e + eps)/2)``; this is the
    signature channel of :func:`yz_full_series` after ``t -> -t``.
    """
    if (e - eps) % 2:
        raise InvalidInput("e and eps must have the same parity")
    factors = [(_one_minus(-1, i, order), eps) for i in range(1, order + 1)]
    factors += [(_one_minus(-1, 2 * i, order), -(e + eps) // 2) for i in range(1, order // 2 + 1)]
    return list(_int_product(factors, order).coeffs)


def det_series(det: AugChar, e: int, order: int = DEFAULT_ORDER) -> AugSeries:
    """``prod_{m>=1} (1 - (1, det) t^m)^(-e)`` over the augmented ring."""
    out = AugSeries([AugClass.one()], order)
    x = AugClass(1, det)
    for m in range(1, order + 1):
        f = monomial_series(-x, m, order, AUG, AugSeries)
        out = out * series_pow(f, -e)
    return out


@dataclass(frozen=True)
class YZSeries:
    """All channels of the Yau-Zaslow series up to ``order``."""

    gw: GWSeries
    aug: AugSeries
    e: int
    eps: int
    kappa: SquareClass

    @property
    def order(self):
        return self.gw.order

    def rank_channel(self):
        return [c.rank for c in self.gw.coeffs]

    def sign_channel(self):
        return [c.sign for c in self.gw.coeffs]

    def disc_channel(self):
        return [c.disc for c in self.gw.coeffs]

    def to_json(self):
        return {"e": self.e, "eps": self.eps, "kappa": self.kappa.rep, "order": self.order,
                "rank": self.rank_channel(), "sign": self.sign_channel(),
                "disc": [d.rep for d in self.disc_channel()],
                "gw": self.gw.to_json(), "aug": self.aug.to_json()}


def symmetric_power_classes(e: int, eps: int, kappa, order: int):
    """``(chi^GW(X^(m)), chi^aug(X^(m)))`` for ``m = 0..order``."""
    a = abs(eps)
    if (e - a) % 2 or e < a:
        raise InvalidInput("need |eps| <= e with e - eps even")
    b = (e - a) // 2
    det_x = AugChar(kappa, -e)
    gw = [GWClass.one()]
    aug = [AugClass.one()]
    for m in range(1, order + 1):
        w = sym_power_rank(e, m)
        c = AugClass(w, det_sym_power(det_x, e, m))
        s = sym_power_sign(a, b, m, negative=eps < 0)
        gw.append(GWClass(w, s, aug_disc(c)))
        aug.append(c)
    return gw, aug


LEFSCHETZ_GW = GWClass(1, -1, -1)
LEFSCHETZ_AUG = AugClass(1, AugChar(1, -1))


def _assemble(classes, lefschetz, ring, cls, order):
    out = cls([ring.one], order, ring)
    for i in range(1, order + 1):
        coeffs = [ring.zero] * (order + 1)
        lpow = ring.one
        step = ring.one
        for _ in range(i - 1):
            step = step * lefschetz
        for a in range(order // i + 1):
            coeffs[i * a] = classes[a] * lpow
            lpow = lpow * step
        out = out * cls(coeffs, order, ring)
    return out


def yz_full_series(e: int, eps: int, kappa, order: int = DEFAULT_ORDER) -> YZSeries:
    """GW- and augmented-ring-valued series for ``(e, eps, kappa)``.

    ``kappa`` is the character part of ``det(X) = (kappa, -e)``; the
    discriminant of ``X`` itself is ``(-1)^e kappa``.
    """
    if order < 0:
        raise InvalidInput("order must be non-negative")
    kappa = kappa if isinstance(kappa, SquareClass) else squarefree_reduce(kappa)
    gw_cl, aug_cl = symmetric_power_classes(e, eps, kappa, order)
    gw = _assemble(gw_cl, LEFSCHETZ_GW, GW, GWSeries, order)
    aug = _assemble(aug_cl, LEFSCHETZ_AUG, AUG, AugSeries, order)
    for g, (x, y) in enumerate(zip(gw.coeffs, aug.coeffs)):
        if x.rank != y.aug or x.disc != aug_disc(y):
            raise TwistMismatch(f"GW and augmented channels disagree at t^{g}")
    return YZSeries(gw, aug, e, eps, kappa)


@dataclass(frozen=True)
class YZ5Coefficient:
    r: int
    D: SquareClass
    twist: int

    def to_json(self):
        return {"r": self.r, "D": self.D.rep, "twist": self.twist}


def yz5_coefficient(g: int, series: AugSeries) -> YZ5Coefficient:
    """Split coefficient ``g`` as ``(r_g, D_g Q_l(-g r_g))``.

    Raises :class:`TwistMismatch` when the twist is not ``-g r_g``.
    """
    if not 0 <= g <= series.order:
        raise InvalidInput(f"g = {g} outside 0..{series.order}")
    c = series.coeffs[g]
    if c.chr.twist != -g * c.aug:
        raise TwistMismatch(f"twist {c.chr.twist} at t^{g}, expected {-g * c.aug}")
    return YZ5Coefficient(c.aug, c.chr.kappa, c.chr.twist)


__all__ = [
    "AugChar", "AugClass", "aug_disc", "Series", "GWSeries", "AugSeries", "Ring", "INT", "GW",
    "AUG", "series_mul", "series_inverse", "series_pow", "monomial_series", "total_weight",
    "disc_from_kappa", "sym_power_rank", "sym_power_sign", "det_sym_power", "yz_rank_series",
    "real_goettsche_series", "yz_real_series", "welschinger_series", "det_series",
    "yz_full_series", "YZSeries", "symmetric_power_classes", "yz5_coefficient", "YZ5Coefficient",
    "LEFSCHETZ_GW", "LEFSCHETZ_AUG", "DEFAULT_ORDER",
]
