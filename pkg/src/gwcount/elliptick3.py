"""The elliptic K3 family ``y^2 = x^3 + t^3 alpha(t) x + t^5 beta(t)``.

``alpha(t) = alpha1 t + 1`` and ``beta(t) = beta1 t^2 + beta2 t + beta3``.
With ``A = t^3 alpha`` and ``B = t^5 beta`` the discriminant is

    Delta = -16 (4 A^3 + 27 B^2) = -16 t^9 p(t),

    p(t) = 27 b1^2 t^5 + 54 b1 b2 t^4 + (4 a1^3 + 27 b2^2 + 54 b1 b3) t^3
           + (12 a1^2 + 54 b2 b3) t^2 + (12 a1 + 27 b3^2) t + 4.

Fibres are classified from the valuations of ``(A, B, Delta)`` at each
place of ``P^1``; at infinity ``s = 1/t`` and the K3 weights ``(8, 12, 24)``.

Examples
========

>>> fam = WeierstrassFamily(1, 1, 1, 1)
>>> [f.kodaira.symbol for f in classify_fibers(fam)][:2]
['III*', 'II*']
>>> total_saito_factor(fam)
SquareClass(2)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ, factor_list

from .charsums import kappa_square_class
from .errors import InvalidInput, InvalidValuations, NotGeneric
from .exactalg import SquareClass, as_fraction, format_fraction
from .exactalg import polys as P

K3_WEIGHTS = (8, 12, 24)


@dataclass(frozen=True)
class KodairaType:
    """``base`` in {I0, I, I*, II, III, IV, II*, III*, IV*}; ``v`` for I_v and I_v*."""

    base: str
    v: int = 0

    def __post_init__(self):
        if self.base == "I" and self.v < 1:
            raise InvalidInput("I_v needs v >= 1")
        if self.base == "I*" and self.v < 0:
            raise InvalidInput("I_v* needs v >= 0")

    @property
    def symbol(self) -> str:
        if self.base == "I":
            return f"I{self.v}"
        if self.base == "I*":
            return f"I{self.v}*"
        return self.base

    def __str__(self):
        return self.symbol


GOOD = KodairaType("I0")


def kodaira_from_valuations(vA: int, vB: int, vDelta: int) -> KodairaType:
    """Kodaira type in residue characteristic 0 from ``(v(A), v(B), v(Delta))``."""
    if min(vA, vB, vDelta) < 0:
        raise InvalidValuations("valuations must be non-negative")
    m = min(3 * vA, 2 * vB)
    if (3 * vA != 2 * vB and vDelta != m) or (3 * vA == 2 * vB and vDelta < m):
        raise InvalidValuations(f"({vA}, {vB}, {vDelta}) is not attained by any Weierstrass model")
    while vA >= 4 and vB >= 6:
        vA, vB, vDelta = vA - 4, vB - 6, vDelta - 12
    if vDelta == 0:
        return GOOD
    if vA == 0 and vB == 0:
        return KodairaType("I", vDelta)
    if vA == 2 and vB == 3 and vDelta > 6:
        return KodairaType("I*", vDelta - 6)
    by_delta = {2: "II", 3: "III", 4: "IV", 6: "I*", 8: "IV*", 9: "III*", 10: "II*"}
    return KodairaType(by_delta[vDelta], 0)


SAITO = {"I0": 1, "I": 1, "IV": 1, "IV*": 1, "I*": 2, "III": 4, "III*": 4, "II": 6, "II*": 6}


def saito_table(t: KodairaType) -> SquareClass:
    """Saito factor of a fibre type as a square class."""
    d = SAITO[t.base]
    return SquareClass(1) if d == 1 else kappa_square_class(d)


# ------------------------------------------------------------------- family

@dataclass(frozen=True)
class WeierstrassFamily:
    alpha1: Fraction
    beta1: Fraction
    beta2: Fraction
    beta3: Fraction

    def __init__(self, alpha1, beta1, beta2, beta3):
        vals = [as_fraction(v) for v in (alpha1, beta1, beta2, beta3)]
        if vals[1] == 0 or vals[3] == 0:
            raise InvalidInput("beta1 and beta3 must be nonzero")
        for name, v in zip(("alpha1", "beta1", "beta2", "beta3"), vals):
            object.__setattr__(self, name, v)

    @classmethod
    def from_json(cls, obj):
        beta = obj["beta"]
        if len(beta) != 3:
            raise InvalidInput("beta needs three coefficients (beta1, beta2, beta3)")
        return cls(obj["alpha1"], *beta)

    def to_json(self):
        return {"alpha1": format_fraction(self.alpha1),
                "beta": [format_fraction(b) for b in (self.beta1, self.beta2, self.beta3)]}

    def alpha(self):
        return P.poly([1, self.alpha1])

    def beta(self):
        return P.poly([self.beta3, self.beta2, self.beta1])

    def A(self):
        return P.pmul(P.poly([0, 0, 0, 1]), self.alpha())

    def B(self):
        return P.pmul(P.poly([0, 0, 0, 0, 0, 1]), self.beta())


def discriminant_poly(fam: WeierstrassFamily) -> tuple:
    """``p_{alpha,beta}`` (low degree first)."""
    a1, b1, b2, b3 = fam.alpha1, fam.beta1, fam.beta2, fam.beta3
    return P.poly([4,
                   12 * a1 + 27 * b3 ** 2,
                   12 * a1 ** 2 + 54 * b2 * b3,
                   4 * a1 ** 3 + 27 * b2 ** 2 + 54 * b1 * b3,
                   54 * b1 * b2,
                   27 * b1 ** 2])


@dataclass(frozen=True)
class FullDiscriminant:
    constant: int
    t_power: int
    p: tuple

    def expand(self):
        return P.pscale(P.pmul(P.poly([0] * self.t_power + [1]), self.p), self.constant)


def full_discriminant(fam: WeierstrassFamily) -> FullDiscriminant:
    """``Delta = -16 t^9 p(t)`` in factored form."""
    return FullDiscriminant(-16, 9, discriminant_poly(fam))


def weierstrass_discriminant(A, B):
    """``-16 (4 A^3 + 27 B^2)``."""
    return P.pscale(P.padd(P.pscale(P.pmul(A, P.pmul(A, A)), 4), P.pscale(P.pmul(B, B), 27)), -16)


@dataclass(frozen=True)
class GenericityReport:
    ok: bool
    failed: tuple
    p_squarefree: bool

    def to_json(self):
        return {"ok": self.ok, "failed": list(self.failed), "p_squarefree": self.p_squarefree}


def genericity_check(alpha1, beta1=None, beta2=None, beta3=None) -> GenericityReport:
    """Check ``beta1 beta3 != 0``, ``alpha1 != 0`` and ``p(-1/alpha1) != 0``.

    Accepts a family or raw coefficients (so families violating the
    standing hypothesis can still be reported on).
    """
    if isinstance(alpha1, WeierstrassFamily):
        fam = alpha1
        a1, b1, b2, b3 = fam.alpha1, fam.beta1, fam.beta2, fam.beta3
    else:
        a1, b1, b2, b3 = (as_fraction(v) for v in (alpha1, beta1, beta2, beta3))
    failed = []
    if b1 == 0:
        failed.append("beta1 != 0")
    if b3 == 0:
        failed.append("beta3 != 0")
    if a1 == 0:
        failed.append("alpha1 != 0")
    p = discriminant_poly(_Raw(a1, b1, b2, b3))
    if a1 != 0 and P.peval(p, -1 / a1) == 0:
        failed.append("p(-1/alpha1) != 0")
    sqf = bool(p) and P.is_squarefree(p)
    return GenericityReport(not failed, tuple(failed), sqf)


@dataclass(frozen=True)
class _Raw:
    alpha1: Fraction
    beta1: Fraction
    beta2: Fraction
    beta3: Fraction


@dataclass(frozen=True)
class FiberReport:
    location: object  # "t=0", "t=inf" or {"min_poly": [...], "multiplicity": v}
    kodaira: KodairaType
    saito: SquareClass
    valuations: tuple

    def to_json(self):
        loc = self.location
        if isinstance(loc, dict):
            loc = {"min_poly": [format_fraction(a) for a in loc["min_poly"]],
                   "multiplicity": loc["multiplicity"]}
        return {"location": loc, "kodaira": self.kodaira.symbol, "saito": self.saito.rep,
                "valuations": list(self.valuations)}


def _valuation(f, pi):
    if not f:
        raise InvalidInput("valuation of the zero polynomial")
    v = 0
    while True:
        q, r = P.pdivmod(f, pi)
        if r:
            return v
        f, v = q, v + 1


def _factor_key(pi):
    return (len(pi), [ (a.numerator, a.denominator) for a in reversed(pi)])


def classify_weierstrass(A, B, weights=K3_WEIGHTS):
    """Bad fibres of ``y^2 = x^3 + A x + B`` over ``P^1_Q``.

    ``A`` and ``B`` are polynomials in ``t`` of degree at most ``weights[0]``
    and ``weights[1]``; the model at infinity is ``s^w A(1/s)``.
    """
    A, B = P.poly(A), P.poly(B)
    if not A or not B:
        raise InvalidInput("A and B must be nonzero")
    wA, wB, wD = weights
    if P.degree(A) > wA or P.degree(B) > wB:
        raise InvalidInput("degrees exceed the weights of the model")
    D = weierstrass_discriminant(A, B)
    if not D:
        raise InvalidInput("singular generic fibre")
    reports = []
    _, factors = factor_list(P.to_sympy(D).as_expr(), P._X, domain=QQ)
    finite = []
    for fac, _ in factors:
        pi = P.pmonic(P.from_sympy(fac.as_poly(P._X, domain=QQ)))
        finite.append(pi)
    finite.sort(key=_factor_key)
    for pi in finite:
        vals = (_valuation(A, pi), _valuation(B, pi), _valuation(D, pi))
        kt = kodaira_from_valuations(*vals)
        if pi == P.poly([0, 1]):
            loc = "t=0"
        else:
            loc = {"min_poly": list(pi), "multiplicity": vals[2]}
        reports.append(FiberReport(loc, kt, saito_table(kt), vals))
    vals_inf = (wA - P.degree(A), wB - P.degree(B), wD - P.degree(D))
    kt = kodaira_from_valuations(*vals_inf)
    if kt != GOOD:
        reports.append(FiberReport("t=inf", kt, saito_table(kt), vals_inf))
    # t=0 first, then infinity, then the remaining places
    reports.sort(key=lambda r: 0 if r.location == "t=0" else 1 if r.location == "t=inf" else 2)
    return reports


def classify_fibers(fam: WeierstrassFamily):
    """Fibre types at ``t = 0``, ``t = inf`` and the roots of ``p``."""
    rep = genericity_check(fam)
    if not rep.ok:
        raise NotGeneric(rep.failed)
    return classify_weierstrass(fam.A(), fam.B())


def total_saito_factor(fam) -> SquareClass:
    """Product of the Saito factors of all bad fibres.

    ``fam`` is a family, or an iterable of :class:`KodairaType` or
    :class:`FiberReport` entries.
    """
    items = classify_fibers(fam) if isinstance(fam, WeierstrassFamily) else fam
    out = SquareClass(1)
    for r in items:
        out = out * (r.saito if isinstance(r, FiberReport) else saito_table(r))
    return out


def k3_report(fam: WeierstrassFamily):
    fibers = classify_fibers(fam)
    total = total_saito_factor(fibers)
    return {"family": fam.to_json(), "fibers": [r.to_json() for r in fibers],
            "total_saito": total.rep, "nontrivial": not total.is_trivial(),
            "disc_chi_mot": total.rep,
            "p": [format_fraction(a) for a in discriminant_poly(fam)]}
