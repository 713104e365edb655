"""Node factors, Jacobian classes, the arithmetic count and Welschinger numbers.

A rational nodal curve over its field of definition ``k(q)`` carries nodes
``p`` with residue fields ``k(p) = k(q)[y]/(f_p)`` and tangent data
``alpha_p`` in ``k(p)``.  Each node contributes the rank-one class
``Phi_p = 1 + N_{k(p)/k(q)}(<-2> - <2 alpha_p>)``; the invariants used here:

* disc: ``(-1)^d N(alpha_p)`` with ``d = [k(p):k(q)]``;
* signature at a real place ``tau`` of ``k(q)``: ``1 + prod c_v`` over the
  places ``v | tau`` of ``k(p)``, with ``c_v = -2`` when ``v`` is real and
  ``alpha_p > 0`` there and ``c_v = 0`` otherwise.

Examples
========

>>> Q = NumberField.rationals()
>>> node = NodeData(Q, [[0], [1]], [1])
>>> phi_p(node)
GWClassOverL([0, 1], rank=1, sign=[-1], disc_rep=['-1'])
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .errors import DegenerateClass, InvalidInput, InvalidSystem, NoRealPlace
from .exactalg import NFElement, NumberField, absolute_field, embedding_signs, solve
from .gwring import (GWClass, GWClassOverL, gw_from_diagonal, hyperbolic, reduce_mod_delta_g,
                     trace_transfer_closed_form)


def torus_class(alpha) -> GWClass:
    """Class of the twisted torus: ``H - (<2> + <2 alpha>)``."""
    from .exactalg import as_fraction
    alpha = as_fraction(alpha)
    if alpha == 0:
        raise DegenerateClass("alpha must be nonzero")
    return hyperbolic(1) - gw_from_diagonal([2, 2 * alpha])


class NodeData:
    """A node: base field, relative residue polynomial, tangent datum.

    ``alpha`` may be an element of the absolute residue field, a list of
    base-field coordinate lists (coefficients of ``1, y, ...``), or a flat
    coordinate list when that is unambiguous (base Q, or ``k(p) = k(q)``).
    """

    def __init__(self, base: NumberField, rel_poly, alpha):
        self.base = base
        self.tower = absolute_field(base, rel_poly)
        self.degree = self.tower.rel_degree
        self.alpha = self._alpha_in_tower(alpha)
        if self.alpha.is_zero():
            raise DegenerateClass("alpha_p must be nonzero")

    def _alpha_in_tower(self, alpha):
        T = self.tower
        if isinstance(alpha, NFElement):
            if alpha.field == T.field:
                return alpha
            return T.embed(alpha)
        alpha = list(alpha)
        nested = any(isinstance(a, (list, tuple)) for a in alpha)
        if nested:
            return T.embed(alpha)
        if self.degree == 1:
            return T.embed_base(alpha)
        if self.base.degree == 1:
            return T.embed([[a] for a in alpha])
        raise InvalidInput("alpha over a non-trivial tower must be given as nested coordinates")

    @property
    def residue_field(self) -> NumberField:
        return self.tower.field

    def relative_norm(self) -> NFElement:
        """``N_{k(p)/k(q)}(alpha)`` as an element of the base.

        Determinant over the base of multiplication by ``alpha`` on the basis
        ``1, y, ..., y^(d-1)``; coordinates come from solving in ``K``.
        """
        T, L, d = self.tower, self.base, self.degree
        if d == 1:
            return _pull_back(T, self.alpha)
        cols = []
        ypow = T.field.one
        for _ in range(d):
            cols.append(_coords_over_base(T, self.alpha * ypow))
            ypow = ypow * T.y
        M = [[cols[j][i] for j in range(d)] for i in range(d)]
        return _det_over(L, M)

    def places(self, tau: int):
        """``(real signs of alpha above tau, number of complex places above tau)``."""
        real, ncomplex = self.tower.places_over[tau]
        signs = embedding_signs(self.tower.field, self.alpha)
        return [signs[i] for i in real], ncomplex


def _pull_back(T, el):
    # el lies in the image of the base (degree-1 tower): read its base coordinates
    return _coords_over_base(T, el)[0]


def _coords_over_base(T, el):
    """Coordinates of ``el`` in ``K`` on the base-basis ``1, y, ..., y^(d-1)``."""
    L, d, n = T.base, T.rel_degree, T.base.degree
    K = T.field
    basis = []
    ypow = K.one
    for _ in range(d):
        tpow = K.one
        for _ in range(n):
            basis.append((tpow * ypow).coords)
            tpow = tpow * T.theta
        ypow = ypow * T.y
    A = [[basis[j][i] for j in range(n * d)] for i in range(n * d)]
    x = solve(A, el.coords)
    return [L(x[j * n:(j + 1) * n]) for j in range(d)]


def _det_over(L, M):
    """Determinant of a matrix with entries in ``L`` (Gaussian elimination)."""
    M = [row[:] for row in M]
    n = len(M)
    out = L.one
    for k in range(n):
        piv = next((i for i in range(k, n) if not M[i][k].is_zero()), None)
        if piv is None:
            return L.zero
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            out = -out
        out = out * M[k][k]
        inv = M[k][k].inverse()
        for i in range(k + 1, n):
            if not M[i][k].is_zero():
                f = M[i][k] * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[k])]
    return out


def phi_p(node: NodeData) -> GWClassOverL:
    """Rank-one node factor over the base field."""
    L, d = node.base, node.degree
    sign = []
    for tau in range(L.real_embedding_count):
        real_signs, ncomplex = node.places(tau)
        prod = 0 if ncomplex else 1
        for s in real_signs:
            prod *= -2 if s > 0 else 0
        sign.append(1 + prod)
    disc = node.relative_norm() * (-1) ** d
    return GWClassOverL(L, 1, sign, disc)


@dataclass
class RationalCurveData:
    residue_field: NumberField
    nodes: list = dfield(default_factory=list)

    def __post_init__(self):
        for node in self.nodes:
            if node.base != self.residue_field:
                raise InvalidSystem("node is not defined over the curve's residue field")

    @property
    def arithmetic_genus(self) -> int:
        return sum(node.degree for node in self.nodes)


@dataclass
class LinearSystemData:
    genus: int
    curves: list = dfield(default_factory=list)

    def __post_init__(self):
        if self.genus < 1:
            raise InvalidSystem("genus must be positive")
        for i, c in enumerate(self.curves):
            if c.arithmetic_genus != self.genus:
                raise InvalidSystem(
                    f"curve {i} has node degree sum {c.arithmetic_genus}, expected genus {self.genus}")


def jacobian_class(curve: RationalCurveData) -> GWClassOverL:
    out = GWClassOverL.one(curve.residue_field)
    for node in curve.nodes:
        out = out * phi_p(node)
    return out


def disc_jacobian_closed_form(curve: RationalCurveData) -> NFElement:
    """``(-1)^n prod N(alpha_p)``, ``n`` the arithmetic genus."""
    L = curve.residue_field
    out = L.one * (-1) ** curve.arithmetic_genus
    for node in curve.nodes:
        out = out * node.relative_norm()
    return out


@dataclass(frozen=True)
class BmotResult:
    b_mot: GWClass
    b_mot_mod_delta_g: GWClass
    welschinger: int

    def to_json(self):
        return {"b_mot": self.b_mot.to_json(),
                "b_mot_mod_delta_g": self.b_mot_mod_delta_g.to_json(),
                "welschinger": self.welschinger}


def b_mot(system: LinearSystemData) -> GWClass:
    """Sum over curves of the trace to Q of the Jacobian class."""
    total = GWClass.zero()
    for curve in system.curves:
        total = total + trace_transfer_closed_form(curve.residue_field, jacobian_class(curve))
    return total


def b_mot_report(system: LinearSystemData) -> BmotResult:
    b = b_mot(system)
    return BmotResult(b, reduce_mod_delta_g(b, system.genus), welschinger_total(system))


def welschinger_curve(curve: RationalCurveData, embedding: int = 0) -> int:
    """``(-1)^s`` at a real embedding, ``s`` = real node points with ``alpha < 0``."""
    L = curve.residue_field
    if not 0 <= embedding < L.real_embedding_count:
        raise NoRealPlace(f"residue field has no real embedding with index {embedding}")
    s = 0
    for node in curve.nodes:
        real_signs, _ = node.places(embedding)
        s += sum(1 for v in real_signs if v < 0)
    return (-1) ** s


def welschinger_total(system: LinearSystemData) -> int:
    """Sum of Welschinger numbers over all real curves of the system.

    Every real embedding of ``k(q)`` yields one real curve.
    """
    return sum(welschinger_curve(c, i)
               for c in system.curves
               for i in range(c.residue_field.real_embedding_count))
