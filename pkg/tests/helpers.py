"""Random generators and independent oracles shared by the test modules.

The oracles deliberately avoid the library code paths they check: series
are expanded term by term, Gauss sums are summed in complex floating point
over an explicitly enumerated field, and relative norms come from sympy
resultants.
"""

import cmath
import random
from fractions import Fraction

import numpy as np
import sympy
from sympy import Poly, Symbol, resultant

from gwcount.errors import NotIrreducible
from gwcount.exactalg import NumberField
from gwcount.localfactors import LinearSystemData, NodeData, RationalCurveData

ACCEPTANCE_LINES = []


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


# ------------------------------------------------------------------ series

def naive_product(factors, order):
    """Expand ``prod (1 + c t^m)^k`` by repeated truncated multiplication.

    ``factors`` is a list of ``(c, m, k)``; negative ``k`` uses the
    geometric series of ``1 + c t^m``.
    """
    out = [0] * (order + 1)
    out[0] = 1
    for c, m, k in factors:
        if k >= 0:
            base = [0] * (order + 1)
            base[0] = 1
            if m <= order:
                base[m] += c
            reps = k
        else:
            # (1 + c t^m)^-1 = sum (-c)^j t^(mj)
            base = [0] * (order + 1)
            for j in range(order // m + 1):
                base[m * j] = (-c) ** j
            reps = -k
        for _ in range(reps):
            new = [0] * (order + 1)
            for i, a in enumerate(out):
                if a:
                    for j, b in enumerate(base[: order + 1 - i]):
                        new[i + j] += a * b
            out = new
    return out


# ------------------------------------------------------------ finite fields

def gf_elements(p, modulus):
    """All nonzero elements of ``F_p[x]/(modulus)`` as powers of ``x``, by
    repeated multiplication with coefficient lists (low first)."""
    n = len(modulus) - 1
    cur = [1] + [0] * (n - 1)
    out = []
    for _ in range(p ** n - 1):
        out.append(tuple(cur))
        # multiply by x
        top = cur[-1]
        cur = [0] + cur[:-1]
        cur = [(c - top * modulus[i]) % p for i, c in enumerate(cur)]
    return out


def gf_mul(a, b, p, modulus):
    n = len(modulus) - 1
    prod = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n + 1):
                prod[k - n + i] = (prod[k - n + i] - c * modulus[i]) % p
    return prod[:n]


def gf_trace(a, p, modulus):
    """Trace as the sum of Frobenius conjugates ``a + a^p + ...``."""
    n = len(modulus) - 1
    total = [0] * n
    conj = list(a)
    for _ in range(n):
        total = [(s + c) % p for s, c in zip(total, conj)]
        power = [1] + [0] * (n - 1)
        for _ in range(p):
            power = gf_mul(power, conj, p, modulus)
        conj = power
    assert all(c == 0 for c in total[1:])
    return total[0]


def gauss_sum_float(p, modulus, order, exponent, c=1):
    """``-sum chi^-1(a) zeta_p^(c Tr a)`` with ``chi(x^k) = zeta_order^(exponent k)``."""
    elems = gf_elements(p, modulus)
    total = 0j
    for k, a in enumerate(elems):
        chi_inv = cmath.exp(-2j * cmath.pi * exponent * k / order)
        total += chi_inv * cmath.exp(2j * cmath.pi * c * gf_trace(a, p, modulus) / p)
    return -total


def cyc_to_complex(z):
    vec = z.group_ring()
    N = z.conductor
    return sum(int(c) * cmath.exp(2j * cmath.pi * e / N) for e, c in enumerate(vec) if c) / z.den


# ------------------------------------------------------------ number fields

def random_field(rng: random.Random, degree: int, bound: int = 3) -> NumberField:
    if degree == 1:
        return NumberField([rng.randint(-bound, bound), 1])
    x = Symbol("x")
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(degree)] + [1]
        if coeffs[0] == 0:
            continue
        if Poly(list(reversed(coeffs)), x).is_irreducible:
            return NumberField(coeffs)


def random_element(rng, L, bound=3, nonzero=True):
    while True:
        el = L([rng.randint(-bound, bound) for _ in range(L.degree)])
        if not (nonzero and el.is_zero()):
            return el


def random_node(rng, L, degree, bound=3):
    """Node over ``L`` with relative degree 1 or 2 and a random nonzero alpha."""
    n = L.degree
    while True:
        if degree == 1:
            rel = [[rng.randint(-bound, bound) for _ in range(n)], [1] + [0] * (n - 1)]
        else:
            rel = [[rng.randint(-bound, bound) for _ in range(n)],
                   [rng.randint(-1, 1) for _ in range(n)],
                   [1] + [0] * (n - 1)]
        alpha = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(degree)]
        if all(c == 0 for row in alpha for c in row):
            continue
        try:
            node = NodeData(L, rel, alpha)
        except NotIrreducible:
            continue
        return node, rel, alpha


def random_curve(rng, g, base_degree, max_node_degree=2):
    L = random_field(rng, base_degree)
    nodes = []
    left = g
    while left:
        d = rng.randint(1, min(max_node_degree, left))
        node, _, _ = random_node(rng, L, d)
        nodes.append(node)
        left -= d
    return RationalCurveData(L, nodes)


def random_system(rng, max_genus=4, max_curves=3):
    g = rng.randint(1, max_genus)
    curves = [random_curve(rng, g, rng.randint(1, 2)) for _ in range(rng.randint(0, max_curves))]
    return LinearSystemData(g, curves)


# --------------------------------------------------- relative-norm oracle

_T, _Y = Symbol("theta"), Symbol("y")


def relative_norm_oracle(L, rel, alpha):
    """``N_{L[y]/f / L}(alpha)`` as base coordinates, via a sympy resultant.

    ``rel`` and ``alpha`` are nested base-coordinate lists (low first).
    """
    def base_expr(coords):
        return sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * _T ** i
                   for i, c in enumerate(coords))
    f = sum(base_expr(c) * _Y ** j for j, c in enumerate(rel))
    a = sum(base_expr(c) * _Y ** j for j, c in enumerate(alpha))
    r = sympy.expand(resultant(f, a, _Y))
    m = sum(c * _T ** i for i, c in enumerate(L.coeffs()))
    rem = Poly(r, _T).rem(Poly(m, _T)) if L.degree > 1 else Poly(r.subs(_T, -L.coeffs()[0]), _T)
    coeffs = list(reversed(rem.all_coeffs()))
    coeffs += [0] * (L.degree - len(coeffs))
    return [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in coeffs]


def real_signs_oracle(L, rel, alpha):
    """Per real embedding of ``L`` (ascending), the signs of ``alpha`` at the
    real roots of the relative polynomial, computed in floating point."""
    thetas = sorted(r.real for r in np.roots(list(reversed(L.coeffs()))) if abs(r.imag) < 1e-9) \
        if L.degree > 1 else [float(-L.coeffs()[0])]
    out = []
    for th in thetas:
        ev = [sum(float(c) * th ** i for i, c in enumerate(coords)) for coords in rel]
        roots = np.roots(list(reversed(ev)))
        signs = []
        for y in roots:
            if abs(y.imag) < 1e-9:
                val = sum(sum(float(c) * th ** i for i, c in enumerate(coords)) * y.real ** j
                          for j, coords in enumerate(alpha))
                signs.append(1 if val > 0 else -1)
        out.append(signs)
    return out
