import random
from itertools import product
from fractions import Fraction

import pytest
from sympy import QQ, Poly, Symbol, factor_list

from gwcount.elliptick3 import (GOOD, KodairaType, WeierstrassFamily, classify_fibers,
                                classify_weierstrass, discriminant_poly, full_discriminant,
                                genericity_check, k3_report, kodaira_from_valuations, saito_table,
                                total_saito_factor, weierstrass_discriminant)
from gwcount.errors import InvalidInput, InvalidValuations, NotGeneric
from gwcount.exactalg import SquareClass
from gwcount.exactalg import polys as P

t = Symbol("t")


def random_family(rng, generic=True):
    while True:
        a1 = rng.choice([x for x in range(-4, 5) if x])
        b1 = rng.choice([x for x in range(-4, 5) if x])
        b3 = rng.choice([x for x in range(-4, 5) if x])
        b2 = rng.randint(-4, 4)
        fam = WeierstrassFamily(a1, b1, b2, b3)
        if not generic or genericity_check(fam).ok:
            return fam


def sympy_delta(fam):
    alpha = fam.alpha1 * t + 1
    beta = fam.beta1 * t ** 2 + fam.beta2 * t + fam.beta3
    return Poly(-16 * (4 * t ** 9 * alpha ** 3 + 27 * t ** 10 * beta ** 2), t)


def test_discriminant_poly_example():
    p = discriminant_poly(WeierstrassFamily(0, 1, 0, 1))
    assert p == P.poly([4, 27, 0, 54, 0, 27])


def test_constant_term_is_four():
    rng = random.Random(1)
    for _ in range(10):
        assert discriminant_poly(random_family(rng, generic=False))[0] == 4


def test_beta_rejected():
    with pytest.raises(InvalidInput):
        WeierstrassFamily(1, 1, 0, 0)
    with pytest.raises(InvalidInput):
        WeierstrassFamily(0, 0, 0, 0)


def test_full_discriminant_expansion():
    rng = random.Random(2)
    for _ in range(20):
        fam = random_family(rng, generic=False)
        fd = full_discriminant(fam)
        expected = [Fraction(int(c)) for c in reversed(sympy_delta(fam).all_coeffs())]
        assert list(fd.expand()) == expected
        assert fd.expand() == weierstrass_discriminant(fam.A(), fam.B())
        assert (fd.constant, fd.t_power) == (-16, 9)


def test_kodaira_examples():
    assert kodaira_from_valuations(3, 5, 9).symbol == "III*"
    assert kodaira_from_valuations(4, 5, 10).symbol == "II*"
    for v in range(1, 6):
        assert kodaira_from_valuations(0, 0, v) == KodairaType("I", v)


def test_kodaira_full_table():
    table = {(1, 1, 2): "II", (1, 2, 3): "III", (2, 2, 4): "IV", (2, 3, 6): "I0*",
             (2, 3, 9): "I3*", (3, 4, 8): "IV*", (3, 5, 9): "III*", (5, 5, 10): "II*",
             (3, 3, 6): "I0*", (0, 1, 0): "I0", (2, 7, 6): "I0*"}
    for vals, sym in table.items():
        assert kodaira_from_valuations(*vals).symbol == sym


def test_kodaira_minimal_reduction():
    assert kodaira_from_valuations(4, 6, 13) == KodairaType("I", 1)
    assert kodaira_from_valuations(4, 6, 12) == GOOD


def test_kodaira_inconsistent():
    with pytest.raises(InvalidValuations):
        kodaira_from_valuations(1, 1, 3)
    with pytest.raises(InvalidValuations):
        kodaira_from_valuations(0, 0, -1)


def test_saito_table():
    assert saito_table(KodairaType("III*")) == SquareClass(-2)
    assert saito_table(KodairaType("II*")) == SquareClass(-1)
    assert saito_table(KodairaType("I", 5)) == SquareClass(1)
    assert saito_table(KodairaType("I*", 2)) == SquareClass(2)


def test_total_saito_of_all_multiplicative():
    assert total_saito_factor([KodairaType("I", v) for v in (1, 2, 5)]) == SquareClass(1)


def test_classify_generic_families():
    rng = random.Random(3)
    for _ in range(10):
        fam = random_family(rng)
        fibers = classify_fibers(fam)
        assert fibers[0].location == "t=0" and fibers[0].kodaira.symbol == "III*"
        assert fibers[1].location == "t=inf" and fibers[1].kodaira.symbol == "II*"
        assert all(f.kodaira.base == "I" for f in fibers[2:])
        assert total_saito_factor(fam) == SquareClass(2)
        # v(Delta) sums to 24 over P^1
        assert sum(f.valuations[2] * (len(f.location["min_poly"]) - 1 if isinstance(f.location, dict) else 1)
                   for f in fibers) == 24


def test_five_i1_fibres_for_squarefree_p():
    # squarefree p of degree 5: the remaining fibres are I1 over five geometric points
    fam = WeierstrassFamily(1, 1, 1, 1)
    fibers = classify_fibers(fam)[2:]
    assert all(f.kodaira == KodairaType("I", 1) for f in fibers)
    assert sum(len(f.location["min_poly"]) - 1 for f in fibers) == 5


def test_multiplicities_match_factorization():
    rng = random.Random(4)
    for _ in range(10):
        fam = random_family(rng)
        p = P.to_sympy(discriminant_poly(fam))
        mult = {}
        for fac, e in factor_list(p.as_expr(), p.gens[0], domain=QQ)[1]:
            m = Poly(fac, p.gens[0]).monic()
            mult[tuple(Fraction(int(c.p), int(c.q)) for c in reversed(m.all_coeffs()))] = e
        for f in classify_fibers(fam)[2:]:
            key = tuple(f.location["min_poly"])
            assert f.kodaira == KodairaType("I", mult[key])


def test_genericity():
    rep = genericity_check(1, 1, 1, 1)
    p = discriminant_poly(WeierstrassFamily(1, 1, 1, 1))
    assert rep.ok == (P.peval(p, -1) != 0)
    assert "alpha1 != 0" in genericity_check(0, 1, 0, 1).failed
    assert "beta3 != 0" in genericity_check(1, 1, 0, 0).failed


def test_nongeneric_root_condition():
    found = next(WeierstrassFamily(a1, b1, b2, b3)
                 for a1, b1, b2, b3 in product(range(1, 6), range(-6, 7), range(-6, 7), range(-6, 7))
                 if b1 and b3 and P.peval(discriminant_poly(WeierstrassFamily(a1, b1, b2, b3)),
                                          Fraction(-1, a1)) == 0)
    assert "p(-1/alpha1) != 0" in genericity_check(found).failed
    with pytest.raises(NotGeneric):
        classify_fibers(found)


def test_generic_weierstrass_classifier():
    # A = t^4, B = t^2: valuations (4, 2, 4) at t = 0
    fibers = classify_weierstrass([0, 0, 0, 0, 1], [0, 0, 1])
    assert fibers[0].location == "t=0" and fibers[0].kodaira.symbol == "IV"


def test_report_shape():
    rep = k3_report(WeierstrassFamily(1, 1, 1, 1))
    assert rep["total_saito"] == 2 and rep["nontrivial"] is True
    assert rep["fibers"][0]["kodaira"] == "III*"
