"""Places, residue-symbol characters, reciprocity, and L-polynomials."""

import itertools

import pytest

from cycliccovers import covers, ffield, places
from cycliccovers.cyclotomic import cyc_zero


def test_place_ordering_and_infinity(q3):
    pls = places.places_up_to(2, q3)
    assert pls[0] is places.INFINITY
    assert pls[0].is_infinite() and pls[0].degree == 1
    degs = [v.degree for v in pls[1:]]
    assert degs == sorted(degs)
    assert len([v for v in pls if v.degree == 1]) == q3.q + 1


def test_count_places_of_degree(q3, q4):
    for spec in (q3, q4):
        for d in range(1, 5):
            want = len(ffield.irreducibles_of_degree(d, spec)) + (1 if d == 1 else 0)
            assert places.count_places_of_degree(d, spec) == want


def test_efr_product():
    for ell in (2, 3, 5):
        for kind in (places.RAMIFIED, places.SPLIT, places.INERT):
            e, f, r = places.efr(kind, ell)
            assert e * f * r == ell


def test_residue_symbol_multiplicative(q7):
    v = places.finite_place((3, 1))  # X + 3 over F_7
    polys = [(1, 1), (2, 1), (1, 0, 1), (5, 2, 1)]
    for f, g in itertools.product(polys, repeat=2):
        sf = places.residue_symbol(f, v, q7)
        sg = places.residue_symbol(g, v, q7)
        sfg = places.residue_symbol(ffield.poly_mul(f, g, q7), v, q7)
        assert sfg == places.char_mul(sf, sg, q7.ell)


def test_residue_symbol_detects_ell_th_powers(q3):
    # (f/v) = 0 iff f is a nonzero square in the residue field
    v = places.finite_place((1, 0, 1))  # X^2 + 1, irreducible over F_3
    f = (2, 1)
    sq = ffield.poly_mod(ffield.poly_mul(f, f, q3), v.poly, q3)
    assert places.residue_symbol(sq, v, q3) == 0
    assert places.residue_symbol(v.poly, v, q3) is None


def test_reciprocity_all_pairs_small_degree(q3, q7):
    """(a/b)(b/a)^-1 = (-1)^((q-1)/ell * deg a * deg b) on distinct places."""
    for spec in (q3, q7):
        w = places._minus_one_exponent(spec)
        pls = [v for v in places.places_up_to(3, spec) if not v.is_infinite()]
        for a, b in itertools.combinations(pls, 2):
            ab = places.residue_symbol(a.poly, b, spec)
            ba = places.residue_symbol(b.poly, a, spec)
            assert ab == (w * a.degree * b.degree + ba) % spec.ell


def test_chi_value_fast_matches_direct(q3, q7):
    for spec in (q3, q7):
        pls = [v for v in places.places_up_to(3, spec) if not v.is_infinite()]
        for v, v0 in itertools.permutations(pls, 2):
            assert places.chi_value_fast(v, v0, spec) == places.residue_symbol(
                v.poly, v0, spec
            )


def test_char_infinity(q3):
    assert places.char_infinity((1, 1), q3) is None  # odd degree ramifies
    assert places.char_infinity((1, 0, 1), q3) == 0  # monic even degree splits
    assert places.char_infinity((2, 0, 2), q3) == q3.log(2) % 2 == 1


def test_class_char_value_matches_symbols(q4):
    F = covers.KummerClass(1, ((0, 1), (1, 1)))  # mu * X * (X+1)^2
    for v in places.places_up_to(3, q4):
        got = places.class_char_value(F, v, q4)
        if v.is_infinite():
            # weight 1*1 + 2*1 = 3 = 0 mod 3: unramified, value beta_exp
            assert got == 1
            continue
        if v.poly in ((0, 1), (1, 1)):
            assert got is None
            continue
        want = (F.beta_exp * v.degree) % 3
        want = (want + places.residue_symbol((0, 1), v, q4)) % 3
        want = (want + 2 * places.residue_symbol((1, 1), v, q4)) % 3
        assert got == want


def test_splitting_type_trichotomy(q3):
    F = covers.KummerClass(0, ((0, 1),))  # y^2 = x, ramified at X and infinity
    assert places.splitting_type(F, places.finite_place((0, 1)), q3) == places.RAMIFIED
    assert places.splitting_type(F, places.INFINITY, q3) == places.RAMIFIED
    kinds = {
        places.splitting_type(F, v, q3)
        for v in places.places_up_to(2, q3)[1:]
    }
    assert places.SPLIT in kinds and places.INERT in kinds


def test_l_polynomial_vanishes_from_modulus_degree(q3, q7):
    """Nontrivial character sums over monic f of degree >= deg v are zero."""
    for spec in (q3, q7):
        pls = [v for v in places.places_up_to(3, spec) if not v.is_infinite()]
        for v in pls:
            for k in range(1, spec.ell):
                coeffs = places.l_polynomial(v, k, spec)  # asserts A(deg v) = 0
                assert len(coeffs) <= v.degree
                assert coeffs[0] != cyc_zero(spec.ell)


def test_l_polynomial_rejects_trivial_character(q3):
    v = places.finite_place((1, 1))
    with pytest.raises(ValueError):
        places.l_polynomial(v, 0, q3)
