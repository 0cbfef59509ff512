"""Places of the rational function field F_q(X) and their characters.

A place is either a monic irreducible polynomial v(X) or the infinite
place (degree 1, uniformizer 1/X).  On top of places this module
provides the ell-th power residue symbol, the character convention at
infinity, the induced splitting classification of a place in a cyclic
cover, and finite Dirichlet L-polynomials.

Character values are never complex numbers: a value is either None
(the character vanishes, i.e. the place ramifies) or an exponent
k in Z/ell, standing for the k-th power of a fixed primitive ell-th
root of unity.
"""

from dataclasses import dataclass

from . import ffield
from .cyclotomic import cyc_add, cyc_root, cyc_zero

RAMIFIED = "ramified"
SPLIT = "split"
INERT = "inert"


def efr(kind, ell):
    """(ramification index, inertia degree, places above) with e*f*r = ell."""
    if kind == RAMIFIED:
        return (ell, 1, 1)
    if kind == SPLIT:
        return (1, 1, ell)
    if kind == INERT:
        return (1, ell, 1)
    raise ValueError("unknown splitting kind %r" % (kind,))


@dataclass(frozen=True, order=True)
class Place:
    """A place of F_q(X): poly is a monic irreducible, or None for infinity."""

    degree: int
    poly: tuple  # None for the infinite place

    def is_infinite(self):
        return self.poly is None

    def norm(self, spec):
        return spec.q ** self.degree


INFINITY = Place(1, None)


def finite_place(poly):
    return Place(ffield.poly_deg(poly), poly)


def places_up_to(D, spec):
    """Infinity first, then finite places by (degree, lexicographic) order."""
    out = [INFINITY]
    for d in range(1, D + 1):
        for v in ffield.irreducibles_of_degree(d, spec):
            out.append(Place(d, v))
    return out


def _moebius(n):
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def count_places_of_degree(d, spec):
    """Number of places of degree d; degree 1 counts infinity too."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if d == 1:
        return spec.q + 1
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += _moebius(e) * spec.q ** (d // e)
    return total // d


# --- character values --------------------------------------------------


def char_mul(a, b, ell):
    """Multiply two character values (None absorbs; exponents add)."""
    if a is None or b is None:
        return None
    return (a + b) % ell


def char_pow(a, k, ell):
    if a is None:
        return None
    return (a * k) % ell


def _root_exponent(c, spec):
    """Exponent k with c = b_ell^k, for c an ell-th root of unity in F_q."""
    step = (spec.q - 1) // spec.ell
    lg = spec.log(c)
    if lg % step:
        raise ValueError("element is not an ell-th root of unity")
    return (lg // step) % spec.ell


def residue_symbol(f, v, spec):
    """Exponent of (f/v)_ell, or None when v divides f."""
    if v.is_infinite():
        raise ValueError("residue symbol needs a finite place")
    r = ffield.poly_mod(f, v.poly, spec)
    if r == ():
        return None
    power = (spec.q ** v.degree - 1) // spec.ell
    s = ffield.poly_pow_mod(r, power, v.poly, spec)
    if ffield.poly_deg(s) != 0:
        raise AssertionError("residue symbol did not land in F_q")
    return _root_exponent(s[0], spec)


def constant_symbol(c, degree, spec):
    """Residue-symbol exponent of a nonzero constant at a degree-d place."""
    return (spec.log(c) * degree) % spec.ell


def char_infinity(f, spec):
    """Character value of f at the infinite place."""
    d = ffield.poly_deg(f)
    if d < 0:
        raise ValueError("zero polynomial")
    if d % spec.ell:
        return None
    return spec.log(f[-1]) % spec.ell


def chi_place(v, v0, spec):
    """Value at the place v of the character attached to the place v0.

    For finite v this is the residue symbol (v/v0); the infinite place
    evaluates to exponent 0 when ell | deg v0 and vanishes otherwise.
    """
    if v.is_infinite():
        return 0 if v0.degree % spec.ell == 0 else None
    return chi_value_fast(v, v0, spec)


def _minus_one_exponent(spec):
    # exponent w of the root of unity (-1)^((q-1)/ell)
    if spec.p == 2:
        return 0
    return ((spec.q - 1) // 2) % spec.ell


def chi_value_fast(v, v0, spec):
    """Residue symbol (v/v0) for distinct finite places, via reciprocity.

    Flips the roles so the modular exponentiation runs modulo the place
    of smaller degree; used heavily by the place-enumerated series path.
    """
    if v.poly == v0.poly:
        return None
    if v0.degree <= v.degree:
        return residue_symbol(v.poly, v0, spec)
    w = _minus_one_exponent(spec)
    flipped = residue_symbol(v0.poly, v, spec)
    return (w * v.degree * v0.degree + flipped) % spec.ell


def class_char_value(F, v, spec):
    """Character exponent of a Kummer class at an unramified place v.

    F carries beta_exp and the factor tuple (f_1, ..., f_{ell-1});
    returns None exactly when v ramifies.
    """
    ell = spec.ell
    if v.is_infinite():
        wt = sum(i * ffield.poly_deg(f) for i, f in enumerate(F.factors, 1))
        if wt % ell:
            return None
        return F.beta_exp % ell
    k = (F.beta_exp * v.degree) % ell
    for i, f in enumerate(F.factors, 1):
        if ffield.poly_deg(f) == 0:
            continue
        s = residue_symbol(f, v, spec)
        if s is None:
            return None
        k = (k + i * s) % ell
    return k


def splitting_type(F, v, spec):
    k = class_char_value(F, v, spec)
    if k is None:
        return RAMIFIED
    return SPLIT if k == 0 else INERT


# --- finite L-polynomials ---------------------------------------------


def l_polynomial(v, k, spec):
    """Coefficients A(n) = sum over monic f of degree n of chi(f).

    chi is the k-th power of the residue-symbol character at the finite
    place v, extended by zero.  The values are cyclotomic-integer
    tuples; A(n) vanishes for n >= deg v, which is asserted.
    """
    ell = spec.ell
    if k % ell == 0:
        raise ValueError("L-series of the trivial character is not a polynomial")
    m = v.degree
    out = []
    for n in range(m + 1):
        acc = cyc_zero(ell)
        for f in ffield.enumerate_monic(n, spec):
            s = residue_symbol(f, v, spec)
            if s is not None:
                acc = cyc_add(acc, cyc_root(s * k, ell))
        out.append(acc)
    if out[m] != cyc_zero(ell):
        raise AssertionError("L-polynomial fails to terminate at deg modulus")
    del out[m]
    while len(out) > 1 and out[-1] == cyc_zero(ell):
        out.pop()
    return out
