"""Exact arithmetic in Z[xi] for xi a primitive ell-th root of unity.

An element is a tuple of ell-1 integers, the coefficients of
1, xi, ..., xi^(ell-2).  The relation 1 + xi + ... + xi^(ell-1) = 0
eliminates xi^(ell-1).  For ell = 2 elements are plain integers wrapped
in a length-1 tuple, so everything degenerates to ordinary Z.

Truncated power series with these coefficients are lists of such
tuples; the list index is the exponent of u.  All arithmetic is exact.
"""

import math
from fractions import Fraction


def cyc_zero(ell):
    return (0,) * (ell - 1)


def cyc_one(ell):
    return (1,) + (0,) * (ell - 2)


def cyc_int(n, ell):
    """The ordinary integer n as a cyclotomic element."""
    return (n,) + (0,) * (ell - 2)


def cyc_root(k, ell):
    """xi^k, reduced to the standard basis."""
    k %= ell
    if k == ell - 1:
        return (-1,) * (ell - 1)
    out = [0] * (ell - 1)
    out[k] = 1
    return tuple(out)


def cyc_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def cyc_neg(a):
    return tuple(-x for x in a)


def cyc_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def cyc_scale(a, n):
    return tuple(x * n for x in a)


def cyc_mul(a, b):
    ell = len(a) + 1
    # accumulate by exponent mod ell, then eliminate xi^(ell-1)
    acc = [0] * ell
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                acc[(i + j) % ell] += x * y
    top = acc[ell - 1]
    return tuple(acc[i] - top for i in range(ell - 1))


def cyc_pow(a, n):
    ell = len(a) + 1
    out = cyc_one(ell)
    base = a
    while n:
        if n & 1:
            out = cyc_mul(out, base)
        base = cyc_mul(base, base)
        n >>= 1
    return out


def cyc_is_int(a):
    return all(x == 0 for x in a[1:])


def cyc_int_value(a):
    if not cyc_is_int(a):
        raise ValueError("not a rational integer: %r" % (a,))
    return a[0]


def cyc_divexact(a, n):
    """Divide by a nonzero integer, requiring exact divisibility."""
    out = []
    for x in a:
        q, r = divmod(x, n)
        if r:
            raise ValueError("inexact division of %r by %d" % (a, n))
        out.append(q)
    return tuple(out)


# --- truncated series -------------------------------------------------
#
# A series is a list of cyclotomic tuples, coefficients of u^0..u^N.
# All operations keep the truncation order of their first argument.


def ser_zero(trunc, ell):
    return [cyc_zero(ell)] * (trunc + 1)


def ser_one(trunc, ell):
    out = ser_zero(trunc, ell)
    out[0] = cyc_one(ell)
    return out


def ser_add(f, g):
    return [cyc_add(a, b) for a, b in zip(f, g)]


def ser_scale(f, c):
    """Multiply every coefficient by the cyclotomic element c."""
    return [cyc_mul(a, c) for a in f]


def ser_scale_int(f, n):
    return [cyc_scale(a, n) for a in f]


def ser_mul(f, g):
    trunc = len(f) - 1
    ell = len(f[0]) + 1
    out = ser_zero(trunc, ell)
    for i, a in enumerate(f):
        if all(x == 0 for x in a):
            continue
        for j in range(trunc + 1 - i):
            b = g[j] if j < len(g) else None
            if b is None:
                break
            if any(x for x in b):
                out[i + j] = cyc_add(out[i + j], cyc_mul(a, b))
    return out


def ser_mul_one_plus(f, c, d):
    """Multiply f by (1 + c*u^d) with c cyclotomic, in place-free form."""
    trunc = len(f) - 1
    out = list(f)
    for i in range(trunc, d - 1, -1):
        out[i] = cyc_add(out[i], cyc_mul(f[i - d], c))
    return out


def ser_pow_one_plus(c, d, m, trunc, ell):
    """(1 + c*u^d)^m truncated, via binomial coefficients.

    m may be very large (e.g. a count of places), which is why this is
    not done by repeated multiplication.
    """
    out = ser_zero(trunc, ell)
    ck = cyc_one(ell)
    k = 0
    while k * d <= trunc:
        coeff = math.comb(m, k)
        out[k * d] = cyc_scale(ck, coeff)
        ck = cyc_mul(ck, c)
        k += 1
    return out


def ser_coefficients_int(f):
    """The coefficients as plain integers; fails if any is irrational."""
    return [cyc_int_value(a) for a in f]


def frac_series_mul(f, g, trunc):
    """Product of two Fraction-coefficient series (plain lists)."""
    out = [Fraction(0)] * (trunc + 1)
    for i, a in enumerate(f[: trunc + 1]):
        if a:
            for j, b in enumerate(g[: trunc + 1 - i]):
                if b:
                    out[i + j] += a * b
    return out


def frac_series_exp(f, trunc):
    """exp of a Fraction series with zero constant term."""
    if f[0] != 0:
        raise ValueError("exp needs zero constant term")
    out = [Fraction(0)] * (trunc + 1)
    out[0] = Fraction(1)
    # out' = f' * out, solved coefficient by coefficient
    for n in range(1, trunc + 1):
        s = Fraction(0)
        for k in range(1, n + 1):
            if k < len(f) and f[k]:
                s += k * f[k] * out[n - k]
        out[n] = s / n
    return out
