"""Exact arithmetic in F_q (q = p^e) and in the polynomial ring F_q[X].

Field elements are integers in [0, q).  For e > 1 the integer encodes the
coefficient vector of an F_p[T]-residue base p: the element
c_0 + c_1*T + ... + c_{e-1}*T^{e-1} is stored as c_0 + c_1*p + ... and
arithmetic happens modulo a fixed monic irreducible of degree e over F_p
(the lexicographically smallest one, so every run constructs the same
field).  Multiplication goes through discrete-log tables built once at
construction time.

Polynomials over F_q are tuples of field elements in ascending degree
order with no trailing zeros; () is the zero polynomial.

Everything here is deliberately desk scale: dense tables, trial-division
factorization, exhaustive enumeration.  The table budget caps q at 2^16.
"""

from __future__ import annotations

import itertools

MAX_Q = 1 << 16


class FieldError(ValueError):
    """Invalid field parameters (non-prime p or ell, or q != 1 mod ell)."""


class BudgetError(RuntimeError):
    """A computation exceeds the configured desk-scale budget."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# --- F_p[T] helpers used only to construct extension fields ------------

def _fp_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _fp_mod(f, m, p):
    f = list(f)
    dm = len(m) - 1
    while len(f) - 1 >= dm and f:
        lead = f[-1]
        shift = len(f) - 1 - dm
        for i, mi in enumerate(m):
            f[shift + i] = (f[shift + i] - lead * mi) % p
        while f and f[-1] == 0:
            f.pop()
    return tuple(f)


def _fp_irreducible(f, p, irreducibles_below):
    # trial division by all lower-degree monic irreducibles
    for g in irreducibles_below:
        if 2 * (len(g) - 1) > 2 * (len(f) - 1):
            break
        if not _fp_mod(f, g, p):
            return False
    return True


def _smallest_fp_modulus(p: int, e: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree e over F_p."""
    irr = []
    for d in range(1, e):
        for low in itertools.product(range(p), repeat=d):
            g = tuple(reversed(low)) + (1,)
            if _fp_irreducible(g, p, [h for h in irr if 2 * (len(h) - 1) <= d]):
                irr.append(g)
    for low in itertools.product(range(p), repeat=e):
        f = tuple(reversed(low)) + (1,)
        if _fp_irreducible(f, p, [h for h in irr if 2 * (len(h) - 1) <= e]):
            return f
    raise AssertionError("no irreducible modulus found")


class FieldSpec:
    """Immutable description of F_q with q = p^e = 1 (mod ell), ell prime.

    Carries the fixed multiplicative generator mu (smallest under the
    coordinate-lexicographic element order), the primitive ell-th root of
    unity b_ell = mu^((q-1)/ell), and dense exp/log tables base mu.
    Safe to share across threads; all operations are pure.
    """

    __slots__ = ("p", "e", "q", "ell", "modulus", "mu", "b_ell",
                 "exp_table", "log_table", "_irr_cache")

    def __init__(self, p: int, e: int, ell: int):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if not is_prime(ell):
            raise FieldError(f"ell = {ell} is not prime")
        if e < 1:
            raise FieldError(f"extension degree {e} must be >= 1")
        q = p ** e
        if q > MAX_Q:
            raise BudgetError(f"field too large: q = {q} exceeds table budget {MAX_Q}")
        if q % ell != 1:
            raise FieldError(f"q = {q} is not 1 mod ell = {ell}")
        self.p = p
        self.e = e
        self.q = q
        self.ell = ell
        self.modulus = (0, 1) if e == 1 else _smallest_fp_modulus(p, e)
        self._build_tables()
        self.b_ell = self.exp_table[(q - 1) // ell]
        self._irr_cache = {}

    # raw element arithmetic, table-free (used to bootstrap the tables)
    def _digits(self, a):
        p, e = self.p, self.e
        out = []
        for _ in range(e):
            out.append(a % p)
            a //= p
        return out

    def _encode(self, digits):
        a = 0
        for d in reversed(digits):
            a = a * self.p + d
        return a

    def _raw_mul(self, a, b):
        p, e = self.p, self.e
        if e == 1:
            return a * b % p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _fp_mod(prod, self.modulus, p)
        return self._encode(list(rem) + [0] * (e - len(rem)))

    def _element_order(self, a):
        n, x = 1, a
        while x != 1:
            x = self._raw_mul(x, a)
            n += 1
        return n

    def _build_tables(self):
        q = self.q
        for a in range(1, q):
            if self._element_order(a) == q - 1:
                self.mu = a
                break
        exp = [1] * (q - 1)
        log = [0] * q  # log[0] is never read
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self._raw_mul(x, self.mu)
        self.exp_table = exp
        self.log_table = log

    # --- public element operations ---
    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        p = self.p
        return self._encode([-x % p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self.exp_table[-self.log_table[a] % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self.exp_table[self.log_table[a] * k % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of 0")
        return self.log_table[a]

    def __repr__(self):
        return f"FieldSpec(p={self.p}, e={self.e}, ell={self.ell})"


def make_field(p: int, e: int, ell: int) -> FieldSpec:
    """Construct F_{p^e} with the standing hypothesis q = 1 (mod ell)."""
    return FieldSpec(p, e, ell)


def multiplicative_generator(spec: FieldSpec) -> int:
    return spec.mu


def is_ell_power(a: int, spec: FieldSpec) -> bool:
    """True iff a lies in (F_q^x)^ell; rejects a = 0."""
    if a == 0:
        raise ValueError("0 is neither an ell-th power nor a non-power")
    return spec.log(a) % spec.ell == 0


# --- polynomials over F_q ----------------------------------------------

def poly_trim(coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_deg(f) -> int:
    """Degree with the convention deg 0 = -1."""
    return len(f) - 1


def poly_is_monic(f) -> bool:
    return bool(f) and f[-1] == 1


def poly_add(f, g, spec):
    n = max(len(f), len(g))
    return poly_trim([spec.add(f[i] if i < len(f) else 0,
                               g[i] if i < len(g) else 0) for i in range(n)])


def poly_sub(f, g, spec):
    n = max(len(f), len(g))
    return poly_trim([spec.sub(f[i] if i < len(f) else 0,
                               g[i] if i < len(g) else 0) for i in range(n)])


def poly_mul(f, g, spec):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                if y:
                    out[i + j] = spec.add(out[i + j], spec.mul(x, y))
    return poly_trim(out)


def poly_scale(f, c, spec):
    if c == 0:
        return ()
    return tuple(spec.mul(x, c) for x in f)


def poly_divmod(f, g, spec):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv_lead = spec.inv(g[-1])
    quo = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        c = spec.mul(f[-1], inv_lead)
        shift = len(f) - 1 - dg
        quo[shift] = c
        for i, gi in enumerate(g):
            f[shift + i] = spec.sub(f[shift + i], spec.mul(c, gi))
        while f and f[-1] == 0:
            f.pop()
    return poly_trim(quo), poly_trim(f)


def poly_mod(f, g, spec):
    return poly_divmod(f, g, spec)[1]


def poly_gcd(f, g, spec):
    """Monic gcd."""
    while g:
        f, g = g, poly_mod(f, g, spec)
    if f and f[-1] != 1:
        f = poly_scale(f, spec.inv(f[-1]), spec)
    return f


def poly_deriv(f, spec):
    # formal derivative; the factor i lives in the prime field
    out = []
    for i in range(1, len(f)):
        out.append(_scalar_mul(f[i], i, spec))
    return poly_trim(out)


def _scalar_mul(a, k, spec):
    # a * k with k a small nonnegative integer
    out = 0
    for _ in range(k % spec.p):
        out = spec.add(out, a)
    return out


def poly_eval(f, x, spec):
    acc = 0
    for c in reversed(f):
        acc = spec.add(spec.mul(acc, x), c)
    return acc


def poly_pow_mod(f, k, m, spec):
    result = (1,)
    f = poly_mod(f, m, spec)
    while k:
        if k & 1:
            result = poly_mod(poly_mul(result, f, spec), m, spec)
        f = poly_mod(poly_mul(f, f, spec), m, spec)
        k >>= 1
    return result


def monic(f, spec):
    if not f:
        return f
    if f[-1] == 1:
        return f
    return poly_scale(f, spec.inv(f[-1]), spec)


def poly_sort_key(f):
    """(degree, coefficients highest-first): the canonical deterministic order."""
    return (len(f) - 1, tuple(reversed(f)))


def enumerate_monic(d: int, spec: FieldSpec):
    """All monic polynomials of degree d, lexicographic (highest coefficient first)."""
    if d == 0:
        yield (1,)
        return
    for high_to_low in itertools.product(range(spec.q), repeat=d):
        yield tuple(reversed(high_to_low)) + (1,)


def is_squarefree(f, spec) -> bool:
    if not f:
        raise ValueError("zero polynomial")
    fp = poly_deriv(f, spec)
    if not fp:
        # f is an (inseparable) p-th power unless it is constant
        return len(f) == 1
    return len(poly_gcd(f, fp, spec)) == 1


def enumerate_monic_squarefree(d: int, spec: FieldSpec):
    """Monic square-free polynomials of degree d, in enumeration order.

    Count is 1 for d = 0, q for d = 1 and q^d - q^(d-1) for d >= 2.
    """
    for f in enumerate_monic(d, spec):
        if d <= 1 or is_squarefree(f, spec):
            yield f


def irreducibles_of_degree(d: int, spec: FieldSpec):
    """Sorted tuple of monic irreducibles of degree d (cached on the spec)."""
    cached = spec._irr_cache.get(d)
    if cached is not None:
        return cached
    if d == 1:
        out = tuple(enumerate_monic(1, spec))
    else:
        lower = []
        for dd in range(1, d // 2 + 1):
            lower.extend(irreducibles_of_degree(dd, spec))
        out = tuple(f for f in enumerate_monic(d, spec)
                    if not any(not poly_mod(f, g, spec) for g in lower))
    spec._irr_cache[d] = out
    return out


def poly_factor(f, spec):
    """Factor f as (unit, [(monic irreducible, multiplicity), ...]).

    Factors come out in (degree, lexicographic) order; the unit times the
    product of factors reconstructs f exactly.  Trial division only --
    fine for the degrees this package ever sees.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    unit = f[-1]
    rest = monic(f, spec)
    factors = []
    d = 1
    while len(rest) - 1 >= 1:
        if 2 * d > len(rest) - 1:
            factors.append((rest, 1))
            break
        for g in irreducibles_of_degree(d, spec):
            mult = 0
            while True:
                quo, rem = poly_divmod(rest, g, spec)
                if rem:
                    break
                rest = quo
                mult += 1
            if mult:
                factors.append((g, mult))
            if 2 * d > len(rest) - 1:
                break
        d += 1
    factors.sort(key=lambda fm: poly_sort_key(fm[0]))
    return unit, factors
