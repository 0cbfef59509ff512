"""Kummer-theoretic enumeration of degree-ell cyclic covers of P^1.

A cover is represented by a class beta * f_1 * f_2^2 * ... *
f_{ell-1}^{ell-1} modulo ell-th powers, with the f_i monic square-free
and pairwise coprime and beta a power of the fixed generator mu.  The
ell-1 powers of a class generate the same extension field; the
lexicographically smallest power is the canonical orbit representative.

This module enumerates all classes/orbits of a given conductor degree,
computes conductors, genera, point counts and zeta numerators, filters
by prescribed splitting behaviour, and builds exact point-count
distributions.  Enumeration can be sharded deterministically and cached
on disk (see the cache functions at the bottom).
"""

import hashlib
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction

from . import ffield, places
from .cyclotomic import frac_series_exp
from .ffield import BudgetError

POLY_ONE = (1,)

CANDIDATE_BUDGET = 10 ** 9


@dataclass(frozen=True, order=True)
class KummerClass:
    beta_exp: int
    factors: tuple  # ell-1 monic square-free pairwise-coprime polynomials

    def is_trivial(self):
        return self.beta_exp == 0 and all(f == POLY_ONE for f in self.factors)


@dataclass(frozen=True)
class Conductor:
    finite_support: tuple  # Places, sorted
    infinity_ramified: bool
    degree: int

    def disc_degree(self, ell):
        return (ell - 1) * self.degree


def validate_class(F, spec):
    if len(F.factors) != spec.ell - 1:
        raise ValueError("need ell-1 factors")
    prod = POLY_ONE
    for f in F.factors:
        if not ffield.poly_is_monic(f):
            raise ValueError("factors must be monic")
        if not ffield.is_squarefree(f, spec):
            raise ValueError("factors must be square-free")
        if ffield.poly_deg(ffield.poly_gcd(prod, f, spec)) != 0:
            raise ValueError("factors must be pairwise coprime")
        prod = ffield.poly_mul(prod, f, spec)
    if F.is_trivial():
        raise ValueError("trivial class")


def class_power(F, k, spec):
    """The k-th power of a class, rewritten in canonical Kummer form."""
    ell = spec.ell
    k %= ell
    if k == 0:
        raise ValueError("zeroth power is the trivial class")
    kinv = pow(k, -1, ell)
    new = tuple(F.factors[(j * kinv) % ell - 1] for j in range(1, ell))
    return KummerClass((F.beta_exp * k) % ell, new)


def class_orbit(F, spec):
    return [class_power(F, k, spec) for k in range(1, spec.ell)]


def canonical_class(F, spec):
    return min(class_orbit(F, spec))


def _degree_weight(F):
    return sum(i * ffield.poly_deg(f) for i, f in enumerate(F.factors, 1))


def conductor_of(F, spec):
    if F.is_trivial():
        raise ValueError("no conductor for trivial class")
    prod = POLY_ONE
    for f in F.factors:
        prod = ffield.poly_mul(prod, f, spec)
    _, fac = ffield.poly_factor(prod, spec)
    support = tuple(places.finite_place(v) for v, _ in fac)
    inf_ram = _degree_weight(F) % spec.ell != 0
    degree = sum(v.degree for v in support) + (1 if inf_ram else 0)
    return Conductor(support, inf_ram, degree)


def genus_of(F, spec):
    n = conductor_of(F, spec).degree
    num = (spec.ell - 1) * (n - 2)
    if num % 2:
        raise AssertionError("non-integral genus")
    return num // 2


# --- enumeration --------------------------------------------------------


def admissible_degree_tuples(n, spec):
    """All (d_1..d_{ell-1}, infinity_ramified) giving conductor degree n."""
    ell = spec.ell
    out = []
    for total, want_inf in ((n, False), (n - 1, True)):
        if total < 0 or (total == 0 and want_inf):
            continue
        if total == 0:
            continue  # empty finite support is the trivial-conductor case
        for dvec in _compositions(total, ell - 1):
            wt = sum(i * d for i, d in enumerate(dvec, 1)) % ell
            if (wt != 0) == want_inf:
                out.append((dvec, want_inf))
    out.sort()
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def candidate_estimate(n, spec):
    """Upper bound on the number of (beta, factor-tuple) candidates."""
    total = 0
    for dvec, _ in admissible_degree_tuples(n, spec):
        prod = spec.ell
        for d in dvec:
            prod *= spec.q ** d
        total += prod
    return total


def _check_budget(n, spec, force):
    est = candidate_estimate(n, spec)
    if est > CANDIDATE_BUDGET and not force:
        raise BudgetError(
            "enumeration budget exceeded: ~%d candidates (limit %d)"
            % (est, CANDIDATE_BUDGET)
        )


def _coprime_tuples(dvec, spec):
    """Monic square-free pairwise-coprime tuples with the given degrees."""

    def extend(i, prod, acc):
        if i == len(dvec):
            yield tuple(acc)
            return
        d = dvec[i]
        if d == 0:
            acc.append(POLY_ONE)
            yield from extend(i + 1, prod, acc)
            acc.pop()
            return
        for f in ffield.enumerate_monic_squarefree(d, spec):
            if ffield.poly_deg(ffield.poly_gcd(prod, f, spec)) != 0:
                continue
            acc.append(f)
            yield from extend(i + 1, ffield.poly_mul(prod, f, spec), acc)
            acc.pop()

    yield from extend(0, POLY_ONE, [])


def enumerate_classes(n, spec, shards=1, shard=0, force=False):
    """Every Kummer class of conductor degree n, each exactly once.

    Sharding is deterministic: work units are (degree tuple, first
    factor) pairs numbered consecutively; unit i goes to shard
    i mod shards.  The union over shards is the full stream.
    """
    if n < 1:
        raise ValueError("conductor degree must be >= 1")
    _check_budget(n, spec, force)
    ell = spec.ell
    unit = 0
    for dvec, _ in admissible_degree_tuples(n, spec):
        if dvec[0] == 0:
            firsts = [POLY_ONE]
        else:
            firsts = list(ffield.enumerate_monic_squarefree(dvec[0], spec))
        for f1 in firsts:
            mine = unit % shards == shard
            unit += 1
            if not mine:
                continue
            for rest in _coprime_tuples(dvec[1:], spec):
                bad = False
                for g in rest:
                    if (
                        ffield.poly_deg(g) > 0
                        and ffield.poly_deg(ffield.poly_gcd(f1, g, spec)) != 0
                    ):
                        bad = True
                        break
                if bad:
                    continue
                factors = (f1,) + rest
                for beta_exp in range(ell):
                    yield KummerClass(beta_exp, factors)


def enumerate_extensions(n, spec, shards=1, shard=0, force=False):
    """One canonical orbit representative per extension field.

    A class is emitted iff it is the smallest element of its power
    orbit, so the union over shards hits each field exactly once.
    """
    for F in enumerate_classes(n, spec, shards, shard, force):
        if spec.ell == 2 or canonical_class(F, spec) == F:
            yield F


def count_extensions(n, spec, shards=1, force=False):
    """(fields_count, characters_count) at conductor degree n."""
    total = 0
    for shard in range(shards):
        total += sum(1 for _ in enumerate_classes(n, spec, shards, shard, force))
    if total % (spec.ell - 1):
        raise AssertionError("class count not divisible by ell-1")
    return total // (spec.ell - 1), total


def count_tuples(dvec, spec):
    """Number of monic square-free pairwise-coprime tuples of given degrees."""
    if any(d < 0 for d in dvec):
        raise ValueError("degrees must be nonnegative")
    return sum(1 for _ in _coprime_tuples(tuple(dvec), spec))


# --- splitting and point counts -----------------------------------------


def rational_splitting_vector(F, spec):
    """Splitting kinds at the q+1 rational places, infinity first."""
    ell = spec.ell
    out = []
    if _degree_weight(F) % ell:
        out.append(places.RAMIFIED)
    else:
        out.append(places.SPLIT if F.beta_exp % ell == 0 else places.INERT)
    for a in range(spec.q):
        k = F.beta_exp % ell
        ram = False
        for i, f in enumerate(F.factors, 1):
            if ffield.poly_deg(f) == 0:
                continue
            val = ffield.poly_eval(f, a, spec)
            if val == 0:
                ram = True
                break
            k = (k + i * spec.log(val)) % ell
        if ram:
            out.append(places.RAMIFIED)
        else:
            out.append(places.SPLIT if k == 0 else places.INERT)
    return tuple(out)


def point_count(F, m, spec):
    """Number of points of the smooth cover over F_{q^m}."""
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    ell = spec.ell
    total = 0
    for v in places.places_up_to(m, spec):
        kind = places.splitting_type(F, v, spec)
        _, fv, rv = places.efr(kind, ell)
        if m % (fv * v.degree) == 0:
            total += rv * fv * v.degree
    return total


def rational_point_count(F, spec):
    """point_count over F_q itself, via the cheap rational-place vector."""
    vec = rational_splitting_vector(F, spec)
    return sum(
        spec.ell if k == places.SPLIT else (1 if k == places.RAMIFIED else 0)
        for k in vec
    )


ZETA_GENUS_BUDGET = 8


def zeta_numerator(F, spec):
    """Integer coefficients of the zeta-function numerator P(u).

    Z(u) = P(u) / ((1-u)(1-qu)) with deg P = 2g; the functional-equation
    symmetry a_{2g-i} = q^{g-i} a_i is asserted, not imposed.
    """
    g = genus_of(F, spec)
    if g > ZETA_GENUS_BUDGET:
        raise BudgetError("genus %d beyond zeta budget %d" % (g, ZETA_GENUS_BUDGET))
    if g == 0:
        return (1,)
    q = spec.q
    trunc = 2 * g
    logz = [Fraction(0)] * (trunc + 1)
    for m in range(1, trunc + 1):
        logz[m] = Fraction(point_count(F, m, spec), m)
    z = frac_series_exp(logz, trunc)
    # multiply by (1-u)(1-qu) = 1 - (q+1)u + qu^2
    coeffs = []
    for i in range(trunc + 1):
        c = z[i]
        if i >= 1:
            c -= (q + 1) * z[i - 1]
        if i >= 2:
            c += q * z[i - 2]
        if c.denominator != 1:
            raise AssertionError("zeta numerator not integral")
        coeffs.append(c.numerator)
    for i in range(trunc + 1):
        if coeffs[trunc - i] != q ** (g - i) * coeffs[i]:
            raise AssertionError("functional equation violated")
    return tuple(coeffs)


# --- conditioned counting ------------------------------------------------


def count_conditioned(n, v_ram, v_split, v_inert, spec, shards=1, force=False):
    """Counts at conductor degree n with prescribed splitting behaviour.

    v_ram, v_split, v_inert are disjoint collections of places; returns
    a dict with matching and total counts (fields and characters
    conventions) and the exact density ratio.
    """
    v_ram, v_split, v_inert = set(v_ram), set(v_split), set(v_inert)
    if v_ram & v_split or v_ram & v_inert or v_split & v_inert:
        raise ValueError("condition sets must be disjoint")
    conditions = (
        [(v, places.RAMIFIED) for v in v_ram]
        + [(v, places.SPLIT) for v in v_split]
        + [(v, places.INERT) for v in v_inert]
    )
    matching = 0
    total = 0
    for shard in range(shards):
        for F in enumerate_classes(n, spec, shards, shard, force):
            total += 1
            if all(places.splitting_type(F, v, spec) == k for v, k in conditions):
                matching += 1
    em1 = spec.ell - 1
    if matching % em1 or total % em1:
        raise AssertionError("class counts not divisible by ell-1")
    return {
        "fields": matching // em1,
        "characters": matching,
        "total_fields": total // em1,
        "total_characters": total,
        "density": Fraction(matching, total) if total else Fraction(0),
    }


# --- point-count distribution -------------------------------------------


def conductor_degree_for_genus(g, spec):
    num = 2 * g
    if num % (spec.ell - 1):
        raise ValueError("2g must be divisible by ell-1")
    return num // (spec.ell - 1) + 2


def point_distribution(g, spec, shards=1, force=False, records=None):
    """Exact frequency vector of #C(F_q) over all fields of genus g.

    Returns (frequencies, raw_counts) where frequencies[m] is the
    fraction of fields with m rational points, m = 0..ell(q+1).
    Precomputed cache records may be supplied instead of enumerating.
    """
    n = conductor_degree_for_genus(g, spec)
    size = spec.ell * (spec.q + 1) + 1
    counts = [0] * size
    if records is not None:
        for rec in records:
            counts[rec[3]] += 1
    else:
        for shard in range(shards):
            for F in enumerate_extensions(n, spec, shards, shard, force):
                counts[rational_point_count(F, spec)] += 1
    total = sum(counts)
    if total == 0:
        raise ValueError("no covers at genus %d" % g)
    freqs = [Fraction(c, total) for c in counts]
    return freqs, counts


# --- on-disk enumeration cache -------------------------------------------

CACHE_VERSION = 1


def _poly_str(f):
    return ",".join(str(c) for c in f)


def _poly_parse(s):
    return tuple(int(c) for c in s.split(","))


def cache_key(spec, n, cond_desc=""):
    h = hashlib.sha256(cond_desc.encode()).hexdigest()[:12]
    return "q%d_ell%d_n%d_%s.cache" % (spec.q, spec.ell, n, h)


def cache_path(cache_dir, spec, n, cond_desc=""):
    return os.path.join(cache_dir, cache_key(spec, n, cond_desc))


def orbit_record(F, spec, cond_degree=None):
    """(class, conductor degree, rational splitting vector, #C(F_q))."""
    if cond_degree is None:
        cond_degree = conductor_of(F, spec).degree
    vec = rational_splitting_vector(F, spec)
    pc = sum(
        spec.ell if k == places.SPLIT else (1 if k == places.RAMIFIED else 0)
        for k in vec
    )
    return (F, cond_degree, vec, pc)


_KIND_CODE = {places.RAMIFIED: "r", places.SPLIT: "s", places.INERT: "i"}
_CODE_KIND = {v: k for k, v in _KIND_CODE.items()}


def write_cache(path, spec, n, records, cond_desc=""):
    """Atomically write orbit records (temp file + rename)."""
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(
                "cycliccovers-cache %d q=%d ell=%d n=%d cond=%s\n"
                % (CACHE_VERSION, spec.q, spec.ell, n, cond_desc or "-")
            )
            for F, conddeg, vec, pc in records:
                fh.write(
                    "%d|%s|%d|%s|%d\n"
                    % (
                        F.beta_exp,
                        ";".join(_poly_str(f) for f in F.factors),
                        conddeg,
                        "".join(_KIND_CODE[k] for k in vec),
                        pc,
                    )
                )
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)


def read_cache(path, spec, n, cond_desc=""):
    """Records from a cache file, or None when absent/mismatched."""
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        header = fh.readline().split()
        want = [
            "cycliccovers-cache",
            str(CACHE_VERSION),
            "q=%d" % spec.q,
            "ell=%d" % spec.ell,
            "n=%d" % n,
            "cond=%s" % (cond_desc or "-"),
        ]
        if header != want:
            return None
        out = []
        for line in fh:
            beta, facs, conddeg, vec, pc = line.rstrip("\n").split("|")
            F = KummerClass(
                int(beta), tuple(_poly_parse(s) for s in facs.split(";"))
            )
            out.append(
                (F, int(conddeg), tuple(_CODE_KIND[c] for c in vec), int(pc))
            )
        return out


def load_or_enumerate_orbits(n, spec, cache_dir=None, shards=1, force=False):
    """Orbit records for conductor degree n, via the cache when possible."""
    path = cache_path(cache_dir, spec, n) if cache_dir else None
    if path:
        cached = read_cache(path, spec, n)
        if cached is not None:
            return cached
    records = []
    for shard in range(shards):
        for F in enumerate_extensions(n, spec, shards, shard, force):
            records.append(orbit_record(F, spec, cond_degree=n))
    if path:
        write_cache(path, spec, n, records)
    return records
