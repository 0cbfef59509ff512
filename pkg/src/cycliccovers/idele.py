"""Independent cover-counting pipeline via local value assignments.

A cover corresponds to a choice of finite support (the ramified
places, possibly including infinity), a nonzero value r_v in Z/ell for
each support place, and a free value psi_infty in Z/ell, subject to
the global compatibility sum(r_v * deg v) = 0 in Z/ell.  Splitting of
an unramified place is decided by an explicit linear criterion in the
local data, evaluated through discrete logarithms in residue fields.

Nothing here reuses the Kummer enumeration; agreement between the two
pipelines is the cross-check the covers module is validated against.
"""

import itertools
from dataclasses import dataclass

from . import covers, ffield, places
from .ffield import BudgetError

RESIDUE_TABLE_BUDGET = 600_000


def _factorize(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            if not out or out[-1] != d:
                out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _residue_elements(v, spec):
    if v.is_infinite():
        raise ValueError("finite place required")
    order = spec.q ** v.degree
    if order > RESIDUE_TABLE_BUDGET:
        raise BudgetError("residue field of size %d beyond table budget" % order)
    out = []
    for d in range(v.degree):
        for f in ffield.enumerate_monic(d, spec):
            for lead in range(1, spec.q):
                out.append(ffield.poly_scale(f, lead, spec))
    out.sort(key=ffield.poly_sort_key)
    return out


def residue_generator(v, spec):
    """Smallest generator g of (F_q[X]/v)^* with g^((Nv-1)/(q-1)) = mu."""
    order = spec.q ** v.degree - 1
    primes = _factorize(order)
    target = (spec.mu,)
    k = order // (spec.q - 1)
    for g in _residue_elements(v, spec):
        if any(
            ffield.poly_pow_mod(g, order // p, v.poly, spec) == (1,)
            for p in primes
        ):
            continue
        if ffield.poly_pow_mod(g, k, v.poly, spec) == target:
            return g
    raise AssertionError("no compatible generator found")


def dlog_table(v, spec):
    """Map residue -> exponent base the compatible generator at v."""
    g = residue_generator(v, spec)
    order = spec.q ** v.degree - 1
    table = {}
    cur = (1,)
    for e in range(order):
        table[cur] = e
        cur = ffield.poly_mod(ffield.poly_mul(cur, g, spec), v.poly, spec)
    return table


@dataclass(frozen=True)
class IdeleMap:
    support: tuple  # Places, sorted, possibly including infinity
    values: tuple  # r_v in 1..ell-1, aligned with support
    psi_infty: int


def enumerate_maps(n, spec, max_support_degree=None):
    """All maps whose support has total degree n (infinity counts 1)."""
    if n < 1:
        raise ValueError("need conductor degree >= 1")
    ell = spec.ell
    pls = places.places_up_to(n if max_support_degree is None else n, spec)

    def supports(i, remaining, acc):
        if remaining == 0:
            yield tuple(acc)
            return
        for k in range(i, len(pls)):
            if pls[k].degree > remaining:
                continue
            acc.append(pls[k])
            yield from supports(k + 1, remaining - pls[k].degree, acc)
            acc.pop()

    for support in supports(0, n, []):
        degs = [v.degree for v in support]
        for values in itertools.product(range(1, ell), repeat=len(support)):
            if sum(r * d for r, d in zip(values, degs)) % ell:
                continue
            for psi in range(ell):
                yield IdeleMap(support, values, psi)


def map_char_value(m, v0, spec, tables=None):
    """Character exponent of the map's cover at v0 (None when ramified)."""
    ell = spec.ell
    if v0 in m.support:
        return None
    if v0.is_infinite():
        return (-m.psi_infty) % ell
    total = (-v0.degree * m.psi_infty) % ell
    for v, r in zip(m.support, m.values):
        if v.is_infinite():
            continue
        if tables is not None and v in tables:
            table = tables[v]
        else:
            table = dlog_table(v, spec)
            if tables is not None:
                tables[v] = table
        n_v = table[ffield.poly_mod(v0.poly, v.poly, spec)]
        total = (total + n_v * r) % ell
    return total


def map_splitting_type(m, v0, spec, tables=None):
    k = map_char_value(m, v0, spec, tables)
    if k is None:
        return places.RAMIFIED
    return places.SPLIT if k == 0 else places.INERT


def match_class(m, classes, spec, max_degree=3, tables=None):
    """The unique Kummer class whose character agrees with the map's.

    Agreement is tested at every finite place of degree <= max_degree;
    if that fails to single out one class the bound is raised.
    """
    if tables is None:
        tables = {}
    probe = [
        v for v in places.places_up_to(max_degree, spec) if not v.is_infinite()
    ]
    candidates = list(classes)
    for v in probe:
        want = map_char_value(m, v, spec, tables)
        candidates = [
            F
            for F in candidates
            if places.class_char_value(F, v, spec) == want
        ]
        if len(candidates) <= 1:
            break
    if len(candidates) == 1:
        return candidates[0]
    if len(candidates) > 1 and max_degree < 6:
        return match_class(m, candidates, spec, max_degree + 1, tables)
    raise AssertionError(
        "character matching left %d candidates" % len(candidates)
    )


def crosscheck_counts(n, v_ram, v_split, v_inert, spec, shards=1, force=False):
    """Both pipelines' conditioned counts plus an exact-match flag."""
    kummer = covers.count_conditioned(
        n, v_ram, v_split, v_inert, spec, shards=shards, force=force
    )
    conditions = (
        [(v, places.RAMIFIED) for v in v_ram]
        + [(v, places.SPLIT) for v in v_split]
        + [(v, places.INERT) for v in v_inert]
    )
    tables = {}
    total = 0
    matching = 0
    for m in enumerate_maps(n, spec):
        total += 1
        if all(
            map_splitting_type(m, v, spec, tables) == k for v, k in conditions
        ):
            matching += 1
    return {
        "kummer_characters": kummer["characters"],
        "kummer_total": kummer["total_characters"],
        "map_count": matching,
        "map_total": total,
        "match": matching == kummer["characters"]
        and total == kummer["total_characters"],
    }
