"""The i.i.d. model for the number of rational points on a cover.

Each of the q+1 rational places contributes independently 0, 1 or ell
points with probabilities matching the asymptotic single-place
densities; the point count is modeled by the (q+1)-fold convolution.
All probabilities are exact rationals.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import places, series


@dataclass(frozen=True)
class RVSpec:
    """Distribution of the per-place contribution: support {0, 1, ell}."""

    p0: Fraction
    p1: Fraction
    p_ell: Fraction
    ell: int


def rv_distribution(spec):
    q, ell = spec.q, spec.ell
    p0 = Fraction((ell - 1) * q, ell * (q + ell - 1))
    p1 = Fraction(ell - 1, q + ell - 1)
    p_ell = Fraction(q, ell * (q + ell - 1))
    assert p0 + p1 + p_ell == 1
    assert p1 + ell * p_ell == 1
    return RVSpec(p0, p1, p_ell, ell)


def _rv_mass(rv):
    mass = [Fraction(0)] * (rv.ell + 1)
    mass[0] = rv.p0
    mass[1] += rv.p1
    mass[rv.ell] += rv.p_ell
    return mass


def convolve(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def sum_distribution(k, spec):
    """Exact mass function of the sum of k independent contributions."""
    if k < 0:
        raise ValueError("need k >= 0")
    rv = rv_distribution(spec)
    out = [Fraction(1)]
    step = _rv_mass(rv)
    for _ in range(k):
        out = convolve(out, step)
    return out


def model_point_distribution(spec):
    """Model distribution of #C(F_q): the (q+1)-fold convolution."""
    return sum_distribution(spec.q + 1, spec)


def mean(dist):
    return sum(m * p for m, p in enumerate(dist))


def compare_distributions(a, b):
    """Total-variation and sup distances plus both means, all exact."""
    size = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (size - len(a))
    b = list(b) + [Fraction(0)] * (size - len(b))
    diffs = [abs(x - y) for x, y in zip(a, b)]
    return {
        "tv": sum(diffs) / 2,
        "sup": max(diffs),
        "mean_a": mean(a),
        "mean_b": mean(b),
    }


def densities_match(spec):
    """The model probabilities equal the degree-1 local densities."""
    rv = rv_distribution(spec)
    v = places.Place(1, (0, 1))
    return (
        rv.p1 == series.local_density(v, places.RAMIFIED, spec)
        and rv.p_ell == series.local_density(v, places.SPLIT, spec)
        and rv.p0 == series.local_density(v, places.INERT, spec)
    )
