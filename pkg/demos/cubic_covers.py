"""Cubic covers over F_4: three pipelines and conditioned counting.

ell = 3 requires q = 1 mod 3, so the smallest field is F_4.  Covers
correspond to Kummer classes beta f_1 f_2^2 modulo cubes; each cover field
carries ell - 1 = 2 characters (the class and its square), so the class
count is twice the field count.  The same numbers come out of the
cyclotomic Euler-product series and out of an independent pipeline that
enumerates local data (ramified support with values in Z/3) directly.
"""

from cycliccovers import covers, ffield, idele, places, series
from cycliccovers.cyclotomic import ser_coefficients_int

spec = ffield.make_field(2, 2, 3)
N = 5

print("cubic covers over F_4, by conductor degree")
print("%4s %8s %8s %8s %8s" % ("n", "fields", "classes", "series", "maps"))
euler = ser_coefficients_int(series.character_count_series(N, spec))
for n in range(1, N + 1):
    fields, classes = covers.count_extensions(n, spec)
    maps = sum(1 for _ in idele.enumerate_maps(n, spec))
    assert classes == euler[n] == maps
    print("%4d %8d %8d %8d %8d" % (n, fields, classes, euler[n], maps))

print()
vX = places.finite_place((0, 1))
print("conditioning at the place X, conductor degree 4:")
for kind, v_ram, v_split, v_inert in (
    ("ramified", [vX], [], []),
    ("split", [], [vX], []),
    ("inert", [], [], [vX]),
):
    rep = covers.count_conditioned(4, v_ram, v_split, v_inert, spec)
    pred = series.local_density(vX, kind, spec)
    print(
        "  %-9s %5d of %d classes, density %-7s (limit %s = %.4f)"
        % (kind, rep["characters"], rep["total_characters"], rep["density"],
           pred, float(pred))
    )

print()
print("cross-check of the two pipelines, ramified at X, n = 4:")
rep = idele.crosscheck_counts(4, [vX], [], [], spec)
print("  kummer %d / %d, maps %d / %d, match: %s"
      % (rep["kummer_characters"], rep["kummer_total"],
         rep["map_count"], rep["map_total"], rep["match"]))
