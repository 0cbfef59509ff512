"""Compare exact point-count statistics with the independent-places model.

For quadratic covers over F_3, the number of rational points is the sum of
the contributions of the q + 1 = 4 rational places; asymptotically the
places behave independently, each contributing 0, 1 or 2 points with
probabilities 3/8, 1/4, 3/8.  The total-variation distance between the
exact genus-g distribution and the 4-fold convolution shrinks as g grows.
"""

from cycliccovers import covers, ffield, model

spec = ffield.make_field(3, 1, 2)

rv = model.rv_distribution(spec)
print("per-place model: P(0)=%s  P(1)=%s  P(%d)=%s" % (rv.p0, rv.p1, rv.ell, rv.p_ell))
mdl = model.model_point_distribution(spec)
print("model mean: %s (exactly q + 1)" % model.mean(mdl))
print()

print("%6s %8s %10s %12s %12s" % ("genus", "fields", "TV", "sup", "mean"))
for g in (1, 2, 3):
    freqs, counts = covers.point_distribution(g, spec)
    rep = model.compare_distributions(freqs, mdl)
    print(
        "%6d %8d %10.6f %12.8f %12s"
        % (g, sum(counts), float(rep["tv"]), float(rep["sup"]), rep["mean_a"])
    )

print()
g = 3
freqs, counts = covers.point_distribution(g, spec)
print("exact distribution at genus %d vs model:" % g)
print("%4s %12s %12s" % ("m", "empirical", "model"))
for m, (a, b) in enumerate(zip(freqs, mdl)):
    print("%4d %12.6f %12.6f" % (m, float(a), float(b)))
