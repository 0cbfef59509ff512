"""Command-line interface for counting and cross-checking cyclic covers.

Subcommands: count, distribution, series-check, constants, verify,
oracle-crosscheck.  Reports are JSON (schema 1, deterministic key
order, exact rationals as "num/den" strings with float companions) or
CSV.  Exit codes: 0 success, 2 usage/validation error, 3 budget
exceeded.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from . import covers, ffield, idele, model, places, series
from .cyclotomic import ser_coefficients_int
from .ffield import BudgetError, FieldError


class UsageError(ValueError):
    pass


KINDS = {"ram": places.RAMIFIED, "split": places.SPLIT, "inert": places.INERT}


def _rational(x):
    f = Fraction(x)
    return {"exact": "%d/%d" % (f.numerator, f.denominator), "float": float(f)}


# --- place-string parsing -------------------------------------------------


def _parse_element(token, spec):
    """A field element: a plain integer encoding, or a t-polynomial."""
    if re.fullmatch(r"\d+", token):
        val = int(token)
        if val >= spec.q:
            raise UsageError("coefficient %r out of range for q=%d" % (token, spec.q))
        return val
    # t-polynomial like t^2+2t+1 (prime-field coefficients)
    val = 0
    for term in token.split("+"):
        m = re.fullmatch(r"(\d+)?(t(?:\^(\d+))?)?", term)
        if not m or not term:
            raise UsageError("bad coefficient token %r" % token)
        coef = int(m.group(1)) if m.group(1) else 1
        power = int(m.group(3)) if m.group(3) else (1 if m.group(2) else 0)
        if power >= spec.e:
            raise UsageError("t-power too large in %r" % token)
        val += (coef % spec.p) * spec.p ** power
    return val


def _split_terms(text):
    """Split on '+' outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def parse_place(text, spec):
    """A place string: 'inf' or a monic irreducible polynomial in X."""
    text = text.strip().replace(" ", "").replace("-", "+")
    if text == "inf":
        return places.INFINITY
    coeffs = {}
    for term in _split_terms(text):
        if not term:
            raise UsageError("cannot parse place token %r" % text)
        coef_tok, sep, x_part = term.partition("X")
        if sep:
            if x_part == "":
                power = 1
            elif re.fullmatch(r"\^\d+", x_part):
                power = int(x_part[1:])
            else:
                raise UsageError("cannot parse place token %r" % term)
        else:
            power = 0
        coef_tok = coef_tok.strip("()")
        if coef_tok and not re.fullmatch(r"[\dt^+]+", coef_tok):
            raise UsageError("cannot parse place token %r" % term)
        coef = _parse_element(coef_tok, spec) if coef_tok else 1
        coeffs[power] = spec.add(coeffs.get(power, 0), coef)
    deg = max(coeffs)
    poly = ffield.poly_trim([coeffs.get(i, 0) for i in range(deg + 1)])
    if ffield.poly_deg(poly) < 1:
        raise UsageError("place polynomial %r is constant" % text)
    if not ffield.poly_is_monic(poly):
        raise UsageError("place polynomial %r is not monic" % text)
    if poly not in ffield.irreducibles_of_degree(ffield.poly_deg(poly), spec):
        raise UsageError("place polynomial %r is not irreducible" % text)
    return places.finite_place(poly)


def parse_conditions(tokens, spec):
    out = []
    seen = set()
    for tok in tokens or []:
        if ":" not in tok:
            raise UsageError("condition %r is not PLACE:TYPE" % tok)
        ptxt, ktxt = tok.rsplit(":", 1)
        if ktxt not in KINDS:
            raise UsageError("condition type %r (want ram|split|inert)" % ktxt)
        v = parse_place(ptxt, spec)
        if v in seen:
            raise UsageError("overlapping conditions at place %r" % ptxt)
        seen.add(v)
        out.append((v, KINDS[ktxt]))
    return out


def _split_conditions(conditions):
    r = [v for v, k in conditions if k == places.RAMIFIED]
    s = [v for v, k in conditions if k == places.SPLIT]
    i = [v for v, k in conditions if k == places.INERT]
    return r, s, i


# --- commands ---------------------------------------------------------------


def _make_spec(args):
    try:
        return ffield.make_field(args.p, args.e, args.ell)
    except FieldError as exc:
        raise UsageError(str(exc))


def cmd_count(args):
    spec = _make_spec(args)
    if args.n is None:
        raise UsageError("count requires --n")
    conditions = parse_conditions(args.cond, spec)
    records = covers.load_or_enumerate_orbits(
        args.n, spec, cache_dir=args.cache_dir, shards=args.shards,
        force=args.force_budget,
    )
    fields = len(records)
    characters = (spec.ell - 1) * fields
    report = {
        "schema": 1,
        "command": "count",
        "q": spec.q,
        "ell": spec.ell,
        "n": args.n,
        "fields_count": fields,
        "characters_count": characters,
    }
    if conditions:
        matching = 0
        for rec in records:
            F = rec[0]
            if all(
                places.splitting_type(F, v, spec) == k for v, k in conditions
            ):
                matching += 1
        report["conditioned_fields"] = matching
        report["conditioned_characters"] = (spec.ell - 1) * matching
        report["density"] = _rational(
            Fraction(matching, fields) if fields else Fraction(0)
        )
        report["predicted_density"] = _rational(
            _product(series.local_density(v, k, spec) for v, k in conditions)
        )
    coeff = None
    if args.n <= args.truncation:
        try:
            if conditions:
                ser = series.conditioned_series(args.n, conditions, spec)
            else:
                ser = series.character_count_series(args.n, spec)
            coeff = ser_coefficients_int(ser)[args.n]
        except BudgetError:
            coeff = None
    report["series_coefficient"] = coeff
    _emit(report, args)
    return 0


def _product(it):
    out = Fraction(1)
    for x in it:
        out *= x
    return out


def cmd_distribution(args):
    spec = _make_spec(args)
    if not args.genus:
        raise UsageError("distribution requires --genus")
    model_dist = model.model_point_distribution(spec)
    rows = []
    for g in args.genus:
        try:
            n = covers.conductor_degree_for_genus(g, spec)
        except ValueError as exc:
            raise UsageError(str(exc))
        records = covers.load_or_enumerate_orbits(
            n, spec, cache_dir=args.cache_dir, shards=args.shards,
            force=args.force_budget,
        )
        freqs, counts = covers.point_distribution(g, spec, records=records)
        metrics = model.compare_distributions(freqs, model_dist)
        rows.append(
            {
                "genus": g,
                "conductor_degree": n,
                "fields": sum(counts),
                "empirical": [_rational(f) for f in freqs],
                "model": [
                    _rational(model_dist[m]) if m < len(model_dist) else _rational(0)
                    for m in range(len(freqs))
                ],
                "tv_distance": _rational(metrics["tv"]),
                "sup_distance": _rational(metrics["sup"]),
                "empirical_mean": _rational(metrics["mean_a"]),
                "model_mean": _rational(metrics["mean_b"]),
            }
        )
    report = {
        "schema": 1,
        "command": "distribution",
        "q": spec.q,
        "ell": spec.ell,
        "rows": rows,
    }
    if args.format == "csv":
        lines = ["genus,m,empirical,model"]
        for row in rows:
            for m, (emp, mod) in enumerate(zip(row["empirical"], row["model"])):
                lines.append(
                    "%d,%d,%s,%s" % (row["genus"], m, emp["exact"], mod["exact"])
                )
        print("\n".join(lines))
        return 0
    _emit(report, args)
    return 0


def cmd_series_check(args):
    spec = _make_spec(args)
    conditions = parse_conditions(args.cond, spec)
    N = args.truncation
    if conditions:
        ser = series.conditioned_series(N, conditions, spec)
        desc = "conditioned:" + ",".join(
            ("inf" if v.is_infinite() else covers._poly_str(v.poly)) + ":" + k
            for v, k in conditions
        )
    else:
        ser = series.character_count_series(N, spec)
        desc = "character-count"
    coeffs = ser_coefficients_int(ser)
    checks = []
    max_brute = min(args.max_degree, N) if args.max_degree else 0
    for n in range(1, max_brute + 1):
        r, s, i = _split_conditions(conditions)
        brute = covers.count_conditioned(
            n, r, s, i, spec, shards=args.shards, force=args.force_budget
        )["characters"]
        checks.append(
            {
                "n": n,
                "series": coeffs[n],
                "enumeration": brute,
                "pass": coeffs[n] == brute,
            }
        )
    dumped = series.dump_series(ser, spec, desc)
    dump_match = None
    if args.dump:
        import os

        if os.path.exists(args.dump):
            meta, parsed = series.parse_series(open(args.dump).read())
            dump_match = parsed == list(ser) and meta.get("desc") == desc
        else:
            with open(args.dump, "w") as fh:
                fh.write(dumped)
            dump_match = True
    report = {
        "schema": 1,
        "command": "series-check",
        "q": spec.q,
        "ell": spec.ell,
        "truncation": N,
        "description": desc,
        "coefficients": coeffs,
        "checks": checks,
        "dump_match": dump_match,
    }
    _emit(report, args)
    return 0 if all(c["pass"] for c in checks) and dump_match in (None, True) else 1


def cmd_constants(args):
    spec = _make_spec(args)
    D = args.max_degree or 10
    rep = series.constant_C(D, spec)
    rv = model.rv_distribution(spec)
    density_rows = []
    for v in places.places_up_to(min(D, 3), spec):
        density_rows.append(
            {
                "place": "inf" if v.is_infinite() else covers._poly_str(v.poly),
                "degree": v.degree,
                "ramified": _rational(series.local_density(v, places.RAMIFIED, spec)),
                "split": _rational(series.local_density(v, places.SPLIT, spec)),
                "inert": _rational(series.local_density(v, places.INERT, spec)),
            }
        )
    report = {
        "schema": 1,
        "command": "constants",
        "q": spec.q,
        "ell": spec.ell,
        "cutoff": D,
        "constant": _rational(rep["value"]),
        "constant_next": _rational(rep["next"]),
        "relative_defect": _rational(rep["relative_defect"]),
        "model": {
            "p0": _rational(rv.p0),
            "p1": _rational(rv.p1),
            "p_ell": _rational(rv.p_ell),
        },
        "local_densities": density_rows,
    }
    _emit(report, args)
    return 0


def cmd_oracle_crosscheck(args):
    spec = _make_spec(args)
    if args.n is None:
        raise UsageError("oracle-crosscheck requires --n")
    conditions = parse_conditions(args.cond, spec)
    r, s, i = _split_conditions(conditions)
    rep = idele.crosscheck_counts(
        args.n, r, s, i, spec, shards=args.shards, force=args.force_budget
    )
    report = {
        "schema": 1,
        "command": "oracle-crosscheck",
        "q": spec.q,
        "ell": spec.ell,
        "n": args.n,
        "kummer_characters": rep["kummer_characters"],
        "kummer_total": rep["kummer_total"],
        "map_count": rep["map_count"],
        "map_total": rep["map_total"],
        "match": rep["match"],
    }
    _emit(report, args)
    return 0 if rep["match"] else 1


# --- verify suites -----------------------------------------------------------


def _suite_quadratic_exact(args, spec):
    checks = []
    q = spec.q
    for n in range(1, (args.max_n or 6) + 1):
        expected = 0
        if n == 2:
            expected = 2 * q ** 2
        elif n % 2 == 0:
            expected = 2 * (q ** n - q ** (n - 2))
        actual = series.quadratic_exact(n, spec)
        ser = ser_coefficients_int(series.character_count_series(n, spec))[n]
        checks.append(_check("closed-form n=%d" % n, expected, actual))
        checks.append(_check("euler-product n=%d" % n, expected, ser))
    return checks


def _suite_series_vs_brute(args, spec):
    checks = []
    for n in range(1, (args.max_n or 4) + 1):
        brute = covers.count_extensions(n, spec, shards=args.shards)[1]
        coeff = ser_coefficients_int(series.character_count_series(n, spec))[n]
        checks.append(_check("n=%d" % n, brute, coeff))
    return checks


def _suite_weil(args, spec):
    checks = []
    gmax = args.genus[0] if args.genus else 2
    for g in range(1, gmax + 1):
        n = covers.conductor_degree_for_genus(g, spec)
        worst = None
        ok = True
        for F in covers.enumerate_extensions(n, spec, force=args.force_budget):
            pc = covers.rational_point_count(F, spec)
            lhs = (pc - (spec.q + 1)) ** 2
            rhs = 4 * g * g * spec.q
            if lhs > rhs:
                ok = False
            worst = max(worst or 0, lhs)
        checks.append(
            _check("genus %d worst (pc-q-1)^2 <= 4g^2q" % g, True, ok)
        )
    return checks


def _suite_reciprocity(args, spec):
    pls = [v for v in places.places_up_to(3, spec) if not v.is_infinite()]
    w = places._minus_one_exponent(spec)
    bad = 0
    pairs = 0
    for a in pls:
        for b in pls:
            if a.poly == b.poly:
                continue
            pairs += 1
            lhs = places.residue_symbol(a.poly, b, spec)
            rhs = (
                w * a.degree * b.degree + places.residue_symbol(b.poly, a, spec)
            ) % spec.ell
            if lhs != rhs:
                bad += 1
    return [_check("all %d ordered pairs" % pairs, 0, bad)]


def _suite_l_polynomial(args, spec):
    checks = []
    for v in places.places_up_to(3, spec):
        if v.is_infinite():
            continue
        for k in range(1, spec.ell):
            coeffs = places.l_polynomial(v, k, spec)
            checks.append(
                _check(
                    "deg L < deg modulus at %s^%d" % (covers._poly_str(v.poly), k),
                    True,
                    len(coeffs) <= v.degree,
                )
            )
    return checks


def _suite_ramified_discrepancy(args, spec):
    if spec.ell != 2:
        raise UsageError("ramified-discrepancy requires --ell 2")
    v0 = places.finite_place((0, 1))
    checks = []
    for n in (3, 4, 5, 6):
        brute = covers.count_conditioned(n, [v0], [], [], spec)["characters"]
        exact = series.quadratic_ramified_exact(n, v0, spec)
        displayed = series.quadratic_ramified_displayed(n, v0, spec)
        expected_ratio = Fraction(2) if n % 2 == 0 else Fraction(0)
        checks.append(_check("exact n=%d" % n, brute, exact))
        checks.append(
            _check(
                "ratio to displayed formula n=%d" % n,
                str(expected_ratio),
                str(Fraction(brute) / displayed),
            )
        )
    return checks


def _suite_scaling(args, spec):
    checks = []
    for n in range(1, (args.max_n or 6) + 1):
        lhs = spec.ell * sum(
            covers.count_tuples(dv, spec)
            for dv, _ in covers.admissible_degree_tuples(n, spec)
        )
        rhs = covers.count_extensions(n, spec)[1]
        checks.append(_check("n=%d" % n, rhs, lhs))
    return checks


def _suite_constants(args, spec):
    checks = []
    if spec.ell == 2:
        expected = Fraction(spec.q ** 2 - 1, spec.q ** 2)
        for D in (2, 6, 10):
            checks.append(
                _check("C at cutoff %d" % D, str(expected),
                       str(series.constant_C(D, spec)["value"]))
            )
    else:
        rep = series.constant_C(args.max_degree or 12, spec)
        checks.append(
            _check(
                "relative defect <= 1e-6",
                True,
                rep["relative_defect"] <= Fraction(1, 10 ** 6),
            )
        )
    return checks


def _suite_trichotomy(args, spec):
    v0 = places.finite_place((0, 1))
    checks = []
    for n in range(2, (args.max_n or 4) + 1):
        parts = [
            covers.count_conditioned(n, [v0], [], [], spec)["characters"],
            covers.count_conditioned(n, [], [v0], [], spec)["characters"],
            covers.count_conditioned(n, [], [], [v0], spec)["characters"],
        ]
        total = covers.count_extensions(n, spec)[1]
        checks.append(_check("n=%d" % n, total, sum(parts)))
    return checks


SUITES = {
    "quadratic-exact": _suite_quadratic_exact,
    "series-vs-brute": _suite_series_vs_brute,
    "weil": _suite_weil,
    "reciprocity": _suite_reciprocity,
    "l-polynomial": _suite_l_polynomial,
    "ramified-discrepancy": _suite_ramified_discrepancy,
    "scaling": _suite_scaling,
    "constants": _suite_constants,
    "trichotomy": _suite_trichotomy,
}


def _check(name, expected, actual):
    return {
        "check": name,
        "expected": expected,
        "actual": actual,
        "pass": expected == actual,
    }


def cmd_verify(args):
    spec = _make_spec(args)
    if args.suite not in SUITES:
        raise UsageError(
            "unknown suite %r (choose from %s)"
            % (args.suite, ", ".join(sorted(SUITES)))
        )
    checks = SUITES[args.suite](args, spec)
    report = {
        "schema": 1,
        "command": "verify",
        "suite": args.suite,
        "q": spec.q,
        "ell": spec.ell,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
    _emit(report, args)
    return 0 if report["pass"] else 1


# --- plumbing ---------------------------------------------------------------


def _emit(report, args):
    if args.format == "csv" and "checks" in report:
        lines = ["check,expected,actual,pass"]
        for c in report["checks"]:
            lines.append(
                "%s,%s,%s,%s" % (c["check"], c["expected"], c["actual"], c["pass"])
            )
        print("\n".join(lines))
        return
    print(json.dumps(report, indent=2))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cycliccovers",
        description="Count cyclic covers of the projective line over F_q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "count": cmd_count,
        "distribution": cmd_distribution,
        "series-check": cmd_series_check,
        "constants": cmd_constants,
        "verify": cmd_verify,
        "oracle-crosscheck": cmd_oracle_crosscheck,
    }
    for name, fn in commands.items():
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        p.add_argument("--p", type=int, required=True, help="field characteristic")
        p.add_argument("--e", type=int, default=1, help="extension degree")
        p.add_argument("--ell", type=int, default=2, help="cover degree (prime)")
        p.add_argument("--n", type=int, help="conductor degree")
        p.add_argument("--genus", type=int, action="append")
        p.add_argument("--max-n", type=int, help="largest n for verify suites")
        p.add_argument(
            "--cond",
            action="append",
            metavar="PLACE:TYPE",
            help="condition like X:ram, X^2+1:split, inf:inert",
        )
        p.add_argument("--max-degree", type=int, help="place-degree cutoff")
        p.add_argument("--truncation", type=int, default=10)
        p.add_argument("--cache-dir")
        p.add_argument("--shards", type=int, default=1)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--force-budget", action="store_true")
        p.add_argument("--suite", help="verify suite name")
        p.add_argument("--dump", help="series dump file (series-check)")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except BudgetError as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
