#!/usr/bin/env python3
"""A tour of the parameter regions.

The closed form of the density vector depends on the arithmetic nature
of (alpha, beta, gamma, delta): integer tuples split four ways by
divisibility, rational tuples go through residue covers of the integers,
irrational pairs split by Q-linear independence of {1, 1/alpha, 1/gamma},
and one family of dependent irrationals remains a genuinely open problem.
"""

from beattydim import (
    ParamTuple,
    classify_region,
    closed_form_d,
    g_density,
    region_report,
    residue_set,
)

SHOWCASE = [
    ("integer, alpha = 1", (1, 0, 2, 0)),
    ("integer, gcd does not divide the shift gap", (2, 1, 4, 0)),
    ("integer, alpha | gamma", (2, 0, 4, 2)),
    ("integer, shared factor, alpha_1 > 1", (2, 0, 3, 0)),
    ("rational", ("3/2", 0, 3, 0)),
    ("alpha = 1, irrational gamma", (1, 0, "sqrt(5)", 0)),
    ("irrational alpha, rational gamma", ("sqrt(2)", 0, 3, 0)),
    ("independent irrationals", ("sqrt(2)", 0, "sqrt(3)", 0)),
    ("complementary Beatty pair", ("sqrt(2)", 0, "2+sqrt(2)", 0)),
    ("dependent, no witness: open", ("sqrt(2)", 0, "3*sqrt(2)", 0)),
    ("mixed rational/irrational", ("3/2", 0, "sqrt(3)", 0)),
]

print("=" * 78)
print("classification with certificates")
print("=" * 78)
for label, tup in SHOWCASE:
    p = ParamTuple(*tup)
    r = classify_region(p)
    print(f"{str(tup):>34}  ->  {r.id:<7} {label}")
    print(f"{'':>38}{r.certificate}")

print()
print("=" * 78)
print("closed-form density vectors (first entries + d_inf)")
print("=" * 78)
for label, tup in SHOWCASE:
    p = ParamTuple(*tup)
    r = classify_region(p)
    if not r.has_closed_form():
        print(f"{r.id:<8} {str(tup):>30}: no closed form (empirical fallback)")
        continue
    d = closed_form_d(p, r)
    ent = ", ".join(str(d.entry(i)) if d.is_exact() else f"{float(d.entry(i)):.5f}"
                    for i in (1, 2, 3))
    dinf = d.d_inf if d.is_exact() else f"{float(d.d_inf):.5f}"
    print(f"{r.id:<8} {str(tup):>30}: d = ({ent}, ..., {dinf})")

print()
print("=" * 78)
print("the residue machinery behind the rational case")
print("=" * 78)
print("alpha = 3/2 hits residues", sorted(residue_set(2, 3, 0)), "mod 3;")
print("gamma = 3 hits residue   ", sorted(residue_set(1, 3, 0)), "mod 3.")
print("progression overlaps have exact densities, e.g.")
print("  density((2N) ∩ (3N+1))     =", g_density(2, 3, 0, 1))
print("  density((4N+1) ∩ (6N+2))   =", g_density(4, 6, 1, 2), " (disjoint)")
print("  density((4N) ∩ (6N+2))     =", g_density(4, 6, 0, 2))

print()
print("report payload for scripting:")
import json

print(json.dumps(region_report(ParamTuple(2, 0, 4, 2), K=6), indent=2, sort_keys=True))
