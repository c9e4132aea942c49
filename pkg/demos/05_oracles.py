#!/usr/bin/env python3
"""Independent verification oracles.

Nothing here uses the chain classification: admissible words on [1, n]
are counted by dynamic programming over the raw constraint graph, and
for tiny n by enumerating every word outright.  Agreement between the
graph count, the enumeration, the chain-product form, and the dimension
series is the package's internal consistency story.
"""

from beattydim import (
    GOLDEN_MEAN,
    ParamTuple,
    chain_product_count,
    classify_region,
    closed_form_d,
    count_patterns,
    decompose,
    exhaustive_count,
    finite_scale_logcount,
    minkowski_dim,
)

print("=" * 72)
print("1. Graph components vs exhaustive enumeration")
print("=" * 72)
p = ParamTuple(1, 0, 2, 0)
for n in (4, 10, 16, 20):
    pc = count_patterns(p, GOLDEN_MEAN, n)
    brute = exhaustive_count(p, GOLDEN_MEAN, n)
    print(f"  n={n:>2}: components={pc.components:>2}  "
          f"graph={pc.count:>7}  exhaustive={brute:>7}  equal={pc.count == brute}")

print()
print("a self-loop case: alpha=sqrt(2), gamma=sqrt(3) constrains x_1 twice")
p_loop = ParamTuple("sqrt(2)", 0, "sqrt(3)", 0)
for n in (1, 4, 8):
    pc = count_patterns(p_loop, GOLDEN_MEAN, n)
    brute = exhaustive_count(p_loop, GOLDEN_MEAN, n)
    print(f"  n={n:>2}: graph={pc.count:>4}  exhaustive={brute:>4}")

print()
print("=" * 72)
print("2. Chain-product consistency (decomposition vs graph)")
print("=" * 72)
for tup in [(1, 0, 2, 0), (2, 1, 4, 0), (2, 0, 3, 0)]:
    q = ParamTuple(*tup)
    dec = decompose(q, 5000)
    prod = chain_product_count(dec, GOLDEN_MEAN, q)
    graph = count_patterns(q, GOLDEN_MEAN, 5000).count
    print(f"  {str(tup):>14}: {len(str(graph))}-digit counts, equal={prod == graph}")

print()
print("=" * 72)
print("3. Finite-scale growth approaches the Minkowski dimension")
print("=" * 72)
d = closed_form_d(p, classify_region(p))
dim_m = minkowski_dim(GOLDEN_MEAN, d, p).value
print(f"  dim_M = {dim_m:.10f}")
for n in (100, 1000, 10_000, 100_000):
    fs = finite_scale_logcount(p, GOLDEN_MEAN, n)
    print(f"  n={n:>7}: log_m(count)/n = {fs:.10f}   gap = {abs(fs - dim_m):.2e}")
