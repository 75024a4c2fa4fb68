"""Closed-form families and the triplets sharing a given p.

Run with ``python demos/02_families.py``.
"""
from brieskorn import builtin_families, d_invariant, enumerate_triplets, verify_family

for spec in builtin_families()[:5]:
    report = verify_family(spec, range(1, 21))
    ds = [row.d_computed for row in report.rows]
    print(f"family {spec.name} {spec.describe():45s} d(1..6) = {ds[:6]}  mismatches: {report.mismatches}")

# Every divisor s of p^2 - 1 (below its cofactor) gives one triplet.
p = 11
print(f"\ntriplets with p = {p}:")
for t in enumerate_triplets(p):
    res = d_invariant(t)
    print(f"  {str(t):16s} d = {res.d:3d}  argmax (a, m) = {tuple(res.argmax)}")

# p with many divisors of p^2 - 1 and a large range of m: still instantaneous.
big = enumerate_triplets(100_001)
print(f"\np = 100001: {len(big)} triplets, d of the first = {d_invariant(big[0]).d}")
