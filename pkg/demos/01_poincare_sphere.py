"""The Poincare sphere Sigma(2,3,5) three ways.

Run with ``python demos/01_poincare_sphere.py``.
"""
from brieskorn import (
    Triplet,
    build_asl_graph,
    build_star_graph,
    d_invariant,
    oracle_d,
    solve_seifert_diophantine,
)
from brieskorn.plumbing import isomorphic, validate

t = Triplet(2, 3, 5)

# Seifert invariants give the star-shaped resolution graph ...
seifert = solve_seifert_diophantine(*t)
star = build_star_graph(*t, seifert)
print("Seifert data:", seifert)
print("star weights:", star.weights)

# ... which is the same weighted tree as the almost-simple-linear plumbing (E8).
asl = build_asl_graph(t)
print("isomorphic to the ASL graph:", isomorphic(star, asl))
print(validate(asl))

# p is even, so the zero class is characteristic and d = (q+r)/4.
print("fast:", d_invariant(t))

# Exhaustive search over the 2^8 initial classes agrees.
res = oracle_d(asl)
print(f"oracle: d = {res.d_value} from {res.enumerated} vectors, max k^2 = {res.max_k_squared}")
