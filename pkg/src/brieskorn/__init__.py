"""d-invariants of Brieskorn spheres Sigma(p,q,r) with pq + pr - qr = 1."""
from .arith import cf_evaluate, cf_expand, divisor_pairs, solve_seifert_diophantine
from .families import builtin_families, enumerate_triplets, verify_family
from .lattice import d_invariant, d_invariant_oracle, f_eval, region_dump, region_slice
from .oracle import oracle_d, run_full_path
from .plumbing import PlumbingGraph, build_asl_graph, build_star_graph, k_squared, make_k_am
from .triplet import Triplet

__all__ = [
    "PlumbingGraph", "Triplet", "build_asl_graph", "build_star_graph", "builtin_families",
    "cf_evaluate", "cf_expand", "d_invariant", "d_invariant_oracle", "divisor_pairs",
    "enumerate_triplets", "f_eval", "k_squared", "make_k_am", "oracle_d", "region_dump",
    "region_slice", "run_full_path", "solve_seifert_diophantine", "verify_family",
]
