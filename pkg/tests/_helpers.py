"""Independent reference routines shared by the tests."""
import random
from fractions import Fraction
from itertools import permutations

from brieskorn.plumbing import PlumbingGraph


def leibniz_det(m):
    """Determinant by permutation expansion (small matrices only)."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i, j in enumerate(perm):
            term *= m[i][j]
            if not term:
                break
        total += term
    return total


def matmul(a, b):
    return [[sum(Fraction(x) * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def random_tree(rng: random.Random, n: int, lo: int = -9, hi: int = -1) -> PlumbingGraph:
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return PlumbingGraph([rng.randint(lo, hi) for _ in range(n)], edges)


def random_nd_trees(seed: int, count: int, max_n: int):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_tree(rng, rng.randint(1, max_n))
        if g.report.is_negative_definite:
            out.append(g)
    return out


def brute_max_f(t):
    from brieskorn.lattice import f_eval, lattice_points

    return max(f_eval(t, a, m) for a, m in lattice_points(t))
