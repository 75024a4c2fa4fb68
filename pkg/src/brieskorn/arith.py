"""Exact integer/rational helpers used throughout the package.

Integers are Python ints and rationals are :class:`fractions.Fraction`, so
nothing here ever overflows or rounds.

Continued fractions use the "minus" convention

    [t1, t2, ..., tm] = t1 - 1/(t2 - 1/(... - 1/tm))

which is what a negative-definite linear plumbing needs.  Expansion runs the
ceiling-division recurrence

    t = ceil(n/d),   (n, d) <- (d, t*d - n)

until the remainder vanishes; since 0 < d < n every quotient is >= 2.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple, Sequence

CFExpansion = tuple  # tuple[int, ...] of continued fraction terms


class SeifertData(NamedTuple):
    e0: int
    p_prime: int
    q_prime: int
    r_prime: int


def cf_expand(num: int, den: int) -> tuple[int, ...]:
    """Minus-convention continued fraction of ``num/den`` (all terms >= 2)."""
    if den <= 0 or den >= num:
        raise ValueError(f"need 0 < den < num, got {num}/{den}")
    if gcd(num, den) != 1:
        raise ValueError(f"{num}/{den} is not in lowest terms")
    terms = []
    n, d = num, den
    while d:
        t = -(-n // d)
        terms.append(t)
        n, d = d, t * d - n
    return tuple(terms)


def cf_evaluate(terms: Sequence[int]) -> Fraction:
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[-1])
    for t in reversed(terms[:-1]):
        if value == 0:
            raise ZeroDivisionError(f"continued fraction {list(terms)} hits a zero denominator")
        value = t - 1 / value
    return value


def _pairwise_coprime(*xs: int) -> bool:
    return all(gcd(a, b) == 1 for i, a in enumerate(xs) for b in xs[i + 1:])


def _seifert_modular(p: int, q: int, r: int) -> SeifertData:
    # Reducing e0*pqr + p'qr + pq'r + pqr' = -1 modulo p pins p' = -(qr)^{-1}.
    def residue(n, a, b):
        if n == 1:
            return 0
        return (-pow(a * b, -1, n)) % n

    pp, qp, rp = residue(p, q, r), residue(q, p, r), residue(r, p, q)
    rest = -1 - pp * q * r - p * qp * r - p * q * rp
    e0, rem = divmod(rest, p * q * r)
    assert rem == 0
    return SeifertData(e0, pp, qp, rp)


def _seifert_brute(p: int, q: int, r: int) -> SeifertData:
    pqr = p * q * r
    found = None
    for pp in range(1, p) if p > 1 else (0,):
        for qp in range(1, q) if q > 1 else (0,):
            for rp in range(1, r) if r > 1 else (0,):
                rest = -1 - pp * q * r - p * qp * r - p * q * rp
                if rest % pqr == 0:
                    if found is not None:
                        raise ArithmeticError(f"non-unique Seifert data for {(p, q, r)}")
                    found = SeifertData(rest // pqr, pp, qp, rp)
    if found is None:
        raise ArithmeticError(f"no Seifert data for {(p, q, r)}")
    return found


BRUTE_FORCE_LIMIT = 2000


def solve_seifert_diophantine(p: int, q: int, r: int) -> SeifertData:
    """Unique ``(e0, p', q', r')`` with ``e0*pqr + p'qr + pq'r + pqr' = -1``.

    The primes range over ``1 <= p' < p`` etc.; a multiplicity of 1 carries
    ``p' = 0`` (an empty arm).  Small inputs are also solved by exhaustive
    search and the two answers must coincide.
    """
    if min(p, q, r) < 1 or (p, q, r) == (1, 1, 1):
        raise ValueError(f"need positive multiplicities, not all 1: {(p, q, r)}")
    if not _pairwise_coprime(p, q, r):
        raise ValueError(f"{(p, q, r)} is not pairwise coprime")
    data = _seifert_modular(p, q, r)
    if p * q * r <= BRUTE_FORCE_LIMIT:
        brute = _seifert_brute(p, q, r)
        if brute != data:
            raise ArithmeticError(f"solver disagreement on {(p, q, r)}: {data} vs {brute}")
    return data


def divisor_pairs(n: int) -> list[tuple[int, int]]:
    """All ``(s, n//s)`` with ``s <= n//s``, ``s`` ascending (trial division)."""
    if n < 1:
        raise ValueError("n must be positive")
    return [(s, n // s) for s in range(1, isqrt(n) + 1) if n % s == 0]


# -- exact linear algebra -----------------------------------------------------

def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination with row pivoting."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def leading_principal_minors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Leading principal minors D_1..D_n via Bareiss without pivoting.

    The list stops early (ending in 0) at the first vanishing minor, since
    the later ones are not reachable without pivoting.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - aik * a[k][j]) // prev
        prev = pivot
    return minors


def solve_exact(matrix: Sequence[Sequence[int]], rhs: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve ``matrix @ X = rhs`` over the rationals (Gauss-Jordan).

    ``rhs`` is a list of columns; the result is the matching list of
    solution columns.
    """
    n = len(matrix)
    cols = len(rhs)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[c][i]) for c in range(cols)]
         for i, row in enumerate(matrix)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [[a[i][n + c] for i in range(n)] for c in range(cols)]


def exact_inverse(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(matrix)
    identity = [[int(i == j) for i in range(n)] for j in range(n)]
    columns = solve_exact(matrix, identity)
    return [[columns[j][i] for j in range(n)] for i in range(n)]
