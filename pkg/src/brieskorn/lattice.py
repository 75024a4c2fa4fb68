"""d-invariant of Sigma(p,q,r), pq + pr - qr = 1, by a two-dimensional scan.

For odd ``p`` the degree of the class ``k_{a,m}`` on the ASL plumbing is

    f(a, m) = -(q+r) a^2 + 4 q a m - 4 (q-p) m^2 - 4 m

and ``d = (max f + q + r) / 4`` over odd ``|a| <= p``, ``0 <= m <= (p-1)/2``.
For fixed ``m``, ``f`` is a downward parabola in ``a`` with vertex at
``c(m) = 2qm/(q+r)``, so each slice is maximised at the odd integer(s)
nearest to ``c(m)``; the scan is O(p).  For even ``p`` the zero class is
characteristic and ``d = (q+r)/4``.

The slice analytics (``delta``, centre, squared radius, squared distance to
the nearest odd) describe the region ``f(x, y) >= f(1, 1)``; everything is
kept exact, comparing squares instead of taking roots.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterator, NamedTuple

from .triplet import Triplet


class LatticePoint(NamedTuple):
    a: int
    m: int


EVEN_P, LATTICE_SCAN, ORACLE = "EvenP", "LatticeScan", "Oracle"


@dataclass(frozen=True)
class RegionSlice:
    m: int
    delta: int
    center: Fraction
    radius_sq: Fraction
    nearest_odd: int
    tie: bool
    dist_to_odd_sq: Fraction
    f_at_best: int
    in_region: bool


@dataclass(frozen=True)
class DInvariantResult:
    triplet: Triplet
    d: int
    max_f: int | None
    argmax: LatticePoint | None
    method: str
    qhb_obstructed: bool
    pretzel_note: str


def _as_triplet(t) -> Triplet:
    return t if isinstance(t, Triplet) else Triplet(*t)


def f_eval(t: Triplet, x: int, y: int) -> int:
    p, q, r = t
    return -(q + r) * x * x + 4 * q * x * y - 4 * (q - p) * y * y - 4 * y


def g_eval(t: Triplet, x: int, y: int) -> int:
    """``f(1,1) - f(x,y)``; the region is where this is <= 0."""
    return f_eval(t, 1, 1) - f_eval(t, x, y)


def delta(t: Triplet, m: int) -> int:
    """Discriminant of ``g(., m)``: ``4(2m-(q+r))^2 - 16(q+r)(p-1)``."""
    p, q, r = t
    return 4 * (2 * m - (q + r)) ** 2 - 16 * (q + r) * (p - 1)


def center(t: Triplet, m: int) -> Fraction:
    return Fraction(2 * t.q * m, t.q + t.r)


def radius_sq(t: Triplet, m: int) -> Fraction:
    # Negative when delta < 0, i.e. the slice misses the region entirely.
    return Fraction(delta(t, m), 4 * (t.q + t.r) ** 2)


def in_interval(t: Triplet, a: int, m: int) -> bool:
    """Root-free test of ``|a - c(m)| <= radius(m)``."""
    d = delta(t, m)
    return d >= 0 and (2 * (t.q + t.r) * a - 4 * t.q * m) ** 2 <= d


def nearest_odd(c: Fraction) -> tuple[int, bool]:
    """Closest odd integer to ``c``; on an exact tie (``c`` even) return ``c+1``."""
    c = Fraction(c)
    below = 2 * floor((c - 1) / 2) + 1
    above = below + 2
    if c - below < above - c:
        return below, False
    return above, c - below == above - c


def lattice_points(t: Triplet) -> Iterator[LatticePoint]:
    p = t.p
    for m in range((p - 1) // 2 + 1):
        for a in range(-p, p + 1, 2):
            yield LatticePoint(a, m)


def _slice_candidates(t: Triplet, m: int) -> tuple[int, bool, list[int]]:
    a, tie = nearest_odd(center(t, m))
    cands = [a, a - 2] if tie else [a]
    cands = [max(-t.p, min(t.p, x)) for x in cands]
    return max(-t.p, min(t.p, a)), tie, cands


def region_slice(t: Triplet, m: int) -> RegionSlice:
    t = _as_triplet(t)
    if not 0 <= m <= (t.p - 1) // 2:
        raise ValueError(f"m must lie in 0..{(t.p - 1) // 2}")
    a, tie, _ = _slice_candidates(t, m)
    c = center(t, m)
    fa = f_eval(t, a, m)
    return RegionSlice(m, delta(t, m), c, radius_sq(t, m), a, tie, (a - c) ** 2, fa,
                       fa >= f_eval(t, 1, 1))


def region_dump(t: Triplet) -> list[RegionSlice]:
    t = _as_triplet(t)
    if t.p % 2 == 0:
        raise ValueError("region analysis is for odd p")
    return [region_slice(t, m) for m in range((t.p - 1) // 2 + 1)]


def _result(t, d, max_f, argmax, method):
    obstructed = d != 0
    note = f"K(-{t.p},{t.q},{t.r}) not rationally slice" if obstructed else ""
    return DInvariantResult(t, d, max_f, argmax, method, obstructed, note)


def d_invariant(t: Triplet) -> DInvariantResult:
    t = _as_triplet(t)
    p, q, r = t
    if p % 2 == 0:
        d, rem = divmod(q + r, 4)
        assert rem == 0, f"q + r = {q + r} not divisible by 4"
        return _result(t, d, None, None, EVEN_P)
    best, arg = None, None
    for m in range((p - 1) // 2 + 1):
        a, _, cands = _slice_candidates(t, m)
        for x in cands:
            fx = f_eval(t, x, m)
            if best is None or fx > best:
                best, arg = fx, LatticePoint(x, m)
    d, rem = divmod(best + q + r, 4)
    assert rem == 0, f"max f + q + r = {best + q + r} not divisible by 4"
    return _result(t, d, best, arg, LATTICE_SCAN)


def d_invariant_oracle(t: Triplet, budget: int | None = None, workers: int = 1) -> DInvariantResult:
    """Same result computed by exhaustive search on the ASL plumbing."""
    from .oracle import oracle_d
    from .plumbing import build_asl_graph

    t = _as_triplet(t)
    res = oracle_d(build_asl_graph(t), budget=budget, workers=workers)
    assert res.d_value.denominator == 1
    return _result(t, int(res.d_value), res.max_k_squared, None, ORACLE)
