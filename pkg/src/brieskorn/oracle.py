"""Brute-force d-invariant of a small negative definite plumbing.

Every characteristic vector in the adjunction window

    e_j + 2 <= <k, v_j> <= -e_j

is enumerated and the maximum of ``k^2`` taken; the d-invariant is
``(max k^2 + |G|) / 4``.  Independently, vectors attaining the maximum are
pushed through the full-path rewriting ``k -> k + 2 PD(v)`` until one is
found whose path is good, which shows the maximum over good paths agrees.

Evaluation of ``k^2`` over the window is blocked: the vertices other than
vertex 0 are split into two halves A and B, and for every value of
``<k, v_0>`` the Gram-style sum

    k^2 = a0^2 S00 + qA(kA) + qB(kB) + 2 kA^t S_AB kB

is formed as an outer sum plus one integer matrix product, where ``S`` is
the (integral) inverse of the intersection matrix.
"""
from __future__ import annotations

import itertools
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterator, Sequence

import numpy as np

from .plumbing import PlumbingGraph, build_simple_linear, k_squared

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 2 ** 28
DEFAULT_STEP_BUDGET = 10 ** 6
BUDGET_ENV = "BRIESKORN_ORACLE_BUDGET"

GOOD, BAD = "Good", "Bad"


class OracleInfeasible(RuntimeError):
    """The adjunction window is larger than the enumeration budget."""


class PathBudgetExceeded(RuntimeError):
    pass


class OracleDisagreement(RuntimeError):
    """Two routes that must agree did not."""


def default_budget() -> int:
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


@dataclass(frozen=True)
class PathOutcome:
    verdict: str
    terminal: tuple[int, ...]
    steps: int
    trail: tuple[tuple[int, ...], ...] = field(default=(), repr=False, compare=False)


@dataclass(frozen=True)
class OracleResult:
    d_value: Fraction
    max_k_squared: int
    argmax: tuple[int, ...]
    enumerated: int
    argmax_count: int
    congruence_ok: bool


def adjunction_windows(g: PlumbingGraph) -> list[range]:
    return [range(e + 2, -e + 1, 2) for e in g.weights]


def window_size(g: PlumbingGraph) -> int:
    return prod(max(0, -e) for e in g.weights)


def _check_budget(g, budget):
    budget = default_budget() if budget is None else budget
    count = window_size(g)
    if count > budget:
        raise OracleInfeasible(f"adjunction window has {count} vectors, budget is {budget}")
    return count


def enumerate_initial(g: PlumbingGraph, budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """Stream every characteristic vector in the adjunction window."""
    _check_budget(g, budget)
    if not g.report.is_negative_definite:
        raise ValueError("enumeration needs a negative definite graph")
    return itertools.product(*adjunction_windows(g))


def _in_window(g, k):
    return all(e + 2 <= x <= -e for x, e in zip(k, g.weights))


def run_full_path(g: PlumbingGraph, k: Sequence[int], order: str = "lowest",
                  max_steps: int = DEFAULT_STEP_BUDGET, record: bool = False) -> PathOutcome:
    """Follow ``k -> k + 2PD(v)`` while some ``<k, v> = -e_v``.

    The path stops as bad as soon as some evaluation exceeds ``-e_v``, and
    as good once no evaluation equals ``-e_v`` (then every evaluation lies
    in ``[e_v, -e_v - 2]``).  ``order`` picks the lowest or highest such
    vertex at each step.
    """
    if len(k) != len(g) or not _in_window(g, k):
        raise ValueError(f"{tuple(k)} is not in the adjunction window")
    if order not in ("lowest", "highest"):
        raise ValueError(f"unknown vertex order {order!r}")
    w = g.weights
    adj = g.adjacency
    ev = list(k)
    vertices = range(len(ev)) if order == "lowest" else range(len(ev) - 1, -1, -1)
    trail = [tuple(ev)] if record else []
    steps = 0
    while True:
        if any(x > -e for x, e in zip(ev, w)):
            verdict = BAD
            break
        v = next((v for v in vertices if ev[v] == -w[v]), None)
        if v is None:
            verdict = GOOD
            break
        if steps >= max_steps:
            raise PathBudgetExceeded(f"full path from {tuple(k)} exceeded {max_steps} steps")
        # 2PD(v) pairs to 2*e_v at v and 2 at each neighbour.
        ev[v] += 2 * w[v]
        for u in adj[v]:
            ev[u] += 2
        steps += 1
        if record:
            trail.append(tuple(ev))
    return PathOutcome(verdict, tuple(ev), steps, tuple(trail))


def classify_terminals(t: int, order: str = "lowest") -> dict[tuple[int, ...], PathOutcome]:
    """Outcome of every initial vector on the all -2 path A_t."""
    if not 1 <= t <= 12:
        raise ValueError("classification is exhaustive; keep t <= 12")
    g = build_simple_linear(t)
    return {k: run_full_path(g, k, order) for k in itertools.product((0, 2), repeat=t)}


# -- d-invariant ------------------------------------------------------------

def _configs(windows):
    if not windows:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(*windows)), dtype=np.int64).reshape(-1, len(windows))


def _split(windows):
    """Choose the A/B split of vertices 1..n-1 balancing the two config counts."""
    rest = windows[1:]
    total = prod(len(w) for w in rest)
    acc, h = 1, 0
    while h < len(rest) and acc * acc < total:
        acc *= len(rest[h])
        h += 1
    return 1 + h


class _Slab:
    """All k^2 values for one fixed evaluation at vertex 0."""

    def __init__(self, S, windows, split, a0, n, max_keep, chunk):
        self.a0 = a0
        A = list(range(1, split))
        B = list(range(split, len(windows)))
        KA = _configs([windows[i] for i in A])
        KB = _configs([windows[i] for i in B])
        S_AA, S_BB, S_AB = S[np.ix_(A, A)], S[np.ix_(B, B)], S[np.ix_(A, B)]
        qA = np.einsum("ij,jk,ik->i", KA, S_AA, KA) + 2 * a0 * KA @ S[0, A]
        qB = np.einsum("ij,jk,ik->i", KB, S_BB, KB) + 2 * a0 * KB @ S[0, B]
        base = a0 * a0 * S[0, 0]
        left = 2 * KA @ S_AB
        self.best = None
        self.hits = []
        self.hit_count = 0
        self.congruence_ok = True
        for lo in range(0, len(KA), chunk):
            hi = min(lo + chunk, len(KA))
            vals = left[lo:hi] @ KB.T
            vals += qA[lo:hi, None]
            vals += qB[None, :]
            vals += base
            if np.any((vals + n) % 8):
                self.congruence_ok = False
            top = int(vals.max())
            if self.best is None or top > self.best:
                self.best, self.hits, self.hit_count = top, [], 0
            if top == self.best:
                ii, jj = np.nonzero(vals == top)
                self.hit_count += len(ii)
                room = max_keep - len(self.hits)
                for i, j in zip(ii[:room], jj[:room]):
                    self.hits.append((a0,) + tuple(KA[lo + i]) + tuple(KB[j]))


def oracle_d(g: PlumbingGraph, budget: int | None = None, workers: int = 1,
             max_steps: int = DEFAULT_STEP_BUDGET, max_keep: int = 4096,
             chunk_entries: int = 1 << 22) -> OracleResult:
    """d-invariant by exhaustive search over the adjunction window."""
    count = _check_budget(g, budget)
    rep = g.report
    if not rep.is_negative_definite:
        raise ValueError("oracle needs a negative definite graph")
    if not rep.is_unimodular:
        raise ValueError("oracle needs a unimodular graph (integral homology sphere)")
    if rep.bad_vertex_count > 1:
        raise ValueError(f"oracle needs at most one bad vertex, found {rep.bad_vertex_count}")
    n = len(g)
    windows = adjunction_windows(g)
    S = np.array([[int(x) for x in row] for row in g.inverse], dtype=object)
    bound = int(np.abs(S).max()) * sum(max(abs(w.start), abs(w[-1])) for w in windows) ** 2
    if bound >= 2 ** 62:
        raise OracleInfeasible("k^2 values would overflow 64-bit blocks")
    S = S.astype(np.int64)
    split = _split(windows)
    nb = prod(len(w) for w in windows[split:])
    chunk = max(1, chunk_entries // max(nb, 1))

    def work(a0):
        return _Slab(S, windows, split, a0, n, max_keep, chunk)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            slabs = list(pool.map(work, windows[0]))
    else:
        slabs = [work(a0) for a0 in windows[0]]

    best = max(s.best for s in slabs)
    winners = [s for s in slabs if s.best == best]
    hit_count = sum(s.hit_count for s in winners)
    log.debug("max k^2 = %d attained by %d vectors", best, hit_count)

    good = None
    for s in winners:
        for k in s.hits:
            if run_full_path(g, k, max_steps=max_steps).verdict == GOOD:
                good = k
                break
        if good:
            break
    if good is None and hit_count > sum(len(s.hits) for s in winners):
        good = _scan_for_good(g, best, max_steps)
    if good is None:
        raise OracleDisagreement(
            f"no good full path attains max k^2 = {best}; restricted and full maxima differ")
    assert k_squared(g, good) == best
    return OracleResult(Fraction(best + n, 4), best, tuple(int(x) for x in good), count,
                        hit_count, all(s.congruence_ok for s in slabs))


def _scan_for_good(g, best, max_steps):
    for k in itertools.product(*adjunction_windows(g)):
        if k_squared(g, k) == best and run_full_path(g, k, max_steps=max_steps).verdict == GOOD:
            return k
    return None


def oracle_d_naive(g: PlumbingGraph, budget: int = 1 << 16) -> tuple[Fraction, Fraction]:
    """Reference maxima (all window vectors, good-path vectors only) in pure Python.

    Only for very small graphs; returns ``(max k^2, max k^2 over good paths)``.
    """
    best = best_good = None
    for k in enumerate_initial(g, budget):
        ks = k_squared(g, k)
        if best is None or ks > best:
            best = ks
        if (best_good is None or ks > best_good) and run_full_path(g, k).verdict == GOOD:
            best_good = ks
    return best, best_good
