"""Plumbing trees, their intersection lattices and characteristic vectors.

A graph is stored as a tuple of vertex weights plus an undirected edge list;
vertex ids are ``0..n-1``.  A characteristic vector is a tuple of its
evaluations on the vertices.

ASL labelling (``build_asl_graph``)::

    id 0            the -p vertex, attached to the centre
    id 1            the centre (-2)
    ids 2..q        the q-arm of (q-1) vertices of weight -2, outward
    ids q+1..q+r-1  the r-arm of (r-1) vertices of weight -2, outward;
                    id q+r-1 is the free end

``make_k_am`` puts its -2 on the r-arm vertex ``q+r-m``, i.e. m-1 steps in
from the free end.  With this choice the inverse entries are
``I^-1[0,0] = -(q+r)``, ``I^-1[0,q+r-m] = -qm`` and
``I^-1[q+r-m,q+r-m] = -(q-p)m^2 - m``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .arith import (
    SeifertData,
    bareiss_determinant,
    cf_expand,
    exact_inverse,
    leading_principal_minors,
    solve_exact,
)
from .triplet import Triplet


class PlumbingGraph:
    """Weighted tree; immutable once built."""

    def __init__(self, weights: Sequence[int], edges: Iterable[tuple[int, int]]):
        self.weights = tuple(int(w) for w in weights)
        n = len(self.weights)
        if n == 0:
            raise ValueError("a plumbing graph needs at least one vertex")
        adj = [[] for _ in range(n)]
        clean = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge {(u, v)}")
            clean.append((min(u, v), max(u, v)))
            adj[u].append(v)
            adj[v].append(u)
        if len(set(clean)) != len(clean):
            raise ValueError("repeated edge")
        if len(clean) != n - 1:
            raise ValueError("a tree on n vertices has n-1 edges")
        self.edges = tuple(sorted(clean))
        self.adjacency = tuple(tuple(sorted(a)) for a in adj)
        if len(self._component(0, frozenset())) != n:
            raise ValueError("graph is not connected")

    def __len__(self):
        return len(self.weights)

    def __repr__(self):
        return f"PlumbingGraph(weights={list(self.weights)}, edges={list(self.edges)})"

    def __eq__(self, other):
        return (isinstance(other, PlumbingGraph)
                and self.weights == other.weights and self.edges == other.edges)

    def __hash__(self):
        return hash((self.weights, self.edges))

    def valency(self, v: int) -> int:
        return len(self.adjacency[v])

    def matrix(self, vertices: Sequence[int] | None = None) -> list[list[int]]:
        """Intersection matrix, optionally restricted to ``vertices``."""
        vs = list(range(len(self))) if vertices is None else list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        m = [[0] * len(vs) for _ in vs]
        for i, v in enumerate(vs):
            m[i][i] = self.weights[v]
            for w in self.adjacency[v]:
                if w in pos:
                    m[i][pos[w]] = 1
        return m

    def _component(self, start: int, removed: frozenset) -> list[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if w not in seen and w not in removed:
                    seen.add(w)
                    queue.append(w)
        return sorted(seen)

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Connected components of the forest left after deleting ``removed``."""
        removed = frozenset(removed)
        left = [v for v in range(len(self)) if v not in removed]
        comps, seen = [], set()
        for v in left:
            if v not in seen:
                comp = self._component(v, removed)
                seen.update(comp)
                comps.append(comp)
        return comps

    def path(self, v: int, w: int) -> list[int]:
        """Vertices on the unique minimal path from ``v`` to ``w``."""
        parent = {v: None}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            if x == w:
                break
            for y in self.adjacency[x]:
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        out = [w]
        while out[-1] != v:
            out.append(parent[out[-1]])
        return out[::-1]

    # -- lattice caches -------------------------------------------------------

    @cached_property
    def _elimination(self):
        """Leaf-first elimination order with its pivots, or None on a zero pivot.

        Eliminating a tree from the leaves inward causes no fill-in, so the
        pivots are a complete factorization of the intersection matrix.
        """
        order = [0]
        parent = [-1] * len(self)
        for v in order:
            for w in self.adjacency[v]:
                if w != parent[v] and w != 0:
                    parent[w] = v
                    order.append(w)
        pivots = [Fraction(0)] * len(self)
        for v in reversed(order):
            piv = Fraction(self.weights[v])
            for c in self.adjacency[v]:
                if c != parent[v]:
                    piv -= 1 / pivots[c]
            if piv == 0:
                return None
            pivots[v] = piv
        return order, parent, pivots

    def solve(self, rhs: Sequence[int]) -> list[Fraction]:
        """Exact solution ``x`` of ``I x = rhs``."""
        elim = self._elimination
        if elim is None:
            return solve_exact(self.matrix(), [list(rhs)])[0]
        order, parent, pivots = elim
        y = [Fraction(b) for b in rhs]
        for v in reversed(order):
            if parent[v] >= 0:
                y[parent[v]] -= y[v] / pivots[v]
        x = [Fraction(0)] * len(self)
        for v in order:
            up = x[parent[v]] if parent[v] >= 0 else 0
            x[v] = (y[v] - up) / pivots[v]
        return x

    @cached_property
    def inverse(self) -> list[list[Fraction]]:
        if determinant(self) == 0:
            raise ZeroDivisionError("intersection matrix is singular")
        if self._elimination is None:
            return exact_inverse(self.matrix())
        n = len(self)
        cols = [self.solve([int(i == j) for i in range(n)]) for j in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    @cached_property
    def report(self) -> "GraphReport":
        minors = leading_principal_minors(self.matrix())
        nd = len(minors) == len(self) and all(
            (d < 0 if k % 2 == 0 else d > 0) for k, d in enumerate(minors))
        det = determinant(self)
        bad = sum(1 for v in range(len(self)) if self.valency(v) > -self.weights[v])
        return GraphReport(nd, abs(det) == 1, bad, det)

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": i, "weight": w} for i, w in enumerate(self.weights)],
            "edges": [[u, v] for u, v in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PlumbingGraph":
        verts = sorted(data["vertices"], key=lambda d: d["id"])
        if [d["id"] for d in verts] != list(range(len(verts))):
            raise ValueError("vertex ids must be 0..n-1")
        return cls([d["weight"] for d in verts], [tuple(e) for e in data["edges"]])

    def to_dot(self, name: str = "plumbing") -> str:
        lines = [f"graph {name} {{"]
        for i, w in enumerate(self.weights):
            lines.append(f'  v{i} [label="{w}"];')
        for u, v in self.edges:
            lines.append(f"  v{u} -- v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GraphReport:
    is_negative_definite: bool
    is_unimodular: bool
    bad_vertex_count: int
    determinant: int


# -- builders -----------------------------------------------------------------

def _chain(weights, edges, start_id, attach_to, arm_weights):
    prev = attach_to
    for i, w in enumerate(arm_weights):
        vid = start_id + i
        weights.append(w)
        edges.append((prev, vid))
        prev = vid


def build_asl_graph(t: Triplet) -> PlumbingGraph:
    if not isinstance(t, Triplet):
        t = Triplet(*t)
    p, q, r = t
    weights = [-p, -2]
    edges = [(0, 1)]
    _chain(weights, edges, 2, 1, [-2] * (q - 1))
    _chain(weights, edges, q + 1, 1, [-2] * (r - 1))
    return PlumbingGraph(weights, edges)


def build_star_graph(p: int, q: int, r: int, seifert: SeifertData) -> PlumbingGraph:
    """Centre (id 0) of weight e0 with arms for p/p', q/q', r/r', in that order."""
    weights = [seifert.e0]
    edges = []
    for mult, prime in ((p, seifert.p_prime), (q, seifert.q_prime), (r, seifert.r_prime)):
        if mult == 1:
            continue
        arm = [-t for t in cf_expand(mult, prime)]
        _chain(weights, edges, len(weights), 0, arm)
    return PlumbingGraph(weights, edges)


def build_simple_linear(tcount: int) -> PlumbingGraph:
    if tcount < 1:
        raise ValueError("A_t needs t >= 1")
    return PlumbingGraph([-2] * tcount, [(i, i + 1) for i in range(tcount - 1)])


def build_linear(weights: Sequence[int]) -> PlumbingGraph:
    return PlumbingGraph(weights, [(i, i + 1) for i in range(len(weights) - 1)])


# -- lattice queries ----------------------------------------------------------

def determinant(g: PlumbingGraph, without: Iterable[int] = ()) -> int:
    """Determinant of the intersection matrix of ``g`` minus the ``without`` vertices.

    Evaluated component by component; the empty graph has determinant 1.
    """
    det = 1
    for comp in g.components(without):
        det *= bareiss_determinant(g.matrix(comp))
    return det


def validate(g: PlumbingGraph) -> GraphReport:
    return g.report


def inverse_entry(g: PlumbingGraph, v: int, w: int) -> Fraction:
    """``I^-1[v, w] = -|det(I minus the v-w path) / det(I)|``."""
    rep = g.report
    if not rep.is_negative_definite:
        raise ValueError("inverse_entry needs a negative definite graph")
    return -abs(Fraction(determinant(g, g.path(v, w)), rep.determinant))


def is_characteristic(g: PlumbingGraph, k: Sequence[int]) -> bool:
    return len(k) == len(g) and all((x + e) % 2 == 0 for x, e in zip(k, g.weights))


def k_squared(g: PlumbingGraph, k: Sequence[int]) -> Fraction:
    """Degree ``k^t I^-1 k`` of a characteristic vector."""
    if not is_characteristic(g, k):
        raise ValueError(f"{tuple(k)} is not characteristic")
    if g.report.determinant == 0:
        raise ZeroDivisionError("intersection matrix is singular")
    x = g.solve(k)
    return sum((ki * xi for ki, xi in zip(k, x) if ki), Fraction(0))


def asl_parameters(g: PlumbingGraph) -> Triplet:
    """Recover ``(p, q, r)`` from a graph in the ASL labelling."""
    n = len(g)
    if n < 4 or g.adjacency[0] != (1,):
        raise ValueError("not an ASL-labelled graph")
    q = max(g.adjacency[1]) - 1
    t = Triplet(-g.weights[0], q, n - q)
    if g != build_asl_graph(t):
        raise ValueError("not an ASL-labelled graph")
    return t


def make_k_am(g: PlumbingGraph, a: int, m: int) -> tuple[int, ...]:
    p, q, r = asl_parameters(g)
    if a % 2 == 0 or abs(a) > p:
        raise ValueError(f"a must be odd with |a| <= {p}, got {a}")
    if not 0 <= m <= (p - 1) // 2:
        raise ValueError(f"m must lie in 0..{(p - 1) // 2}, got {m}")
    k = [0] * len(g)
    k[0] = a
    if m:
        k[q + r - m] = -2
    return tuple(k)


def canonical_form(g: PlumbingGraph) -> str:
    """Isomorphism-invariant string for a weighted tree (AHU encoding at the centre)."""
    n = len(g)
    degree = [g.valency(v) for v in range(n)]
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.adjacency[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt

    def encode(root):
        # Iterative post-order; arms can be thousands of vertices long.
        order, parent = [root], {root: -1}
        for v in order:
            for w in g.adjacency[v]:
                if w != parent[v]:
                    parent[w] = v
                    order.append(w)
        codes = {}
        for v in reversed(order):
            kids = sorted(codes.pop(w) for w in g.adjacency[v] if w != parent[v])
            codes[v] = f"({g.weights[v]}{''.join(kids)})"
        return codes[root]

    return min(encode(c) for c in layer)


def isomorphic(g: PlumbingGraph, h: PlumbingGraph) -> bool:
    return len(g) == len(h) and canonical_form(g) == canonical_form(h)
