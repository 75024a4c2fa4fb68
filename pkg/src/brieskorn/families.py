"""Parametric families of triplets and batch verification of their d-invariants."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .arith import divisor_pairs
from .lattice import LatticePoint, d_invariant
from .triplet import Triplet


def poly_eval(coeffs: Sequence[int], n: int) -> int:
    """Evaluate ascending-degree integer coefficients at ``n``."""
    return sum(c * n ** i for i, c in enumerate(coeffs))


def poly_str(coeffs: Sequence[int], var: str = "n") -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if i and abs(c) == 1:
            coef = "-" if c < 0 else ""
        else:
            coef = str(c)
        terms.append(coef + mono)
    if not terms:
        return "0"
    return "+".join(reversed(terms)).replace("+-", "-")


@dataclass(frozen=True)
class FamilySpec:
    """A one-parameter family of triplets.

    Polynomial members (the usual case) store ascending coefficients for
    p, q, r and, when known, the expected d.  A family that is not
    polynomial in n supplies ``generator`` instead.
    """

    name: str
    p: tuple[int, ...] = ()
    q: tuple[int, ...] = ()
    r: tuple[int, ...] = ()
    expected_d: tuple[int, ...] | None = None
    n_min: int = 1
    generator: Callable[[int], tuple[int, int, int]] | None = None

    def triplet(self, n: int) -> Triplet:
        if n < self.n_min:
            raise ValueError(f"family {self.name} starts at n = {self.n_min}")
        if self.generator is not None:
            return Triplet(*self.generator(n))
        return Triplet(poly_eval(self.p, n), poly_eval(self.q, n), poly_eval(self.r, n))

    def expected(self, n: int) -> int | None:
        return None if self.expected_d is None else poly_eval(self.expected_d, n)

    def describe(self) -> str:
        if self.generator is not None:
            return self.name
        form = ",".join(poly_str(c) for c in (self.p, self.q, self.r))
        tail = "" if self.expected_d is None else f" -> d = {poly_str(self.expected_d)}"
        return f"({form}){tail}"

    def to_json(self) -> dict:
        if self.generator is not None:
            raise ValueError(f"family {self.name} is not polynomial")
        return {"name": self.name, "p": list(self.p), "q": list(self.q), "r": list(self.r),
                "expected_d": None if self.expected_d is None else list(self.expected_d),
                "n_min": self.n_min}

    @classmethod
    def from_json(cls, data: dict) -> "FamilySpec":
        def coeffs(key):
            c = tuple(int(x) for x in data[key])
            if not 1 <= len(c) <= 3:
                raise ValueError(f"{key}: expected 1 to 3 coefficients")
            return c

        exp = data.get("expected_d")
        return cls(str(data["name"]), coeffs("p"), coeffs("q"), coeffs("r"),
                   None if exp is None else coeffs("expected_d"), int(data.get("n_min", 1)))


def load_family(path: str) -> FamilySpec:
    with open(path) as fh:
        return FamilySpec.from_json(json.load(fh))


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _fibonacci_triplet(n: int) -> tuple[int, int, int]:
    return fibonacci(2 * n + 1), fibonacci(2 * n + 2), fibonacci(2 * n + 3)


def builtin_families() -> list[FamilySpec]:
    return [
        FamilySpec("1", (1, 2), (1, 4), (3, 4), (0, 2)),
        FamilySpec("2", (1, 2), (2, 3), (1, 6), (0, 2)),
        FamilySpec("3", (1, 2), (1, 3), (5, 6), (0, 2)),
        FamilySpec("4", (3, 4), (4, 5), (11, 20), (2, 6)),
        FamilySpec("5", (1, 2), (2, 2), (1, 6, 4), (0, 1, 1)),
        FamilySpec("consecutive", (0, 1), (1, 1), (-1, 1, 1), None, n_min=2),
        FamilySpec("fibonacci", generator=_fibonacci_triplet),
    ]


def get_family(name: str) -> FamilySpec:
    for spec in builtin_families():
        if spec.name == name:
            return spec
    raise KeyError(f"unknown family {name!r}")


def enumerate_triplets(p: int) -> list[Triplet]:
    """All triplets with smallest entry ``p``: ``(p, p+s, p+(p^2-1)/s)``.

    The relation pq + pr - qr = 1 rearranges to ``(q-p)(r-p) = p^2 - 1``, so the
    divisor pairs of ``p^2 - 1`` give every solution exactly once.
    """
    if p <= 1:
        raise ValueError("p must be at least 2")
    return [Triplet(p, p + s, p + t) for s, t in divisor_pairs(p * p - 1) if s < t]


@dataclass(frozen=True)
class FamilyRow:
    n: int
    triplet: Triplet
    d_computed: int
    d_expected: int | None
    match: bool | None
    argmax: LatticePoint | None
    qhb_obstructed: bool
    bound_ok: bool


@dataclass(frozen=True)
class FamilyReport:
    family: str
    rows: tuple[FamilyRow, ...]

    @property
    def mismatches(self) -> int:
        return sum(1 for row in self.rows if row.match is False)


def verify_family(spec: FamilySpec, n_range: Iterable[int]) -> FamilyReport:
    rows = []
    for n in n_range:
        t = spec.triplet(n)
        res = d_invariant(t)
        exp = spec.expected(n)
        rows.append(FamilyRow(n, t, res.d, exp, None if exp is None else res.d == exp,
                              res.argmax, res.qhb_obstructed,
                              t.p % 2 == 0 or res.d >= t.p - 1))
    return FamilyReport(spec.name, tuple(rows))
