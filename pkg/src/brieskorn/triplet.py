from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True, order=True)
class Triplet:
    """Ordered, pairwise coprime ``p < q < r`` with ``pq + pr - qr = 1``."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        p, q, r = self.p, self.q, self.r
        if not (0 < p < q < r):
            raise ValueError(f"need 0 < p < q < r, got {(p, q, r)}")
        if p * q + p * r - q * r != 1:
            raise ValueError(f"{(p, q, r)} violates pq + pr - qr = 1 (value {p * q + p * r - q * r})")
        # Any common factor would divide pq + pr - qr = 1, but check anyway.
        if gcd(p, q) != 1 or gcd(p, r) != 1 or gcd(q, r) != 1:
            raise ValueError(f"{(p, q, r)} is not pairwise coprime")

    def __iter__(self):
        return iter((self.p, self.q, self.r))

    def __str__(self):
        return f"({self.p},{self.q},{self.r})"
