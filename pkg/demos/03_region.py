"""Slice-by-slice view of the region f(x, y) >= f(1, 1) for (11, 12, 131).

Prints the exact slice data; when matplotlib is available the region and
the lattice points are also drawn to ``region_11_12_131.png``.

Run with ``python demos/03_region.py``.
"""
from brieskorn import Triplet, d_invariant, f_eval, region_dump

t = Triplet(11, 12, 131)
res = d_invariant(t)
print(f"d{t} = {res.d}, max f = {res.max_f} at {tuple(res.argmax)}")
print(" m   delta   centre     radius^2     a*  f(a*,m)  in region")
for s in region_dump(t):
    print(f"{s.m:2d} {s.delta:7d} {str(s.center):>8s} {str(s.radius_sq):>12s} {s.nearest_odd:4d} "
          f"{s.f_at_best:8d}  {s.in_region}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np
except ImportError:
    raise SystemExit(0)

x = np.linspace(-t.p, t.p, 801)
y = np.linspace(0, (t.p - 1) / 2, 401)
X, Y = np.meshgrid(x, y)
F = -(t.q + t.r) * X ** 2 + 4 * t.q * X * Y - 4 * (t.q - t.p) * Y ** 2 - 4 * Y
fig, ax = plt.subplots(figsize=(8, 3))
ax.contourf(X, Y, F >= f_eval(t, 1, 1), levels=[0.5, 1.5], colors=["#9ecae1"])
pts = [(a, m) for m in range((t.p - 1) // 2 + 1) for a in range(-t.p, t.p + 1, 2)]
ax.scatter(*zip(*pts), s=8, color="k")
ax.scatter([res.argmax.a], [res.argmax.m], s=40, color="r")
ax.set_xlabel("a")
ax.set_ylabel("m")
fig.tight_layout()
fig.savefig("region_11_12_131.png", dpi=120)
print("wrote region_11_12_131.png")
