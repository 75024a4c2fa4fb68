"""Full paths on the all -2 chain A_t.

Only the zero vector and the vectors with a single 2 support good paths; a
2 in position s ends up as a -2 in position t - s + 1.

Run with ``python demos/04_simple_linear_paths.py``.
"""
from brieskorn.oracle import GOOD, classify_terminals, run_full_path
from brieskorn.plumbing import build_simple_linear

t = 5
for k, out in sorted(classify_terminals(t).items()):
    if out.verdict == GOOD:
        print(f"{k} -> {out.terminal}  ({out.steps} steps)")
bad = sum(out.verdict != GOOD for out in classify_terminals(t).values())
print(f"{bad} of {2 ** t} initial vectors are bad")

# One path step by step.
out = run_full_path(build_simple_linear(4), (0, 2, 0, 0), record=True)
print("\n ~ ".join(str(x) for x in out.trail))
