"""Plausible-looking bounds that fail, and the small graphs that break them.

Run with ``python demos/counterexamples.py``; the last cell takes about ten
seconds.
"""

# %%
# Replacing sqrt(nu) by nu in the phi-Turan bound looks harmless, since the
# phi bound already holds with sqrt(nu).  Two degree-5 vertices sharing a
# triangle break it, and the failure is exact rational arithmetic.
from irreg import evaluate_check, generate

g = generate("figure1")
res = evaluate_check("FALSE-PHI-ν", g)
print("figure1 degrees", sorted(g.degrees, reverse=True))
print(f"  2m = {res.lhs_value}, bound = {res.rhs_value}, slack = {res.slack} -> {res.status}")
print("  with sqrt(nu) instead:", evaluate_check("BN", g).status)

# %%
# The spectral clique bound n/(n - mu) <= omega does not survive swapping omega
# for the weaker phi.
g = generate("figure2")
res = evaluate_check("CVET-φ", g)
print(f"\nfigure2: n/(n - mu) = {res.lhs_value:.4f} > phi = {res.rhs_value}")
print("  against omega:", evaluate_check("CVET", g).status)

# %%
# Exhaustive search finds every labeled witness with up to seven vertices.
# Only the first few are kept in the report.
from irreg import hunt
from irreg.graph import parse_graph6

rep = hunt("FALSE-PHI-ν", 7, max_violations=5)
print(f"\nFALSE-PHI-ν: {rep.screened_candidates} candidates over {rep.graphs_examined:,} graphs")
for g6, r in rep.violations:
    print(f"  {g6:<10} degrees {sorted(parse_graph6(g6).degrees, reverse=True)}  slack {r.slack}")
