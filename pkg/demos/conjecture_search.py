"""Searching small graphs for counterexamples to the epsilon form of the phi-Turan bound.

The statement 2m <= (phi - 1) n^2 / (phi epsilon) is open.  Read literally
over all graphs, isolated vertices break it.  The right-hand side scales
like n (phi - 1) / phi, and an isolated vertex adds one to n but can drop
phi by one, which costs more than it gains.  Restricted to graphs without
isolated vertices the search comes back empty through seven vertices.

Run with ``python demos/conjecture_search.py`` (about a minute).
"""

# %%
from irreg import hunt_many
from irreg.graph import parse_graph6
from irreg.invariants import GraphInvariants

reports = hunt_many(["CONJ1", "CONJ1-NOISO"], 7, max_violations=10)
for cid, rep in reports.items():
    print(f"{cid:<12} {rep.graphs_examined:,} graphs, {rep.screened_candidates} violations"
          f"{' (first 10 kept)' if rep.truncated else ''}")

# %%
# The smallest witness: K4 minus an edge, plus one isolated vertex.
g6, res = reports["CONJ1"].violations[0]
g = parse_graph6(g6)
print(f"\n{g6}: n={g.n} m={g.m} degrees={g.degrees} isolated={g.isolated_vertices()}")
print(f"  phi = {GraphInvariants(g).phi}, slack = {res.slack:.4f}")

# %%
# Drop the isolated vertex and phi goes back up, and the bound holds.
from irreg import Graph, evaluate_check

core = Graph.from_edges(4, g.edges())
print(f"  without it: phi = {GraphInvariants(core).phi}, "
      f"{evaluate_check('CONJ1', core).status}")
