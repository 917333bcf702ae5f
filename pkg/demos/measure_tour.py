"""A tour of the four multiplicative irregularity measures.

Run with ``python demos/measure_tour.py``.
"""

# %%
# Every measure equals 1 on a regular graph and grows as degrees spread out.
# The star is the extreme case: all four coincide at n^2 / (4(n - 1)).
from irreg import generate
from irreg.invariants import GraphInvariants

specs = ["cycle:8", "petersen", "wheel:7", "dutch_windmill:5,4", "figure1", "figure2", "star:8"]

print(f"{'graph':<22}{'nu':>10}{'eps^2':>10}{'beta^2':>10}{'gamma':>10}")
for spec in specs:
    inv = GraphInvariants(generate(spec))
    print(f"{spec:<22}{float(inv.nu):>10.4f}{inv.eps ** 2:>10.4f}{inv.beta ** 2:>10.4f}{inv.gamma:>10.4f}")

# %%
# nu is exact.  For the windmill it is 8/5 even though eps^2 and beta^2 are
# irrational.  eps <= nu <= beta^2 and nu <= gamma always hold; beta^2 and
# gamma are not ordered (compare figure1 and the windmill above).
w = GraphInvariants(generate("dutch_windmill:5,4"))
print("\nwindmill nu =", w.nu, " eps <= nu <= beta^2:", w.eps <= w.nu <= w.beta ** 2,
      " nu <= gamma:", w.nu <= w.gamma)

# %%
# The normalised heterogeneity indices map regular graphs to 0 and stars to 1.
for spec in ("cycle:8", "wheel:7", "star:8"):
    inv = GraphInvariants(generate(spec))
    print(f"{spec:<10} rho_n={inv.rho_n:.4f} nu_n={float(inv.nu_n):.4f} "
          f"eps_n={inv.eps_n:.4f} beta_n={inv.beta_n:.4f}")

# %%
# nu converts from the coefficient of variation of the degrees: nu = 1 + cv^2.
from irreg import nu_from_cv

print("\ncv = 3.685  ->  nu =", round(nu_from_cv(3.685), 3))
