"""
Torsion of the standard G2 form
===============================

Each Lie algebra gives d(phi) and d(psi) through its Chevalley-Eilenberg
differential; the torsion forms fall out of those.
"""

# %%
from hetg2.exterior import render
from hetg2.g2 import classify, torsion, torsion_H
from hetg2.nilalg import catalog, catalog_entry
from hetg2.parse import parse_algebra

for entry in catalog():
    t = torsion(entry.algebra)
    c = classify(entry.algebra, t)
    print(f"{entry.name:10s} lambda={str(t.lam):5s} coclosed={c.coclosed!s:5s} g2t={c.g2t}")

# %%
# an algebra that is not two-step with a central e7: phi is not coclosed
alg = parse_algebra("(0,0,0,e13,0,e15,-e35)", strict=False)
t = torsion(alg)
print("tau1 =", render(t.tau1), "  tau2 =", render(t.tau2))

# %%
h7 = catalog_entry("h7").algebra
print("H =", render(torsion_H(h7)))
