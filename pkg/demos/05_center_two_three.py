"""
Two- and three-dimensional derived algebras
===========================================

The coframe splits into e1..e4 and a center z1, z2, z3.  Gauge forms split
into an anti-self-dual part on e1..e4 and mixed terms v_i ^ z^i.
"""

# %%
from hetg2 import su2red
from hetg2.exterior import render
from hetg2.solutions import family_n3

s = family_n3(1)
print("a-matrix:", su2red.a_matrix(s.algebra), " lambda:", su2red.lambda_of(s.algebra))

# %%
comps = [su2red.components_of(f) for f in s.gauge.forms]
for c in comps:
    print("F0 =", render(c.F0), " v =", [render(v) for v in c.v])

# %%
rep = su2red.system_check(s.algebra, comps, s.gauge.eps, s.lam)
for name, ok in rep.items:
    print(f"{name:6s} {ok}")
