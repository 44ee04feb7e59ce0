"""
Checking a heterotic solution
=============================

verify() runs each equation separately and reports one CHECK line per item.
"""

# %%
from hetg2.hetsys import GaugeField, verify
from hetg2.parse import parse_algebra, parse_form

alg = parse_algebra("(0,0,0,0,0,0,e12+e34+e56)")
g = GaugeField((parse_form("-2 e12 + e34 + e56"), parse_form("e34 - e56")), ("1/2", "3/2"))
rep = verify(alg, g)
print("\n".join(rep.lines()))
print("lambda", rep.lam, "signature", rep.signature, "scal residual", rep.scal_residual)

# %%
# flip one sign and the Bianchi identity breaks
bad = GaugeField(g.forms, ("1/2", "-3/2"))
print(verify(alg, bad)["bianchi"].line())

# %%
from hetg2.solutions import all_solutions

for s in all_solutions():
    r = verify(s.algebra, s.gauge)
    print(f"{s.key:20s} {'PASS' if r.passed else 'FAIL'} lambda={s.lam}")
