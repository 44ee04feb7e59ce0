"""
Torus bundles over nilmanifolds
===============================

An integral closed gauge form defines transition constants c(g1, g2) on
the lattice.  The bundle exists when they are integers.
"""

# %%
from hetg2 import bundle
from hetg2.exterior import e
from hetg2.parse import parse_algebra

alg = parse_algebra("(0,0,0,0,0,0,e12)")
sg = bundle.split_gauge(alg, e(17))

for scale in (1, 2, 3, 6):
    rep = bundle.integrality_scan(sg, bundle.lattice_generators(alg, scale), alg, 2)
    print(f"scale {scale}: {'PASS' if rep.passed else 'FAIL'}  denominators {rep.denominators}")

# %%
# the closed-form cocycle against a symbolic composition of transition maps
C1 = bundle.LatticeVector((1, 0, 2, 0, 0, 1), (1,))
C2 = bundle.LatticeVector((0, 1, 0, 0, 1, 0), (2,))
print(bundle.cocycle_c(sg, C1, C2), bundle.oracle_cocycle(alg, sg, C1, C2))
