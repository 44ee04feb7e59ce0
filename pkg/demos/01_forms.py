"""
Exact forms on R^7
==================

Forms carry rational coefficients, so identities hold on the nose.
"""

# %%
from hetg2.exterior import hodge, norm2, render, wedge
from hetg2.g2 import PHI, PSI
from hetg2.parse import parse_form

print("phi =", render(PHI))
print("psi =", render(PSI))

# %%
# the Hodge star of phi is psi, and phi ^ psi is 7 times the volume form
assert hodge(PHI) == PSI
print("phi ^ psi =", render(wedge(PHI, PSI)))

# %%
a = parse_form("e12 - 1/2 e34 + 3 e56")
print("a ^ a =", render(wedge(a, a)))
print("|a|^2 =", norm2(a))
