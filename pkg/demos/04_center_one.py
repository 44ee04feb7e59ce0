"""
One-dimensional derived algebra
===============================

With dz = 2 lambda omega + alpha0 the Bianchi identity becomes a quadratic
equation among primitive (1,1)-forms, equivalently among J-commuting
symmetric matrices.
"""

# %%
from fractions import Fraction

from hetg2 import su3red
from hetg2.exterior import e, render

d = su3red.decompose2(e(13, n=6))
print("b =", d.b, " beta =", render(d.beta), " sigma =", render(d.sigma))

# %%
alpha0 = e(12, n=6) * -2 + e(34, n=6) + e(56, n=6)
pairs = [(alpha0, 1)]
for lam in (0, Fraction(1, 2)):
    print("lambda", lam, "reduced equation:", su3red.reduced_equation_check(alpha0, lam, pairs))

# %%
L = su3red.endo_of_form(alpha0)
for row in L.rows:
    print(" ".join(f"{str(x):>3s}" for x in row))
