"""
Bounded searches
================

Searches enumerate integer data in a box, up to symmetry, and solve the
reduced equations exactly.  An empty exhaustive scan is evidence within the
box and nothing more.
"""

# %%
from hetg2.search import SearchSpec, nonexistence_report, search_n1

spec = SearchSpec("n1", 1, 2, (0,), eps=(1,), alpha_rank=4, nontrivial=True, max_solutions=3)
r = search_n1(spec)
print("\n".join(r.lines()))
print(r.solutions[0].problem_text())

# %%
rep = nonexistence_report(SearchSpec("n1", 1, 2, (-1, 1), signs="-"))
print("\n".join(rep.lines()))
