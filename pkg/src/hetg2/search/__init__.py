"""Bounded exact searches for integral solutions."""

from .n1 import orbit_key as n1_orbit_key, search_n1, solution_key as n1_solution_key
from .n23 import orbit_key as n23_orbit_key, search_n23
from .report import OPEN_TARGETS, NonexistenceReport, nonexistence_report
from .spec import SearchResult, SearchSpec, Solution, lambda_candidates, parse_spec

__all__ = ["SearchSpec", "SearchResult", "Solution", "lambda_candidates", "parse_spec", "search_n1",
           "search_n23", "nonexistence_report", "NonexistenceReport", "OPEN_TARGETS",
           "n1_orbit_key", "n1_solution_key", "n23_orbit_key"]
