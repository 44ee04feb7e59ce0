"""Shared record of acceptance outcomes, printed at the end of the run."""

LINES = {}


def record(key, title, ok, detail=""):
    LINES[key] = f"criterion {key:>4s} {'PASS' if ok else 'FAIL'}  {title}" + (f" ({detail})" if detail else "")
