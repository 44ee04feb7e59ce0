"""Text formats: forms, structure equations and problem files.

Form grammar (whitespace-insensitive)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := [rational] monomial | rational
    monomial := blade ('^' blade)*
    blade    := 'e' digit+ | 'z' digit        (z1, z2, z3 mean e5, e6, e7)
    rational := int ['/' int]
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import Form, blade, degree_of, merge_sign, render

Z_OFFSET = 4


class ParseError(ValueError):
    def __init__(self, message, text="", pos=None):
        self.pos = pos
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}" + (f" in {text!r}" if text else ""))


class AlgebraError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<blade>[ez]\d+)|(?P<op>[-+/^*]))")


def _tokens(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", text, pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


def _blade_mask(tok, pos, n, text):
    head, digits = tok[0], tok[1:]
    if head == "z":
        if len(digits) != 1 or not 1 <= int(digits) <= 3:
            raise ParseError(f"bad center blade {tok!r}", text, pos)
        idx = [int(digits) + Z_OFFSET]
    else:
        idx = [int(ch) for ch in digits]
    for i in idx:
        if not 1 <= i <= n:
            raise ParseError(f"index {i} out of range 1..{n}", text, pos)
    if len(set(idx)) != len(idx):
        raise ParseError(f"repeated index in blade {tok!r}", text, pos)
    # e31 is read as e^3 ^ e^1 = -e^13
    sign, mask = 1, 0
    for i in idx:
        bit = 1 << (i - 1)
        sign *= merge_sign(mask, bit)
        mask |= bit
    return mask, sign


def parse_form(text, n=7):
    """Parse a form expression; the degree is read off the blades."""
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty form", text, 0)
    terms = {}
    degree = None
    i = 0
    first = True
    while i < len(toks):
        sign = 1
        kind, val, pos = toks[i]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-'", text, pos)
        first = False
        if i >= len(toks):
            raise ParseError("dangling sign", text, len(text))
        coeff = None
        kind, val, pos = toks[i]
        if kind == "num":
            num = int(val)
            i += 1
            if i < len(toks) and toks[i][1] == "/":
                if i + 1 >= len(toks) or toks[i + 1][0] != "num":
                    raise ParseError("expected denominator", text, toks[i][2])
                den = int(toks[i + 1][1])
                if den == 0:
                    raise ParseError("zero denominator", text, toks[i + 1][2])
                coeff = Fraction(num, den)
                i += 2
            else:
                coeff = Fraction(num)
            if i < len(toks) and toks[i][1] == "*":
                i += 1
        mask, bsign = 0, 1
        have_blade = False
        while i < len(toks) and toks[i][0] == "blade":
            m, s = _blade_mask(toks[i][1], toks[i][2], n, text)
            s2 = merge_sign(mask, m)
            if not s2:
                raise ParseError("repeated index in monomial", text, toks[i][2])
            mask |= m
            bsign *= s * s2
            have_blade = True
            i += 1
            if i < len(toks) and toks[i][1] == "^":
                if i + 1 >= len(toks) or toks[i + 1][0] != "blade":
                    raise ParseError("expected blade after '^'", text, toks[i][2])
                i += 1
        if coeff is None and not have_blade:
            raise ParseError(f"unexpected {val!r}", text, pos)
        if coeff is None:
            coeff = Fraction(1)
        p = degree_of(mask)
        if degree is None:
            degree = p
        elif degree != p:
            raise ParseError(f"mixed degrees {degree} and {p}", text, pos)
        terms[mask] = terms.get(mask, 0) + sign * bsign * coeff
        if i < len(toks) and toks[i][0] != "op":
            raise ParseError(f"unexpected {toks[i][1]!r}", text, toks[i][2])
    return Form(n, degree, terms)


def render_tuple(alg):
    parts = ["0" if not f else render(f).replace(" ", "") for f in alg.structure]
    return "(" + ",".join(parts) + ")"


def _split_tuple(text):
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError("structure tuple must be enclosed in parentheses", text, 0)
    parts = body[1:-1].split(",")
    if len(parts) != 7:
        raise ParseError(f"expected 7 entries, got {len(parts)}", text, 0)
    return parts


def parse_algebra(text, name="", strict=True):
    """Structure equations as a Salamon tuple or as 'dz1 = ...'/'de7 = ...' lines.

    strict requires normal form (closed coordinates first); the relaxed mode
    accepts any coordinate-adapted two-step algebra, e.g. for torsion tests.
    """
    from .nilalg import LieAlgebra, validate
    text = text.strip()
    if text.startswith("("):
        structure = []
        for part in _split_tuple(text):
            part = part.strip()
            structure.append(Form(7, 2) if part in ("0", "") else parse_form(part))
    else:
        structure = [Form(7, 2)] * 7
        seen = set()
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            m = re.fullmatch(r"d([ez])(\d)\s*=\s*(.+)", line)
            if not m:
                raise ParseError("expected 'dzN = <form>' or 'deN = <form>'", line, 0)
            idx = int(m.group(2)) + (Z_OFFSET if m.group(1) == "z" else 0)
            if not 1 <= idx <= 7 or (m.group(1) == "z" and not 1 <= int(m.group(2)) <= 3):
                raise ParseError(f"bad coordinate d{m.group(1)}{m.group(2)}", line, 0)
            if idx in seen:
                raise ParseError(f"coordinate {idx} given twice", line, 0)
            seen.add(idx)
            structure[idx - 1] = parse_form(m.group(3))
    for k, f in enumerate(structure):
        if f.p != 2 and f:
            raise AlgebraError(f"de{k + 1} must be a 2-form")
        if f.p != 2:
            structure[k] = Form(7, 2)
    alg = LieAlgebra(tuple(structure), name)
    diag = validate(alg)
    problems = [m for m in diag.messages if m != "abelian algebra"]
    if strict and not diag.normal_form:
        raise AlgebraError("not normal form: " + "; ".join(problems))
    bad = not (diag.d_squared_zero and diag.independent and diag.two_step)
    if bad:
        raise AlgebraError("; ".join(problems))
    return alg


def parse_rational(text):
    text = text.strip()
    if not re.fullmatch(r"[-+]?\d+(/\d+)?", text):
        raise ParseError("bad rational", text, 0)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError("zero denominator", text, 0) from None


def parse_rational_list(text):
    text = text.strip()
    if not text:
        return []
    return [parse_rational(t) for t in text.split(",")]


def render_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass
class ProblemFile:
    algebra_text: str
    algebra: object
    forms: list = field(default_factory=list)
    eps: list = field(default_factory=list)
    options: dict = field(default_factory=dict)

    def gauge(self):
        from .hetsys import GaugeField
        return GaugeField(tuple(self.forms), tuple(self.eps))


def _sections(text):
    sections = {}
    current = None
    order = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"\[(\w+)\]", line)
        if m:
            current = m.group(1)
            if current in sections:
                raise ParseError(f"section [{current}] repeated (line {lineno})")
            if current not in ("algebra", "gauge", "options", "search"):
                raise ParseError(f"unknown section [{current}] (line {lineno})")
            sections[current] = []
            order.append(current)
            continue
        if current is None:
            raise ParseError(f"content outside a section (line {lineno})")
        sections[current].append((lineno, line))
    return sections


def _key_values(lines):
    out = {}
    for lineno, line in lines:
        if "=" not in line:
            raise ParseError(f"expected 'key = value' (line {lineno})")
        k, v = (s.strip() for s in line.split("=", 1))
        if k in out:
            raise ParseError(f"key {k!r} repeated (line {lineno})")
        out[k] = v
    return out


def parse_problem(text, strict=True):
    secs = _sections(text)
    if "algebra" not in secs:
        raise ParseError("missing [algebra] section")
    alg_text = "\n".join(line for _, line in secs["algebra"])
    alg = parse_algebra(alg_text, strict=strict)
    forms, eps = [], []
    if "gauge" in secs:
        kv = _key_values(secs["gauge"])
        names = sorted((k for k in kv if k != "eps"), key=lambda k: (len(k), k))
        for r, k in enumerate(names, 1):
            if k != f"F{r}":
                raise ParseError(f"gauge forms must be F1..Fk in order, found {k!r}")
            f = parse_form(kv[k])
            if f.p != 2:
                if f:
                    raise ParseError(f"{k} is not a 2-form")
                f = Form(7, 2)
            forms.append(f)
        eps = parse_rational_list(kv.get("eps", ""))
        if len(eps) != len(forms):
            raise ParseError(f"{len(forms)} gauge forms but {len(eps)} eps values")
        if any(x == 0 for x in eps):
            raise ParseError("eps values must be nonzero")
    options = _key_values(secs.get("options", []))
    return ProblemFile(alg_text, alg, forms, eps, options)


def render_problem(prob):
    lines = ["[algebra]"]
    if prob.algebra_text.lstrip().startswith("("):
        lines.append(render_tuple(prob.algebra))
    else:
        for i, f in enumerate(prob.algebra.structure, 1):
            if f:
                lines.append(f"de{i} = {render(f)}")
    if prob.forms:
        lines += ["", "[gauge]"]
        for r, f in enumerate(prob.forms, 1):
            lines.append(f"F{r} = {render(f)}")
        lines.append("eps = " + ", ".join(render_rational(x) for x in prob.eps))
    if prob.options:
        lines += ["", "[options]"]
        for k, v in prob.options.items():
            lines.append(f"{k} = {v}")
    return "\n".join(lines) + "\n"


def problem_from_data(alg, forms, eps, options=None):
    return ProblemFile(render_tuple(alg), alg, list(forms), [Fraction(x) for x in eps], dict(options or {}))
