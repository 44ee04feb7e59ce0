"""Command line front end.

Exit codes: 0 pass, 1 fail, 2 usage or parse error.
"""

import argparse
import sys
from pathlib import Path

from .exterior import render
from .parse import AlgebraError, ParseError, parse_algebra, parse_problem, parse_rational

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _algebra(text):
    from .nilalg import catalog_entry
    text = text.strip()
    try:
        return catalog_entry(text).algebra
    except KeyError:
        pass
    if Path(text).is_file():
        text = Path(text).read_text()
    return parse_algebra(text, strict=False)


def _emit(out, human, lines, fmt):
    for line in (lines if fmt == "lines" else human):
        print(line, file=out)


def cmd_catalog(args, out):
    from .nilalg import catalog, fingerprint
    human, lines = [], []
    for e in catalog():
        human.append(f"{e.name:10s} n'={e.derived_dim}  {e.display}")
        lines.append(f"ALGEBRA {e.name} {e.derived_dim} {e.display}")
        if args.fingerprints:
            fp = fingerprint(e.algebra)
            desc = (f"ranks={','.join(map(str, fp.ranks))} wedge_span={fp.wedge_span_dim} "
                    f"support={fp.support_dim} quadric={fp.wedge_form_rank} "
                    f"wedges_vanish={'yes' if fp.all_wedges_vanish else 'no'}")
            human.append(f"{'':10s} {desc}")
            lines.append(f"FINGERPRINT {e.name} {desc}")
    _emit(out, human, lines, args.format)
    return EXIT_PASS


def cmd_torsion(args, out):
    from .g2 import NoCharacteristicConnection, classify, torsion, torsion_H
    alg = _algebra(args.algebra)
    t = torsion(alg)
    c = classify(alg, t)
    vals = [("tau0", str(t.tau0)), ("tau1", render(t.tau1)), ("tau2", render(t.tau2)),
            ("tau3", render(t.tau3)), ("lambda", str(t.lam))]
    try:
        vals.append(("H", render(torsion_H(alg, t))))
    except NoCharacteristicConnection:
        vals.append(("H", "none"))
    flags = [("torsion_free", c.torsion_free), ("coclosed", c.coclosed), ("g2t", c.g2t)]
    human = [f"{k} = {v}" for k, v in vals] + [f"{k}: {'yes' if v else 'no'}" for k, v in flags]
    lines = [f"TORSION {k} = {v}" for k, v in vals] + [f"FLAG {k} {'true' if v else 'false'}" for k, v in flags]
    _emit(out, human, lines, args.format)
    return EXIT_PASS


def _problem(path):
    return parse_problem(_read(path))


def cmd_verify(args, out):
    from .hetsys import verify
    prob = _problem(args.file)
    if not prob.forms:
        raise UsageError("problem file has no [gauge] section")
    rep = verify(prob.algebra, prob.gauge())
    passed = rep.passed
    lines = rep.lines()
    if "lambda" in prob.options:
        want = parse_rational(prob.options["lambda"])
        ok = want == rep.lam
        passed = passed and ok
        lines.append(f"CHECK lambda {'PASS' if ok else 'FAIL'}" + ("" if ok else f" residual={rep.lam - want}"))
    scal = "n/a" if rep.scal_residual is None else str(rep.scal_residual)
    extra = [f"lambda = {rep.lam}", f"signature = ({rep.signature[0]},{rep.signature[1]})",
             f"scal_residual = {scal}"] + [f"note: {n}" for n in rep.notes]
    verdict = "PASS" if passed else "FAIL"
    _emit(out, lines + extra + [f"result: {verdict}"],
          lines + [f"INFO {x.replace(' = ', '=')}" for x in extra] + [f"RESULT {verdict}"], args.format)
    return EXIT_PASS if passed else EXIT_FAIL


def cmd_search(args, out):
    from .search import nonexistence_report, parse_spec, search_n1, search_n23
    spec = parse_spec(_read(args.file))
    if args.evidence:
        rep = nonexistence_report(spec)
        result, head = rep.result, rep.lines()
    else:
        result = (search_n1 if spec.reduction == "n1" else search_n23)(spec)
        head = result.lines()
    body = []
    for n, sol in enumerate(result.solutions, 1):
        body.append(f"# solution {n}")
        body.extend(sol.problem_text().rstrip("\n").splitlines())
        if args.verify:
            body.extend(sol.report.lines())
    human = head + ([""] + body if body else [])
    lines = head + [f"SOLUTION {n} lambda={s.lam} eps={','.join(map(str, s.eps))} "
                    f"alpha={salamon_of(s.algebra)} "
                    f"F={';'.join(render(f).replace(' ', '') for f in s.gauge.forms)}"
                    for n, s in enumerate(result.solutions, 1)]
    _emit(out, human, lines, args.format)
    return EXIT_PASS if result.exhaustive else EXIT_FAIL


def salamon_of(alg):
    from .nilalg import salamon
    return salamon(alg)


def cmd_bundle(args, out):
    from .bundle import NotClosedError, integrality_scan, lattice_generators, split_gauge
    prob = _problem(args.file)
    if not prob.forms:
        raise UsageError("problem file has no [gauge] section")
    gens = lattice_generators(prob.algebra, args.scale)
    ok_all = True
    lines = []
    for r, f in enumerate(prob.forms, 1):
        if not f.is_integral():
            lines.append(f"BUNDLE F{r} FAIL non-integral coefficients")
            ok_all = False
            continue
        try:
            sg = split_gauge(prob.algebra, f)
        except NotClosedError:
            lines.append(f"BUNDLE F{r} FAIL not closed")
            ok_all = False
            continue
        rep = integrality_scan(sg, gens, prob.algebra, args.words)
        ok_all = ok_all and rep.passed
        lines.append(f"BUNDLE F{r} {'PASS' if rep.passed else 'FAIL'}")
        lines.extend(f"  {x}" if args.format == "human" else x for x in rep.lines())
    lines.append(f"RESULT {'PASS' if ok_all else 'FAIL'}")
    print("\n".join(lines), file=out)
    return EXIT_PASS if ok_all else EXIT_FAIL


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting a --format given before it
    common.add_argument("--format", choices=("human", "lines"), default=argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="hetg2", description="Heterotic G2 systems on 2-step nilpotent Lie algebras.")
    p.add_argument("--format", choices=("human", "lines"), default="human")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", parents=[common], help="list the 2-step nilpotent algebras")
    c.add_argument("--fingerprints", action="store_true")
    c.set_defaults(func=cmd_catalog)

    t = sub.add_parser("torsion", parents=[common], help="torsion forms of the standard phi")
    t.add_argument("algebra", help="tuple notation, dz-lines, catalog name or a file")
    t.set_defaults(func=cmd_torsion)

    het = sub.add_parser("het", help="heterotic system").add_subparsers(dest="het", required=True)
    v = het.add_parser("verify", parents=[common], help="check a problem file")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)
    s = het.add_parser("search", parents=[common], help="run a bounded search")
    s.add_argument("file")
    s.add_argument("--verify", action="store_true", help="print full checks for each solution")
    s.add_argument("--evidence", action="store_true", help="phrase the outcome as a nonexistence report")
    s.set_defaults(func=cmd_search)

    b = sub.add_parser("bundle", help="torus bundle integrality").add_subparsers(dest="bundle", required=True)
    bc = b.add_parser("check", parents=[common], help="cocycle integrality scan")
    bc.add_argument("file")
    bc.add_argument("--scale", type=int, default=6)
    bc.add_argument("--words", type=int, default=3)
    bc.set_defaults(func=cmd_bundle)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.func(args, out)
    except (ParseError, AlgebraError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
