"""Batch front end.

    wexact homology FILE [--format ...]
    wexact snake    FILE [--format ...]
    wexact les      FILE
    wexact verify   FILE
    wexact axioms --instance pointed-sets|fgab [--max-size N] [--samples N]
                  [--seed N] [--budget SECONDS] [--deflations ...]

Exit codes: 0 verified, 1 verified-false (a well-posed check answered
"no"), 2 input/parse error, 3 hypothesis violation (the referenced
construction's preconditions fail, e.g. d^2 != 0 or a non-commuting
square).
"""

from __future__ import annotations

import argparse
import sys

from .chains import Hi_of_complex, les_of_complexes
from .core import ContractError, check_short_exact
from .diagfile import (DiagramFile, ParseError, format_morphism_decl,
                       format_object_decl, parse_diagram_file)
from .engine import (FAIL, SnakeDiagram, snake, verify_axioms_exhaustive,
                     verify_axioms_randomized)
from .fgab import FGAB, format_group
from .pointed import ALL_SURJECTIONS, PointedSetsInstance, POINTED
from .randgen import FgAbSampler

OK, VERIFIED_FALSE, PARSE_ERROR, HYPOTHESIS_ERROR = 0, 1, 2, 3


def _load(path: str) -> DiagramFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(str(e)) from None
    return parse_diagram_file(text)


def _commands(df: DiagramFile, kind: str):
    cmds = [args for head, args in df.commands if head == kind]
    if not cmds:
        raise ParseError(f"file contains no '{kind}' command")
    return cmds


def _describe(df: DiagramFile, obj) -> str:
    if df.instance == "fgab":
        return format_group(obj)
    return f"pointed set of size {obj.size}"


def cmd_homology(df: DiagramFile, out, machine: bool) -> int:
    if df.instance != "fgab":
        raise ParseError("homology requires the fgab instance")
    for (name,) in _commands(df, "homology"):
        cplx = df.build_complex(name)
        decl = df.complexes[name]
        top = cplx.hi  # homological top degree when declared descending
        degrees = (reversed(list(cplx.degrees())) if decl.homological
                   else cplx.degrees())
        for i in degrees:
            label = top - i if decl.homological else i
            H = Hi_of_complex(FGAB, cplx, i).H
            if machine:
                print(f"# H{label} of {name}", file=out)
                print(format_object_decl("fgab", f"H{label}_{name}", H),
                      file=out)
            else:
                print(f"H{label} = {format_group(H)}", file=out)
    return OK


def cmd_snake(df: DiagramFile, out, machine: bool) -> int:
    cat = df.cat
    code = OK
    for names in _commands(df, "snake"):
        ms = [df._get(df.morphisms, n, "morphism") for n in names]
        d = SnakeDiagram(phi1=ms[0], phi2=ms[1], phi1p=ms[2], phi2p=ms[3],
                         f1=cat.admissible_factorization(ms[4]),
                         f2=cat.admissible_factorization(ms[5]),
                         f3=cat.admissible_factorization(ms[6]))
        res = snake(cat, d)
        seq = [("K1", "psi1", res.psi1), ("K2", "psi2", res.psi2),
               ("K3", "delta", res.delta), ("C1", "psi1p", res.psi1p),
               ("C2", "psi2p", res.psi2p)]
        if machine:
            print(f"instance {df.instance}", file=out)
            named = {}
            for label, _, m in seq:
                named[label] = m.source
            named["C3"] = res.psi2p.target
            for label, obj in named.items():
                print(format_object_decl(df.instance, label, obj), file=out)
            tgt = {"K1": "K2", "K2": "K3", "K3": "C1", "C1": "C2",
                   "C2": "C3"}
            for label, mname, m in seq:
                print(format_morphism_decl(df.instance, mname, m,
                                           label, tgt[label]), file=out)
        else:
            print("six-term sequence K1 -> K2 -> K3 -> C1 -> C2 -> C3:",
                  file=out)
            for label, mname, m in seq:
                print(f"  {label} = {_describe(df, m.source)}", file=out)
                payload = (m.matrix.data if df.instance == "fgab"
                           else m.table)
                print(f"  {mname}: {payload}", file=out)
            print(f"  C3 = {_describe(df, res.psi2p.target)}", file=out)
        for key, rep in res.checks.items():
            verdict = "ok" if rep else "FAIL: " + "; ".join(rep.failures)
            print(f"{'# ' if machine else ''}check {key}: {verdict}",
                  file=out)
        if not res.exact:
            code = VERIFIED_FALSE
    return code


def cmd_les(df: DiagramFile, out, machine: bool) -> int:
    if df.instance != "fgab":
        raise ParseError("les requires the fgab instance")
    code = OK
    for (inc_n, proj_n) in _commands(df, "les"):
        inc = df.build_chainmap(inc_n)
        proj = df.build_chainmap(proj_n)
        res = les_of_complexes(FGAB, inc, proj)
        for label, term in zip(res.labels, res.terms):
            if machine:
                print(format_object_decl(
                    "fgab", label.replace("^", "").replace("(", "_")
                    .replace(")", "").replace("'", "p"), term), file=out)
            else:
                print(f"{label} = {format_group(term)}", file=out)
        verdict = "exact" if res.ok else "NOT exact"
        print(f"{'# ' if machine else ''}long sequence: {verdict}", file=out)
        if not res.ok:
            code = VERIFIED_FALSE
    return code


def cmd_verify(df: DiagramFile, out, machine: bool) -> int:
    cat = df.cat
    code = OK
    for (i_n, p_n) in _commands(df, "verify"):
        i = df._get(df.morphisms, i_n, "morphism")
        p = df._get(df.morphisms, p_n, "morphism")
        rep = check_short_exact(cat, i, p)
        if rep:
            print(f"({i_n}, {p_n}): short exact", file=out)
        else:
            print(f"({i_n}, {p_n}): NOT short exact: "
                  + "; ".join(rep.failures), file=out)
            code = VERIFIED_FALSE
    return code


def cmd_axioms(args, out) -> int:
    if args.instance == "pointed-sets":
        cat = (POINTED if args.deflations == "injective-off-kernel"
               else PointedSetsInstance(ALL_SURJECTIONS))
        reports = verify_axioms_exhaustive(cat, max_size=args.max_size,
                                           time_budget_s=args.budget)
    elif args.instance == "fgab":
        reports = verify_axioms_randomized(FGAB, FgAbSampler(seed=args.seed),
                                           samples=args.samples,
                                           time_budget_s=args.budget)
    else:
        raise ParseError(f"unknown instance '{args.instance}'")
    code = OK
    for r in reports:
        line = f"{r.axiom}: {r.status} ({r.checked} checks)"
        if r.counterexample:
            line += f" counterexample: {r.counterexample}"
        print(line, file=out)
        if r.status == FAIL:
            code = VERIFIED_FALSE
    return code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wexact",
                                 description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("homology", "snake", "les", "verify"):
        p = sub.add_parser(name)
        p.add_argument("file")
        p.add_argument("--format", choices=("text", "machine"),
                       default="text")
    p = sub.add_parser("axioms")
    p.add_argument("--instance", required=True,
                   choices=("pointed-sets", "fgab"))
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=float, default=120.0)
    p.add_argument("--deflations",
                   choices=("injective-off-kernel", "all-surjections"),
                   default="injective-off-kernel")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "axioms":
            return cmd_axioms(args, out)
        df = _load(args.file)
        machine = args.format == "machine"
        handler = {"homology": cmd_homology, "snake": cmd_snake,
                   "les": cmd_les, "verify": cmd_verify}[args.command]
        return handler(df, out, machine)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return PARSE_ERROR
    except ContractError as e:
        print(f"hypothesis violation: {e}", file=sys.stderr)
        return HYPOTHESIS_ERROR


if __name__ == "__main__":
    sys.exit(main())
