"""Command-line front end: ``elpkit solve|check|analyze|compare|split|fuzz``.

Exit codes: 0 on a positive answer (world views found, layering exists,
engines agree, properties hold), 1 on a negative one, 2 on usage, parse or
enumeration-cap errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analysis import dep_pairs, stratify, tight_stratify, violation
from .core import EnumerationCapError, ParseError, Program, parse_program, parse_rule, parse_theory, print_program
from .harness import FORMULA_PROPERTIES, PROPERTIES, GenConfig, check_property, report_json, report_text, run_battery
from .semantics import SEMANTICS, SPLITTING_SEMANTICS, world_views
from .splitting import NotASplittingSet, POLICIES, compose, solutions, split
from ._kernel import view_key

EXPENSIVE_CAP = 4
G91_CAP = 5
FORCED_CAP = 5

ENGINE_NAMES = {"char": "characterization", "characterization": "characterization", "direct": "direct"}


class UsageError(Exception):
    pass


def canonical_view(w) -> list[list[str]]:
    return view_key(w)[1]


def format_view(w) -> str:
    return "[" + ", ".join("{" + ",".join(t) + "}" for t in canonical_view(w)) + "]"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def load(path: str, theory: bool = False):
    text = _read(path)
    if theory or path.endswith(".eth"):
        return parse_theory(text)
    return parse_program(text)


def _signature(x, atoms: str | None) -> tuple[str, ...]:
    names = set(x.signature.atoms)
    if atoms:
        names |= {a.strip() for a in atoms.split(",") if a.strip()}
    return tuple(sorted(names))


def _cap(semantics: str, force: bool) -> int:
    if force:
        return FORCED_CAP
    return G91_CAP if semantics == "g91" else EXPENSIVE_CAP


def _engine_label(semantics: str, engine: str) -> str:
    return engine if semantics in ("faeel", "moore") else "direct"


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------


def cmd_solve(args) -> int:
    x = load(args.file, args.theory)
    sig = _signature(x, args.atoms)
    engine = ENGINE_NAMES[args.engine]
    views = world_views(x, args.semantics, sig, _cap(args.semantics, args.force), engine)
    doc = {
        "semantics": args.semantics,
        "signature": list(sig),
        "world_views": [canonical_view(w) for w in views],
        "engine": _engine_label(args.semantics, engine),
    }
    lines = [f"semantics: {args.semantics}", f"signature: {' '.join(sig)}", f"world views: {len(views)}"]
    lines += ["  " + format_view(w) for w in views]
    _emit(args, doc, "\n".join(lines))
    return 0 if views else 1


def cmd_compare(args) -> int:
    x = load(args.file, args.theory)
    sig = _signature(x, args.atoms)
    names = [s.strip() for s in args.semantics.split(",") if s.strip()]
    for s in names:
        if s not in SEMANTICS:
            raise UsageError(f"unknown semantics {s!r}; expected one of {', '.join(SEMANTICS)}")
    results = {s: set(world_views(x, s, sig, _cap(s, args.force), ENGINE_NAMES[args.engine])) for s in names}
    rows = sorted(set().union(*results.values()), key=view_key)
    disagreements = [w for w in rows if len({w in results[s] for s in names}) > 1]
    doc = {
        "semantics": names,
        "signature": list(sig),
        "views": [
            {"view": canonical_view(w), "in": {s: w in results[s] for s in names}} for w in rows
        ],
        "disagreements": [canonical_view(w) for w in disagreements],
    }
    width = max([len(format_view(w)) for w in rows] + [4])
    lines = ["  " + "view".ljust(width) + "  " + "  ".join(names)]
    for w in rows:
        mark = "!" if w in disagreements else " "
        cells = "  ".join(("x" if w in results[s] else ".").center(len(s)) for s in names)
        lines.append(f"{mark} {format_view(w).ljust(width)}  {cells}")
    lines.append(f"{len(disagreements)} disagreement(s)")
    _emit(args, doc, "\n".join(lines))
    return 1 if disagreements else 0


def cmd_analyze(args) -> int:
    x = load(args.file)
    tight = args.tight
    la = tight_stratify(x) if tight else stratify(x)
    what = "epistemically tight" if tight else "epistemically stratified"
    graph = dep_pairs(x)
    edges = sorted(graph.plus_edges if tight else graph.edges)
    doc: dict = {"property": "tight" if tight else "stratified", "holds": la is not None,
                 "edges": [list(e) for e in edges]}
    lines = [f"dependence edges: {' '.join(f'{a}>{b}' for a, b in edges) or '(none)'}"]
    if la is None:
        cycle = violation(x, tight)
        doc["cycle"] = cycle
        path = " -> ".join("{" + ",".join(c) + "}" for c in cycle)
        lines.append(f"not {what}; layer constraints form a cycle: {path}")
    else:
        layers = dict(sorted(la.layers.items()))
        doc["layers"] = layers
        lines.append(f"{what}; layers: " + "{" + ", ".join(f"{a}:{v}" for a, v in layers.items()) + "}")
    _emit(args, doc, "\n".join(lines))
    return 0 if la is not None else 1


def cmd_split(args) -> int:
    x = load(args.file)
    if not isinstance(x, Program):
        raise UsageError("split works on programs, not theories")
    sig = _signature(x, args.atoms)
    u = frozenset(a.strip() for a in args.set.split(",") if a.strip())
    unknown = u - set(sig)
    if unknown:
        raise UsageError(f"splitting set mentions atoms outside the signature: {', '.join(sorted(unknown))}")
    parts = split(x, u, args.policy)
    sols = solutions(x, u, args.semantics, sig, _cap(args.semantics, args.force), args.policy)
    doc = {
        "semantics": args.semantics,
        "signature": list(sig),
        "set": sorted(u),
        "policy": args.policy,
        "bottom": print_program(parts.bottom).splitlines(),
        "top": print_program(parts.top).splitlines(),
        "solutions": [
            {"bottom": canonical_view(wb), "top": canonical_view(wt), "world_view": canonical_view(compose(wb, wt))}
            for wb, wt in sols
        ],
    }
    lines = [f"U = {{{','.join(sorted(u))}}} ({args.policy})", "bottom:"]
    lines += ["  " + r for r in print_program(parts.bottom).splitlines()] or []
    lines.append("top:")
    lines += ["  " + r for r in print_program(parts.top).splitlines()]
    lines.append(f"{args.semantics} solutions: {len(sols)}")
    for wb, wt in sols:
        lines.append(f"  {format_view(wb)} + {format_view(wt)} = {format_view(compose(wb, wt))}")
    _emit(args, doc, "\n".join(lines))
    return 0 if sols else 1


def _property_names(spec: str | None, default) -> list[str]:
    if not spec:
        return list(default)
    names = [p.strip() for p in spec.split(",") if p.strip()]
    for p in names:
        if p not in PROPERTIES:
            raise UsageError(f"unknown property {p!r}; known: {', '.join(sorted(PROPERTIES))}")
    return names


def cmd_check(args) -> int:
    x = load(args.file)
    if not isinstance(x, Program):
        raise UsageError("check works on programs, not theories")
    sig = _signature(x, args.atoms)
    if len(sig) > _cap("feel", args.force):
        raise EnumerationCapError(f"signature has {len(sig)} atoms; enumeration cap is {_cap('feel', args.force)}")
    names = _property_names(args.properties, [p for p in sorted(PROPERTIES) if p not in FORMULA_PROPERTIES])
    params: dict = {"shrink": not args.no_shrink}
    if args.semantics:
        params["semantics"] = tuple(s.strip() for s in args.semantics.split(",") if s.strip())
    if args.constraint:
        params["constraint"] = parse_rule(args.constraint)
    reports = [check_property(n, x, params, sig=sig) for n in names]
    if args.json:
        print(report_json(reports))
    else:
        print(report_text(reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_fuzz(args) -> int:
    if not 1 <= args.max_atoms <= 5:
        raise UsageError("--max-atoms must be between 1 and 5")
    names = _property_names(args.properties, sorted(PROPERTIES))
    cfg = GenConfig(atom_count=args.max_atoms, seed=args.seed)
    progress = None if args.json else (lambda line: print(line, file=sys.stderr, flush=True))
    reports = run_battery(names, args.count, (args.max_atoms,), args.seed, cfg, progress=progress)
    if args.json:
        print(report_json(reports))
    else:
        print(report_text(reports))
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="elpkit", description="World views of epistemic logic programs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, semantics: bool = True, multi: bool = False):
        sp.add_argument("file", help="program (.elp) or theory (.eth) file; '-' reads stdin")
        sp.add_argument("--atoms", help="extra signature atoms, comma separated")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--force", action="store_true", help=f"raise the atom cap to {FORCED_CAP}")
        if semantics:
            if multi:
                sp.add_argument("--semantics", default="g91,feel,faeel,eel,eel_g91,weak",
                                help="comma-separated semantics")
            else:
                sp.add_argument("--semantics", choices=SEMANTICS, default="g91")

    s = sub.add_parser("solve", help="enumerate world views")
    common(s)
    s.add_argument("--engine", choices=sorted(ENGINE_NAMES), default="char",
                   help="FAEEL engine: FEEL ∩ G91 (char) or the fixpoint definition (direct)")
    s.add_argument("--theory", action="store_true", help="parse the file as a theory")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("compare", help="world views under several semantics side by side")
    common(c, multi=True)
    c.add_argument("--engine", choices=sorted(ENGINE_NAMES), default="char")
    c.add_argument("--theory", action="store_true", help="parse the file as a theory")
    c.set_defaults(func=cmd_compare)

    a = sub.add_parser("analyze", help="epistemic stratification or tightness")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    mode = a.add_mutually_exclusive_group()
    mode.add_argument("--stratified", action="store_true", help="check stratification (default)")
    mode.add_argument("--tight", action="store_true", help="check tightness")
    a.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("split", help="solutions with respect to an epistemic splitting set")
    common(sp, semantics=False)
    sp.add_argument("--set", required=True, help='comma-separated atoms of U ("" for the empty set)')
    sp.add_argument("--semantics", choices=SPLITTING_SEMANTICS, default="g91")
    sp.add_argument("--policy", choices=POLICIES, default="bottom-first")
    sp.set_defaults(func=cmd_split)

    ch = sub.add_parser("check", help="run the property battery on one program")
    common(ch, semantics=False)
    ch.add_argument("--properties", help="comma-separated property names")
    ch.add_argument("--constraint", help="subjective constraint for constraint_monotonicity, e.g. ':- K a.'")
    ch.add_argument("--semantics", help="comma-separated semantics the properties should cover")
    ch.add_argument("--no-shrink", action="store_true", help="report failures without minimising")
    ch.set_defaults(func=cmd_check)

    f = sub.add_parser("fuzz", help="run the property battery on random programs")
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--count", type=int, default=200)
    f.add_argument("--max-atoms", type=int, default=3)
    f.add_argument("--properties", help="comma-separated property names (default: all)")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_fuzz)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except NotASplittingSet as exc:
        print(f"error: {exc}", file=sys.stderr)
    except EnumerationCapError as exc:
        print(f"error: {exc} (use --force to allow up to {FORCED_CAP} atoms)", file=sys.stderr)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
