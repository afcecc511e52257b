"""Command-line interface: ``numset <subcommand> ...``.

Exit status is 0 on success, 1 when a verification sweep finds a
counterexample and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import analysis as an
from .core import (
    DomainError,
    NumericalSet,
    ParseError,
    associated_semigroup,
    atoms,
    format_set,
    is_semigroup,
    parse_set,
    scalars,
    small_atoms,
)
from .enumeration import (
    BudgetError,
    default_workers,
    density_table,
    iter_numerical_sets,
    iter_semigroups_frobenius,
    iter_semigroups_genus,
    shape_census,
)
from .render import render_ascii, render_svg
from .verify import STATEMENTS, run_statement
from .young import c1, diagram_of

VERIFY_BUDGET_F = 20
EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


def _join(xs) -> str:
    return ",".join(map(str, xs)) if xs else "-"


def _inputs(args) -> list[NumericalSet]:
    texts = [args.sets] if isinstance(args.sets, str) else list(args.sets)
    if getattr(args, "file", None):
        with open(args.file) as fh:
            texts += [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if not texts:
        raise ParseError("no set given")
    return [parse_set(t) for t in texts]


def _analysis(S: NumericalSet) -> dict:
    semi = is_semigroup(S)
    A = associated_semigroup(S)
    d = {
        "set": format_set(S),
        "gaps": list(S.gaps),
        "scalars": scalars(S).to_dict(),
        "is_semigroup": semi,
        "associated_semigroup": format_set(A),
        "associated_small_atoms": small_atoms(A),
        "small_elements": S.small_elements(),
        "c1": c1(diagram_of(S)),
    }
    if semi:
        d["atoms"] = atoms(S)
        d["small_atoms"] = small_atoms(S)
    if S.is_naturals():
        d["complement"] = None
        d["complement_error"] = "the complement of N is undefined"
    else:
        rep = an.complement_report(S, check=False)
        d["complement"] = format_set(rep.complement)
        d["complement_report"] = rep.to_dict()
        d["complement_report"]["failures"] = rep.failures()
    return d


def _print_analysis(d: dict, out) -> None:
    sc = d["scalars"]
    print(f"set: {d['set']}", file=out)
    print(f"gaps: {_join(d['gaps'])}", file=out)
    print(
        f"frobenius: {sc['frobenius']}  genus: {sc['genus']}  "
        f"multiplicity: {sc['multiplicity']}  base: {sc.get('base', 'undefined')}",
        file=out,
    )
    print(f"semigroup: {'yes' if d['is_semigroup'] else 'no'}", file=out)
    if d["is_semigroup"]:
        print(f"atoms: {_join(d['atoms'])}", file=out)
        print(f"small atoms: {_join(d['small_atoms'])}", file=out)
    print(f"small elements: {_join(d['small_elements'])}", file=out)
    print(f"associated semigroup: {d['associated_semigroup']}", file=out)
    print(f"associated small atoms: {_join(d['associated_small_atoms'])}", file=out)
    print(f"c1: {d['c1']}", file=out)
    if d["complement"] is None:
        print(f"complement: error: {d['complement_error']}", file=out)
        return
    print(f"complement: {d['complement']}", file=out)
    rep = d["complement_report"]
    t = rep["complement_scalars"]
    print(
        f"complement frobenius: {t['frobenius']}  genus: {t['genus']}  "
        f"base: {t.get('base', 'undefined')}  delta genus: {rep['delta_genus']}  "
        f"F = B-1: {'yes' if rep['base_bound_tight'] else 'no'}",
        file=out,
    )


def cmd_analyze(args, out) -> int:
    results = [_analysis(S) for S in _inputs(args)]
    if args.format == "json":
        json.dump(results if len(results) > 1 else results[0], out, indent=2)
        print(file=out)
    else:
        for i, d in enumerate(results):
            if i:
                print(file=out)
            _print_analysis(d, out)
    return EXIT_OK


def cmd_complement(args, out) -> int:
    status = EXIT_OK
    for S in _inputs(args):
        try:
            print(format_set(an.complement(S)), file=out)
        except DomainError as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = EXIT_USAGE
    return status


def cmd_sequence(args, out) -> int:
    (S,) = _inputs(args)[:1]
    seq = an.complement_sequence(S)
    rows = [
        {"index": i, "set": format_set(T), "c1": c1(diagram_of(T))}
        for i, T in enumerate(seq.terms)
    ]
    if args.format == "json":
        json.dump({"length": seq.length, "terms": rows}, out, indent=2)
        print(file=out)
    else:
        for r in rows:
            print(f"S^({r['index']}) = {r['set']}  c1={r['c1']}", file=out)
        print(f"length: {seq.length}", file=out)
    return EXIT_OK


def cmd_render(args, out) -> int:
    (S,) = _inputs(args)[:1]
    D = diagram_of(S)
    if args.format == "svg":
        out.write(render_svg(D, args.hooks, args.complement_overlay))
    else:
        out.write(render_ascii(D, args.hooks, args.complement_overlay))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max_f > VERIFY_BUDGET_F and not args.allow_large:
        raise BudgetError(f"--max-f above {VERIFY_BUDGET_F} needs --allow-large")
    report = run_statement(args.statement, args.max_f)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        print(
            f"{report.statement}: {STATEMENTS[report.statement].description}; "
            f"F <= {report.domain_bound}; {report.instances_checked} instances; "
            f"{len(report.counterexamples)} counterexamples",
            file=out,
        )
        for c in report.counterexamples:
            print(f"  {c}", file=out)
    return EXIT_OK if report.ok else EXIT_FOUND


def cmd_density(args, out) -> int:
    table = density_table(
        args.f_min, args.f_max, args.l_max, workers=args.threads, allow_large=args.allow_large
    )
    if args.format == "text":
        for row, delta in zip(table.rows, table.deltas()):
            d = "" if delta is None else f"  delta {delta:+.6f}"
            print(f"f={row.f:3d}  gamma~{float(row.ratio_gamma):.6f}{d}", file=out)
    else:
        out.write(table.to_csv())
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    if args.kind == "census":
        if args.frobenius is None:
            raise ParseError("census needs --frobenius")
        res = shape_census(args.frobenius, workers=args.threads)
        if args.format == "json":
            out.write(res.to_json() + "\n")
        else:
            print(f"f={res.frobenius} total={res.total_sets} gamma~{res.ratio_gamma:.6f}", file=out)
            for k, v in res.counts.items():
                print(f"  {k}: {v}", file=out)
        return EXIT_OK
    if args.kind == "sets":
        if args.frobenius is None:
            raise ParseError("sets needs --frobenius")
        it = iter_numerical_sets(args.frobenius)
    elif args.genus is not None:
        it = iter_semigroups_genus(args.genus)
    elif args.frobenius is not None:
        it = iter_semigroups_frobenius(args.frobenius)
    else:
        raise ParseError("semigroups needs --frobenius or --genus")
    items = sorted(it, key=lambda S: S.gaps)
    if args.format == "json":
        json.dump([format_set(S) for S in items], out)
        print(file=out)
    else:
        for S in items:
            print(format_set(S), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="numset", description="Numerical sets, Young diagrams and complements.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_sets(sp, many=True):
        sp.add_argument("sets", nargs="*" if many else "?", default=[],
                        help='set as "0,2,4,7->" or "gaps:1,3"')
        if many:
            sp.add_argument("--file", help="read one set per line")

    sp = sub.add_parser("analyze", help="invariants, A(S), atoms and complement")
    with_sets(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("complement", help="print the complement of each set")
    with_sets(sp)
    sp.set_defaults(func=cmd_complement)

    sp = sub.add_parser("sequence", help="iterate the complement down to N")
    with_sets(sp, many=False)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_sequence)

    sp = sub.add_parser("render", help="draw the Young diagram")
    with_sets(sp, many=False)
    sp.add_argument("--hooks", action="store_true", help="show hook lengths")
    sp.add_argument("--complement-overlay", action="store_true",
                    help="mark the rectangle complement")
    sp.add_argument("--format", choices=["text", "svg"], default="text")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("verify", help="exhaustively check a statement")
    sp.add_argument("--statement", required=True, choices=sorted(STATEMENTS))
    sp.add_argument("--max-f", type=int, required=True)
    sp.add_argument("--allow-large", action="store_true")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("density", help="gamma / gamma_l approximants as CSV")
    sp.add_argument("--f-min", type=int, default=1)
    sp.add_argument("--f-max", type=int, required=True)
    sp.add_argument("--l-max", type=int, default=3)
    sp.add_argument("--allow-large", action="store_true")
    sp.add_argument("--threads", type=int, default=None)
    sp.add_argument("--format", choices=["csv", "text"], default="csv")
    sp.set_defaults(func=cmd_density)

    sp = sub.add_parser("enumerate", help="list sets or semigroups, or run a shape census")
    sp.add_argument("kind", choices=["sets", "semigroups", "census"])
    sp.add_argument("--frobenius", type=int)
    sp.add_argument("--genus", type=int)
    sp.add_argument("--threads", type=int, default=None)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", None) is None and hasattr(args, "threads"):
        args.threads = default_workers()
    try:
        return args.func(args, out)
    except (ParseError, DomainError, BudgetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
