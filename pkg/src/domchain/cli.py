"""Command-line interface.

Subcommands::

    compute   parameter reports for graph6 (or edge-list) input
    gen       emit a named family member as graph6
    hfree     test graphs for freeness from a forbidden family
    scan      per-order maxima of a parameter over a family-free corpus
    ramsey    classical and bipartite Ramsey searches, the bistar reduction, q(n)
    verify    run the verification suites

Family specs use the grammar ``P7 C5 K5 E3 K3,3 K1,4* K4* CK5 BS3^2 F4 3xK2``.
Forbidden families are given with repeated ``-f SPEC`` flags.

Exit codes: 0 success, 1 usage or parse error, 2 computation failure,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Iterator

from .audits import bound_profile, lozin_q_profile
from .families import GRAMMAR, generate, parse_spec
from .graph import GraphError, emit_edge_list, emit_graph6, members, parse_edge_list, parse_graph6
from .hfree import BistarVariants, ForbiddenFamily, is_family_free
from .parallel import default_jobs, pmap
from .ramsey import bipartite_ramsey_search, ramsey_witness_search, verify_lemma_bistar_reduction
from .solvers import PARAMS, SolverError, csv_header, full_report
from .suites import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_VERIFY = 0, 1, 2, 3
FORMATS = ("json", "csv", "table")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- input ----------------------------------------------------------------------

def _open_sources(paths: list[str]) -> list[tuple[str, str]]:
    if not paths or paths == ["-"]:
        return [("<stdin>", sys.stdin.read())]
    out = []
    for p in paths:
        try:
            with open(p) as fh:
                out.append((p, fh.read()))
        except OSError as exc:
            raise UsageError(f"cannot read {p}: {exc.strerror}") from None
    return out


def _records(paths: list[str], edge_list: bool) -> Iterator[tuple[str, object]]:
    """``(location, Graph or error message)`` for every graph in the inputs."""
    for name, text in _open_sources(paths):
        if edge_list:
            try:
                yield name, parse_edge_list(text)
            except GraphError as exc:
                yield name, f"{name}: {exc}"
            continue
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            loc = f"{name}:{lineno}"
            try:
                yield loc, parse_graph6(line)
            except GraphError as exc:
                yield loc, f"{loc}: {exc}"


def _load_corpus(paths: list[str], edge_list: bool):
    graphs = []
    for loc, g in _records(paths, edge_list):
        if isinstance(g, str):
            raise UsageError(g)
        graphs.append(g)
    return graphs


def _parse_params(text: str | None) -> tuple[str, ...]:
    if not text:
        return PARAMS
    params = tuple(p.strip() for p in text.split(",") if p.strip())
    bad = [p for p in params if p not in PARAMS]
    if bad or not params:
        raise UsageError(f"unknown parameter(s) {bad}; choose from {','.join(PARAMS)}")
    return params


def _parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None


def _family(args) -> ForbiddenFamily:
    members_: list = []
    for text in args.forbid or []:
        try:
            members_.append(parse_spec(text))
        except GraphError as exc:
            raise UsageError(str(exc)) from None
    for text in args.forbid_g6 or []:
        try:
            members_.append(parse_graph6(text))
        except GraphError as exc:
            raise UsageError(f"forbidden graph {text!r}: {exc}") from None
    for text in args.bistar_variants or []:
        try:
            n, p = (int(x) for x in text.split(","))
        except ValueError:
            raise UsageError(f"--bistar-variants expects N,P, got {text!r}") from None
        members_.append(BistarVariants(n, p))
    if not members_:
        raise UsageError("give at least one forbidden member (-f, --forbid-g6 or --bistar-variants)")
    return ForbiddenFamily(tuple(members_))


# -- output ---------------------------------------------------------------------

def _dump_json(obj, out) -> None:
    out.write(json.dumps(obj))
    out.write("\n")


def _write_table(rows: list[list], header: list[str], out) -> None:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for r in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _write_rows(fmt: str, header: list[str], rows: list[list], records: list[dict], out) -> None:
    if fmt == "json":
        for rec in records:
            _dump_json(rec, out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        _write_table(rows, header, out)


# -- subcommands ----------------------------------------------------------------

def _report_job(args):
    g, params = args
    try:
        return full_report(g, params, check=False)
    except (SolverError, GraphError, RuntimeError) as exc:
        return str(exc)


def cmd_compute(args, out) -> int:
    params = _parse_params(args.params)
    recs = list(_records(args.inputs, args.edge_list))
    graphs = [(g, params) for _, g in recs if not isinstance(g, str)]
    results = iter(pmap(_report_job, graphs, args.jobs))
    status = EXIT_OK
    header = ["source", "graph6", *csv_header(params), "error"]
    rows, records = [], []
    for loc, g in recs:
        rep = g if isinstance(g, str) else next(results)
        if isinstance(rep, str):
            status = EXIT_COMPUTE
            msg = rep if isinstance(g, str) else f"{loc}: {rep}"
            print(f"error: {msg}", file=sys.stderr)
            records.append({"source": loc, "error": msg})
            rows.append([loc, ""] + [""] * (len(header) - 3) + [msg])
            continue
        rec = {"source": loc, "graph6": emit_graph6(g), **rep.to_dict(params)}
        records.append(rec)
        rows.append([loc, rec["graph6"], *rep.csv_row(params), ""])
    _write_rows(args.format, header, rows, records, out)
    return status


def cmd_gen(args, out) -> int:
    try:
        spec = parse_spec(args.spec)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    g = generate(spec)
    out.write(emit_edge_list(g) if args.edge_list else emit_graph6(g) + "\n")
    if args.report:
        rep = full_report(g)
        rec = {"spec": str(spec), "graph6": emit_graph6(g), **rep.to_dict()}
        _write_rows(args.format, ["spec", *csv_header()], [[str(spec), *rep.csv_row()]], [rec], out)
    return EXIT_OK


def cmd_hfree(args, out) -> int:
    fam = _family(args)
    status = EXIT_OK
    header = ["source", "graph6", "free", "member", "witness"]
    rows, records = [], []
    for loc, g in _records(args.inputs, args.edge_list):
        if isinstance(g, str):
            status = EXIT_COMPUTE
            print(f"error: {g}", file=sys.stderr)
            records.append({"source": loc, "error": g})
            rows.append([loc, "", "", "", g])
            continue
        res = is_family_free(g, fam)
        member = None if res.free else (emit_graph6(res.member) if hasattr(res.member, "adj") else str(res.member))
        wit = members(res.witness)
        records.append({"source": loc, "graph6": emit_graph6(g), "free": res.free, "member": member, "witness": wit})
        rows.append([loc, emit_graph6(g), int(res.free), member or "", " ".join(map(str, wit))])
    _write_rows(args.format, header, rows, records, out)
    return status


def cmd_scan(args, out) -> int:
    fam = _family(args)
    graphs = _load_corpus(args.inputs, args.edge_list)
    res = bound_profile(graphs, fam, args.param, connected_only=not args.all, jobs=args.jobs)
    if args.format == "json":
        _dump_json(res.to_dict(), out)
    else:
        header = ["family", "parameter", "order", "count", "max", "witness"]
        _write_rows(args.format, header, res.csv_rows(), [], out)
    return EXIT_OK


def cmd_ramsey(args, out) -> int:
    if args.kind == "classical":
        bound = ramsey_witness_search(args.m, args.n, args.cap, samples=args.samples, seed=args.seed)
        obj = bound.to_dict()
    elif args.kind == "bipartite":
        obj = bipartite_ramsey_search(args.n, args.cap).to_dict()
    elif args.kind == "lemma":
        obj = verify_lemma_bistar_reduction(args.n, args.p, jobs=args.jobs, mode=args.mode).to_dict()
    else:
        graphs = _load_corpus(args.inputs, args.edge_list)
        obj = lozin_q_profile(args.n, graphs).to_dict()
    if args.format == "json":
        _dump_json(obj, out)
    else:
        rows = [[k, json.dumps(v, sort_keys=True)] for k, v in obj.items()]
        _write_rows(args.format, ["field", "value"], rows, [], out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = args.suite or list(SUITES)
    ok = True
    results = []
    for name in names:
        kwargs = {"jobs": args.jobs, "ns": args.n}
        if args.max_order is not None:
            kwargs["max_order"] = args.max_order
        if name == "lemma":
            kwargs["ns"] = [n for n in args.n if n <= 2] if args.n_given else (1, 2)
        if name == "profiles":
            kwargs["n"] = args.n[0] if args.n_given else 2
        res = run_suite(name, **kwargs)
        ok &= res.ok
        results.append(res)
    if args.format == "json":
        _dump_json({"ok": ok, "suites": [r.to_dict() for r in results]}, out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["suite", "ok", "line"])
        for r in results:
            for line in r.lines:
                w.writerow([r.name, int(r.ok), line])
    else:
        for r in results:
            out.write(f"[{'PASS' if r.ok else 'FAIL'}] {r.name}\n")
            for line in r.lines:
                out.write(f"  {line}\n")
        out.write(f"overall: {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_VERIFY


# -- parser ---------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, inputs: bool = True, jobs: bool = True) -> None:
    p.add_argument("--format", choices=FORMATS, default="json", help="output format (default json)")
    if inputs:
        p.add_argument("inputs", nargs="*", metavar="FILE", help="graph6 files, one graph per line (default stdin)")
        p.add_argument("--edge-list", action="store_true", help="each input is one 'n m' edge list")
    if jobs:
        p.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (default: all cores)")


def _add_family(p: argparse.ArgumentParser) -> None:
    p.add_argument("-f", "--forbid", action="append", metavar="SPEC", help="forbidden family member, e.g. K1,2*")
    p.add_argument("--forbid-g6", action="append", metavar="G6", help="forbidden graph given in graph6")
    p.add_argument("--bistar-variants", action="append", metavar="N,P",
                   help="forbid every bistar variant with N leaves per side and path length P")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="domchain", description="Exact domination-chain parameters and audits.",
                     epilog=GRAMMAR)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="parameter reports for each input graph")
    _add_common(p)
    p.add_argument("--params", help=f"comma-separated subset of {','.join(PARAMS)}")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("gen", help="emit a family member as graph6", epilog=GRAMMAR)
    p.add_argument("spec", help="family spec, e.g. BS3^2")
    p.add_argument("--report", action="store_true", help="also print the parameter report")
    p.add_argument("--edge-list", action="store_true", help="emit an edge list instead of graph6")
    p.add_argument("--format", choices=FORMATS, default="json", help="report format (default json)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("hfree", help="freeness from a forbidden family, with a witness")
    _add_common(p, jobs=False)
    _add_family(p)
    p.set_defaults(func=cmd_hfree)

    p = sub.add_parser("scan", help="per-order maxima over family-free graphs of a corpus")
    _add_common(p)
    _add_family(p)
    p.add_argument("--param", choices=PARAMS, required=True)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("ramsey", help="Ramsey searches and the bistar reduction check")
    rsub = p.add_subparsers(dest="kind", required=True)
    q = rsub.add_parser("classical", help="smallest order forcing K_m or E_n")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--cap", type=int, default=6, help="largest order tried")
    q.add_argument("--samples", type=int, default=20000, help="random graphs per order above 6")
    q.add_argument("--seed", type=int, default=0)
    _add_common(q, inputs=False, jobs=False)
    q = rsub.add_parser("bipartite", help="smallest side forcing an n x n mono block")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--cap", type=int, default=5, help="largest side tried")
    _add_common(q, inputs=False, jobs=False)
    q = rsub.add_parser("lemma", help="bistar variants contain K_{n,n} or BS_n^p")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--mode", choices=("auto", "all", "rows"), default="auto")
    _add_common(q, inputs=False)
    q = rsub.add_parser("q", help="matching-number lower bound over {nK2, Kn,n}-free bipartite graphs")
    q.add_argument("--n", type=int, required=True)
    _add_common(q, jobs=False)
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", choices=list(SUITES), help="suite to run (repeatable; default all)")
    p.add_argument("--max-order", type=int, help="corpus order for chain, saturation, konig, zverovich, profiles")
    p.add_argument("--n", type=_parse_range, default=None, help="n or LO..HI (oracles: 2..6)")
    _add_common(p, inputs=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    if args.command == "verify":
        args.n_given = args.n is not None
        if args.n is None:
            args.n = range(2, 7)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except UsageError as exc:
        print(f"domchain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, RuntimeError) as exc:
        out.write(buf.getvalue())
        print(f"domchain: error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
