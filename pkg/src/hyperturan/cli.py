"""Command-line entry point.

Exit status: 0 on success, 1 when a verification check fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import chromatic, designs, expansion, harness, hypercore, spectral
# the package re-exports the shadow() function under the submodule's name
from .shadow import global_bound_check, lconn_check
from .shadow import shadow as shadow_graph
from .hypercore import Graph, Hypergraph

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_pattern(spec: str) -> Graph:
    """Named graphs: ``kN``, ``pN`` (path on N vertices), ``cN``,
    ``km:a,b,...`` (complete multipartite) and ``kmp:a,b,...`` (plus variant)."""
    s = spec.strip().lower()
    if m := re.fullmatch(r"k(\d+)", s):
        return chromatic.complete_graph(int(m[1]))
    if m := re.fullmatch(r"p(\d+)", s):
        return chromatic.path_graph(int(m[1]))
    if m := re.fullmatch(r"c(\d+)", s):
        return chromatic.cycle_graph(int(m[1]))
    if m := re.fullmatch(r"(kmp?):(\d+(?:,\d+)*)", s):
        parts = [int(x) for x in m[2].split(",")]
        if m[1] == "kmp":
            return chromatic.complete_multipartite_plus(parts)
        return chromatic.complete_multipartite(parts)
    raise UsageError(f"unknown pattern {spec!r}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _load_hypergraph(path: str) -> Hypergraph:
    return hypercore.read_hypergraph(_read(path))


def _load_graph(args) -> Graph:
    if getattr(args, "pattern", None):
        return parse_pattern(args.pattern)
    if getattr(args, "input", None):
        return hypercore.read_graph(_read(args.input))
    raise UsageError("give --input or --pattern")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _report_text(reports, fmt: str, timing: bool = True) -> str:
    if fmt == "records":
        return harness.format_records(reports, timing)
    return harness.format_table(reports, timing)


# -- subcommands ------------------------------------------------------------


def cmd_spectral(args) -> int:
    h = _load_hypergraph(args.input)
    parts = hypercore.components(h) if args.components else [h]
    rows = []
    for idx, part in enumerate(parts):
        if part.m == 0:
            rows.append((idx, part.n, None))
            continue
        try:
            rows.append((idx, part.n, spectral.spectral_radius(part, args.tol, args.max_iter)))
        except spectral.DisconnectedError:
            raise UsageError("hypergraph is disconnected; rerun with --components") from None
    lines = []
    if args.format == "records":
        lines.append("component\tn\trho\tresidual\titerations\tconverged\tlower\tupper")
        for idx, n, rep in rows:
            if rep is None:
                lines.append(f"{idx}\t{n}\t0.0\t-\t0\t1\t-\t-")
            else:
                lines.append(
                    f"{idx}\t{n}\t{rep.rho!r}\t{rep.residual!r}\t{rep.iterations}\t"
                    f"{int(rep.converged)}\t{rep.lower!r}\t{rep.upper!r}"
                )
    else:
        for idx, n, rep in rows:
            prefix = f"component {idx} (n={n}): " if args.components else ""
            if rep is None:
                lines.append(f"{prefix}isolated vertex, rho = 0")
                continue
            lines.append(
                f"{prefix}rho = {rep.rho:.12f}  residual = {rep.residual:.3e}  "
                f"iterations = {rep.iterations}  converged = {rep.converged}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(rep is None or rep.converged for _, _, rep in rows) else EXIT_FAIL


def cmd_shadow(args) -> int:
    h = _load_hypergraph(args.input)
    g = shadow_graph(h)
    if not args.check:
        _emit(hypercore.write_graph(g), args.out)
        return EXIT_OK
    cmp_ = lconn_check(h, args.tol, args.max_iter)
    glob = global_bound_check(h, args.tol, args.max_iter)
    text = (
        f"rho(H)              = {cmp_.rho_h:.12f}\n"
        f"rho(shadow)/(r-1)   = {cmp_.rho_shadow_scaled:.12f}\n"
        f"gap                 = {cmp_.gap:.3e}  equality = {cmp_.equality}  regular = {cmp_.regular}\n"
        f"(n-1)/(r-1)         = {glob.bound:.12f}  design = {glob.is_design}\n"
        f"result              = {'pass' if cmp_.holds and glob.holds else 'FAIL'}\n"
    )
    _emit(text, args.out)
    return EXIT_OK if cmp_.holds and glob.holds else EXIT_FAIL


def cmd_design(args) -> int:
    groups = None
    if args.kind == "sts":
        h = designs.steiner_triple_system(args.n)
    elif args.kind == "td":
        h, groups = designs.transversal_design(args.r, args.m)
    else:
        h, groups = designs.gdd(args.m, args.k, args.r)
    _emit(hypercore.write_hypergraph(h), args.out)
    if args.groups and groups is not None:
        Path(args.groups).write_text(designs.write_groups(groups), encoding="utf-8")
    return EXIT_OK


def cmd_expand(args) -> int:
    exp = expansion.expand(_load_graph(args), args.r)
    _emit(hypercore.write_hypergraph(exp.hypergraph), args.out)
    return EXIT_OK


def cmd_contains(args) -> int:
    host = _load_hypergraph(args.host)
    f = _load_graph(args)
    r = args.r if args.r is not None else host.r
    emb = expansion.contains_expansion(host, f, r, args.budget)
    _emit("none\n" if emb is None else expansion.write_embedding(emb), args.out)
    return EXIT_OK


def cmd_chromatic(args) -> int:
    g = _load_graph(args)
    chi = chromatic.chromatic_number(g)
    crit, edge = chromatic.is_color_critical(g, chi)
    witness = "-" if edge is None else f"{edge[0]} {edge[1]}"
    _emit(f"chi = {chi}\ncolor_critical = {crit}\nwitness_edge = {witness}\n", args.out)
    return EXIT_OK


def cmd_random(args) -> int:
    h = harness.random_linear_hypergraph(args.n, args.r, args.edges, args.seed)
    if h.m < args.edges:
        print(f"warning: reached {h.m} of {args.edges} edges", file=sys.stderr)
    _emit(hypercore.write_hypergraph(h), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    h = _load_hypergraph(args.input)
    groups = designs.read_groups(_read(args.groups)) if args.groups else None
    gdd_type = (groups.m, groups.k) if groups is not None else None
    inst = harness.Instance(Path(args.input).name, h, groups, gdd_type)
    reports = sorted(harness.verify_instance(inst, args.tol, args.max_iter), key=harness.VerificationReport.sort_key)
    _emit(_report_text(reports, args.format, not args.no_timing), args.out)
    return EXIT_FAIL if harness.any_failed(reports) else EXIT_OK


def cmd_verify_all(args) -> int:
    config = harness.CorpusConfig(
        random_count=args.count, max_n=args.max_n, design_max_n=args.design_max_n, seed=args.seed
    )
    reports = harness.verify_all(config, args.tol, args.max_iter, args.jobs)
    _emit(_report_text(reports, args.format, not args.no_timing), args.out)
    return EXIT_FAIL if harness.any_failed(reports) else EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--tol", type=float, default=spectral.DEFAULT_TOL)
    common.add_argument("--max-iter", type=int, default=spectral.DEFAULT_MAX_ITER)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("table", "records"), default="table")

    parser = argparse.ArgumentParser(
        prog="hyperturan",
        description="Spectral radii, shadows, designs and expansions of linear uniform hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectral", parents=[common], help="spectral radius and Perron vector")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--components", action="store_true", help="run each connected component separately")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("shadow", parents=[common], help="shadow graph, or the shadow bounds with --check")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("design", help="construct a design")
    dsub = p.add_subparsers(dest="kind", required=True)
    d = dsub.add_parser("sts", parents=[common], help="Steiner triple system")
    d.add_argument("--n", type=int, required=True)
    d.set_defaults(func=cmd_design, groups=None)
    d = dsub.add_parser("td", parents=[common], help="transversal design TD(r, m), m prime")
    d.add_argument("--r", type=int, required=True)
    d.add_argument("--m", type=int, required=True)
    d.add_argument("--groups", metavar="PATH", help="also write the group partition")
    d.set_defaults(func=cmd_design)
    d = dsub.add_parser("gdd", parents=[common], help="group divisible design of type m^k")
    d.add_argument("--m", type=int, required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--r", type=int, required=True)
    d.add_argument("--groups", metavar="PATH", help="also write the group partition")
    d.set_defaults(func=cmd_design)

    p = sub.add_parser("expand", parents=[common], help="r-expansion of a graph")
    p.add_argument("--input", metavar="PATH", help="graph file (r=2)")
    p.add_argument("--pattern", help="named graph, e.g. k4, p3, c5, km:2,2")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("contains", parents=[common], help="search a host for an expansion")
    p.add_argument("--host", required=True, metavar="PATH")
    p.add_argument("--input", metavar="PATH", help="pattern graph file (r=2)")
    p.add_argument("--pattern", help="named pattern graph")
    p.add_argument("--r", type=int, help="uniformity (defaults to the host's)")
    p.add_argument("--budget", type=int, default=expansion.DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_contains)

    p = sub.add_parser("chromatic", parents=[common], help="exact chromatic number")
    p.add_argument("--input", metavar="PATH")
    p.add_argument("--pattern")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("random", parents=[common], help="random linear hypergraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("verify", parents=[common], help="check every bound on one hypergraph")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--groups", metavar="PATH", help="group partition, enables the GDD checks")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-all", parents=[common], help="check every bound on the full corpus")
    p.add_argument("--count", type=int, default=200, help="random instances")
    p.add_argument("--max-n", type=int, default=15)
    p.add_argument("--design-max-n", type=int, default=30)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ValueError, LookupError) as exc:
        # parse, range and unsupported-parameter errors all land here
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
