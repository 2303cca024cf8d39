"""Command line entry point: ``middleroman <command> ...``.

Exit codes: 0 ok, 1 a theorem or invariant violation, 2 unreadable input,
3 size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, TextIO

from . import corpus
from .graph import (
    Graph,
    GraphError,
    ParseError,
    build_middle_graph,
    family,
    parse_edge_list,
    parse_graph6,
)
from .middle import (
    ConstructionError,
    check_theorem1,
    construct_pmrdf_cycle,
    construct_pmrdf_path,
    gamma_pr_star,
    gamma_r_star,
    is_mrdf,
    is_pmrdf,
    open_problem_table,
)
from .roman import SizeGuardError, gamma_pr, gamma_r, is_prdf, is_rdf, size_guard

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3
MAX_SIZE_GUARD = 64
GAMMAS = ("r", "pr", "r-star", "pr-star")


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    format: str = "edgelist"
    output_format: str = "json"
    size_guard: int = 26
    seed: int = 0
    graph_spec: tuple[str, tuple[int, ...]] | None = None
    gammas: tuple[str, ...] = GAMMAS
    random_count: int = 0
    max_n: int = 9
    checks: tuple[str, ...] = ("kim", "theorem", "order")
    extra: dict = field(default_factory=dict)


def _add_graph_source(p: argparse.ArgumentParser, files: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--path", type=int, metavar="N")
    src.add_argument("--cycle", type=int, metavar="N")
    src.add_argument("--complete", type=int, metavar="N")
    src.add_argument("--complete-bipartite", type=int, nargs=2, metavar=("M", "N"))
    src.add_argument("--star", type=int, metavar="LEAVES")
    src.add_argument("--empty", type=int, metavar="N")
    if files:
        src.add_argument("--file", metavar="PATH")
        src.add_argument("--graph6", metavar="STRING")
        p.add_argument("--format", choices=("edgelist", "graph6"), default=None,
                       help="format of --file (default: by extension, .g6 = graph6)")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", choices=("json", "tsv", "human"), default="json")
    p.add_argument("--size-guard", type=int, default=None,
                   help=f"max elements for subset search (default $MR_SIZE_GUARD or 26, at most {MAX_SIZE_GUARD})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="middleroman", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute domination numbers with witnesses")
    _add_graph_source(p)
    p.add_argument("--gamma", choices=GAMMAS, action="append",
                   help="invariant to compute (repeatable; default all four)")
    _add_common(p)

    p = sub.add_parser("middle", help="print the middle graph as an edge list with its element map")
    _add_graph_source(p)
    _add_common(p)

    p = sub.add_parser("construct", help="closed-form perfect labeling of a path or cycle")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--path", type=int, metavar="N")
    g.add_argument("--cycle", type=int, metavar="N")
    _add_common(p)

    p = sub.add_parser("check", help="test the equality characterization on one graph")
    _add_graph_source(p)
    _add_common(p)

    p = sub.add_parser("survey", help="verify invariants over a graph6 file or random graphs")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", metavar="PATH", help="graph6 file, one graph per line")
    src.add_argument("--connected", type=int, metavar="MAX_N",
                     help="bundled corpus of connected graphs up to MAX_N (<= 7) vertices")
    src.add_argument("--random", type=int, metavar="COUNT", help="seeded G(n, p) graphs")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", default="kim,theorem,order",
                   help="comma list drawn from kim, theorem, order")
    _add_common(p)
    p.set_defaults(output="tsv")

    p = sub.add_parser("open-problems", help="γ_pR★ tables for complete and complete bipartite graphs")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--complete", action="store_true")
    g.add_argument("--complete-bipartite", action="store_true")
    p.add_argument("--max", type=int, required=True, dest="max_size")
    _add_common(p)
    p.set_defaults(output="tsv")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    guard = size_guard(args.size_guard)
    if guard > MAX_SIZE_GUARD:
        raise SystemExit(f"size guard {guard} exceeds hard limit {MAX_SIZE_GUARD}")
    cfg = RunConfig(command=args.command, output_format=args.output, size_guard=guard)
    for kind, attr in (("path", "path"), ("cycle", "cycle"), ("complete", "complete"),
                       ("complete_bipartite", "complete_bipartite"), ("star", "star"),
                       ("empty", "empty")):
        val = getattr(args, attr, None)
        if val is not None and val is not False and val is not True:
            cfg.graph_spec = (kind, tuple(val) if isinstance(val, list) else (val,))
    cfg.input_path = getattr(args, "file", None)
    if getattr(args, "graph6", None) is not None:
        cfg.extra["graph6"] = args.graph6
    fmt = getattr(args, "format", None)
    if fmt is None and cfg.input_path:
        fmt = "graph6" if cfg.input_path.endswith((".g6", ".graph6")) else "edgelist"
    cfg.format = fmt or "edgelist"
    if args.command == "solve" and args.gamma:
        cfg.gammas = tuple(dict.fromkeys(args.gamma))
    if args.command == "survey":
        cfg.seed = args.seed
        cfg.max_n = args.max_n
        cfg.random_count = args.random or 0
        cfg.checks = tuple(c for c in args.checks.split(",") if c)
        if args.connected is not None:
            cfg.extra["connected"] = args.connected
        cfg.format = "graph6"
    if args.command == "open-problems":
        cfg.extra["kind"] = "complete" if args.complete else "complete_bipartite"
        cfg.extra["max_size"] = args.max_size
    return cfg


def load_graph(cfg: RunConfig) -> Graph:
    if cfg.graph_spec is not None:
        kind, params = cfg.graph_spec
        return family(kind, *params)
    if "graph6" in cfg.extra:
        return parse_graph6(cfg.extra["graph6"])
    with open(cfg.input_path) as fh:
        text = fh.read()
    if cfg.format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _emit(out: TextIO, cfg: RunConfig, payload, human: Callable[[], str]) -> None:
    if cfg.output_format == "human":
        out.write(human().rstrip("\n") + "\n")
    else:
        out.write(json.dumps(payload, sort_keys=True) + "\n")


def cmd_solve(cfg: RunConfig, out: TextIO) -> int:
    g = load_graph(cfg)
    results = {}
    for name in cfg.gammas:
        if name == "r":
            res = gamma_r(g, cfg.size_guard)
            assert is_rdf(g, res.witness)
            payload = res.to_json()
        elif name == "pr":
            res = gamma_pr(g, cfg.size_guard)
            assert is_prdf(g, res.witness)
            payload = res.to_json()
        elif name == "r-star":
            res = gamma_r_star(g, cfg.size_guard)
            assert is_mrdf(g, res.witness)
            payload = {"optimum": res.optimum, "two_set": list(res.two_set),
                       "labeling": res.witness.to_json()}
        else:
            res = gamma_pr_star(g, cfg.size_guard)
            assert is_pmrdf(g, res.witness)
            payload = {"optimum": res.optimum, "two_set": list(res.two_set),
                       "labeling": res.witness.to_json()}
        results[name] = payload
    if cfg.output_format == "tsv":
        out.write("gamma\toptimum\n")
        for name, payload in results.items():
            out.write(f"{name}\t{payload['optimum']}\n")
        return EXIT_OK
    _emit(out, cfg, results, lambda: "\n".join(
        f"gamma_{k}: {v['optimum']}" for k, v in results.items()))
    return EXIT_OK


def cmd_middle(cfg: RunConfig, out: TextIO) -> int:
    g = load_graph(cfg)
    mg = build_middle_graph(g)
    elements = [
        {"original": el.vertex} if hasattr(el, "vertex") else {"edge": list(g.edges[el.edge])}
        for el in mg.element_map
    ]
    if cfg.output_format == "json":
        out.write(json.dumps({"n": mg.graph.n, "edges": [list(e) for e in mg.graph.edges],
                              "elements": elements}, sort_keys=True) + "\n")
    else:
        out.write(mg.graph.to_edge_list())
    return EXIT_OK


def cmd_construct(cfg: RunConfig, out: TextIO) -> int:
    kind, (n,) = cfg.graph_spec
    f = construct_pmrdf_path(n) if kind == "path" else construct_pmrdf_cycle(n)
    assert is_pmrdf(f.graph, f)
    _emit(out, cfg, f.to_json(), lambda: f"{kind} {n}: weight {f.weight}")
    return EXIT_OK


def cmd_check(cfg: RunConfig, out: TextIO) -> int:
    g = load_graph(cfg)
    rep = check_theorem1(g, cfg.size_guard)
    if rep.witness is not None:
        assert is_mrdf(g, rep.witness)
    _emit(out, cfg, rep.to_json(), lambda: (
        f"gamma_r_star={rep.gamma_r_star} gamma_pr_star={rep.gamma_pr_star} "
        f"equal={rep.equal} witness={'yes' if rep.witness else 'no'} "
        f"consistent={rep.theorem_consistent}"))
    return EXIT_OK if rep.theorem_consistent else EXIT_VIOLATION


def _survey_sources(cfg: RunConfig):
    """Yield ``(label, graph or exception)`` in input order."""
    if cfg.random_count:
        for i, g in enumerate(corpus.random_graphs(cfg.random_count, cfg.max_n, cfg.seed)):
            yield f"random:{i}", g
    elif "connected" in cfg.extra:
        for i, g in enumerate(corpus.connected_graphs(cfg.extra["connected"])):
            yield f"connected:{i}", g
    else:
        with open(cfg.input_path) as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    yield line.strip(), parse_graph6(line)
                except ParseError as exc:
                    yield f"line {lineno}", exc


def survey_row(g: Graph, checks: tuple[str, ...], guard: int) -> tuple[dict, list[str]]:
    row: dict = {"n": g.n, "m": g.m}
    problems = []
    r = gamma_r_star(g, guard).optimum
    row["gamma_r_star"] = r
    if "kim" in checks and r != g.n:
        problems.append(f"kim: gamma_r_star={r} != n={g.n}")
    if "theorem" in checks:
        rep = check_theorem1(g, guard)
        row["gamma_pr_star"] = rep.gamma_pr_star
        row["equal"] = rep.equal
        row["witness"] = rep.witness is not None
        if not rep.theorem_consistent:
            problems.append("theorem: equality and witness existence disagree")
    elif "order" in checks:
        row["gamma_pr_star"] = gamma_pr_star(g, guard).optimum
    if "order" in checks and row["gamma_pr_star"] < r:
        problems.append("order: gamma_pr_star < gamma_r_star")
    return row, problems


def cmd_survey(cfg: RunConfig, out: TextIO) -> int:
    cols = ["graph", "n", "m", "gamma_r_star", "gamma_pr_star", "equal", "witness", "status"]
    out.write("\t".join(cols) + "\n")
    violations, errors, total = [], 0, 0
    guard_hit = False
    for label, item in _survey_sources(cfg):
        total += 1
        if isinstance(item, Exception):
            errors += 1
            out.write(f"{label}\t" + "\t".join("-" for _ in cols[1:-1]) + f"\terror: {item}\n")
            continue
        try:
            row, problems = survey_row(item, cfg.checks, cfg.size_guard)
        except SizeGuardError as exc:
            guard_hit = True
            errors += 1
            out.write(f"{label}\t{item.n}\t{item.m}\t-\t-\t-\t-\tguard: {exc}\n")
            continue
        status = "ok" if not problems else "; ".join(problems)
        if problems:
            violations.append((label, status))
        vals = [row.get(c, "-") for c in cols[1:-1]]
        out.write(f"{label}\t" + "\t".join(str(v) for v in vals) + f"\t{status}\n")
    out.write(f"# graphs={total} violations={len(violations)} errors={errors}\n")
    for label, status in violations:
        out.write(f"# violation {label}: {status}\n")
    if violations:
        return EXIT_VIOLATION
    if errors:
        return EXIT_GUARD if guard_hit else EXIT_PARSE
    return EXIT_OK


def cmd_open_problems(cfg: RunConfig, out: TextIO) -> int:
    kind = cfg.extra["kind"]
    table = open_problem_table(kind, cfg.extra["max_size"], cfg.size_guard)
    name = "K_{%s}" if kind == "complete_bipartite" else "K_%s"
    if cfg.output_format == "json":
        out.write(json.dumps([{"params": list(p), "gamma_pr_star": v} for p, v in table]) + "\n")
    else:
        out.write("graph\tn\tm\tgamma_pr_star\n")
        for p, v in table:
            g = family(kind, *p)
            out.write(f"{name % ','.join(map(str, p))}\t{g.n}\t{g.m}\t{v}\n")
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "middle": cmd_middle,
    "construct": cmd_construct,
    "check": cmd_check,
    "survey": cmd_survey,
    "open-problems": cmd_open_problems,
}


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg, out)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (GraphError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
