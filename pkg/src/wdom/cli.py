"""``wdom`` command line.

Subcommands: gen, bounds, heuristic, exact, export-ilp, experiment, profile.
``--config FILE`` loads a flat JSON object whose keys mirror the long flags
of the chosen subcommand; flags given on the command line win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import asdict

from . import experiments as ex
from .bounds import all_bounds
from .exact import SizeLimitError, exact_solve, parse_fractional, relaxation_bounds
from .generators import GenSpec, generate, parse_kind
from .graph import GraphFormatError, format_number, read_graph, serialize_graph
from .heuristics import HeuristicConfig, run
from .ilp import build_model, write_lp


def _emit(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=1) + "\n"
    cells = [["" if v is None else (format_number(v) if isinstance(v, float) else str(v)) for v in r] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(cells)
        return buf.getvalue()
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(wd) for h, wd in zip(header, widths))]
    lines += ["  ".join(c.ljust(wd) for c, wd in zip(r, widths)) for r in cells]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def cmd_gen(a) -> int:
    kw = parse_kind(f"er:{a.n}:{a.p}") if a.kind == "er" else parse_kind(f"sun:{a.delta}")
    g = generate(GenSpec(weight_lo=a.weights[0], weight_hi=a.weights[1], seed=a.seed, **kw))
    _emit(serialize_graph(g), a.output)
    return 0


def cmd_bounds(a) -> int:
    g = read_graph(a.graph)
    header = ["theorem", "applicable", "p", "k", "z", "q", "intermediate", "final"]
    rows = []
    for rep in all_bounds(g):
        rows.append([rep.theorem, rep.applicable] + [rep.params.get(x) for x in ("p", "k", "z", "q")]
                    + [rep.intermediate_bound, rep.final_bound])
    _emit(_table(header, rows, a.format), a.output)
    return 0


def cmd_heuristic(a) -> int:
    g = read_graph(a.graph)
    cfg = HeuristicConfig(variant=a.variant, iterations=a.iterations, time_budget=a.time_budget,
                          seed=a.seed, clamp_probabilities=not a.no_clamp)
    hr = run(g, cfg)
    if a.trace:
        _emit(ex.trace_csv(hr.trace), a.trace)
    header = ["pick", "size", "weight", "found_s", "vertices"]
    rows = [
        [name, s.size, s.weight, round(s.found_at, 3), " ".join(map(str, s.sorted_ids(1)))]
        for name, s in (("by_size", hr.best_by_size), ("by_weight", hr.best_by_weight))
    ]
    _emit(_table(header, rows, a.format), a.output)
    logging.info("%d iterations, stopped by %s%s", hr.iterations_done, hr.stopped_by,
                 ", probabilities clamped" if hr.clamped else "")
    return 0


def cmd_exact(a) -> int:
    g = read_graph(a.graph)
    res = exact_solve(g, a.objective, max_n=a.max_n)
    header = ["objective", "optimum", "size", "weight", "nodes", "vertices"]
    rows = [[res.objective, res.optimum_value, res.size, res.weight, res.nodes_explored,
             " ".join(str(v + 1) for v in sorted(res.witness))]]
    text = _table(header, rows, a.format)
    if a.fractional:
        with open(a.fractional, encoding="utf-8") as fh:
            x = parse_fractional(fh.read(), g.n)
        rb = relaxation_bounds(g, x, a.relaxation_objective)
        text += _table(list(asdict(rb)), [list(asdict(rb).values())], a.format)
    _emit(text, a.output)
    return 0


def cmd_export_ilp(a) -> int:
    g = read_graph(a.graph)
    kind = {"two": "two_objective", "reduced": "reduced_weight"}.get(a.objective, a.objective)
    if kind == "reduced_weight":
        from .exact import reduce_two_objective
        g = reduce_two_objective(g)
    _emit(write_lp(build_model(g, kind, a.relaxed)), a.output)
    return 0


def cmd_experiment(a) -> int:
    spec = ex.ExperimentSpec(
        corpus=list(a.corpus or []), solvers=a.solvers.split(","), iterations=a.iterations,
        repeats=a.repeats, time_budget=a.time_budget, master_seed=a.seed,
        weight_lo=a.weights[0], weight_hi=a.weights[1], timing=not a.no_timing,
    )
    result = ex.run_experiment(spec)
    _emit(ex.experiment_csv(result), a.output)
    if a.json:
        _emit(ex.experiment_json(result), a.json)
    return 0


def cmd_profile(a) -> int:
    g = read_graph(a.graph)
    _emit(ex.trace_csv(ex.profile(g, a.variant, a.time_budget, a.seed)), a.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wdom", description=__doc__.split("\n")[0])
    p.add_argument("--config", help="flat JSON file of flag defaults")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph=True, fmt=True):
        if graph:
            sp.add_argument("graph", help="graph file (.wdom format)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("-o", "--output", default=None, help="output path (default stdout)")
        if fmt:
            sp.add_argument("--format", choices=("csv", "json", "text"), default="text")

    sp = sub.add_parser("gen", help="generate a random weighted instance")
    common(sp, graph=False, fmt=False)
    sp.add_argument("--kind", choices=("er", "sun"), required=True)
    sp.add_argument("--n", type=int, default=100)
    sp.add_argument("--p", default="1/3", help="edge probability, decimal or fraction")
    sp.add_argument("--delta", type=int, default=50)
    sp.add_argument("--weights", type=int, nargs=2, default=[101, 200], metavar=("LO", "HI"))
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bounds", help="evaluate all upper bounds")
    common(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("heuristic", help="randomized heuristic, best of N iterations")
    common(sp)
    sp.add_argument("--variant", type=str.lower, choices=("t3", "t5", "t6"), default="t3")
    sp.add_argument("--iterations", type=int, default=20)
    sp.add_argument("--time-budget", type=float, default=None)
    sp.add_argument("--trace", default=None, help="write improvement trace CSV here")
    sp.add_argument("--no-clamp", action="store_true", help="fail instead of clamping probabilities")
    sp.set_defaults(func=cmd_heuristic)

    sp = sub.add_parser("exact", help="exact branch and bound (small graphs)")
    common(sp)
    sp.add_argument("--objective", choices=("size", "weight", "lex"), default="weight")
    sp.add_argument("--max-n", type=int, default=32)
    sp.add_argument("--fractional", default=None, help="file of 'x<i> <value>' lines from an LP relaxation")
    sp.add_argument("--relaxation-objective", choices=("size", "two"), default="size")
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("export-ilp", help="write the covering ILP in LP format")
    common(sp, fmt=False)
    sp.add_argument("--objective", choices=("size", "weight", "two", "reduced"), default="size")
    sp.add_argument("--relaxed", action="store_true")
    sp.set_defaults(func=cmd_export_ilp)

    sp = sub.add_parser("experiment", help="run an experiment protocol over a generated corpus")
    common(sp, graph=False, fmt=False)
    sp.add_argument("--corpus", action="append", help="er:<n>:<p> or sun:<delta>; repeatable")
    sp.add_argument("--solvers", default="t3,t5,t6")
    sp.add_argument("--iterations", type=int, default=20)
    sp.add_argument("--repeats", type=int, default=10)
    sp.add_argument("--time-budget", type=float, default=None)
    sp.add_argument("--weights", type=int, nargs=2, default=[101, 200], metavar=("LO", "HI"))
    sp.add_argument("--json", default=None, help="also write rows, witnesses and bounds as JSON")
    sp.add_argument("--no-timing", action="store_true", help="blank the time column (reproducible bytes)")
    sp.set_defaults(func=cmd_experiment)

    sp = sub.add_parser("profile", help="time-budgeted run emitting a performance-profile trace")
    common(sp, fmt=False)
    sp.add_argument("--variant", type=str.lower, choices=("t3", "t5", "t6"), default="t3")
    sp.add_argument("--time-budget", type=float, required=True)
    sp.set_defaults(func=cmd_profile)
    return p


def _load_config(argv) -> dict:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return {}
    with open(known.config, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise SystemExit("config file must hold a JSON object")
    return {k.replace("-", "_"): v for k, v in data.items()}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    config = _load_config(argv)
    if config:
        subparsers = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
        for sp in subparsers.choices.values():
            dests = {act.dest for act in sp._actions}
            sp.set_defaults(**{k: v for k, v in config.items() if k in dests})
            for act in sp._actions:
                if act.dest in config and act.required:
                    act.required = False
    a = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return a.func(a)
    except SizeLimitError as exc:
        print(f"wdom: error: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"wdom: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
