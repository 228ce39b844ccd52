"""Command-line front end.

Exit status: 0 on success, 1 if any verification report is violated, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .automorphisms import automorphism_generators, canonical_labeling
from .corpus import all_graphs, multi_component_corpus, pair_corpus
from .fixing import CapExceeded, fixing_number
from .formats import FormatError, emit_edge_list, emit_graph6, graph6_str, read_graphs
from .graph import Graph, GraphError, MAX_ORDER, relabel
from .products import composition, corona, corona_iter
from .theorems import DEFAULT_CAP, THEOREM_IDS, scan_corpus

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc


def _load(path: str, fmt: str) -> list[Graph]:
    try:
        graphs = read_graphs(_read_input(path), fmt)
    except (FormatError, GraphError) as exc:
        raise UsageError(f"{path}: {exc}") from exc
    if not graphs:
        raise UsageError(f"{path}: no graphs found")
    return graphs


def _load_one(path: str, fmt: str) -> Graph:
    graphs = _load(path, fmt)
    if len(graphs) != 1:
        raise UsageError(f"{path}: expected one graph, found {len(graphs)}")
    return graphs[0]


class _Out:
    def __init__(self, path: str | None):
        self.path = path
        self.lines: list[str] = []

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def record(self, obj: dict) -> None:
        self.lines.append(json.dumps(obj, sort_keys=True, separators=(",", ":")))

    def flush(self) -> None:
        text = "".join(l + "\n" for l in self.lines)
        if self.path is None or self.path == "-":
            sys.stdout.write(text)
        else:
            try:
                Path(self.path).write_text(text)
            except OSError as exc:
                raise UsageError(f"{self.path}: {exc.strerror}") from exc


def cmd_fix(args, out: _Out) -> int:
    for g in _load(args.input, args.format):
        try:
            res = fixing_number(g, cap=args.cap)
        except CapExceeded as exc:
            raise UsageError(str(exc)) from exc
        if args.json:
            out.record({"graph": graph6_str(g), "fix_number": res.fix_number, "witness": list(res.witness)})
        else:
            out.line(f"{graph6_str(g)}\tfix={res.fix_number}\twitness={' '.join(map(str, res.witness)) or '-'}")
    return EXIT_OK


def cmd_aut(args, out: _Out) -> int:
    for g in _load(args.input, args.format):
        res = automorphism_generators(g)
        gens = [list(p) for p in res.generators]
        orbits = [list(c) for c in res.orbit_partition.cells]
        if args.json:
            out.record({"graph": graph6_str(g), "group_order": res.group_order, "generators": gens, "orbits": orbits})
        else:
            out.line(f"{graph6_str(g)}\torder={res.group_order}")
            for p in res.generators:
                out.line(f"  {p}")
            out.line("  orbits: " + " | ".join(" ".join(map(str, c)) for c in orbits))
    return EXIT_OK


def cmd_orbits(args, out: _Out) -> int:
    for g in _load(args.input, args.format):
        orbits = [list(c) for c in automorphism_generators(g).orbit_partition.cells]
        if args.json:
            out.record({"graph": graph6_str(g), "orbits": orbits})
        else:
            out.line(f"{graph6_str(g)}\t" + " | ".join(" ".join(map(str, c)) for c in orbits))
    return EXIT_OK


def _canonical_graph(g: Graph) -> Graph:
    lab, _ = canonical_labeling(g)
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    return relabel(g, pos)


def cmd_canon(args, out: _Out) -> int:
    for g in _load(args.input, args.format):
        c = graph6_str(_canonical_graph(g))
        if args.json:
            out.record({"graph": graph6_str(g), "canonical": c})
        else:
            out.line(c)
    return EXIT_OK


def cmd_convert(args, out: _Out) -> int:
    graphs = _load(args.input, args.format)
    if args.to == "graph6":
        for g in graphs:
            out.line(emit_graph6(g).decode("ascii"))
    else:
        if len(graphs) != 1:
            raise UsageError("edge-list output holds exactly one graph")
        out.line(emit_edge_list(graphs[0]).decode("ascii").rstrip("\n"))
    return EXIT_OK


def cmd_product(args, out: _Out) -> int:
    g1 = _load_one(args.g1, args.format)
    g2 = _load_one(args.g2, args.format)
    cap = args.cap or MAX_ORDER
    try:
        if args.op == "composition":
            pg = composition(g1, g2, cap=cap)
        elif args.op == "corona":
            pg = corona(g1, g2, cap=cap)
        else:
            pg = corona_iter(g1, g2, args.k, cap=cap)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    g6 = graph6_str(pg.graph)
    if args.output and args.output != "-":
        target = Path(args.output)
        side = target.with_suffix(".coord.json")
        try:
            target.write_text(g6 + "\n")
            side.write_text(pg.sidecar_json() + "\n")
        except OSError as exc:
            raise UsageError(f"{exc.filename}: {exc.strerror}") from exc
        return EXIT_OK
    if args.json:
        out.record({"graph": g6, **pg.to_sidecar()})
    else:
        out.line(g6)
    return EXIT_OK


def verify_instances(theorem_id: str, g1_max: int, g2_max: int, count: int, seed: int) -> list[tuple]:
    """The corpus a theorem is scanned over."""
    if theorem_id == "disconnected_formula":
        return [(g,) for g in multi_component_corpus(count, seed=seed)]
    if theorem_id == "join_lemmas":
        return [(g,) for g in all_graphs(max(g1_max, g2_max))]
    pairs = pair_corpus(g1_max, g2_max)
    if theorem_id == "corona_iter":
        return [(g1, g2, k) for g1, g2 in pairs for k in (1, 2)]
    return pairs


def cmd_verify(args, out: _Out) -> int:
    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    status = EXIT_OK
    for tid in ids:
        corpus = verify_instances(tid, args.g1_max, args.g2_max, args.count, args.seed)
        summary, reports = scan_corpus(corpus, tid, cap=args.cap or DEFAULT_CAP, jobs=args.jobs)
        if summary.violated:
            status = EXIT_VIOLATED
        if args.json:
            for r in reports:
                out.line(r.to_json())
        else:
            c = summary.counts
            out.line(
                f"{tid:22s} total={summary.total:4d} confirmed={c['confirmed']:4d} violated={c['violated']:4d} "
                f"hypothesis_not_met={c['hypothesis_not_met']:4d} skipped_cap={c['skipped_cap']:4d}"
            )
            for r in reports:
                if r.verdict == "violated":
                    out.line(f"  violated {json.dumps(r.instance, sort_keys=True)} {json.dumps(r.witness, sort_keys=True)}")
    return status


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    common.add_argument("--json", action="store_true", help="JSON lines instead of a table")
    common.add_argument("--cap", type=_positive, default=None, help="size cap for exact work")
    common.add_argument("--jobs", type=_positive, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-o", "--output", default=None)

    parser = argparse.ArgumentParser(prog="fixgraph", description="Fixing numbers, automorphisms and graph products.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, text in (
        ("fix", cmd_fix, "exact fixing number with a minimum fixing set"),
        ("aut", cmd_aut, "automorphism generators, orbits and group order"),
        ("orbits", cmd_orbits, "vertex orbits"),
        ("canon", cmd_canon, "canonical form as graph6"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("input", help="file or - for stdin")
        p.set_defaults(func=fn)

    p = sub.add_parser("convert", parents=[common], help="convert between graph6 and edge lists")
    p.add_argument("input")
    p.add_argument("--to", choices=("graph6", "edgelist"), required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("product", parents=[common], help="build a composition or corona product")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--op", choices=("composition", "corona", "corona-iter"), required=True)
    p.add_argument("--k", type=_positive, default=1)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", parents=[common], help="scan a corpus against a theorem")
    p.add_argument("--theorem", choices=THEOREM_IDS + ("all",), required=True)
    p.add_argument("--g1-max", type=_positive, default=3)
    p.add_argument("--g2-max", type=_positive, default=3)
    p.add_argument("--count", type=_positive, default=50, help="multi-component graphs to draw")
    p.set_defaults(func=cmd_verify)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "fix" and args.cap is None:
        args.cap = 512
    out = _Out(args.output if args.command != "product" else None)
    try:
        status = args.func(args, out)
        out.flush()
    except UsageError as exc:
        print(f"fixgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return status


def main() -> None:
    sys.exit(run_cli())
