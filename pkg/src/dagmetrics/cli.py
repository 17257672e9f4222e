"""Command-line front end: stretch, diameter, layer, check, gen.

Exit codes: 0 success, 1 unbalanced verdict from `check`, 2 input errors
(parse failures, cycles), 3 usage errors. Human output shows external
vertex labels only; JSON output follows a fixed-field-order schema and
is emitted as a single line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import defaultdict

from dagmetrics import core, layering, metrics, oracle
from dagmetrics.core import Dag, DagError
from dagmetrics.layering import LayerAssignment, UnbalancedWitness
from dagmetrics.metrics import InstrumentationCounters

ORACLE_BOUND_ENV = "DAGMETRICS_ORACLE_BOUND"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="dagmetrics", description="DAG stretch, diameter, and layering analysis")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")

    p = sub.add_parser("stretch", parents=[common], help="longest directed path length")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument("--per-vertex", action="store_true", help="also print lp for every vertex")
    p.set_defaults(func=_cmd_stretch)

    p = sub.add_parser("diameter", parents=[common], help="maximum shortest directed distance")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument("--all-pairs", action="store_true", help="also dump every shortest distance")
    p.set_defaults(func=_cmd_diameter)

    p = sub.add_parser("layer", parents=[common], help="assign layers or report a conflict")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument("--algo", choices=["pq", "traversal"], default="traversal")
    p.set_defaults(func=_cmd_layer)

    p = sub.add_parser("check", parents=[common], help="balanced verdict (exit 1 when unbalanced)")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gen", parents=[common], help="emit a seeded random DAG as edge-list text")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="vertex count for the permutation model")
    group.add_argument("--layered", nargs=2, type=int, metavar=("L", "W"), help="L layers of width W")
    p.add_argument("--p", type=float, required=True, help="edge probability")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_gen)
    return parser


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> Dag:
    return core.build_dag(core.parse_edge_list(_read_text(path)))


def _oracle_bound() -> int:
    raw = os.environ.get(ORACLE_BOUND_ENV)
    if raw is None:
        return oracle.SMALL_GRAPH_BOUND
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"{ORACLE_BOUND_ENV} must be an integer, got {raw!r}")


def _plural(n: int, singular: str, plural: str | None = None) -> str:
    if n == 1:
        return f"{n} {singular}"
    return f"{n} {plural or singular + 's'}"


def _summary(g: Dag, components: int) -> str:
    return (
        f"graph: {_plural(g.n, 'vertex', 'vertices')}, "
        f"{_plural(g.m, 'edge')}, {_plural(components, 'component')}"
    )


def _report(command: str, g: Dag, components: int, result: dict,
            counters: InstrumentationCounters, verified: bool | None) -> dict:
    return {
        "command": command,
        "input": {"vertices": g.n, "edges": g.m, "components": components},
        "result": result,
        "counters": {
            "vertex_evaluations": counters.vertex_evaluations,
            "edge_examinations": counters.edge_examinations,
            "distance_updates": counters.distance_updates,
        },
        "verified": verified,
    }


def _emit_json(report: dict) -> None:
    print(json.dumps(report, separators=(",", ":")))


def _verified_line(verified: bool | None, note: str | None) -> str:
    if verified is None:
        return f"verified: {note}"
    return f"verified: {str(verified).lower()}"


def _cmd_stretch(args) -> int:
    g = _load(args.file)
    components = len(core.weakly_connected_components(g))
    res, counters = metrics.stretch(g)
    verified = None
    note = None
    if args.verify:
        bound = _oracle_bound()
        if g.n <= bound:
            verified = res.stretch == oracle.oracle_stretch(g, bound)
        else:
            note = f"skipped (n={g.n} exceeds oracle bound {bound})"
    result = {
        "stretch": res.stretch,
        "witness_source": g.labels[res.witness_source],
        "witness_source_index": res.witness_source,
        "lp": {g.labels[v]: res.lp[v] for v in range(g.n)} if args.per_vertex else None,
    }
    if args.json:
        _emit_json(_report("stretch", g, components, result, counters, verified))
    else:
        lines = [
            _summary(g, components),
            f"stretch: {res.stretch}",
            f"witness source: {g.labels[res.witness_source]}",
        ]
        if args.per_vertex:
            lines += [f"lp[{g.labels[v]}] = {res.lp[v]}" for v in range(g.n)]
        if args.verify:
            lines.append(_verified_line(verified, note))
        print("\n".join(lines))
    return 0


def _cmd_diameter(args) -> int:
    g = _load(args.file)
    components = len(core.weakly_connected_components(g))
    res, counters = metrics.diameter(g)
    rows = None
    if args.all_pairs or args.verify:
        rows = metrics.all_pairs_distances(g)[0]
    verified = None
    if args.verify:
        verified = res.diameter == oracle.oracle_diameter(g)
        if verified:
            for u in range(g.n):
                if rows.get(u, {}) != oracle.bfs_distances(g, u):
                    verified = False
                    break
    witness_labels = None
    if res.witness is not None:
        witness_labels = [g.labels[res.witness[0]], g.labels[res.witness[1]]]
    result = {
        "diameter": res.diameter,
        "witness": witness_labels,
        "witness_indices": list(res.witness) if res.witness is not None else None,
        "distances": (
            {g.labels[u]: {g.labels[v]: rows[u][v] for v in sorted(rows[u])} for u in sorted(rows)}
            if args.all_pairs
            else None
        ),
    }
    if args.json:
        _emit_json(_report("diameter", g, components, result, counters, verified))
    else:
        lines = [_summary(g, components), f"diameter: {res.diameter}"]
        if res.witness is None:
            lines.append("witness: none")
        else:
            lines.append(f"witness: {g.labels[res.witness[0]]} -> {g.labels[res.witness[1]]}")
        if args.all_pairs:
            for u in sorted(rows):
                for v in sorted(rows[u]):
                    lines.append(f"d[{g.labels[u]} -> {g.labels[v]}] = {rows[u][v]}")
        if args.verify:
            lines.append(_verified_line(verified, None))
        print("\n".join(lines))
    return 0


def _layer_result(g: Dag, outcome) -> dict:
    if isinstance(outcome, LayerAssignment):
        groups = defaultdict(list)
        for v in range(g.n):
            groups[outcome.layer[v]].append(g.labels[v])
        layers = [sorted(groups[k]) for k in sorted(groups)]
        return {"balanced": True, "layers": layers, "witness": None}
    w: UnbalancedWitness = outcome
    return {
        "balanced": False,
        "layers": None,
        "witness": {
            "vertex": g.labels[w.vertex],
            "existing": w.existing_label,
            "attempted": w.attempted_label,
            "edge": [g.labels[w.via_edge.u], g.labels[w.via_edge.v]],
        },
    }


def _verify_layering(g: Dag, outcome) -> bool:
    balanced = isinstance(outcome, LayerAssignment)
    if balanced != oracle.oracle_graded(g):
        return False
    if balanced:
        layer = outcome.layer
        for u in range(g.n):
            for v in g.out_adj[u]:
                if layer[v] != layer[u] + 1:
                    return False
        low = defaultdict(lambda: None)
        for v in range(g.n):
            cid = outcome.component_of[v]
            if low[cid] is None or layer[v] < low[cid]:
                low[cid] = layer[v]
        if any(x != 0 for x in low.values()):
            return False
    return True


def _layer_text(g: Dag, components: int, outcome, verify: bool, verified) -> str:
    lines = [_summary(g, components)]
    if isinstance(outcome, LayerAssignment):
        lines.append("balanced: yes")
        groups = defaultdict(list)
        for v in range(g.n):
            groups[outcome.layer[v]].append(g.labels[v])
        for k in sorted(groups):
            lines.append(f"layer {k}: " + " ".join(sorted(groups[k])))
    else:
        w = outcome
        lines.append("balanced: no")
        lines.append(
            f"conflict at {g.labels[w.vertex]}: existing label {w.existing_label}, "
            f"attempted {w.attempted_label}, via edge "
            f"{g.labels[w.via_edge.u]} -> {g.labels[w.via_edge.v]}"
        )
    if verify:
        lines.append(_verified_line(verified, None))
    return "\n".join(lines)


def _cmd_layer(args) -> int:
    g = _load(args.file)
    components = len(core.weakly_connected_components(g))
    algo = layering.layer_pq if args.algo == "pq" else layering.layer_traversal
    outcome, counters = algo(g)
    verified = _verify_layering(g, outcome) if args.verify else None
    if args.json:
        _emit_json(_report("layer", g, components, _layer_result(g, outcome), counters, verified))
    else:
        print(_layer_text(g, components, outcome, args.verify, verified))
    return 0


def _cmd_check(args) -> int:
    g = _load(args.file)
    components = len(core.weakly_connected_components(g))
    outcome, counters = layering.layer_traversal(g)
    balanced = isinstance(outcome, LayerAssignment)
    verified = _verify_layering(g, outcome) if args.verify else None
    result = _layer_result(g, outcome)
    del result["layers"]
    if args.json:
        _emit_json(_report("check", g, components, result, counters, verified))
    else:
        lines = [_summary(g, components), f"balanced: {'yes' if balanced else 'no'}"]
        if not balanced:
            w = outcome
            lines.append(
                f"conflict at {g.labels[w.vertex]}: existing label {w.existing_label}, "
                f"attempted {w.attempted_label}, via edge "
                f"{g.labels[w.via_edge.u]} -> {g.labels[w.via_edge.v]}"
            )
        if args.verify:
            lines.append(_verified_line(verified, None))
        print("\n".join(lines))
    return 0 if balanced else 1


def _cmd_gen(args) -> int:
    if not 0.0 <= args.p <= 1.0:
        raise _UsageError(f"--p must be in [0, 1], got {args.p}")
    if args.layered is not None:
        layers, width = args.layered
        if layers < 1 or width < 1:
            raise _UsageError("--layered needs L >= 1 and W >= 1")
        inp = oracle.gen_layered_dag(layers, width, args.p, args.seed)
    else:
        if args.n < 0:
            raise _UsageError(f"--n must be >= 0, got {args.n}")
        inp = oracle.gen_random_dag(args.n, args.p, args.seed)
    lines = [f"{a} {b}" for a, b in inp.edges] + list(inp.isolated)

    if args.json or args.verify:
        g = core.build_dag(inp)  # generated output is acyclic by construction
        components = len(core.weakly_connected_components(g))
        verified = None
        if args.verify:
            verified = oracle.oracle_graded(g) if args.layered is not None else True
        if args.json:
            result = {"edges": [[a, b] for a, b in inp.edges], "isolated": list(inp.isolated)}
            _emit_json(_report("gen", g, components, result, InstrumentationCounters(), verified))
            return 0
        # text mode keeps stdout parseable; the verdict goes to stderr
        print(_verified_line(verified, None), file=sys.stderr)
    if lines:
        print("\n".join(lines))
    return 0


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 3
    except SystemExit as e:  # --help
        return int(e.code or 0)
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 3
    except DagError as e:
        print(str(e), file=sys.stderr)
        return 2
    except OSError as e:
        print(str(e), file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
