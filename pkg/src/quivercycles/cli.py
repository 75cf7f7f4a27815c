"""Command-line entry points.

Every subcommand prints machine-readable JSON on stdout.  Exit status:
0 on success, 1 on domain errors (violated constraints, unsupported
inputs), 2 on usage errors (bad flags, malformed files or sequences).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as qio
from .degrees import track_degrees
from .errors import QuiverError, UsageError
from .factory import (
    CycleParams,
    CycleSpec,
    build_acyclic_rotation,
    build_gallery,
    build_generalized_sink_source,
    build_theorem1,
    gallery_names,
    GALLERY,
)
from .genericity import unparametrize
from .quiver import Quiver, make_quiver, validate_steps
from .structure import analyze
from .three_vertex import classify_vertices, descent_sequence
from .verifier import check_minimal, check_no_short_cycles, verify_cycle


def _print(doc) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load_quiver(path: str) -> Quiver:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError("cannot read quiver file %s: %s" % (path, exc))
    return qio.quiver_from_json(text)


def _parse_params_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("malformed --params JSON: %s" % exc)
    if not isinstance(doc, dict):
        raise UsageError("--params must be a JSON object")
    return doc


def _q_map_from_doc(doc: dict, n: int) -> dict:
    """Accept {"1,2": v, ...} or {"q": {...}} pair-keyed parameter maps."""
    raw = doc.get("q", doc)
    q = {}
    for key, value in raw.items():
        parts = str(key).replace("(", "").replace(")", "").split(",")
        if len(parts) != 2:
            raise UsageError("parameter key %r is not an 'i,j' pair" % key)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise UsageError("parameter key %r is not an 'i,j' pair" % key)
        q[(i, j)] = int(value)
    return q


def _spec_doc(spec: CycleSpec) -> dict:
    return {
        "quiver": qio.quiver_to_doc(spec.base),
        "sequence": qio.sequence_to_doc(spec.steps),
        "length": spec.length,
    }


def _cmd_construct(args) -> int:
    family = args.family
    if family == "theorem1":
        if args.n is None or args.k is None:
            raise UsageError("theorem1 needs --n and --k")
        if args.uniform is not None:
            params = CycleParams.uniform(args.n, args.k, args.uniform)
        elif args.params is not None:
            params = CycleParams(args.n, args.k, _q_map_from_doc(_parse_params_json(args.params), args.n))
        else:
            raise UsageError("theorem1 needs --uniform or --params")
        spec = build_theorem1(params)
    elif family.startswith("gallery:"):
        name = family.split(":", 1)[1]
        values = {}
        if name in GALLERY and args.uniform is not None:
            values = {key: args.uniform for key in GALLERY[name].param_names}
        if args.params is not None:
            values.update(_parse_params_json(args.params))
        spec = build_gallery(name, values)
    elif family == "rotation":
        if args.quiver:
            base = _load_quiver(args.quiver)
        else:
            if args.n is None:
                raise UsageError("rotation needs --quiver or --n")
            value = args.uniform if args.uniform is not None else 2
            base = make_quiver(
                args.n,
                {(i, j): value for i in range(1, args.n + 1) for j in range(i + 1, args.n + 1)},
            )
        spec = build_acyclic_rotation(base)
    elif family == "sinksource":
        if args.n is None:
            raise UsageError("sinksource needs --n")
        doc = _parse_params_json(args.params) if args.params else {}
        try:
            cut_a, cut_b = int(doc["a"]), int(doc["b"])
        except KeyError:
            raise UsageError('sinksource needs --params with cut indices "a" and "b"')
        if "q" in doc:
            q = {int(i): int(v) for i, v in doc["q"].items()}
        elif args.uniform is not None:
            q = {i: args.uniform for i in range(1, args.n)}
        else:
            raise UsageError('sinksource needs a "q" map in --params or --uniform')
        base_weight = int(doc["W"]) if "W" in doc else None
        spec = build_generalized_sink_source(args.n, cut_a, cut_b, q, base_weight)
    else:
        raise UsageError(
            "unknown family %r (theorem1, rotation, sinksource, gallery:<%s>)"
            % (family, "|".join(gallery_names()))
        )
    _print(_spec_doc(spec))
    return 0


def _read_spec(args) -> CycleSpec:
    if getattr(args, "stdin", False):
        try:
            doc = json.load(sys.stdin)
        except json.JSONDecodeError as exc:
            raise UsageError("malformed JSON on stdin: %s" % exc)
        base = qio.quiver_from_doc(doc.get("quiver"))
        steps = qio.sequence_from_doc(doc.get("sequence", {}))
    else:
        if not args.quiver or not args.sequence:
            raise UsageError("need --quiver and --sequence (or --stdin)")
        base = _load_quiver(args.quiver)
        steps = qio.parse_steps_text(args.sequence)
    validate_steps(steps, base.n)
    return CycleSpec(base, steps)


def _cmd_verify(args) -> int:
    spec = _read_spec(args)
    trace = verify_cycle(spec)
    if args.emit_trace:
        out = Path(args.emit_trace)
        out.mkdir(parents=True, exist_ok=True)
        for j in range(trace.length + 1):
            (out / ("q_%04d.json" % j)).write_text(
                qio.quiver_to_json(trace.quiver_at(j), indent=2) + "\n", encoding="utf-8"
            )
    minimal = check_minimal(trace).minimal if trace.closed else None
    _print(
        {
            "closed": trace.closed,
            "length": trace.length,
            "minimal": minimal,
            "steps": [
                {
                    "vertex": info.vertex,
                    "sink_mutation": info.sink_mutation,
                    "source_mutation": info.source_mutation,
                    "weights_nondecreasing": info.weights_nondecreasing,
                }
                for info in trace.steps
            ],
            "final": qio.quiver_to_doc(trace.final),
        }
    )
    return 0


def _cmd_shortcycles(args) -> int:
    q = _load_quiver(args.quiver)
    result = check_no_short_cycles(q, args.max_length, args.budget)
    _print(
        {
            "status": result.status,
            "witness": list(result.witness) if result.witness else None,
            "nodes_expanded": result.nodes_expanded,
        }
    )
    return 0


def _cmd_analyze(args) -> int:
    _print(analyze(_load_quiver(args.quiver)).to_doc())
    return 0


def _cmd_classify3(args) -> int:
    q = _load_quiver(args.quiver)
    classes = {str(v): c.value for v, c in classify_vertices(q).items()}
    descent = descent_sequence(q)
    _print(
        {
            "classes": classes,
            "descent_sequence": qio.sequence_to_doc(descent.steps),
            "terminal": qio.quiver_to_doc(descent.terminal),
        }
    )
    return 0


def _cmd_explore(args) -> int:
    q = _load_quiver(args.quiver)
    steps = qio.parse_steps_text(args.sequence) if args.sequence else ()
    validate_steps(steps, q.n)
    trail = []
    current = q
    for j, v in enumerate(steps, start=1):
        from .quiver import mutate

        current = mutate(current, v)
        trail.append(
            {
                "step": j,
                "vertex": v,
                "quiver": qio.quiver_to_doc(current),
                "sinks": current.sinks(),
                "sources": current.sources(),
                "back_at_start": current == q,
            }
        )
    _print({"initial": qio.quiver_to_doc(q), "trail": trail})
    return 0


def _cmd_degrees(args) -> int:
    q = _load_quiver(args.quiver)
    steps = qio.parse_steps_text(args.sequence)
    steps = tuple(steps) * max(1, args.loops)
    state = track_degrees(q, steps, tracked=args.var)
    _print(
        {
            "tracked": state.tracked,
            "degrees": [str(d) for d in state.degrees],
            "history": [
                {
                    "vertex": h.vertex,
                    "new_degree": str(h.new_degree),
                    "lower_bound": str(h.lower_bound),
                    "exceeds_all_previous": h.exceeds_all_previous,
                }
                for h in state.history
            ],
            "strictly_increasing": state.strictly_increasing(),
        }
    )
    return 0


def _cmd_params(args) -> int:
    if not args.invert:
        raise UsageError("params currently only supports --invert")
    q = _load_quiver(args.quiver)
    vector = unparametrize(q, args.n, args.k)
    _print(
        {
            "n": vector.n,
            "k": vector.k,
            "q": {"%d,%d" % key: str(value) for key, value in sorted(vector.q.items())},
        }
    )
    return 0


def _cmd_gallery(args) -> int:
    families = []
    for name in gallery_names():
        fam = GALLERY[name]
        families.append(
            {
                "name": fam.name,
                "n": fam.n,
                "length": fam.length,
                "params": list(fam.param_names),
                "defaults": dict(fam.defaults),
                "sequence": list(fam.steps),
            }
        )
    _print({"families": families})
    return 0


def _cmd_serve(args) -> int:
    from .service import run_server

    run_server(
        bind=args.bind,
        port=args.port,
        static_dir=args.static,
        snapshot_path=args.snapshot,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivercycles",
        description="Exact quiver mutation, long mutation cycles, and structural certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a cycle family member")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--params", help="family-specific JSON parameter object")
    p.add_argument("--uniform", type=int, help="set every free parameter to this value")
    p.add_argument("--quiver", help="base quiver file (rotation family)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="replay a mutation sequence and report closure")
    p.add_argument("--quiver")
    p.add_argument("--sequence", help='steps in application order, e.g. "4,1,2,3,2,1,2,1"')
    p.add_argument("--stdin", action="store_true", help="read a construct document from stdin")
    p.add_argument("--emit-trace", metavar="DIR", help="write every intermediate quiver")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("shortcycles", help="exhaustive bounded search for cycles through a quiver")
    p.add_argument("--quiver", required=True)
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**6)
    p.set_defaults(func=_cmd_shortcycles)

    p = sub.add_parser("analyze", help="structural report: sinks, vortices, exits")
    p.add_argument("--quiver", required=True)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("classify3", help="3-vertex classes and descent sequence")
    p.add_argument("--quiver", required=True)
    p.set_defaults(func=_cmd_classify3)

    p = sub.add_parser("explore", help="walk a sequence, printing each state")
    p.add_argument("--quiver", required=True)
    p.add_argument("--sequence")
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("degrees", help="tropical degree trace along a sequence")
    p.add_argument("--quiver", required=True)
    p.add_argument("--sequence", required=True)
    p.add_argument("--loops", type=int, default=1)
    p.add_argument("--var", type=int, default=1, help="tracked vertex (default 1)")
    p.set_defaults(func=_cmd_degrees)

    p = sub.add_parser("params", help="invert the family parametrization")
    p.add_argument("--invert", action="store_true")
    p.add_argument("--quiver", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser("gallery", help="list buildable fixtures")
    p.set_defaults(func=_cmd_gallery)

    p = sub.add_parser("serve", help="run the local HTTP session service")
    p.add_argument("--port", type=int, default=8077)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--static", help="directory of frontend assets to serve at /")
    p.add_argument("--snapshot", help="JSON file for session persistence")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _print({"error": str(exc), "kind": "usage"})
        return 2
    except QuiverError as exc:
        _print({"error": str(exc), "kind": "domain"})
        return 1


if __name__ == "__main__":
    sys.exit(main())
