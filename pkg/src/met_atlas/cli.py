"""Command line: ``met-atlas {orbit,polarizations,graph,connect,group}``.

Exit status is 0 on success, 1 on a mathematical/domain error, 2 on bad usage.
``MET_ATLAS_CAP`` overrides the group enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .graph import build_graph, connect, graph_to_dot, graph_to_json, net_centers
from .groups import DEFAULT_CAP, codim2_single_class_check, load_group, verdict_to_dict
from .orbits import ORACLE_CAP, EdgeTag, centralizer_dim_oracle, closure_strata, orbit, orbit_dim
from .partitions import parse_partition
from .polarizations import cumulative_dims, polarizations


def _cap_from_env(default: int) -> int:
    raw = os.environ.get("MET_ATLAS_CAP")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"MET_ATLAS_CAP must be an integer, got {raw!r}") from None


def _orbit_from(args):
    return orbit(args.algebra, args.n, parse_partition(args.partition))


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_orbit(args) -> None:
    o = _orbit_from(args)
    if args.action == "dim":
        dim = orbit_dim(o)
        payload = {"orbit": str(o), "dim": dim}
        if o.algebra.n <= ORACLE_CAP:
            payload["oracle_dim"] = centralizer_dim_oracle(o)
        _emit(args, payload, str(dim))
    else:
        strata = closure_strata(o)
        payload = {
            "orbit": str(o),
            "strata": [{"partition": list(e), "dim": orbit_dim(orbit(args.algebra, args.n, e))} for e in strata],
        }
        _emit(args, payload, "\n".join(f"{e} dim={s['dim']}" for e, s in zip(strata, payload["strata"])))


def cmd_polarizations(args) -> None:
    o = _orbit_from(args)
    flags = polarizations(o)
    payload = {
        "orbit": str(o),
        "polarizations": [
            {"label": f.label, "half": list(f.half), "q": f.middle_q, "sign": f.sign,
             "dims": list(cumulative_dims(f, o.algebra.n))}
            for f in flags
        ],
    }
    _emit(args, payload, "\n".join(f.label for f in flags))


def cmd_graph(args) -> None:
    g = build_graph(_orbit_from(args))
    if args.format == "dot":
        sys.stdout.write(graph_to_dot(g))
    elif args.format == "json":
        print(graph_to_json(g))
    else:
        labels = g.labels()
        lines = [f"{g.orbit}: {len(g.nodes)} resolutions, {len(g.edges)} edges"]
        lines += [f"  {labels[e.a]} -- {labels[e.b]}: {e.cls} ({e.move})" for e in g.edges]
        if not g.is_connected():
            lines.append(f"  disconnected: {len(g.components())} components")
        print("\n".join(lines))


def cmd_connect(args) -> None:
    g = build_graph(_orbit_from(args))
    path = connect(g, args.source, args.target)
    steps = []
    for a, b, e in zip(path.nodes, path.nodes[1:], path.edges):
        steps.append({"from": a, "to": b, "class": e.cls.tag.value,
                      "center": list(e.cls.center) if e.cls.tag is EdgeTag.MET else None, "move": e.move})
    centers = net_centers(path)
    payload = {"from": args.source, "to": args.target, "nodes": list(path.nodes), "steps": steps,
               "net_centers": [list(c) for c in centers]}
    lines = [f"{s['from']} --> {s['to']}: {e.cls} ({e.move})" for s, e in zip(steps, path.edges)]
    if not steps:
        lines.append(f"{args.source} = {args.target}: empty path")
    lines.append("net centers: " + (", ".join(c.compact() for c in centers) or "none"))
    _emit(args, payload, "\n".join(lines))


def cmd_group(args) -> None:
    with open(args.input) as fh:
        data = json.load(fh)
    default = int(data.get("cap") or DEFAULT_CAP)
    G = load_group(data, cap=_cap_from_env(default))
    v = codim2_single_class_check(G)
    payload = verdict_to_dict(G, v)
    lines = [
        f"|G| = {len(G)}, {len(G.classes)} conjugacy classes",
        f"codimension-2 condition: {'holds' if v.condition_holds else 'fails'}",
    ]
    for w in payload["witnesses"]:
        lines.append(f"  H = {w['subspace_text']}: {w['element_count']} elements in {w['class_count']} class(es)")
    lines.append(f"reflections form a single class: {v.reflection_single_class}")
    if v.gl2_uniqueness is not None:
        lines.append(f"at most one projective symplectic resolution: {v.gl2_uniqueness}")
    _emit(args, payload, "\n".join(lines))


def _orbit_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algebra", required=True, choices=["sl", "so", "sp"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--partition", required=True, help="e.g. 3,2,1 or 2^3,1^2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="met-atlas", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", help="orbit dimension or closure strata")
    _orbit_args(p)
    p.add_argument("action", choices=["dim", "strata"])
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("polarizations", help="flag types of the symplectic resolutions")
    _orbit_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_polarizations)

    p = sub.add_parser("graph", help="resolution graph with classified edges")
    _orbit_args(p)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("connect", help="shortest path between two resolutions")
    _orbit_args(p)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_connect)

    p = sub.add_parser("group", help="codimension-2 conjugacy check for a finite matrix group")
    p.add_argument("--input", required=True, help="group JSON file")
    p.add_argument("action", nargs="?", choices=["check"], default="check")
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_group)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
