"""Graph of symplectic resolutions of one orbit closure.

Nodes are polarizations; an edge joins two flag types that differ by exchanging
adjacent steps p_{j-1} < p_j (mirrored in the second half for so/sp), and in
so_2k the two sign families of the same flag type are joined by a type-D flop.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field

from .orbits import AlgebraKind, EdgeClass, EdgeTag, NilpotentOrbit
from .partitions import (
    Partition,
    in_Pai,
    make_partition,
    pai_index,
    spaltenstein,
    strictly_dominates,
)
from .polarizations import FlagType, Resolution, flag_partition, is_polarization, polarizations


class NoPolarizationError(ValueError):
    pass


class NoPathError(ValueError):
    pass


def _oriented(half: tuple[int, ...], j: int) -> tuple[int, int]:
    if not 2 <= j <= len(half):
        raise ValueError(f"swap position {j} outside 2..{len(half)}")
    lo, hi = half[j - 2], half[j - 1]
    if lo >= hi:
        raise ValueError(f"swap at j={j} needs p_(j-1) < p_j, got {lo} >= {hi}")
    return lo, hi


def met_center_A(d: Partition, r: int) -> Partition:
    """Center orbit of the type-A swap with p_{j-1} = r: move one box from row r to row r+2."""
    if r < 1 or d.part(r) < 1:
        raise ValueError(f"d_{r} = 0 for {d}")
    parts = [d.part(i) for i in range(1, max(len(d), r + 2) + 1)]
    parts[r - 1] -= 1
    parts[r + 1] += 1
    center = make_partition(parts)
    if not strictly_dominates(d, center):
        raise ValueError(f"degenerate center: moving a box from row {r} of {d} gives {center}")
    return center


def classify_swap_A(d: Partition, flag: FlagType, j: int) -> EdgeClass:
    if flag.middle_q is not None or flag_partition(flag) != d:
        raise ValueError(f"{flag.label} is not a type-A polarization of {d}")
    lo, hi = _oriented(flag.half, j)
    if hi != lo + 1:
        return EdgeClass.iso_codim2()
    return EdgeClass.met(met_center_A(d, lo))


def met_center_BCD(e: Partition, r: int, n: int, eps: int) -> Partition:
    """Lower e_r by 2, raise e_{r+2} by 2, and apply the Spaltenstein map."""
    if r < 1 or e.part(r) < 2:
        raise ValueError(f"e_{r} < 2 for {e}")
    q = pai_index(e, eps)
    if q is None:
        raise ValueError(f"{e} lies in no Pai({n}, q)")
    parts = [e.part(i) for i in range(1, max(len(e), r + 2) + 1)]
    parts[r - 1] -= 2
    parts[r + 1] += 2
    e2 = make_partition(parts)
    if not in_Pai(e2, n, q, eps):
        raise AssertionError(f"shifted partition {e2} left Pai({n}, {q})")
    return spaltenstein(e2, n, eps)


def classify_swap_BCD(o: NilpotentOrbit, flag: FlagType, j: int) -> EdgeClass:
    if not is_polarization(o, flag) or o.eps is None:
        raise ValueError(f"{flag.label} is not a polarization of {o}")
    lo, hi = _oriented(flag.half, j)
    if hi != lo + 1:
        return EdgeClass.iso_codim2()
    return EdgeClass.met(met_center_BCD(flag_partition(flag), lo, o.algebra.n, o.eps))


def classify_swap(o: NilpotentOrbit, flag: FlagType, j: int) -> EdgeClass:
    if o.eps is None:
        return classify_swap_A(o.jordan_type, flag, j)
    return classify_swap_BCD(o, flag, j)


def classify_move(o: NilpotentOrbit, flag: FlagType, j: int) -> EdgeClass | None:
    """Classify the swap at j from either side; None when p_{j-1} = p_j."""
    lo, hi = flag.half[j - 2], flag.half[j - 1]
    if lo == hi:
        return None
    return classify_swap(o, flag if lo < hi else flag.swapped(j), j)


@dataclass(frozen=True)
class Edge:
    a: int
    b: int
    cls: EdgeClass
    swap: int | None  # swap position j; None marks a type-D flop

    @property
    def move(self) -> str:
        return "D-flop" if self.swap is None else f"swap j={self.swap}"


@dataclass
class ResolutionGraph:
    orbit: NilpotentOrbit
    nodes: list[Resolution]
    edges: list[Edge] = field(default_factory=list)

    def index(self, label: str) -> int:
        for i, node in enumerate(self.nodes):
            if node.label == label:
                return i
        raise KeyError(f"no resolution labelled {label!r}; known: {', '.join(self.labels())}")

    def labels(self) -> list[str]:
        return [node.label for node in self.nodes]

    def neighbors(self, i: int) -> list[tuple[int, Edge]]:
        out = [(e.b, e) for e in self.edges if e.a == i] + [(e.a, e) for e in self.edges if e.b == i]
        return sorted(out, key=lambda pair: pair[0])

    def edge_between(self, a: str, b: str) -> Edge | None:
        i, j = sorted((self.index(a), self.index(b)))
        return next((e for e in self.edges if (e.a, e.b) == (i, j)), None)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for start in range(len(self.nodes)):
            if start in seen:
                continue
            comp, todo = [], [start]
            seen.add(start)
            while todo:
                i = todo.pop()
                comp.append(i)
                for j, _ in self.neighbors(i):
                    if j not in seen:
                        seen.add(j)
                        todo.append(j)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def build_graph(o: NilpotentOrbit) -> ResolutionGraph:
    flags = polarizations(o)
    if not flags:
        raise NoPolarizationError(f"{o} has no polarization")
    where = {f: i for i, f in enumerate(flags)}
    edges = []
    for i, f in enumerate(flags):
        for j in range(2, len(f.half) + 1):
            if f.half[j - 2] < f.half[j - 1]:
                other = where[f.swapped(j)]
                a, b = sorted((i, other))
                edges.append(Edge(a, b, classify_swap(o, f, j), j))
        if f.sign == "+":
            edges.append(Edge(i, where[f.with_sign("-")], EdgeClass.iso_codim2(), None))
    edges.sort(key=lambda e: (e.a, e.b, e.swap or 0))
    return ResolutionGraph(o, [Resolution(o, f) for f in flags], edges)


@dataclass(frozen=True)
class Path:
    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def reversed(self) -> "Path":
        return Path(self.nodes[::-1], self.edges[::-1])


def connect(g: ResolutionGraph, source: str, target: str) -> Path:
    """Shortest path by BFS; neighbours are visited in node order."""
    s, t = g.index(source), g.index(target)
    parent: dict[int, tuple[int, Edge] | None] = {s: None}
    queue = deque([s])
    while queue and t not in parent:
        i = queue.popleft()
        for j, edge in g.neighbors(i):
            if j not in parent:
                parent[j] = (i, edge)
                queue.append(j)
    if t not in parent:
        raise NoPathError(f"{target} is not reachable from {source} in the graph of {g.orbit}")
    nodes, edges = [t], []
    while parent[nodes[-1]] is not None:
        i, edge = parent[nodes[-1]]
        nodes.append(i)
        edges.append(edge)
    labels = g.labels()
    return Path(tuple(labels[i] for i in reversed(nodes)), tuple(reversed(edges)))


def path_through(g: ResolutionGraph, labels: list[str]) -> Path:
    """Path along an explicit node sequence; consecutive nodes must be adjacent."""
    edges = []
    for a, b in zip(labels, labels[1:]):
        edge = g.edge_between(a, b)
        if edge is None:
            raise NoPathError(f"{a} and {b} are not adjacent")
        edges.append(edge)
    return Path(tuple(labels), tuple(edges))


def net_centers(p: Path) -> list[Partition]:
    """MET centers along the path that occur an odd number of times."""
    counts = Counter(e.cls.center for e in p.edges if e.cls.tag is EdgeTag.MET)
    return sorted((c for c, k in counts.items() if k % 2), reverse=True)


# --- serialization ----------------------------------------------------------------


def _edge_dict(g: ResolutionGraph, e: Edge) -> dict:
    labels = g.labels()
    return {
        "source": labels[e.a],
        "target": labels[e.b],
        "class": e.cls.tag.value,
        "center": list(e.cls.center) if e.cls.center is not None else None,
        "move": "D-flop" if e.swap is None else "swap",
        "j": e.swap,
    }


def graph_to_dict(g: ResolutionGraph) -> dict:
    return {
        "orbit": {
            "algebra": g.orbit.algebra.kind,
            "n": g.orbit.algebra.n,
            "partition": list(g.orbit.jordan_type),
        },
        "nodes": [
            {"label": r.label, "half": list(r.flag.half), "q": r.flag.middle_q, "sign": r.flag.sign}
            for r in g.nodes
        ],
        "edges": [_edge_dict(g, e) for e in g.edges],
        "connected": g.is_connected(),
    }


def graph_from_dict(data: dict) -> ResolutionGraph:
    o = NilpotentOrbit(
        AlgebraKind(data["orbit"]["algebra"], data["orbit"]["n"]),
        make_partition(data["orbit"]["partition"]),
    )
    nodes = [Resolution(o, FlagType(tuple(nd["half"]), nd["q"], nd["sign"])) for nd in data["nodes"]]
    where = {r.label: i for i, r in enumerate(nodes)}
    edges = []
    for ed in data["edges"]:
        center = make_partition(ed["center"]) if ed["center"] is not None else None
        edges.append(Edge(where[ed["source"]], where[ed["target"]], EdgeClass(EdgeTag(ed["class"]), center), ed["j"]))
    return ResolutionGraph(o, nodes, edges)


def graph_to_json(g: ResolutionGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2)


def graph_from_json(text: str) -> ResolutionGraph:
    return graph_from_dict(json.loads(text))


_DOT_STYLE = {EdgeTag.MET: "solid", EdgeTag.ISO_CODIM2: "dashed", EdgeTag.ISOMORPHISM: "dotted"}


def graph_to_dot(g: ResolutionGraph) -> str:
    lines = [f'graph "{g.orbit}" {{']
    for r in g.nodes:
        lines.append(f'  "{r.label}";')
    labels = g.labels()
    for e in g.edges:
        attrs = [f"style={_DOT_STYLE[e.cls.tag]}"]
        if e.cls.tag is EdgeTag.MET:
            attrs.append(f'label="{e.cls.center.compact()}"')
        elif e.swap is None:
            attrs.append('label="D-flop"')
        lines.append(f'  "{labels[e.a]}" -- "{labels[e.b]}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
