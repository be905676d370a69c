"""Print the worked examples: ``python -m met_atlas.reproduce``."""

from __future__ import annotations

from importlib import resources

from .graph import build_graph, connect, net_centers, path_through
from .groups import codim2_single_class_check, load_group
from .orbits import orbit, two_column_classify
from .partitions import index_set_I, make_partition, ord_partition, spaltenstein


def _graph_report(o, pairs):
    g = build_graph(o)
    print(f"{o}: {len(g.nodes)} resolutions: {', '.join(g.labels())}")
    for a, b in pairs:
        print(f"  {a} --> {b}: {g.edge_between(a, b).cls}")
    return g


def main() -> None:
    print("Two-column orbits in sl_n")
    for k, n in [(2, 4), (2, 5), (2, 7)]:
        print(f"  k={k}, n={n}: {two_column_classify(k, n)}")

    print()
    g = _graph_report(orbit("sl", 6, [3, 2, 1]), [("Y_321", "Y_231"), ("Y_231", "Y_213"), ("Y_213", "Y_123")])
    long_way = path_through(g, ["Y_321", "Y_231", "Y_213", "Y_123", "Y_132"])
    short = connect(g, "Y_321", "Y_132")
    for p in (long_way, short):
        centers = ", ".join(c.compact() for c in net_centers(p))
        print(f"  {' -> '.join(p.nodes)}: net centers {centers}")

    print()
    e = ord_partition((3, 2, 0, 2, 3))
    print(f"ord(3,2,0,2,3) = {e}, I = {sorted(index_set_I(e, 10, 0))}, S = {spaltenstein(e, 10, 0)}")
    _graph_report(orbit("so", 10, make_partition([4, 4, 1, 1])), [("Y_3223^+", "Y_2332^+")])

    print()
    data = resources.files("met_atlas") / "data"
    for name in ("dihedral8", "klein"):
        G = load_group(str(data / f"{name}.json"))
        v = codim2_single_class_check(G)
        print(
            f"{name}: |G|={len(G)}, condition {'holds' if v.condition_holds else 'fails'}, "
            f"classes fixing {{0}}: {v.witnesses[0].class_count}, unique resolution: {v.gl2_uniqueness}, "
            f"reflections one class: {v.reflection_single_class}"
        )


if __name__ == "__main__":
    main()
