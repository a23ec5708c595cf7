#!/usr/bin/env python3
"""Builds data/graphs_upto8.g6: one graph6 line per isomorphism class, n = 1..8.

Classes with n <= 7 come straight from the networkx graph atlas. The n = 8
layer is produced by vertex augmentation of the n = 7 layer followed by
isomorphism dedup (bucketed by cheap invariants, VF2 inside buckets).
"""

import itertools
import sys
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def invariant_key(g):
    degs = sorted(d for _, d in g.degree())
    tri = nx.triangles(g)
    tri_profile = sorted(tri.values())
    nbr_deg = sorted(tuple(sorted(g.degree(w) for w in g[v])) for v in g)
    return (g.number_of_nodes(), g.number_of_edges(), tuple(degs),
            tuple(tri_profile), tuple(nbr_deg))


def augment_layer(base):
    buckets = {}
    out = []
    for g in base:
        n = g.number_of_nodes()
        for r in range(n + 1):
            for nbrs in itertools.combinations(range(n), r):
                h = g.copy()
                h.add_node(n)
                h.add_edges_from((n, x) for x in nbrs)
                key = invariant_key(h)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                out.append(h)
    return out


def main():
    atlas = [g for g in graph_atlas_g() if g.number_of_nodes() >= 1]
    by_n = {}
    for g in atlas:
        by_n.setdefault(g.number_of_nodes(), []).append(g)
    for n in range(1, 8):
        assert len(by_n[n]) == EXPECTED[n], (n, len(by_n[n]))
    by_n[8] = augment_layer(by_n[7])
    assert len(by_n[8]) == EXPECTED[8], len(by_n[8])

    lines = []
    for n in range(1, 9):
        layer = []
        for g in by_n[n]:
            relabeled = nx.convert_node_labels_to_integers(g, ordering="sorted")
            s = nx.to_graph6_bytes(relabeled, header=False).decode().strip()
            layer.append((g.number_of_edges(), s))
        layer = sorted(set(layer))
        assert len(layer) == EXPECTED[n], (n, len(layer))
        lines.extend(s for _, s in layer)

    out = Path(__file__).resolve().parent.parent / "data" / "graphs_upto8.g6"
    out.parent.mkdir(exist_ok=True)
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out}", file=sys.stderr)


if __name__ == "__main__":
    main()
