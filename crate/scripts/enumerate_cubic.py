#!/usr/bin/env python3
"""Enumerate connected simple cubic graphs up to isomorphism.

Graphs on n vertices are produced from smaller ones by two operations:
subdividing two distinct edges of an (n-2)-vertex graph and joining the
new vertices, or replacing an edge ab of an (n-4)-vertex graph by a copy
of K4 minus an edge whose two degree-2 vertices are joined to a and b,
or subdividing one edge in each of two smaller graphs whose orders sum to
n-2 and joining the two new vertices by a bridge. Duplicates are removed
by bucketing on per-vertex distance profiles (colour refinement cannot
tell regular graphs apart) followed by an exact isomorphism test. The counts are checked against the known
sequence 1, 2, 5, 19, 85, 509, 4060.

Usage: enumerate_cubic.py MAX_N OUT_DIR
"""
import itertools
import os
import sys

import networkx as nx

KNOWN = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509, 16: 4060}


def candidates(by_order, n):
    for g in by_order.get(n - 2, []):
        edges = sorted(tuple(sorted(e)) for e in g.edges())
        for e, f in itertools.combinations(edges, 2):
            h = g.copy()
            p, q = n - 2, n - 1
            h.remove_edge(*e)
            h.remove_edge(*f)
            h.add_edges_from([(e[0], p), (p, e[1]), (f[0], q), (q, f[1]), (p, q)])
            yield h
    for g in by_order.get(n - 4, []):
        for a, b in sorted(tuple(sorted(e)) for e in g.edges()):
            h = g.copy()
            w, x, c, d = n - 4, n - 3, n - 2, n - 1
            h.remove_edge(a, b)
            h.add_edges_from([(a, w), (b, x), (w, c), (w, d), (x, c), (x, d), (c, d)])
            yield h


    for n1 in range(4, n - 1):
        n2 = n - 2 - n1
        if n2 < n1:
            break
        for i, g1 in enumerate(by_order.get(n1, [])):
            for j, g2 in enumerate(by_order.get(n2, [])):
                if n1 == n2 and j < i:
                    continue
                for e in sorted(tuple(sorted(x)) for x in g1.edges()):
                    for f in sorted(tuple(sorted(x)) for x in g2.edges()):
                        h = nx.disjoint_union(g1, g2)
                        f = (f[0] + n1, f[1] + n1)
                        p, q = n - 2, n - 1
                        h.remove_edge(*e)
                        h.remove_edge(*f)
                        h.add_edges_from([(e[0], p), (p, e[1]), (f[0], q), (q, f[1]), (p, q)])
                        yield h


def profile(h):
    rows = []
    for v in h:
        dist = nx.single_source_shortest_path_length(h, v)
        depth = max(dist.values())
        sizes = [0] * (depth + 1)
        inner = [0] * (depth + 1)
        for u, d in dist.items():
            sizes[d] += 1
        for a, b in h.edges():
            if dist[a] == dist[b]:
                inner[dist[a]] += 1
        rows.append((tuple(sizes), tuple(inner)))
    return tuple(sorted(rows))


def grow(by_order, n):
    buckets = {}
    out = []
    for h in candidates(by_order, n):
        key = profile(h)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            continue
        bucket.append(h)
        out.append(h)
    return out


def main():
    max_n = int(sys.argv[1])
    out_dir = sys.argv[2]
    os.makedirs(out_dir, exist_ok=True)
    by_order = {4: [nx.complete_graph(4)]}
    n = 4
    while True:
        level = by_order[n]
        assert len(level) == KNOWN[n], (n, len(level))
        path = os.path.join(out_dir, f"cubic_{n:02}.g6")
        with open(path, "w") as fh:
            for g in level:
                g = nx.convert_node_labels_to_integers(g, ordering="sorted")
                fh.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
        print(f"n={n}: {len(level)} graphs -> {path}")
        if n + 2 > max_n:
            break
        n += 2
        by_order[n] = grow(by_order, n)


if __name__ == "__main__":
    main()
