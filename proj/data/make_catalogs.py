#!/usr/bin/env python3
"""Regenerate the graph catalogs under data/catalogs/.

Graphs of order 1..7 come from the networkx graph atlas (An Atlas of Graphs,
Read & Wilson), one graph6 line per graph, atlas order preserved.

  connected_N.g6  connected graphs on N vertices
  all_N.g6        every graph on N vertices, connected or not

Expected connected counts: 1, 1, 2, 6, 21, 112, 853.
"""
import os
import networkx as nx

HERE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "catalogs")
EXPECTED_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    os.makedirs(HERE, exist_ok=True)
    atlas = nx.graph_atlas_g()[1:]  # entry 0 is the empty placeholder
    by_order = {n: [] for n in range(1, 8)}
    for g in atlas:
        n = g.number_of_nodes()
        if 1 <= n <= 7:
            by_order[n].append(g)
    for n, graphs in by_order.items():
        conn = [g for g in graphs if nx.is_connected(g)]
        assert len(conn) == EXPECTED_CONNECTED[n], (n, len(conn))
        with open(os.path.join(HERE, f"connected_{n}.g6"), "w") as f:
            f.writelines(g6(g) + "\n" for g in conn)
        with open(os.path.join(HERE, f"all_{n}.g6"), "w") as f:
            f.writelines(g6(g) + "\n" for g in graphs)
        print(f"order {n}: {len(conn)} connected / {len(graphs)} total")


if __name__ == "__main__":
    main()
