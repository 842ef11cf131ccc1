"""Regenerate the bundled graph6 catalogs of all graphs up to isomorphism.

n <= 7 comes from the networkx graph atlas; n = 8 extends every 7-vertex
graph by one vertex with every possible neighborhood and deduplicates with
nauty certificates (pynauty). Neither step uses this package's own
canonical labeling, so the catalogs stay an independent source.

    python scripts/build_catalogs.py [outdir]
"""
import sys
from pathlib import Path

import networkx as nx
import pynauty

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def nauty_cert(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def g6(n, edges):
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def main(outdir):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    by_n = {n: [] for n in range(1, 8)}
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n >= 1:
            by_n[n].append(sorted(tuple(sorted(e)) for e in h.edges()))
    seen = {}
    for edges in by_n[7]:
        for mask in range(1 << 7):
            ext = edges + [(v, 7) for v in range(7) if mask >> v & 1]
            seen.setdefault(nauty_cert(8, ext), ext)
    by_n[8] = list(seen.values())
    for n, graphs in by_n.items():
        assert len(graphs) == EXPECTED[n], (n, len(graphs))
        lines = sorted(g6(n, e) for e in graphs)
        (out / f"graphs{n}.g6").write_text("".join(line + "\n" for line in lines))
        print(n, len(lines))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/transitivity/data")
