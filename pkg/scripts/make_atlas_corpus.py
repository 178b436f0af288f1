"""Write every graph on at most 7 vertices (one per isomorphism class) as graph6.

Source: the networkx graph atlas.  Only needed to regenerate
src/domchain/data/graphs_upto7.g6; the package itself does not import networkx.
"""

import sys
from pathlib import Path

import networkx as nx

from domchain.graph import emit_graph6, from_edge_list

out = Path(sys.argv[1] if len(sys.argv) > 1 else "src/domchain/data/graphs_upto7.g6")
lines = []
for h in nx.graph_atlas_g():
    if h.number_of_nodes() == 0:
        continue
    lines.append(emit_graph6(from_edge_list(h.number_of_nodes(), h.edges())))
out.write_text("\n".join(lines) + "\n")
print(f"wrote {len(lines)} graphs to {out}")
