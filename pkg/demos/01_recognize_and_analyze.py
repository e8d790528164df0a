"""Recognize cographs, read certificates, and compute regularity reports.

A cograph is a graph with no induced path on four vertices.  The
recognizer either produces the cotree (the recursive union/join
decomposition) or an induced P4 as a certificate of failure, and for
cographs the full regularity report falls out of the cotree.
"""

import json

from cograph_bei import (
    P4Witness,
    bounds_report,
    build_cotree,
    cotree_to_json_dict,
    cycle_graph,
    parse_graph,
    path_graph,
)

# The 2-edge path, written in the line-oriented edge list format.
text = """
# a tiny example
n 3
1 2
2 3
"""
g = parse_graph(text, "edgelist")
t = build_cotree(g)
print("P3 cotree:", json.dumps(cotree_to_json_dict(t)))

# The report carries the exact regularity next to every upper bound.
report = bounds_report(g)
print("reg(S/J_G) =", report.reg)
print("order bound:", report.order_bound, "tight:", report.tight_order_bound)
print("invariant bounds: i =", report.bound_i, " alpha =", report.bound_alpha,
      " c =", report.bound_c)

# Graphs can also arrive in graph6 form; "Bw" is the triangle.
k3 = parse_graph("Bw", "graph6")
print("\ntriangle reg:", bounds_report(k3).reg)

# A 5-cycle is not a cograph: four consecutive vertices induce a P4.
c5 = cycle_graph(5)
witness = build_cotree(c5)
assert isinstance(witness, P4Witness)
print("\nC5 certificate (1-based):", [v + 1 for v in witness.vertices()])

# The path on four vertices is its own certificate.
print("P4 certificate:", [v + 1 for v in build_cotree(path_graph(4)).vertices()])
