"""The regularity landscape of cographs: caps and the graphs attaining them.

On n = 3k - a vertices (a in {0, 1, 2}) no cograph exceeds regularity
2k - a, roughly 2n/3 - far below the generic n - 1 ceiling.  Disjoint
unions of 2-edge paths attain the cap, and coning them produces
connected cographs of every prescribed regularity.
"""

from cograph_bei import (
    bounds_report,
    connected_with_reg,
    max_reg_cograph,
    order_bound,
    to_edgelist,
)

print("n   k  a  cap  attained by")
for n in range(2, 16):
    k, a, cap = order_bound(n, connected=False)
    g = max_reg_cograph(n)
    rep = bounds_report(g)
    assert rep.reg == cap
    pieces = []
    if a == 0:
        pieces = [f"{k} x P3"]
    elif a == 1:
        pieces = [f"{k - 1} x P3", "1 x P2"]
    else:
        pieces = [f"{k - 2} x P3", "2 x P2"]
    print(f"{n:<3} {k:<2} {a:<2} {cap:<4} " + " + ".join(pieces))

print("\nconnected cographs of every regularity, by coning:")
for r in range(1, 9):
    g = connected_with_reg(r)
    rep = bounds_report(g)
    assert rep.reg == r
    print(f"  r = {r}: {g.n} vertices, max degree {rep.bound_maxdeg}")

print("\nthe r = 4 witness as an edge list:")
print(to_edgelist(connected_with_reg(4)))
