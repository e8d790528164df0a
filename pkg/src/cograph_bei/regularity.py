"""Regularity of binomial edge ideals of cographs, by cotree recursion.

For the binomial edge ideal of a graph G inside its natural polynomial
ring S, reg(S/J_G) is additive over disjoint unions (the ideals live in
disjoint variable sets) and satisfies the join rule of Kiani and Madani:
for G * H with G, H not both complete the regularity is
max(reg G, reg H, 2).  Complete graphs have regularity 1.  Together
with the cotree this pins the value down for every cograph.

The order bound: a cograph on n = 3k - a vertices (a in {0, 1, 2}) has
regularity at most 2k - a, dropping to 2k - a - 1 when the graph is
connected, k > 1 and a in {0, 1}.  Disjoint unions of 2-edge paths,
with at most one single edge, are exactly the graphs attaining 2k - a
when a in {0, 1}.
"""

from dataclasses import dataclass

from .graph import Graph, max_degree
from .cotree import (
    Cotree,
    Join,
    Leaf,
    P4Witness,
    Union,
    build_cotree,
    canonical_key,
    cotree_size,
)
from .invariants import (
    MAX_ORACLE_PATH_VERTICES,
    alpha_cotree,
    count_max_cliques_cotree,
    count_max_indep_cotree,
    oracle_longest_induced_path,
)

__all__ = [
    "NotACographError",
    "RegularityReport",
    "bounds_report",
    "has_universal_vertex",
    "is_extremal_characterized",
    "order_bound",
    "reg_cograph",
]


class NotACographError(ValueError):
    """Raised when a cograph-only operation receives a non-cograph."""

    def __init__(self, witness: P4Witness):
        self.witness = witness
        quad = tuple(v + 1 for v in witness.vertices())
        super().__init__(f"not a cograph: vertices {quad} induce a P4")


def reg_cograph(t: Cotree) -> int:
    """reg(S/J_G) for the cograph G a cotree represents.

    Leaf 0; union nodes add; a join of leaves only is a complete graph
    with value 1, and any other join takes max(2, child values).
    """
    if isinstance(t, Leaf):
        return 0
    if isinstance(t, Union):
        return sum(reg_cograph(c) for c in t.children)
    if all(isinstance(c, Leaf) for c in t.children):
        return 1
    return max(2, max(reg_cograph(c) for c in t.children))


def order_bound(n: int, connected: bool) -> tuple:
    """(k, a, bound) with n = 3k - a, a in {0, 1, 2}, bound the regularity cap."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    k = -(-n // 3)
    a = 3 * k - n
    bound = 2 * k - a
    if connected and k > 1 and a in (0, 1):
        bound -= 1
    return k, a, bound


def has_universal_vertex(g: Graph) -> bool:
    """True iff some vertex is adjacent to all others (g is a cone)."""
    return any(len(g.neighbors(v)) == g.n - 1 for v in range(g.n))


_P2_KEY = canonical_key(Join((Leaf(0), Leaf(1))))
_P3_KEY = canonical_key(Join((Leaf(0), Union((Leaf(1), Leaf(2))))))


def is_extremal_characterized(t: Cotree) -> bool:
    """Whether t is a disjoint union of 2-edge paths plus at most one edge.

    Defined for n = 3k - a with a in {0, 1}: these unions, with exactly
    one single-edge component when a = 1 and none when a = 0, are the
    graphs of maximal regularity 2k - a.  For a = 2 the maximizers have
    no such description and a ValueError is raised.
    """
    n = cotree_size(t)
    _, a, _ = order_bound(n, connected=False)
    if a == 2:
        raise ValueError(f"extremal characterization applies to a in {{0, 1}}, got a=2 (n={n})")
    components = t.children if isinstance(t, Union) else (t,)
    p2 = p3 = 0
    for comp in components:
        key = canonical_key(comp)
        if key == _P2_KEY:
            p2 += 1
        elif key == _P3_KEY:
            p3 += 1
        else:
            return False
    return p2 == a


def _cograph_induced_path_length(t: Cotree, g: Graph) -> int:
    # P4-free graphs only admit induced paths of length <= 2:
    # 0 if edgeless, 1 if every component is complete, else 2.
    if all(len(g.neighbors(v)) == 0 for v in range(g.n)):
        return 0

    def complete_components_only(node) -> bool:
        comps = node.children if isinstance(node, Union) else (node,)
        return all(
            isinstance(c, Leaf) or (isinstance(c, Join) and all(isinstance(x, Leaf) for x in c.children))
            for c in comps
        )

    return 1 if complete_components_only(t) else 2


@dataclass(frozen=True)
class RegularityReport:
    reg: int
    n: int
    k: int
    a: int
    order_bound: int
    lower_bound_ell: int
    upper_matsuda: int
    bound_i: int
    bound_alpha: int
    bound_c: int
    bound_maxdeg: int | None
    tight_order_bound: bool

    def to_json_dict(self) -> dict:
        d = {
            "reg": self.reg,
            "n": self.n,
            "k": self.k,
            "a": self.a,
            "order_bound": self.order_bound,
            "lower_bound_ell": self.lower_bound_ell,
            "upper_matsuda": self.upper_matsuda,
            "bound_i": str(self.bound_i),
            "bound_alpha": str(self.bound_alpha),
            "bound_c": str(self.bound_c),
            "tight_order_bound": self.tight_order_bound,
        }
        if self.bound_maxdeg is not None:
            d["bound_maxdeg"] = self.bound_maxdeg
        return d


def bounds_report(g: Graph) -> RegularityReport:
    """Exact regularity of a cograph together with every upper bound.

    Raises :class:`NotACographError` (carrying the induced-P4 witness)
    if g is not a cograph.  The induced-path lower bound comes from the
    exhaustive oracle at desk scale and from the P4-free structure
    (length 0, 1 or 2) for larger graphs.
    """
    t = build_cotree(g)
    if isinstance(t, P4Witness):
        raise NotACographError(t)
    connected = not isinstance(t, Union)
    reg = reg_cograph(t)
    k, a, bound = order_bound(g.n, connected)
    if g.n <= MAX_ORACLE_PATH_VERTICES:
        ell = oracle_longest_induced_path(g)
    else:
        ell = _cograph_induced_path_length(t, g)
    return RegularityReport(
        reg=reg,
        n=g.n,
        k=k,
        a=a,
        order_bound=bound,
        lower_bound_ell=ell,
        upper_matsuda=g.n - 1,
        bound_i=count_max_indep_cotree(t),
        bound_alpha=alpha_cotree(t),
        bound_c=count_max_cliques_cotree(t),
        bound_maxdeg=max_degree(g) if connected else None,
        tight_order_bound=reg == bound,
    )
