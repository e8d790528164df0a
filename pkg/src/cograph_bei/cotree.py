"""Cotree decomposition of cographs, with induced-P4 certificates.

A cograph (P4-free graph) decomposes recursively: a single vertex is a
leaf, a disconnected cograph is the disjoint union of its components,
and a connected cograph on at least two vertices is the join of the
complements of the components of its complement (Corneil, Lerchs and
Burlingham, 1981).  The recursion tree is the cotree.  It is unique up
to reordering children, which makes a sorted encoding of the tree a
canonical form deciding cograph isomorphism.
"""

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

__all__ = [
    "Cotree",
    "CotreeError",
    "Join",
    "Leaf",
    "P4Witness",
    "Union",
    "build_cotree",
    "canonical_key",
    "cotree_from_json_dict",
    "cotree_leaves",
    "cotree_size",
    "cotree_to_graph",
    "cotree_to_json_dict",
    "find_induced_p4",
    "is_simplicial",
]


@dataclass(frozen=True)
class Leaf:
    v: int


@dataclass(frozen=True)
class Union:
    children: tuple


@dataclass(frozen=True)
class Join:
    children: tuple


Cotree = Leaf | Union | Join


@dataclass(frozen=True)
class P4Witness:
    """An induced path a-b-c-d: edges ab, bc, cd; non-edges ac, ad, bd."""

    a: int
    b: int
    c: int
    d: int

    def vertices(self) -> tuple:
        return (self.a, self.b, self.c, self.d)


class CotreeError(ValueError):
    """Raised when a tree violates the cotree invariants."""


# ---------------------------------------------------------------------------
# recognition


def _components_within(g: Graph, vs: frozenset, complemented: bool) -> list:
    """Components of g (or of its complement) restricted to vs, by min vertex."""
    remaining = set(vs)
    comps = []
    for start in sorted(vs):
        if start not in remaining:
            continue
        comp = {start}
        remaining.discard(start)
        stack = [start]
        while stack:
            v = stack.pop()
            if complemented:
                nbrs = remaining - g.neighbors(v)
            else:
                nbrs = remaining & g.neighbors(v)
            for w in nbrs:
                remaining.discard(w)
                comp.add(w)
                stack.append(w)
        comps.append(frozenset(comp))
    return comps


def _find_p4_within(g: Graph, vs) -> P4Witness | None:
    for quad in combinations(sorted(vs), 4):
        deg = [0, 0, 0, 0]
        m = 0
        for i, j in combinations(range(4), 2):
            if g.has_edge(quad[i], quad[j]):
                deg[i] += 1
                deg[j] += 1
                m += 1
        if m != 3 or sorted(deg) != [1, 1, 2, 2]:
            continue
        start = min(i for i in range(4) if deg[i] == 1)
        path = [start]
        prev = -1
        while len(path) < 4:
            cur = path[-1]
            nxt = next(
                i
                for i in range(4)
                if i != prev and i != cur and g.has_edge(quad[cur], quad[i])
            )
            prev, path = cur, path + [nxt]
        return P4Witness(*(quad[i] for i in path))
    return None


def find_induced_p4(g: Graph) -> P4Witness | None:
    """First induced P4 in lexicographic quadruple order, or None."""
    return _find_p4_within(g, range(g.n))


def build_cotree(g: Graph):
    """Decompose g into a cotree, or certify failure with an induced P4.

    Returns a :class:`Cotree` whose reconstruction equals g when g is a
    cograph, else a :class:`P4Witness`.  The recursion follows the
    complement-reducible characterization: disconnected pieces become
    union nodes, pieces with disconnected complement become join nodes.
    """

    def rec(vs: frozenset):
        if len(vs) == 1:
            return Leaf(next(iter(vs)))
        comps = _components_within(g, vs, complemented=False)
        if len(comps) > 1:
            kind = Union
        else:
            comps = _components_within(g, vs, complemented=True)
            if len(comps) > 1:
                kind = Join
            else:
                witness = _find_p4_within(g, vs)
                assert witness is not None, "connected co-connected graph must contain a P4"
                return witness
        children = []
        for comp in comps:
            sub = rec(comp)
            if isinstance(sub, P4Witness):
                return sub
            children.append(sub)
        return kind(tuple(children))

    return rec(frozenset(range(g.n)))


# ---------------------------------------------------------------------------
# evaluation


def cotree_leaves(t: Cotree) -> list:
    if isinstance(t, Leaf):
        return [t.v]
    out = []
    for c in t.children:
        out.extend(cotree_leaves(c))
    return out


def cotree_size(t: Cotree) -> int:
    if isinstance(t, Leaf):
        return 1
    return sum(cotree_size(c) for c in t.children)


def _validate(t: Cotree, parent_kind=None) -> None:
    if isinstance(t, Leaf):
        return
    if not isinstance(t, (Union, Join)):
        raise CotreeError(f"not a cotree node: {t!r}")
    if len(t.children) < 2:
        raise CotreeError("internal cotree nodes need at least 2 children")
    if parent_kind is not None and isinstance(t, parent_kind):
        raise CotreeError("union/join nodes must alternate")
    for c in t.children:
        _validate(c, type(t))


def cotree_to_graph(t: Cotree) -> Graph:
    """Rebuild the graph a cotree represents, preserving leaf labels.

    The leaf labels must be exactly 0..n-1.  Invariant violations
    (nodes with fewer than two children, a union child of a union, a
    join child of a join, bad labels) raise :class:`CotreeError`.
    """
    _validate(t)
    labels = cotree_leaves(t)
    n = len(labels)
    if sorted(labels) != list(range(n)):
        raise CotreeError(f"leaf labels must be exactly 0..{n - 1}, got {sorted(labels)}")

    edges = []

    def rec(node) -> list:
        if isinstance(node, Leaf):
            return [node.v]
        parts = [rec(c) for c in node.children]
        if isinstance(node, Join):
            for i, p in enumerate(parts):
                for q in parts[i + 1:]:
                    edges.extend((u, v) for u in p for v in q)
        merged = []
        for p in parts:
            merged.extend(p)
        return merged

    rec(t)
    return Graph(n, edges)


def canonical_key(t: Cotree) -> bytes:
    """Label-independent encoding; equal keys mean isomorphic cographs.

    Leaves map to a fixed token and internal nodes encode their kind
    plus the lexicographically sorted child keys, so the key does not
    depend on leaf labels or child order.
    """
    if isinstance(t, Leaf):
        return b"L"
    tag = b"U" if isinstance(t, Union) else b"J"
    return tag + b"(" + b",".join(sorted(canonical_key(c) for c in t.children)) + b")"


# ---------------------------------------------------------------------------
# free vertices


def is_simplicial(g: Graph, v: int) -> bool:
    """True iff the neighborhood of v induces a complete subgraph."""
    nbrs = g.neighbors(v)
    return all(g.has_edge(u, w) for u, w in combinations(sorted(nbrs), 2))


# ---------------------------------------------------------------------------
# JSON


def cotree_to_json_dict(t: Cotree) -> dict:
    if isinstance(t, Leaf):
        return {"kind": "leaf", "v": t.v + 1}
    kind = "union" if isinstance(t, Union) else "join"
    return {"kind": kind, "children": [cotree_to_json_dict(c) for c in t.children]}


def cotree_from_json_dict(d: dict) -> Cotree:
    try:
        kind = d["kind"]
    except (TypeError, KeyError):
        raise CotreeError("cotree JSON needs a 'kind' field")
    if kind == "leaf":
        v = d.get("v")
        if not isinstance(v, int) or v < 1:
            raise CotreeError("leaf JSON needs a positive integer 'v'")
        return Leaf(v - 1)
    if kind in ("union", "join"):
        children = tuple(cotree_from_json_dict(c) for c in d.get("children", ()))
        if len(children) < 2:
            raise CotreeError(f"{kind} node needs at least 2 children")
        return (Union if kind == "union" else Join)(children)
    raise CotreeError(f"unknown cotree node kind {kind!r}")
