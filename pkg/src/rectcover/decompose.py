"""Tree decompositions: BFS layer classes, a min-fill heuristic builder,
bag transfer from joint graphs to rectangle graphs, validation, and the
exact weighted vertex cover dynamic program.

The heuristic builder makes no width promise; downstream correctness only
needs a *valid* decomposition because the DP is exact on any of them.  The
achieved widths are surfaced so layer-deletion width behavior can be
observed empirically.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .arrangement import ArrangementGraph
from .errors import InvalidInputError, WidthCeilingError
from .graphs import Graph

DEFAULT_WIDTH_CEILING = 25


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple   # frozensets of vertex ids
    edges: tuple  # (i, j) bag-index pairs forming a tree

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def adjacency(self) -> dict:
        adj = {i: [] for i in range(len(self.bags))}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return {i: tuple(sorted(ns)) for i, ns in adj.items()}


@dataclass(frozen=True)
class LayerClasses:
    classes: tuple  # k frozensets partitioning the vertex set
    k: int


def bfs_layer_classes(g: Graph, k: int) -> LayerClasses:
    """Partition vertices by BFS level modulo ``k``.

    Each connected component is explored from its minimum-id vertex.  For
    planar graphs, deleting any one residue class leaves pieces spanning
    fewer than ``k`` consecutive levels, which is what bounds the
    treewidth of the remainder.
    """
    if k < 1:
        raise InvalidInputError("k must be a positive integer")
    level = {}
    for root in g.vertices:
        if root in level:
            continue
        level[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v not in level:
                    level[v] = level[u] + 1
                    queue.append(v)
    classes = [set() for _ in range(k)]
    for v, lv in level.items():
        classes[lv % k].add(v)
    return LayerClasses(tuple(frozenset(c) for c in classes), k)


def heuristic_tree_decomposition(g: Graph) -> TreeDecomposition:
    """Valid tree decomposition from a min-fill elimination ordering.

    Ties break toward the smaller vertex id, so the result is
    deterministic.  No width bound is asserted.
    """
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    remaining = set(g.vertices)
    order = []
    while remaining:
        best_v = None
        best_fill = None
        for v in sorted(remaining):
            nbrs = adj[v]
            fill = sum(1 for a, b in combinations(sorted(nbrs), 2) if b not in adj[a])
            if best_fill is None or fill < best_fill:
                best_v, best_fill = v, fill
        v = best_v
        bag = frozenset(adj[v] | {v})
        order.append((v, bag))
        for a, b in combinations(sorted(adj[v]), 2):
            adj[a].add(b)
            adj[b].add(a)
        for u in adj[v]:
            adj[u].discard(v)
        del adj[v]
        remaining.discard(v)

    if not order:
        return TreeDecomposition((frozenset(),), ())
    position = {v: i for i, (v, _) in enumerate(order)}
    bags = tuple(bag for _, bag in order)
    edges = []
    for i, (v, bag) in enumerate(order):
        later = [position[u] for u in bag if u != v]
        if later:
            edges.append((i, min(later)))
        elif i + 1 < len(order):
            edges.append((i, i + 1))
    return TreeDecomposition(bags, tuple(edges))


def transfer_td(td: TreeDecomposition, arrangement: ArrangementGraph, restrict_to: Optional[Iterable] = None) -> TreeDecomposition:
    """Map a joint decomposition to a rectangle decomposition bag by bag.

    Each bag of joints becomes the set of rectangles those joints lie on,
    so bag sizes at most double.  With ``restrict_to`` the bags are
    intersected with the target rectangle set; a target rectangle with no
    joint anywhere in the decomposition is rejected (the caller must treat
    it as isolated).
    """
    mapped = [frozenset(arrangement.induced_rects(bag)) for bag in td.bags]
    if restrict_to is not None:
        target = frozenset(restrict_to)
        covered = frozenset().union(*mapped) if mapped else frozenset()
        missing = target - covered
        if missing:
            raise InvalidInputError(
                f"rectangles with no joint in the decomposed subgraph: {sorted(missing)!r}"
            )
        mapped = [bag & target for bag in mapped]
    return TreeDecomposition(tuple(mapped), td.edges)


def validate_td(g: Graph, td: TreeDecomposition):
    """Check the two decomposition conditions plus tree shape.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness
    names the offending vertex or edge.
    """
    bags = td.bags
    if not bags:
        return False, ("no-bags", None)
    if len(td.edges) != len(bags) - 1:
        return False, ("not-a-tree", None)
    adj = td.adjacency()
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    if len(seen) != len(bags):
        return False, ("not-a-tree", None)

    vset = set(g.vertices)
    for bag in bags:
        for v in bag:
            if v not in vset:
                return False, ("foreign-vertex", v)
    appears = {v: [] for v in g.vertices}
    for i, bag in enumerate(bags):
        for v in bag:
            appears[v].append(i)
    for v in g.vertices:
        if not appears[v]:
            return False, ("vertex-missing", v)
    for u, v in g.edges:
        if not any(v in bags[i] for i in appears[u]):
            return False, ("edge-uncovered", (u, v))
    for v in g.vertices:
        nodes = set(appears[v])
        start = appears[v][0]
        reached = {start}
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if b in nodes and b not in reached:
                    reached.add(b)
                    queue.append(b)
        if reached != nodes:
            return False, ("trace-disconnected", v)
    return True, None


def _nice_tree(td: TreeDecomposition):
    """Expand a decomposition into leaf/introduce/forget/join nodes.

    Nodes are returned children-first, as tuples
    ``(kind, bag, vertex, children)``; the last element is the root, whose
    bag is empty.
    """
    nodes = []

    def add(kind, bag, vertex, children):
        nodes.append((kind, bag, vertex, children))
        return len(nodes) - 1

    def chain(cur, cur_bag, target_bag):
        for v in sorted(cur_bag - target_bag):
            cur_bag = cur_bag - {v}
            cur = add("forget", cur_bag, v, (cur,))
        for v in sorted(target_bag - cur_bag):
            cur_bag = cur_bag | {v}
            cur = add("introduce", cur_bag, v, (cur,))
        return cur

    adj = td.adjacency()

    def build(u, parent):
        bag = td.bags[u]
        branches = []
        for w in adj[u]:
            if w == parent:
                continue
            sub = build(w, u)
            branches.append(chain(sub, td.bags[w], bag))
        if not branches:
            leaf = add("leaf", frozenset(), None, ())
            return chain(leaf, frozenset(), bag)
        acc = branches[0]
        for other in branches[1:]:
            acc = add("join", bag, None, (acc, other))
        return acc

    root = build(0, None)
    root = chain(root, td.bags[0], frozenset())
    return nodes, root


def vc_dp(g: Graph, td: TreeDecomposition, width_ceiling: int = DEFAULT_WIDTH_CEILING):
    """Exact minimum-weight vertex cover by subset DP over a nice tree.

    States are the bag subsets currently inside the cover; edges are
    checked when their later endpoint is introduced.  Ties at forget nodes
    prefer leaving the forgotten vertex out, which fixes the reported
    cover deterministically.
    """
    ok, witness = validate_td(g, td)
    if not ok:
        raise InvalidInputError(f"invalid tree decomposition: {witness!r}")
    if td.width > width_ceiling:
        raise WidthCeilingError(
            f"decomposition width {td.width} exceeds the ceiling {width_ceiling}; "
            "raise the ceiling or rerun with a larger epsilon"
        )
    nodes, root = _nice_tree(td)
    w = g.weights
    tables = [None] * len(nodes)
    forget_choice = [None] * len(nodes)

    for i, (kind, bag, vertex, children) in enumerate(nodes):
        if kind == "leaf":
            tables[i] = {frozenset(): Fraction(0)}
        elif kind == "introduce":
            child = tables[children[0]]
            nbrs_in_bag = set(g.neighbors(vertex)) & (bag - {vertex})
            table = {}
            for state, cost in child.items():
                table[state | {vertex}] = cost + w[vertex]
                if nbrs_in_bag <= state:
                    table[state] = cost
            tables[i] = table
        elif kind == "forget":
            child = tables[children[0]]
            table = {}
            choice = {}
            for state, cost in child.items():
                key = state - {vertex}
                rank = (cost, 1 if vertex in state else 0)
                if key not in table or rank < (table[key], 1 if vertex in choice[key] else 0):
                    table[key] = cost
                    choice[key] = state
            tables[i] = table
            forget_choice[i] = choice
        elif kind == "join":
            left, right = tables[children[0]], tables[children[1]]
            table = {}
            for state, cost in left.items():
                other = right.get(state)
                if other is not None:
                    table[state] = cost + other - g.total_weight(state)
            tables[i] = table

    total = tables[root].get(frozenset())
    if total is None:
        raise AssertionError("vertex cover DP ended with no feasible state")

    cover = set()
    stack = [(root, frozenset())]
    while stack:
        i, state = stack.pop()
        kind, bag, vertex, children = nodes[i]
        if kind == "leaf":
            continue
        if kind == "introduce":
            if vertex in state:
                cover.add(vertex)
            stack.append((children[0], state - {vertex}))
        elif kind == "forget":
            stack.append((children[0], forget_choice[i][state]))
        elif kind == "join":
            stack.append((children[0], state))
            stack.append((children[1], state))

    weight = g.total_weight(cover)
    if weight != total:
        raise AssertionError("reconstructed cover weight disagrees with the DP value")
    ok, witness = g.is_vertex_cover(cover)
    if not ok:
        raise AssertionError(f"DP produced a non-cover, missing edge {witness!r}")
    return frozenset(cover), total
