"""Half-integral vertex cover LP and the kernelization built on it.

The fractional vertex cover LP always has an optimum with values in
{0, 1/2, 1}.  It is solved combinatorially: double the graph into a
bipartite one (each vertex v becomes v_L and v_R, each edge {u,v} becomes
{u_L, v_R} and {v_L, u_R}), take a minimum-weight vertex cover of the
double via max-flow/min-cut, and read x_v as half the number of covered
copies of v.  Everything runs on integers after clearing denominators,
so the LP value is exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable

from .errors import InvalidInputError, UncoveredEdgeError
from .graphs import Graph


class _Dinic:
    """Deterministic Dinic max-flow on integer capacities."""

    def __init__(self, n: int):
        self.n = n
        self.head = [[] for _ in range(n)]
        self.to = []
        self.cap = []

    def add_edge(self, u: int, v: int, cap: int):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _levels(self, s: int, t: int):
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for ei in self.head[u]:
                v = self.to[ei]
                if self.cap[ei] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _push(self, u: int, t: int, limit: int, level, it) -> int:
        if u == t:
            return limit
        while it[u] < len(self.head[u]):
            ei = self.head[u][it[u]]
            v = self.to[ei]
            if self.cap[ei] > 0 and level[v] == level[u] + 1:
                pushed = self._push(v, t, min(limit, self.cap[ei]), level, it)
                if pushed > 0:
                    self.cap[ei] -= pushed
                    self.cap[ei ^ 1] += pushed
                    return pushed
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            it = [0] * self.n
            while True:
                pushed = self._push(s, t, 1 << 62, level, it)
                if pushed == 0:
                    break
                flow += pushed

    def residual_reachable(self, s: int):
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for ei in self.head[u]:
                v = self.to[ei]
                if self.cap[ei] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def _lp_partition(vertices, edges, weights):
    """Optimal half-integral LP solution: ``(lp_value, {v: x_v})``."""
    verts = sorted(vertices)
    for v in verts:
        if weights[v] < 0:
            raise InvalidInputError(f"negative weight on {v!r}")
    n = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    scale = lcm(*(weights[v].denominator for v in verts)) if verts else 1
    caps = [int(weights[v] * scale) for v in verts]
    source, sink = 0, 1 + 2 * n
    inf = sum(caps) + 1
    net = _Dinic(2 + 2 * n)
    for i, c in enumerate(caps):
        net.add_edge(source, 1 + i, c)
        net.add_edge(1 + n + i, sink, c)
    for u, v in sorted(edges):
        iu, iv = index[u], index[v]
        net.add_edge(1 + iu, 1 + n + iv, inf)
        net.add_edge(1 + iv, 1 + n + iu, inf)
    flow = net.max_flow(source, sink)
    reach = net.residual_reachable(source)
    x = {}
    for v in verts:
        i = index[v]
        halves = (0 if reach[1 + i] else 1) + (1 if reach[1 + n + i] else 0)
        x[v] = Fraction(halves, 2)
    lp = Fraction(flow, 2 * scale)
    return lp, x


def graph_lp_value(g: Graph) -> Fraction:
    """Value of the fractional vertex cover LP of ``g``."""
    return _lp_partition(g.vertices, g.edges, g.weights)[0]


@dataclass(frozen=True)
class NtReduction:
    """Kernelization partition: forced, excluded, and kernel vertices.

    Some optimal cover contains all of ``v_one`` and none of ``v_zero``;
    the kernel ``v_half`` satisfies w(v_half) <= 2 opt(G[v_half]), so any
    approximation factor achieved on the kernel lifts to the whole graph.
    """

    v_one: frozenset
    v_zero: frozenset
    v_half: frozenset
    lp_value: Fraction
    graph: Graph = field(compare=False, repr=False)

    def kernel_graph(self) -> Graph:
        return self.graph.subgraph(self.v_half)


def nt_reduce(g: Graph) -> NtReduction:
    """Kernelize ``g`` through the half-integral LP optimum."""
    lp, x = _lp_partition(g.vertices, g.edges, g.weights)
    v_one = frozenset(v for v, xv in x.items() if xv == 1)
    v_zero = frozenset(v for v, xv in x.items() if xv == 0)
    v_half = frozenset(v for v, xv in x.items() if xv == Fraction(1, 2))
    # LP feasibility: every edge missing v_one has both ends in the kernel.
    for u, v in g.edges:
        if x[u] + x[v] < 1:
            raise AssertionError(f"infeasible LP solution on edge ({u!r}, {v!r})")
    value = g.total_weight(v_one) + g.total_weight(v_half) / 2
    if value != lp:
        raise AssertionError("LP value does not match its own partition")
    return NtReduction(v_one, v_zero, v_half, lp, g)


def nt_lift(reduction: NtReduction, kernel_cover: Iterable) -> frozenset:
    """Extend a kernel cover to a cover of the whole graph.

    The input must be a vertex cover of the kernel subgraph; the result is
    that set united with ``v_one``, and it inherits the kernel cover's
    approximation factor.
    """
    cover = frozenset(kernel_cover)
    outside = cover - reduction.v_half
    if outside:
        raise InvalidInputError(f"kernel cover uses non-kernel vertices {sorted(outside)!r}")
    g = reduction.graph
    half = reduction.v_half
    for u, v in g.edges:
        if u in half and v in half and u not in cover and v not in cover:
            raise UncoveredEdgeError((u, v), f"kernel edge ({u!r}, {v!r}) is not covered")
    return cover | reduction.v_one
