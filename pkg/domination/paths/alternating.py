"""
Alternating green-black structures of a colored multigraph.

With the green edges forming a matching, every node carries at most one
green edge. Black edges between green-carrying nodes are accepted in id
order as long as each node keeps at most one accepted black edge; greens
plus accepted blacks then split into paths (starting and ending with a
green edge) and closed cycles, and every green edge lies in exactly one
of them.
"""
from collections import defaultdict
from dataclasses import dataclass

from ..exceptions import GreenMatchingViolation
from ..multigraph import Color, ColoredMultigraph


@dataclass(frozen=True)
class GreenBlackPath:
    """
    Node sequence u1, u1', u2, u2', ... with ``edges[i]`` joining
    ``nodes[i]`` and ``nodes[i + 1]``; even positions start a green edge.

    A prefix may stop on a lower node, so the last edge can be black.
    """
    nodes: tuple
    edges: tuple

    @property
    def k(self) -> int:
        return (len(self.nodes) + 1) // 2

    @property
    def greens(self) -> tuple:
        return self.edges[0::2]

    @property
    def blacks(self) -> tuple:
        return self.edges[1::2]

    @property
    def start(self) -> int:
        return self.nodes[0]

    @property
    def end(self) -> int:
        return self.nodes[-1]

    def upper_nodes(self) -> tuple:
        """u_i' for i < k."""
        return tuple(self.nodes[i] for i in range(1, len(self.nodes) - 1, 2))

    def lower_nodes(self) -> tuple:
        """u_i for 2 <= i <= k."""
        return tuple(self.nodes[i] for i in range(2, len(self.nodes) - 1, 2))

    def internal_nodes(self) -> tuple:
        return self.nodes[1:-1]

    def is_upper(self, node: int) -> bool:
        return node in self.upper_nodes()

    def reversed(self) -> "GreenBlackPath":
        return GreenBlackPath(nodes=self.nodes[::-1], edges=self.edges[::-1])

    def prefix(self, length: int) -> "GreenBlackPath":
        """The first ``length`` nodes."""
        if not 2 <= length <= len(self.nodes):
            raise ValueError(f"prefix of {length} nodes from a path of {len(self.nodes)}")
        return GreenBlackPath(nodes=self.nodes[:length], edges=self.edges[:length - 1])

    def to_dict(self) -> dict:
        return {"nodes": list(self.nodes), "edges": list(self.edges), "k": self.k}


@dataclass(frozen=True)
class GreenBlackCycle:
    """u1, u1', ..., uk, uk' with greens u_i u_i' and blacks u_i' u_(i+1 mod k)."""
    nodes: tuple
    greens: tuple
    blacks: tuple

    @property
    def k(self) -> int:
        return len(self.greens)

    def lower(self, i: int) -> int:
        return self.nodes[2 * i]

    def upper(self, i: int) -> int:
        return self.nodes[2 * i + 1]

    def to_dict(self) -> dict:
        return {"nodes": list(self.nodes), "greens": list(self.greens),
                "blacks": list(self.blacks), "k": self.k}


@dataclass(frozen=True)
class Decomposition:
    paths: tuple
    cycles: tuple


def green_partner(m: ColoredMultigraph) -> dict:
    """node -> its green edge.

    Raises:
        GreenMatchingViolation: when a node carries two green edges or a green loop.
    """
    partner = {}
    for e in m.edges:
        if e.color is not Color.GREEN:
            continue
        if e.is_loop or e.u in partner or e.v in partner:
            raise GreenMatchingViolation(nodes=[e.u, e.v], edge=e.id)
        partner[e.u] = e
        partner[e.v] = e
    return partner


def decompose(m: ColoredMultigraph) -> Decomposition:
    partner = green_partner(m)
    black_at = {}
    for e in m.edges:
        if e.color is not Color.BLACK or e.is_loop:
            continue
        if e.u in partner and e.v in partner and e.u not in black_at and e.v not in black_at:
            black_at[e.u] = e
            black_at[e.v] = e

    seen = set()
    paths, cycles = [], []
    # Paths first: they start at a green-carrying node without an accepted black edge.
    for start in sorted(partner):
        if start in black_at or partner[start].id in seen:
            continue
        nodes, edges = _walk(start, partner, black_at, seen)
        paths.append(GreenBlackPath(nodes=tuple(nodes), edges=tuple(edges)))
    for start in sorted(partner):
        if partner[start].id in seen:
            continue
        nodes, edges = _walk(start, partner, black_at, seen)
        cycles.append(GreenBlackCycle(nodes=tuple(nodes), greens=tuple(edges[0::2]),
                                      blacks=tuple(edges[1::2])))
    return Decomposition(paths=tuple(paths), cycles=tuple(cycles))


def _walk(start, partner, black_at, seen):
    nodes, edges = [], []
    node = start
    while True:
        green = partner[node]
        seen.add(green.id)
        other = green.other(node)
        nodes.extend((node, other))
        edges.append(green.id)
        black = black_at.get(other)
        if black is None:
            return nodes, edges
        nxt = black.other(other)
        if partner[nxt].id in seen:
            edges.append(black.id)
            return nodes, edges
        edges.append(black.id)
        node = nxt


def find_max_paths(m: ColoredMultigraph) -> tuple:
    """(paths, cycles) of the alternating decomposition."""
    decomposition = decompose(m)
    return decomposition.paths, decomposition.cycles


def path_through(m: ColoredMultigraph, node: int, paths=None):
    """The path with ``node`` as an extremity, oriented to start there; None if absent."""
    for path in paths if paths is not None else find_max_paths(m)[0]:
        if path.start == node:
            return path
        if path.end == node:
            return path.reversed()
    return None
