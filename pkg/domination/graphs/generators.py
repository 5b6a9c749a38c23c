"""
Graph constructors: seeded random cubic graphs and the named graphs used
by campaigns and tests.
"""
import logging
import random

import networkx as nx
from django.conf import settings

from ..exceptions import Exhausted
from .cycles import girth, has_cycle_of_length
from .marked_graph import MarkedGraph


logger = logging.getLogger(__name__)


def random_cubic(n: int, seed: int, min_girth: int = 3, forbidden=frozenset(),
                 max_attempts: int = None) -> MarkedGraph:
    """
    Connected 3-regular graph with girth >= ``min_girth`` and no cycle whose
    length is in ``forbidden``.

    Each attempt draws a pairing with networkx from a sub-seed derived from
    ``seed``; pairings with loops or repeated pairs are redrawn inside
    networkx, disconnected results and filter failures are rejected here.
    The result is a pure function of (n, seed, filters).
    """
    if n < 4 or n % 2:
        raise ValueError("n must be an even number >= 4")
    max_attempts = settings.DOMINATION_MAX_ATTEMPTS if max_attempts is None else max_attempts
    forbidden = frozenset(forbidden)
    rng = random.Random(seed)
    for attempt in range(max_attempts):
        sub_seed = rng.getrandbits(64)
        candidate = MarkedGraph.from_networkx(nx.random_regular_graph(3, n, seed=sub_seed))
        if len(candidate.components()) != 1:
            logger.debug("Attempt %d rejected: disconnected", attempt)
            continue
        if girth(candidate) < min_girth:
            logger.debug("Attempt %d rejected: girth below %d", attempt, min_girth)
            continue
        if any(has_cycle_of_length(candidate, k) for k in sorted(forbidden) if 3 <= k <= n):
            logger.debug("Attempt %d rejected: forbidden cycle length", attempt)
            continue
        return candidate
    raise Exhausted(
        f"no cubic graph on {n} vertices passed the filters in {max_attempts} attempts",
        n=n, seed=seed, max_attempts=max_attempts,
    )


# ---------------------------------------------------------------------------
# Named graphs
# ---------------------------------------------------------------------------

def cycle_graph(n: int, marked=()) -> MarkedGraph:
    return MarkedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], marked)


def path_graph(n: int, marked=()) -> MarkedGraph:
    return MarkedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], marked)


def complete_graph_k4() -> MarkedGraph:
    return MarkedGraph.from_networkx(nx.complete_graph(4))


def cube_graph() -> MarkedGraph:
    return MarkedGraph.from_networkx(nx.convert_node_labels_to_integers(nx.hypercube_graph(3)))


def heawood_graph() -> MarkedGraph:
    return MarkedGraph.from_networkx(nx.heawood_graph())


def petersen_graph() -> MarkedGraph:
    return MarkedGraph.from_networkx(nx.petersen_graph())


def generalized_petersen(n: int, k: int) -> MarkedGraph:
    """P(n, k): outer cycle 0..n-1, spokes i ~ n+i, inner edges n+i ~ n+(i+k mod n)."""
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return MarkedGraph.from_edges(2 * n, edges)


def random_subcubic_tree(n: int, seed: int) -> MarkedGraph:
    """Random tree with maximum degree 3; vertex i > 0 hangs below an earlier vertex."""
    rng = random.Random(seed)
    degree = [0] * n
    edges = []
    for v in range(1, n):
        parent = rng.choice([u for u in range(v) if degree[u] < 3])
        edges.append((parent, v))
        degree[parent] += 1
        degree[v] += 1
    return MarkedGraph.from_edges(n, edges)


def subdivide_edge(g: MarkedGraph, u: int, v: int, times: int) -> MarkedGraph:
    """Replace edge uv by a path with ``times`` new interior vertices (ids n, n+1, ...)."""
    edges = [e for e in g.edges() if e != (min(u, v), max(u, v))]
    chain = [u] + [g.n + i for i in range(times)] + [v]
    edges.extend(zip(chain, chain[1:]))
    return MarkedGraph.from_edges(g.n + times, edges, g.marked_vertices())
