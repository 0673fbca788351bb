"""Exact and greedy searches for large index codes."""
from __future__ import annotations

import logging
import math
from itertools import permutations
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from ..core.errors import BudgetExceeded, InvalidParams
from ..core.rng import make_rng
from ..core.settings import resolve_cap
from .tuples import IndexCode, IndexTuple, distances_to, rows_array

logger = logging.getLogger(__name__)


def index_space_size(l: int, M: int) -> int:
    """|I(l, M)| = 2^l (2^l - 1) ... (2^l - M + 1)."""
    return math.perm(1 << l, M)


def _check_space(l: int, M: int) -> None:
    if l < 1 or M < 1:
        raise InvalidParams(f"need l >= 1 and M >= 1, got l={l}, M={M}")
    if (1 << l) < M:
        raise InvalidParams(f"I({l},{M}) is empty: only {1 << l} indices of length {l}")


def _all_tuples(l: int, M: int) -> List[IndexTuple]:
    return [IndexTuple.from_values(l, p) for p in permutations(range(1 << l), M)]


def confusability_graph(tuples: List[IndexTuple], d: int) -> nx.Graph:
    """Vertices are tuples; an edge joins two tuples at index-distance >= d."""
    l = tuples[0].l
    arr = rows_array(tuples)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(tuples)))
    for i in range(len(tuples) - 1):
        far = np.flatnonzero(distances_to(arr[i], arr[i + 1:], l) >= d)
        graph.add_edges_from((i, i + 1 + int(j)) for j in far)
    return graph


def colouring_bound(graph: nx.Graph) -> int:
    """Colours used by a largest-first greedy colouring; no clique of `graph` is larger."""
    if graph.number_of_nodes() == 0:
        return 0
    colours = nx.greedy_color(graph, strategy="largest_first")
    return max(colours.values()) + 1


def _greedy_clique(graph: nx.Graph) -> List[int]:
    """Scan nodes in label order, keeping each one adjacent to everything kept so far."""
    clique: List[int] = []
    for v in sorted(graph.nodes):
        if all(graph.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def search_exact_F(l: int, M: int, d: int, cap: Optional[int] = None) -> Tuple[int, IndexCode]:
    """
    F(l, M, d) with one maximum code, by maximum clique on the confusability graph.

    d <= 1 accepts all of I(l, M); d > l admits one row only, since no two
    l-bit words are further apart than l.
    """
    _check_space(l, M)
    cap = resolve_cap(cap, "search_vertices")
    n = index_space_size(l, M)
    if d > l:
        row = IndexTuple.from_values(l, range(M))
        return 1, IndexCode(l, M, d, (row,))
    if n > cap:
        raise BudgetExceeded(f"exact search over I({l},{M})", n, cap)
    tuples = _all_tuples(l, M)
    if d <= 1:
        return n, IndexCode(l, M, d, tuple(tuples))

    graph = confusability_graph(tuples, d)
    # relabel by descending degree, ties by tuple order
    order = sorted(graph.nodes, key=lambda v: (-graph.degree[v], v))
    ranked = nx.relabel_nodes(graph, {v: k for k, v in enumerate(order)})
    bound = colouring_bound(ranked)
    clique = _greedy_clique(ranked)
    logger.debug(
        f"I({l},{M}) at d={d}: {n} vertices, {ranked.number_of_edges()} edges, "
        f"greedy clique {len(clique)}, colouring bound {bound}"
    )
    if len(clique) < bound:
        clique, _ = nx.max_weight_clique(ranked, weight=None)
    size = len(clique)
    code = IndexCode(l, M, d, tuple(tuples[order[k]] for k in clique))
    logger.info(f"F({l},{M},{d}) = {size}")
    return int(size), code


def search_greedy(
    l: int, M: int, d: int, seed: int, restarts: int = 16, cap: Optional[int] = None
) -> IndexCode:
    """
    Best of `restarts` greedy passes, each inserting tuples in a seeded random order.

    When I(l, M) exceeds the greedy_trials budget, each pass draws that many
    random tuples instead of shuffling the whole space.
    """
    _check_space(l, M)
    if restarts < 1:
        raise InvalidParams(f"restarts must be >= 1, got {restarts}")
    trials = resolve_cap(cap, "greedy_trials")
    rng = make_rng(seed)
    n = index_space_size(l, M)
    space = rows_array(_all_tuples(l, M)) if n <= trials else None

    best = np.zeros((0, M), dtype=np.int64)
    for _ in range(restarts):
        if space is not None:
            order = space[rng.permutation(len(space))]
        else:
            order = np.array(
                [rng.choice(1 << l, size=M, replace=False) for _ in range(trials)], dtype=np.int64
            )
        accepted = np.zeros((0, M), dtype=np.int64)
        for row in order:
            if len(accepted) == 0 or distances_to(row, accepted, l).min() >= d:
                accepted = np.vstack([accepted, row])
        if len(accepted) > len(best):
            best = accepted
    code = IndexCode(l, M, d, tuple(IndexTuple.from_values(l, r) for r in best))
    logger.info(f"greedy ({l},{M},{d}) seed {seed}: {code.size} rows after {restarts} passes")
    return code
