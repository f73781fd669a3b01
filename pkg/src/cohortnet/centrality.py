"""Node centrality measures and representative ranking.

Betweenness is unnormalized geodesic betweenness with fractional splitting
across equal-length shortest paths: score(v) is the sum over node pairs
(s, t), s != v != t, of sigma_st(v) / sigma_st, where sigma_st counts
shortest s-t paths and sigma_st(v) those passing through v. Directed mode
counts ordered pairs on the directed graph; undirected mode counts each
unordered pair once on the union view. Unreachable pairs contribute 0.

Closeness and eigenvector centrality both come with applicability caveats
on this kind of data: closeness refuses disconnected networks outright, and
eigenvector centrality runs on the union-symmetrized view, recording a
warning when the network contains non-reciprocal ties.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum

from .errors import DisconnectedGraph, EmptyEdgeSet, KTooLarge, NoConvergence
from .model import FriendshipNetwork, SymmetrizeRule, UndirectedView, symmetrize

POWER_ITERATION_TOL = 1e-10
POWER_ITERATION_CAP = 1000

DIRECTED_INPUT_WARNING = (
    "network contains non-reciprocal ties; scores were computed on the "
    "union-symmetrized view and may not reflect the directed structure"
)


class Measure(str, Enum):
    DEGREE = "degree"
    BETWEENNESS = "betweenness"
    CLOSENESS = "closeness"
    EIGENVECTOR = "eigenvector"


class Mode(str, Enum):
    DIRECTED = "directed"
    UNDIRECTED = "undirected"


@dataclass(frozen=True)
class CentralityScores:
    measure: Measure
    mode: Mode
    scores: dict[int, float]
    warnings: list[str] = field(default_factory=list)
    # populated for Measure.DEGREE only
    in_scores: dict[int, float] | None = None
    out_scores: dict[int, float] | None = None


def _index_adjacency(
    order: list[int], adjacency: Mapping[int, frozenset[int]]
) -> list[list[int]]:
    idx = {v: i for i, v in enumerate(order)}
    return [sorted(idx[w] for w in adjacency[v]) for v in order]


def _brandes(order: list[int], nbrs: list[list[int]]) -> list[float]:
    """Accumulate shortest-path dependencies source by source (ascending id)."""
    n = len(order)
    bc = [0.0] * n
    for s in range(n):
        sigma = [0] * n
        dist = [-1] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma[s] = 1
        dist[s] = 0
        stack: list[int] = []
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            dv = dist[v]
            sv = sigma[v]
            for w in nbrs[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                if dist[w] == dv + 1:
                    sigma[w] += sv
                    preds[w].append(v)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                bc[w] += delta[w]
    return bc


def betweenness(net: FriendshipNetwork, mode: Mode = Mode.DIRECTED) -> CentralityScores:
    """Unnormalized geodesic betweenness in the requested mode."""
    order = sorted(net.nodes)
    if mode is Mode.DIRECTED:
        nbrs = _index_adjacency(order, net.out_adjacency)
        raw = _brandes(order, nbrs)
    else:
        nbrs = _index_adjacency(order, net.union_adjacency)
        # summing over all sources counts each unordered pair twice
        raw = [x / 2.0 for x in _brandes(order, nbrs)]
    return CentralityScores(
        measure=Measure.BETWEENNESS,
        mode=mode,
        scores={v: raw[i] for i, v in enumerate(order)},
    )


def closeness(net: FriendshipNetwork) -> CentralityScores:
    """Closeness on the union view: score(v) = (n-1) / sum of distances.

    Raises :class:`DisconnectedGraph` when the union view is not connected;
    callers wanting per-component numbers should analyse components
    separately.
    """
    view = symmetrize(net, SymmetrizeRule.UNION)
    comps = view.components()
    if len(comps) > 1:
        raise DisconnectedGraph(
            f"network has {len(comps)} components; closeness requires a "
            "connected network"
        )
    order = sorted(net.nodes)
    n = len(order)
    nbrs = _index_adjacency(order, view.adjacency)
    scores: dict[int, float] = {}
    for i, v in enumerate(order):
        dist = [-1] * n
        dist[i] = 0
        total = 0
        queue = deque([i])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    total += dist[w]
                    queue.append(w)
        scores[v] = (n - 1) / total if total else 0.0
    return CentralityScores(measure=Measure.CLOSENESS, mode=Mode.UNDIRECTED, scores=scores)


def eigenvector(net: FriendshipNetwork | UndirectedView) -> CentralityScores:
    """Dominant-eigenvector scores on the union view, max component scaled to 1.

    Power iteration runs on A + I so the dominant eigenvalue is strictly
    separated even on bipartite graphs. A directed network with at least one
    non-reciprocal tie gets a recorded warning rather than a refusal.
    """
    warnings: list[str] = []
    if isinstance(net, FriendshipNetwork):
        view = symmetrize(net, SymmetrizeRule.UNION)
        if any((t, s) not in net.edges for s, t in net.edges):
            warnings.append(DIRECTED_INPUT_WARNING)
    else:
        view = net
    if not view.edges:
        raise EmptyEdgeSet("eigenvector centrality needs at least one edge")

    order = sorted(view.nodes)
    n = len(order)
    nbrs = _index_adjacency(order, view.adjacency)
    x = [1.0] * n
    for _ in range(POWER_ITERATION_CAP):
        y = [x[i] + sum(x[j] for j in nbrs[i]) for i in range(n)]
        top = max(y)
        y = [v / top for v in y]
        if max(abs(y[i] - x[i]) for i in range(n)) < POWER_ITERATION_TOL:
            x = y
            break
        x = y
    else:
        raise NoConvergence(
            f"power iteration did not converge within {POWER_ITERATION_CAP} iterations"
        )
    return CentralityScores(
        measure=Measure.EIGENVECTOR,
        mode=Mode.UNDIRECTED,
        scores={v: x[i] for i, v in enumerate(order)},
        warnings=warnings,
    )


def degree(net: FriendshipNetwork) -> CentralityScores:
    """In-, out- and total degree per node (directed counting)."""
    ins = {v: float(len(net.in_adjacency[v])) for v in net.nodes}
    outs = {v: float(len(net.out_adjacency[v])) for v in net.nodes}
    total = {v: ins[v] + outs[v] for v in net.nodes}
    return CentralityScores(
        measure=Measure.DEGREE,
        mode=Mode.DIRECTED,
        scores=total,
        in_scores=ins,
        out_scores=outs,
    )


def rank_representatives(net: FriendshipNetwork, k: int) -> list[int]:
    """Top-k nodes by directed betweenness, ties broken by ascending id."""
    if not 1 <= k <= len(net.nodes):
        raise KTooLarge(f"k={k} outside 1..{len(net.nodes)}")
    scores = betweenness(net, Mode.DIRECTED).scores
    ranked = sorted(scores, key=lambda v: (-scores[v], v))
    return ranked[:k]
