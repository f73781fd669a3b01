"""Brute-force reference implementations, kept independent of the library.

Betweenness oracles enumerate every simple path between a node pair and
keep the shortest ones; modularity is evaluated straight from the edge
list in exact rational arithmetic. These deliberately share no code with
the fast paths they check.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction


def enumerate_geodesics(nodes, succ, s, t):
    """All shortest simple paths s -> t, found by exhaustive DFS."""
    best_len = math.inf
    best: list[tuple[int, ...]] = []

    def walk(path, seen):
        nonlocal best_len, best
        v = path[-1]
        if v == t:
            if len(path) < best_len:
                best_len = len(path)
                best = [tuple(path)]
            elif len(path) == best_len:
                best.append(tuple(path))
            return
        if len(path) >= best_len:
            return
        for w in succ.get(v, ()):
            if w not in seen:
                path.append(w)
                seen.add(w)
                walk(path, seen)
                seen.discard(w)
                path.pop()

    walk([s], {s})
    return best


def _succ(nodes, edges, directed):
    succ = {v: set() for v in nodes}
    for a, b in edges:
        succ[a].add(b)
        if not directed:
            succ[b].add(a)
    return succ


def node_betweenness_brute(nodes, edges, directed):
    """Fractional geodesic counts per interior node, pair by pair."""
    nodes = sorted(nodes)
    succ = _succ(nodes, edges, directed)
    bc = {v: 0.0 for v in nodes}
    if directed:
        pairs = [(s, t) for s in nodes for t in nodes if s != t]
    else:
        pairs = [(s, t) for i, s in enumerate(nodes) for t in nodes[i + 1 :]]
    for s, t in pairs:
        paths = enumerate_geodesics(nodes, succ, s, t)
        if not paths:
            continue
        weight = 1.0 / len(paths)
        for path in paths:
            for v in path[1:-1]:
                bc[v] += weight
    return bc


def edge_betweenness_brute(nodes, undirected_edges):
    """Fractional geodesic counts per undirected edge, each pair once."""
    nodes = sorted(nodes)
    succ = _succ(nodes, undirected_edges, directed=False)
    eb = {(min(a, b), max(a, b)): 0.0 for a, b in undirected_edges}
    for i, s in enumerate(nodes):
        for t in nodes[i + 1 :]:
            paths = enumerate_geodesics(nodes, succ, s, t)
            if not paths:
                continue
            weight = 1.0 / len(paths)
            for path in paths:
                for a, b in zip(path, path[1:]):
                    eb[(min(a, b), max(a, b))] += weight
    return eb


def modularity_brute(undirected_edges, assignment):
    """Newman-Girvan Q as an exact Fraction, straight from the edge list."""
    m = len(undirected_edges)
    clusters = set(assignment.values())
    intra = {c: 0 for c in clusters}
    ends = {c: 0 for c in clusters}
    for a, b in undirected_edges:
        ends[assignment[a]] += 1
        ends[assignment[b]] += 1
        if assignment[a] == assignment[b]:
            intra[assignment[a]] += 1
    return sum(
        Fraction(intra[c], m) - (Fraction(ends[c], 2 * m)) ** 2 for c in clusters
    )


def skewness_brute(xs):
    """Adjusted Fisher-Pearson g1 written out longhand."""
    n = len(xs)
    mean = sum(xs) / n
    s = math.sqrt(sum((x - mean) ** 2 for x in xs) / (n - 1))
    return n / ((n - 1) * (n - 2)) * sum(((x - mean) / s) ** 3 for x in xs)


def random_directed_graph(rng: random.Random, max_nodes=7, edge_prob=0.35):
    n = rng.randint(2, max_nodes)
    nodes = list(range(n))
    edges = [
        (a, b) for a in nodes for b in nodes if a != b and rng.random() < edge_prob
    ]
    return nodes, edges


def random_undirected_edges(rng: random.Random, max_nodes=8, edge_prob=0.45):
    n = rng.randint(2, max_nodes)
    nodes = list(range(n))
    edges = [
        (a, b)
        for i, a in enumerate(nodes)
        for b in nodes[i + 1 :]
        if rng.random() < edge_prob
    ]
    return nodes, edges
