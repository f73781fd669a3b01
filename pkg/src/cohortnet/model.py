"""Directed friendship-network data model.

A network is built from survey nominations: each directed edge (u, v) means
"u spends time with v". Friendship is not assumed to be reciprocal, so the
graph stays directed and undirected views are derived explicitly, either by
union (any nomination in either direction) or by intersection (reciprocal
ties only).
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from .errors import (
    DuplicateEdge,
    DuplicateId,
    EmptyEdgeSet,
    InvalidId,
    InvalidMark,
    SelfLoop,
    UnknownId,
)

log = logging.getLogger(__name__)


class Gender(str, Enum):
    MALE = "M"
    FEMALE = "F"
    UNSPECIFIED = "U"


class SymmetrizeRule(str, Enum):
    """How directed ties collapse into undirected ones."""

    UNION = "union"
    INTERSECTION = "intersection"


def _check_mark(value: float, context: str) -> None:
    if not 0.0 <= value <= 100.0:
        raise InvalidMark(f"{context}: mark {value!r} outside [0, 100]")


@dataclass(frozen=True)
class Student:
    """One cohort member; marks are keyed by semester label (e.g. "s5")."""

    id: int
    gender: Gender = Gender.UNSPECIFIED
    marks: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.id < 0:
            raise InvalidId(f"student id {self.id} must be non-negative")
        for semester, mark in self.marks.items():
            _check_mark(mark, f"student {self.id}, semester {semester!r}")


@dataclass(frozen=True)
class FriendshipNetwork:
    """Directed simple graph over student ids.

    Invariants (enforced by :func:`build_network`): no self-loops, no
    duplicate edges, every edge endpoint is a known node.
    """

    label: str
    nodes: frozenset[int]
    edges: frozenset[tuple[int, int]]

    @cached_property
    def out_adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.nodes}
        for src, tgt in self.edges:
            nbrs[src].add(tgt)
        return {v: frozenset(n) for v, n in nbrs.items()}

    @cached_property
    def in_adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.nodes}
        for src, tgt in self.edges:
            nbrs[tgt].add(src)
        return {v: frozenset(n) for v, n in nbrs.items()}

    @cached_property
    def union_adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.nodes}
        for src, tgt in self.edges:
            nbrs[src].add(tgt)
            nbrs[tgt].add(src)
        return {v: frozenset(n) for v, n in nbrs.items()}


@dataclass(frozen=True)
class UndirectedView:
    """Undirected projection of a network; edges stored as (lo, hi) pairs."""

    nodes: frozenset[int]
    edges: frozenset[tuple[int, int]]
    rule: SymmetrizeRule

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.nodes}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(n) for v, n in nbrs.items()}

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])

    def induced(self, keep: Iterable[int]) -> UndirectedView:
        """Subview on ``keep``; drops edges with an endpoint outside."""
        kept = frozenset(keep)
        edges = frozenset(e for e in self.edges if e[0] in kept and e[1] in kept)
        return UndirectedView(nodes=kept, edges=edges, rule=self.rule)

    def components(self) -> list[set[int]]:
        """Connected components, largest first, ties by smallest member id."""
        return _components(self.nodes, self.adjacency)


def _components(nodes: Iterable[int], adjacency: Mapping[int, Iterable[int]]) -> list[set[int]]:
    seen: set[int] = set()
    comps: list[set[int]] = []
    for start in sorted(nodes):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in adjacency.get(v, ()):
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        comps.append(comp)
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps


def build_network(
    roster: Iterable[Student],
    nominations: Iterable[tuple[int, int]],
    label: str,
    *,
    dedupe: bool = False,
) -> FriendshipNetwork:
    """Validate roster and nominations and assemble the directed network.

    With ``dedupe`` a repeated nomination is dropped with a warning instead
    of raising :class:`DuplicateEdge`.
    """
    students = list(roster)
    ids = [s.id for s in students]
    nodes = frozenset(ids)
    if len(ids) != len(nodes):
        seen: set[int] = set()
        dup = next(i for i in ids if i in seen or seen.add(i))  # type: ignore[func-returns-value]
        raise DuplicateId(f"student id {dup} appears more than once in the roster")
    for s in students:
        for semester, mark in s.marks.items():
            _check_mark(mark, f"student {s.id}, semester {semester!r}")

    edges: set[tuple[int, int]] = set()
    for src, tgt in nominations:
        if src == tgt:
            raise SelfLoop(f"self-nomination ({src}, {tgt}) is not allowed")
        if src not in nodes:
            raise UnknownId(f"edge source {src} is not in the roster")
        if tgt not in nodes:
            raise UnknownId(f"edge target {tgt} is not in the roster")
        if (src, tgt) in edges:
            if dedupe:
                log.warning("duplicate nomination (%s, %s) ignored", src, tgt)
                continue
            raise DuplicateEdge(f"nomination ({src}, {tgt}) appears more than once")
        edges.add((src, tgt))
    return FriendshipNetwork(label=label, nodes=nodes, edges=frozenset(edges))


def symmetrize(net: FriendshipNetwork, rule: SymmetrizeRule) -> UndirectedView:
    """Undirected view: UNION keeps any tie, INTERSECTION only reciprocal ones."""
    if rule is SymmetrizeRule.UNION:
        pairs = {(min(s, t), max(s, t)) for s, t in net.edges}
    else:
        pairs = {(min(s, t), max(s, t)) for s, t in net.edges if (t, s) in net.edges}
    return UndirectedView(nodes=net.nodes, edges=frozenset(pairs), rule=rule)


def weak_components(net: FriendshipNetwork) -> list[set[int]]:
    """Weakly connected components, largest first, ties by smallest member id."""
    return _components(net.nodes, net.union_adjacency)


def pendant_vertices(net: FriendshipNetwork) -> set[int]:
    """Nodes with exactly one neighbour in the union undirected view."""
    return {v for v, nbrs in net.union_adjacency.items() if len(nbrs) == 1}


def reciprocity_rate(net: FriendshipNetwork) -> float:
    """Fraction of directed edges whose reverse edge also exists."""
    if not net.edges:
        raise EmptyEdgeSet("reciprocity is undefined on an empty edge set")
    mutual = sum(1 for s, t in net.edges if (t, s) in net.edges)
    return mutual / len(net.edges)


@dataclass(frozen=True)
class Cohort:
    """A network plus the per-student attributes it was built from."""

    network: FriendshipNetwork
    students: tuple[Student, ...]

    @cached_property
    def by_id(self) -> dict[int, Student]:
        return {s.id: s for s in self.students}

    def semesters(self) -> list[str]:
        labels: set[str] = set()
        for s in self.students:
            labels.update(s.marks)
        return sorted(labels)

    def marks_for(self, semester: str) -> dict[int, float]:
        """Marks of every student that has one for ``semester``."""
        return {s.id: s.marks[semester] for s in self.students if semester in s.marks}

    def genders(self) -> dict[int, Gender]:
        return {s.id: s.gender for s in self.students}


def make_cohort(
    roster: Iterable[Student],
    nominations: Iterable[tuple[int, int]],
    label: str,
    *,
    dedupe: bool = False,
) -> Cohort:
    students = tuple(sorted(roster, key=lambda s: s.id))
    net = build_network(students, nominations, label, dedupe=dedupe)
    return Cohort(network=net, students=students)
