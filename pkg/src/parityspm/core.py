"""Parity game arena: construction, restriction, dualization.

Vertices are dense ids ``0..n-1``.  Priorities follow the min-wins
convention: the least priority seen infinitely often decides the play,
even priorities favour player Even.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DanglingEdge, EmptySet, EmptySuccessorList, NotTotal


class Player(IntEnum):
    EVEN = 0
    ODD = 1

    @property
    def opponent(self) -> "Player":
        return Player(1 - self)

    @classmethod
    def of_priority(cls, p: int) -> "Player":
        return cls(p & 1)


class ParityGame:
    """Immutable game graph.

    ``owner[v]`` is a :class:`Player`, ``priority[v]`` a natural number,
    ``succ[v]`` the ascending tuple of successors and ``pred[v]`` its
    transpose.  ``origin`` maps vertex ids back to the parent game's ids
    when the game was obtained by :func:`subgame`.
    """

    __slots__ = ("n", "owner", "priority", "succ", "pred", "labels", "origin",
                 "d", "counts")

    def __init__(self, owner, priority, succ, labels=None, origin=None):
        self.n = len(owner)
        self.owner = tuple(Player(o) for o in owner)
        self.priority = tuple(int(p) for p in priority)
        self.succ = tuple(tuple(s) for s in succ)
        pred = [[] for _ in range(self.n)]
        for v, ws in enumerate(self.succ):
            for w in ws:
                pred[w].append(v)
        self.pred = tuple(tuple(p) for p in pred)
        self.labels = tuple(labels) if labels is not None else None
        self.origin = tuple(origin) if origin is not None else None
        self.d = 1 + max(self.priority) if self.n else 0
        counts = [0] * self.d
        for p in self.priority:
            counts[p] += 1
        self.counts = tuple(counts)

    def __repr__(self):
        return f"ParityGame(n={self.n}, d={self.d}, edges={self.edge_count})"

    def __eq__(self, other):
        if not isinstance(other, ParityGame):
            return NotImplemented
        return (self.owner == other.owner and self.priority == other.priority
                and self.succ == other.succ and self.labels == other.labels)

    def __hash__(self):
        return hash((self.owner, self.priority, self.succ))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.succ)

    def edges(self):
        for v, ws in enumerate(self.succ):
            for w in ws:
                yield v, w

    def owned_by(self, player: Player) -> frozenset:
        return frozenset(v for v in self.vertices if self.owner[v] == player)

    def label(self, v: int) -> str:
        if self.labels is not None and self.labels[v] is not None:
            return self.labels[v]
        return str(v)

    def vertex_id(self, name) -> int:
        """Resolve a label (or a decimal id string) to a vertex id."""
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        v = int(name)
        if not 0 <= v < self.n:
            raise KeyError(name)
        return v

    def ids(self, names: Iterable) -> Tuple[int, ...]:
        """Resolve names in order (duplicates kept)."""
        return tuple(self.vertex_id(x) for x in names)


def build_game(owners: Sequence, priorities: Sequence[int],
               successor_lists: Sequence[Iterable[int]],
               labels: Optional[Sequence[Optional[str]]] = None) -> ParityGame:
    """Validate raw vertex data and return a :class:`ParityGame`.

    Successor lists are deduplicated and sorted.  Raises
    :class:`EmptySuccessorList` or :class:`DanglingEdge` on bad input.
    """
    n = len(owners)
    if len(priorities) != n or len(successor_lists) != n:
        raise ValueError("owners, priorities and successor lists differ in length")
    if labels is not None and len(labels) != n:
        raise ValueError("labels must have one entry per vertex")
    if n == 0:
        raise ValueError("a game needs at least one vertex")
    succ = []
    for v, ws in enumerate(successor_lists):
        ws = sorted(set(ws))
        if not ws:
            raise EmptySuccessorList(v)
        for w in ws:
            if not 0 <= w < n:
                raise DanglingEdge(v, w)
        succ.append(ws)
    for p in priorities:
        if p < 0:
            raise ValueError(f"negative priority {p}")
    return ParityGame(owners, priorities, succ, labels)


def subgame(game: ParityGame, region: Iterable[int]) -> ParityGame:
    """Return ``G ∩ region`` renumbered densely, with ``origin`` set.

    Raises :class:`NotTotal` naming the (parent) vertex that would be
    left without successors.
    """
    keep = sorted(set(region))
    if not keep:
        raise EmptySet("cannot restrict to an empty vertex set")
    index = {v: i for i, v in enumerate(keep)}
    succ = []
    for v in keep:
        ws = [index[w] for w in game.succ[v] if w in index]
        if not ws:
            raise NotTotal(v)
        succ.append(ws)
    labels = [game.labels[v] for v in keep] if game.labels is not None else None
    return ParityGame([game.owner[v] for v in keep],
                      [game.priority[v] for v in keep], succ, labels, keep)


def dualize(game: ParityGame) -> ParityGame:
    """Shift every priority up by one and swap ownership."""
    return ParityGame([o.opponent for o in game.owner],
                      [p + 1 for p in game.priority],
                      game.succ, game.labels, game.origin)


def min_priority(game: ParityGame, region: Iterable[int]) -> int:
    region = list(region)
    if not region:
        raise EmptySet("minimal priority of an empty set")
    return min(game.priority[v] for v in region)


def is_total_within(game: ParityGame, region) -> bool:
    return all(any(w in region for w in game.succ[v]) for v in region)
