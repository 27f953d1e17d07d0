"""Player attractors and the Odd-player guarded attractor.

Both are backward worklist computations over predecessor lists with
per-vertex counters of successors still outside the attractor, so each
runs in time linear in the edges of the context.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Optional

from .core import ParityGame, Player
from .errors import BaseNotInContext, BaseViolatesGuard


@dataclass
class AttractorResult:
    set: FrozenSet[int]
    strategy: Dict[int, int] = field(default_factory=dict)
    # order in which vertices entered; base vertices first, ascending id
    order: list = field(default_factory=list)


def attractor(game: ParityGame, player: Player, base: Iterable[int],
              context: Optional[Iterable[int]] = None) -> AttractorResult:
    """Least set within ``context`` from which ``player`` forces a visit to ``base``.

    ``player``-owned vertices join through one successor in the set (and
    that successor is recorded as their attractor move); opponent
    vertices join once all their successors inside the context are in
    the set.  The FIFO worklist processes vertices in entry order, so
    the recorded move always targets the earliest-entered successor.
    """
    player = Player(player)
    W = frozenset(game.vertices) if context is None else frozenset(context)
    base = sorted(set(base))
    if not W.issuperset(base):
        raise BaseNotInContext(f"{set(base) - W} not in context")
    inside = set(base)
    order = list(base)
    strategy = {}
    remaining = {}
    queue = deque(base)
    while queue:
        w = queue.popleft()
        for u in game.pred[w]:
            if u in inside or u not in W:
                continue
            if game.owner[u] == player:
                strategy[u] = w
            else:
                left = remaining.get(u)
                if left is None:
                    left = sum(1 for x in game.succ[u] if x in W)
                left -= 1
                remaining[u] = left
                if left > 0:
                    continue
            inside.add(u)
            order.append(u)
            queue.append(u)
    return AttractorResult(frozenset(inside), strategy, order)


def guarded_attractor(game: ParityGame, k: int, base: Iterable[int],
                      context: Optional[Iterable[int]] = None) -> AttractorResult:
    """Odd attractor to ``base`` confined to context vertices of priority ``>= k``.

    Odd vertices join on one successor in the set; Even vertices join
    when every successor inside the context is in the set.  The result
    carries the attracting moves of the Odd vertices outside ``base``.
    """
    W = frozenset(game.vertices) if context is None else frozenset(context)
    base = sorted(set(base))
    for u in base:
        if u not in W or game.priority[u] < k:
            raise BaseViolatesGuard(f"vertex {u} outside context or below priority {k}")
    inside = set(base)
    order = list(base)
    strategy = {}
    remaining = {}
    queue = deque(base)
    while queue:
        w = queue.popleft()
        for u in game.pred[w]:
            if u in inside or u not in W or game.priority[u] < k:
                continue
            if game.owner[u] == Player.ODD:
                strategy[u] = w
            else:
                left = remaining.get(u)
                if left is None:
                    left = sum(1 for x in game.succ[u] if x in W)
                left -= 1
                remaining[u] = left
                if left > 0:
                    continue
            inside.add(u)
            order.append(u)
            queue.append(u)
    return AttractorResult(frozenset(inside), strategy, order)
