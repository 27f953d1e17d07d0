"""Certificate checks for winning regions and positional strategies."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import List, Optional

import networkx as nx

from .core import ParityGame, Player
from .result import SolveResult

REGION_NOT_CLOSED = "RegionNotClosed"
STRATEGY_LEAVES_REGION = "StrategyLeavesRegion"
BAD_CYCLE = "BadCycle"
UNDEFINED = "Undefined"
NOT_A_PARTITION = "NotAPartition"


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: object
    player: Optional[int] = None

    def describe(self, game: Optional[ParityGame] = None) -> str:
        who = "" if self.player is None else ("even " if self.player == 0 else "odd ")
        w = self.witness
        if game is not None:
            if isinstance(w, (list, tuple)):
                w = " ".join(game.label(v) for v in w)
            elif isinstance(w, int):
                w = game.label(w)
        return f"{who}{self.kind}: {w}"

    def to_json(self) -> dict:
        w = self.witness
        return {"kind": self.kind, "player": self.player,
                "witness": list(w) if isinstance(w, (list, tuple)) else w}


def _cycle_through(graph: nx.DiGraph, v: int, allowed) -> List[int]:
    """Shortest cycle from ``v`` back to ``v`` inside ``allowed``."""
    parent = {}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in graph.successors(x):
            if y not in allowed:
                continue
            if y == v:
                path = [x]
                while x != v:
                    x = parent[x]
                    path.append(x)
                return path[::-1]
            if y not in parent:
                parent[y] = x
                queue.append(y)
    raise AssertionError("no cycle in a non-trivial component")


def verify_strategy(game: ParityGame, player, region, sigma) -> Optional[Violation]:
    """Check that ``sigma`` wins every play from ``region`` for ``player``.

    Returns ``None`` when the strategy is a valid certificate, otherwise
    the first :class:`Violation` found.
    """
    player = Player(player)
    region = frozenset(region)
    for v in sorted(region):
        if game.owner[v] == player:
            if v not in sigma or sigma[v] not in game.succ[v]:
                return Violation(UNDEFINED, v, int(player))
            if sigma[v] not in region:
                return Violation(STRATEGY_LEAVES_REGION, [v, sigma[v]], int(player))
        else:
            for w in game.succ[v]:
                if w not in region:
                    return Violation(REGION_NOT_CLOSED, [v, w], int(player))
    graph = nx.DiGraph()
    graph.add_nodes_from(region)
    for v in region:
        if game.owner[v] == player:
            graph.add_edge(v, sigma[v])
        else:
            graph.add_edges_from((v, w) for w in game.succ[v])
    bad = sorted({p for p in game.priority if p % 2 != player})
    for p in bad:
        allowed = {v for v in region if game.priority[v] >= p}
        sub = graph.subgraph(allowed)
        for comp in nx.strongly_connected_components(sub):
            hits = sorted(v for v in comp if game.priority[v] == p)
            if not hits:
                continue
            v = hits[0]
            if len(comp) == 1 and not graph.has_edge(v, v):
                continue
            return Violation(BAD_CYCLE, _cycle_through(graph, v, comp), int(player))
    return None


def verify_partition(game: ParityGame, result: SolveResult,
                     players=(Player.EVEN, Player.ODD)) -> List[Violation]:
    """Check that the regions partition the vertices and each player's
    strategy wins on that player's region."""
    out = []
    even, odd = frozenset(result.win_even), frozenset(result.win_odd)
    overlap = even & odd
    missing = frozenset(game.vertices) - even - odd
    if overlap or missing:
        out.append(Violation(NOT_A_PARTITION, sorted(overlap | missing)))
    for player in players:
        player = Player(player)
        region = even if player == Player.EVEN else odd
        sigma = result.strategy_even if player == Player.EVEN else result.strategy_odd
        if not region:
            continue
        bad = verify_strategy(game, player, region, sigma)
        if bad is not None:
            out.append(bad)
    return out
