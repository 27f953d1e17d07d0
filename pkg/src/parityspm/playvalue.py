"""Play values over unbounded measures, and a brute-force min-max oracle.

The value of a play Even wins has, at each odd position ``i``, the number
of priority-``i`` vertices seen before the first priority below ``i``
(the degree of the longest ``i``-dominated prefix).  Plays Odd wins are
worth top.  The min-max oracle checks, on small games, that the least
progress measure equals the best value Even can guarantee with a
positional strategy against an unrestricted Odd.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .core import ParityGame, Player
from .errors import GameTooLarge, InvalidLasso
from .measures import TOP, Measure

MINMAX_MAX_VERTICES = 8


@dataclass(frozen=True)
class LassoPlay:
    prefix: Tuple[int, ...]
    cycle: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))

    def vertices(self):
        return self.prefix + self.cycle

    def validate(self, game: ParityGame):
        if not self.cycle:
            raise InvalidLasso("empty cycle")
        seq = self.prefix + self.cycle + self.cycle[:1]
        for a, b in zip(seq, seq[1:]):
            if not (0 <= a < game.n) or b not in game.succ[a]:
                raise InvalidLasso(f"{a} -> {b} is not an edge")


def word_value(prefix: Sequence[int], cycle: Sequence[int], d: int) -> Measure:
    """Value of the priority word ``prefix (cycle)^omega``.

    One pass over ``prefix + cycle`` suffices: when the cycle minimum
    ``c`` is even, every odd ``i`` either meets a priority below ``i``
    within the first cycle copy (``c < i``) or never sees ``i`` on the
    cycle at all (``c > i``).
    """
    if not cycle:
        raise InvalidLasso("empty cycle")
    if min(cycle) % 2 == 1:
        return TOP
    word = list(prefix) + list(cycle)
    out = []
    for i in range(1, d, 2):
        count = 0
        for p in word:
            if p < i:
                break
            if p == i:
                count += 1
        out.append(count)
    return tuple(out)


def play_value(game: ParityGame, play: LassoPlay) -> Measure:
    play.validate(game)
    prio = game.priority
    return word_value([prio[v] for v in play.prefix], [prio[v] for v in play.cycle], game.d)


def search_bound(game: ParityGame) -> int:
    """Depth bound ``|V| * (2 + sum of odd-priority counts)`` for path search."""
    return game.n * (2 + sum(game.counts[i] for i in range(1, game.d, 2)))


def _restricted(game, sigma_even):
    return [(sigma_even[v],) if game.owner[v] == Player.EVEN else game.succ[v]
            for v in game.vertices]


def _reaches(edges, start, allowed=None):
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in edges[x]:
            if y not in seen and (allowed is None or y in allowed):
                seen.add(y)
                stack.append(y)
    return seen


def _odd_cycle_vertices(game, edges):
    """Vertices ``u`` of odd priority that lie on a cycle with minimum ``P(u)``."""
    out = set()
    for u in game.vertices:
        p = game.priority[u]
        if p % 2 == 0:
            continue
        allowed = {v for v in game.vertices if game.priority[v] >= p}
        if any(u in edges[x] for x in _reaches(edges, u, allowed)):
            out.add(u)
    return out


def _advance(low, counts, p):
    low = min(low, p)
    if p % 2 == 1 and low == p:
        counts = list(counts)
        counts[p // 2] += 1
        counts = tuple(counts)
    return low, counts


def _solitaire_values(game: ParityGame, sigma_even: Dict[int, int], starts) -> Dict[int, Measure]:
    edges = _restricted(game, sigma_even)
    bad = _odd_cycle_vertices(game, edges)
    prio = game.priority
    odd_positions = list(range(1, game.d, 2))
    limit = search_bound(game)
    values = {}
    for v in starts:
        reach = _reaches(edges, v)
        if reach & bad:
            values[v] = TOP
            continue
        # state: (vertex, least priority so far, counts per odd position)
        low0, counts0 = _advance(prio[v], (0,) * len(odd_positions), prio[v])
        start = (v, low0, counts0)
        seen = {start}
        best = counts0
        frontier = [start]
        depth = 0
        while frontier:
            if depth >= limit:
                raise RuntimeError(f"play search from {v} exceeded depth bound {limit}")
            nxt = []
            for x, low, counts in frontier:
                for y in edges[x]:
                    state = (y,) + _advance(low, counts, prio[y])
                    if state not in seen:
                        seen.add(state)
                        nxt.append(state)
                        if state[2] > best:
                            best = state[2]
            frontier = nxt
            depth += 1
        values[v] = best
    return values


def max_value_solitaire(game: ParityGame, sigma_even: Dict[int, int], v: int) -> Measure:
    """Largest play value Odd can achieve from ``v`` while Even follows ``sigma_even``.

    Top when Odd can reach a cycle of odd minimal priority.  Otherwise
    every reachable (vertex, least priority seen, stretch counts) state is
    explored breadth-first; the partial value only grows along a path and
    each play's value is reached by a finite prefix, so the maximum over
    explored states is the maximum over plays.
    """
    if game.n > MINMAX_MAX_VERTICES:
        raise GameTooLarge(f"{game.n} vertices exceed {MINMAX_MAX_VERTICES}")
    return _solitaire_values(game, sigma_even, [v])[v]


def _even_strategies(game):
    evens = [v for v in game.vertices if game.owner[v] == Player.EVEN]
    for choice in itertools.product(*(game.succ[v] for v in evens)):
        yield dict(zip(evens, choice))


def optimal_values(game: ParityGame) -> Dict[int, Measure]:
    """Min over positional Even strategies of the best value Odd achieves, for every vertex."""
    if game.n > MINMAX_MAX_VERTICES:
        raise GameTooLarge(f"{game.n} vertices exceed {MINMAX_MAX_VERTICES}")
    best: Dict[int, Optional[Measure]] = {v: None for v in game.vertices}
    for sigma in _even_strategies(game):
        vals = _solitaire_values(game, sigma, game.vertices)
        for v, m in vals.items():
            if best[v] is None or m < best[v]:
                best[v] = m
    return best


def optimal_value_minmax(game: ParityGame, v: int) -> Measure:
    return optimal_values(game)[v]
