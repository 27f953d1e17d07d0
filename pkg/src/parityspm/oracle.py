"""Independent solvers used to cross-check the progress-measure solvers."""

from __future__ import annotations

import itertools
import time
from math import prod

from .attractors import attractor
from .core import ParityGame, Player
from .errors import GameTooLarge
from .result import SolveResult

BRUTE_MAX_VERTICES = 8
BRUTE_MAX_PROFILES = 10 ** 6


def solve_zielonka(game: ParityGame) -> SolveResult:
    """Recursive algorithm with positional strategies for both players."""
    start = time.perf_counter()
    counter = [0]

    def attr(player, base, context):
        counter[0] += 1
        return attractor(game, player, base, context)

    def solve(W):
        # returns (won[0], won[1], sigma[0], sigma[1])
        if not W:
            return set(), set(), {}, {}
        p = min(game.priority[v] for v in W)
        i = Player.of_priority(p)
        top = [v for v in W if game.priority[v] == p]
        a = attr(i, top, W)
        won = [set(), set()]
        sigma = [{}, {}]
        sub = solve(W - a.set)
        if not sub[1 - i]:
            won[i] = set(W)
            sigma[i].update(sub[2 + i])
            sigma[i].update(a.strategy)
            for v in top:
                if game.owner[v] == i:
                    sigma[i][v] = next(w for w in game.succ[v] if w in W)
            return won[0], won[1], sigma[0], sigma[1]
        b = attr(i.opponent, sub[1 - i], W)
        rest = solve(W - b.set)
        won[1 - i] = set(b.set) | rest[1 - i]
        won[i] = rest[i]
        sigma[1 - i].update(sub[2 + (1 - i)])
        sigma[1 - i].update(b.strategy)
        sigma[1 - i].update(rest[2 + (1 - i)])
        sigma[i].update(rest[2 + i])
        return won[0], won[1], sigma[0], sigma[1]

    w0, w1, s0, s1 = solve(set(game.vertices))
    result = SolveResult(frozenset(w0), frozenset(w1), s0, s1, algorithm="zielonka")
    result.stats = {"lifts": 0, "progs": 0, "attractors": counter[0],
                    "wall_ms": (time.perf_counter() - start) * 1e3}
    return result


def _cycle_parities(n, move, priority):
    """For a functional graph ``move``, whether the cycle reached from
    each vertex has an even minimal priority."""
    even = [None] * n
    for s in range(n):
        if even[s] is not None:
            continue
        path, pos = [], {}
        v = s
        while even[v] is None and v not in pos:
            pos[v] = len(path)
            path.append(v)
            v = move[v]
        if even[v] is None:
            cycle = path[pos[v]:]
            verdict = min(priority[u] for u in cycle) % 2 == 0
        else:
            verdict = even[v]
        for u in path:
            even[u] = verdict
    return even


def solve_bruteforce(game: ParityGame) -> SolveResult:
    """Enumerate every pair of positional strategies.

    Even wins ``v`` iff some Even strategy beats every Odd strategy from
    ``v``.  Positional determinacy makes this complete.  Only the
    partition is returned.
    """
    if game.n > BRUTE_MAX_VERTICES:
        raise GameTooLarge(f"{game.n} vertices exceed {BRUTE_MAX_VERTICES}")
    profiles = prod(len(s) for s in game.succ)
    if profiles > BRUTE_MAX_PROFILES:
        raise GameTooLarge(f"{profiles} strategy profiles exceed {BRUTE_MAX_PROFILES}")
    start = time.perf_counter()
    n = game.n
    evens = [v for v in game.vertices if game.owner[v] == Player.EVEN]
    odds = [v for v in game.vertices if game.owner[v] == Player.ODD]
    won = [False] * n
    move = [0] * n
    for choice_e in itertools.product(*(game.succ[v] for v in evens)):
        for v, w in zip(evens, choice_e):
            move[v] = w
        holds = [True] * n
        for choice_o in itertools.product(*(game.succ[v] for v in odds)):
            for v, w in zip(odds, choice_o):
                move[v] = w
            for v, ok in enumerate(_cycle_parities(n, move, game.priority)):
                if not ok:
                    holds[v] = False
            if not any(holds):
                break
        for v in game.vertices:
            won[v] = won[v] or holds[v]
        if all(won):
            break
    w0 = frozenset(v for v in game.vertices if won[v])
    result = SolveResult(w0, frozenset(game.vertices) - w0, algorithm="brute")
    result.stats = {"lifts": 0, "progs": 0, "attractors": 0,
                    "wall_ms": (time.perf_counter() - start) * 1e3}
    return result
