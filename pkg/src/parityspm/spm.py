"""Classic Small Progress Measures and the two-pass strategy baseline."""

from __future__ import annotations

import time
from typing import Optional

from .core import ParityGame, Player, dualize, subgame
from .lifting import LiftingPolicy, Worklist, lift_to_fixpoint
from .measures import TOP, MeasureDomain, MeasureTable
from .result import SolveResult, Strategy


def extract_even_strategy(game: ParityGame, rho) -> Strategy:
    """Map each Even vertex with a non-top measure to a successor of
    minimal measure, lowest id on ties."""
    table = rho.rho if isinstance(rho, MeasureTable) else rho
    sigma = {}
    for v in game.vertices:
        if game.owner[v] != Player.EVEN or table[v] is TOP:
            continue
        best = None
        for w in game.succ[v]:
            if best is None or table[w] < table[best]:
                best = w
        sigma[v] = best
    return sigma


def solve_spm(game: ParityGame, policy: Optional[LiftingPolicy] = None) -> SolveResult:
    """Compute the least game parity progress measure by lifting.

    Even wins exactly the vertices whose measure is not top.  Only the
    Even strategy is available from the measure; ``strategy_odd`` is
    left empty.
    """
    policy = policy or Worklist()
    start = time.perf_counter()
    dom = MeasureDomain.for_game(game)
    table = MeasureTable(dom, game.n)
    lift_to_fixpoint(game, table, policy)
    bound = game.n * dom.size
    assert table.lifts <= bound, f"{table.lifts} lifts exceed |V|*|M| = {bound}"
    tops = table.top_set()
    result = SolveResult(
        win_even=frozenset(game.vertices) - tops,
        win_odd=tops,
        strategy_even=extract_even_strategy(game, table),
        measures=table,
        algorithm="spm",
        policy=str(policy),
    )
    result.stats = {"lifts": table.lifts, "progs": table.progs, "attractors": 0,
                    "wall_ms": (time.perf_counter() - start) * 1e3}
    return result


def solve_two_pass(game: ParityGame, policy: Optional[LiftingPolicy] = None) -> SolveResult:
    """Classic SPM for the partition, then SPM on the dual of Odd's
    region to obtain Odd's strategy."""
    policy = policy or Worklist()
    start = time.perf_counter()
    first = solve_spm(game, policy)
    sigma_odd = {}
    second_lifts = second_progs = 0
    if first.win_odd:
        sub = subgame(game, first.win_odd)
        dual = dualize(sub)
        second = solve_spm(dual, policy)
        assert not second.win_odd, "dual of Odd's region must be won by Even"
        for v, w in second.strategy_even.items():
            sigma_odd[sub.origin[v]] = sub.origin[w]
        second_lifts = second.stats["lifts"]
        second_progs = second.stats["progs"]
    result = SolveResult(
        win_even=first.win_even,
        win_odd=first.win_odd,
        strategy_even=first.strategy_even,
        strategy_odd=sigma_odd,
        measures=first.measures,
        algorithm="twopass",
        policy=str(policy),
    )
    result.stats = {
        "lifts": first.stats["lifts"] + second_lifts,
        "progs": first.stats["progs"] + second_progs,
        "attractors": 0,
        "first_pass_lifts": first.stats["lifts"],
        "second_pass_lifts": second_lifts,
        "wall_ms": (time.perf_counter() - start) * 1e3,
    }
    return result
