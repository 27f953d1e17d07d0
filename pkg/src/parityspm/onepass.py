"""Small Progress Measures deriving winning strategies for both players in one pass.

Lifting runs as usual until the first vertex ``v`` of the current
context reaches top.  At that point ``v`` (priority ``k``) lies in an
Odd dominion whose priorities are all ``>= k``; Odd's move at ``v`` is a
successor that is maximal under the comparison truncated at ``k``, and
the guarded attractor of ``v`` is resolved with attracting moves.  The
search for the rest of that dominion is then confined to the vertices
Even cannot pull below priority ``k``, solved recursively, and the
resolved dominion plus its Odd attractor is removed from the context.
"""

from __future__ import annotations

import sys
import time
from typing import Callable, Optional

from .attractors import attractor, guarded_attractor
from .core import ParityGame, Player, is_total_within
from .lifting import LiftingPolicy, Worklist, lift_to_fixpoint
from .measures import TOP, MeasureDomain, MeasureTable, saturated_through, truncate
from .result import SolveResult
from .spm import extract_even_strategy


class OnePassState:
    def __init__(self, game: ParityGame, policy: LiftingPolicy,
                 trace: Optional[Callable[[str], None]] = None):
        self.game = game
        self.policy = policy
        self.table = MeasureTable(MeasureDomain.for_game(game), game.n)
        self.sigma_odd = {}
        self.attractors = 0
        self.trace = trace

    def _log(self, msg, *sets):
        if self.trace is None:
            return
        label = self.game.label
        parts = ["{" + ",".join(label(v) for v in sorted(s)) + "}" for s in sets]
        self.trace(msg.format(*parts) if parts else msg)

    def _max_successor(self, v, k, context):
        rho = self.table.rho
        best = None
        value = lambda u: self.table.before_top if u == v else rho[u]
        for u in self.game.succ[v]:
            if u not in context:
                continue
            if best is None or truncate(value(u), k) > truncate(value(best), k):
                best = u
        return best

    def spm_within(self, context):
        game, rho, dom = self.game, self.table.rho, self.table.dom
        W = set(context)
        while W:
            assert all(rho[w] is not TOP for w in W), "context entered with a top vertex"
            assert is_total_within(game, W), "context has a dead end"
            v = lift_to_fixpoint(game, self.table, self.policy, W, halt_on_top=True)
            if v is None:
                self._log("fixpoint on {0}", W)
                break
            tops = [w for w in W if rho[w] is TOP]
            assert tops == [v], f"expected unique top at {v}, found {tops}"
            k = game.priority[v]
            assert k % 2 == 1, f"first top at even priority {k}"
            seen = [self.table.before_top if u == v else rho[u]
                    for u in game.succ[v] if u in W]
            assert any(saturated_through(dom, m, k) for m in seen), \
                f"no successor of {v} saturated through position {k}"
            self._log(f"top {game.label(v)} (k={k})")
            if game.owner[v] == Player.ODD:
                u = self._max_successor(v, k, W)
                self.sigma_odd[v] = u
                self._log(f"sigma {game.label(v)} -> {game.label(u)}")

            res = guarded_attractor(game, k, [v], W)
            self.attractors += 1
            for w in res.order[1:]:
                rho[w] = TOP
                if game.owner[w] == Player.ODD:
                    self.sigma_odd[w] = res.strategy[w]
                    self._log(f"sigma {game.label(w)} -> {game.label(res.strategy[w])}")
            self._log("RES {0}", res.set)

            low = [w for w in W if game.priority[w] < k]
            irr = attractor(game, Player.EVEN, low, W)
            self.attractors += 1
            assert not (irr.set & res.set), "IRR meets RES"
            rem = W - res.set - irr.set
            self._log("IRR {0}", irr.set)
            self._log("REM {0}", rem)
            self.spm_within(rem)

            dominion = set(res.set) | {w for w in rem if rho[w] is TOP}
            assert all(game.priority[w] >= k for w in dominion), "dominion below k"
            self._log("DOM {0}", dominion)
            attr = attractor(game, Player.ODD, dominion, W)
            self.attractors += 1
            for w in attr.order:
                if w in dominion:
                    continue
                rho[w] = TOP
                if game.owner[w] == Player.ODD:
                    self.sigma_odd[w] = attr.strategy[w]
                    self._log(f"sigma {game.label(w)} -> {game.label(attr.strategy[w])}")
            self._log("A {0}", attr.set)
            assert attr.set, "outer iteration resolved nothing"
            W -= attr.set


def solve_onepass(game: ParityGame, policy: Optional[LiftingPolicy] = None,
                  trace: Optional[Callable[[str], None]] = None) -> SolveResult:
    """Solve ``game`` and derive positional winning strategies for both players.

    ``policy`` is re-run from scratch in every context, so a ``Prefer``
    list applies to whichever preferred vertices remain in the context.
    """
    policy = policy or Worklist()
    start = time.perf_counter()
    state = OnePassState(game, policy, trace)
    limit = sys.getrecursionlimit()
    if game.n + 100 > limit:
        sys.setrecursionlimit(game.n + 100)
    state.spm_within(frozenset(game.vertices))
    table = state.table
    tops = table.top_set()
    result = SolveResult(
        win_even=frozenset(game.vertices) - tops,
        win_odd=tops,
        strategy_even=extract_even_strategy(game, table),
        strategy_odd=state.sigma_odd,
        measures=table,
        algorithm="onepass",
        policy=str(policy),
    )
    result.stats = {"lifts": table.lifts, "progs": table.progs,
                    "attractors": state.attractors,
                    "wall_ms": (time.perf_counter() - start) * 1e3}
    return result
