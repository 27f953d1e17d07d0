from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional

from .measures import MeasureTable

Strategy = Dict[int, int]


@dataclass
class SolveResult:
    """Winning partition, positional strategies and bookkeeping of a solve."""

    win_even: FrozenSet[int]
    win_odd: FrozenSet[int]
    strategy_even: Strategy = field(default_factory=dict)
    strategy_odd: Strategy = field(default_factory=dict)
    measures: Optional[MeasureTable] = None
    stats: dict = field(default_factory=dict)
    algorithm: str = ""
    policy: str = ""

    def winner(self, v: int) -> int:
        return 0 if v in self.win_even else 1

    def region(self, player) -> FrozenSet[int]:
        return self.win_even if int(player) == 0 else self.win_odd

    def strategy(self, player) -> Strategy:
        return self.strategy_even if int(player) == 0 else self.strategy_odd
