"""Progress-measure domain: bounded tuples plus top, Prog and Lift.

A measure is either :data:`TOP` or a tuple holding only the odd
positions ``1, 3, 5, ...`` of the d-tuple (even positions are always
zero).  Storage index ``j`` corresponds to tuple position ``2*j + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Tuple, Union

from .core import ParityGame, Player
from .errors import (DomainMismatch, EvenPosition, NotASuccessor,
                     PositionOutOfRange, TopMeasure)


class Top:
    """The greatest measure.  Compares above every tuple and equal to itself."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "T"

    def __reduce__(self):
        return (Top, ())

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("Top")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


TOP = Top()

Measure = Union[Tuple[int, ...], Top]


def is_top(m) -> bool:
    return m is TOP


@dataclass(frozen=True)
class MeasureDomain:
    d: int
    caps: Tuple[int, ...]

    @classmethod
    def for_game(cls, game: ParityGame) -> "MeasureDomain":
        counts = game.counts
        return cls(game.d, tuple(counts[i] for i in range(1, game.d, 2)))

    @property
    def width(self) -> int:
        return len(self.caps)

    @property
    def zero(self) -> Tuple[int, ...]:
        return (0,) * len(self.caps)

    @property
    def size(self) -> int:
        """|M| including top."""
        return prod(c + 1 for c in self.caps) + 1

    def contains(self, m) -> bool:
        if m is TOP:
            return True
        return (len(m) == len(self.caps)
                and all(0 <= x <= c for x, c in zip(m, self.caps)))


def _check_pair(a, b):
    if a is not TOP and b is not TOP and len(a) != len(b):
        raise DomainMismatch(f"measures of different widths: {a!r}, {b!r}")


def _sign(a, b) -> int:
    return (a > b) - (a < b)


def cmp_lex(a: Measure, b: Measure) -> int:
    """Three-way lexicographic comparison; top is the unique maximum."""
    _check_pair(a, b)
    return _sign(a, b)


def prefix_len(i: int) -> int:
    """Number of odd positions ``<= i``."""
    return (i + 1) // 2


def cmp_upto(a: Measure, b: Measure, i: int, d: int = None) -> int:
    """Compare the d-tuple prefixes through position ``i``."""
    _check_pair(a, b)
    if i < 0 or (d is not None and i >= d):
        raise PositionOutOfRange(f"position {i} outside 0..{d}")
    if a is TOP or b is TOP:
        return _sign(a, b)
    k = prefix_len(i)
    return _sign(a[:k], b[:k])


def truncate(m: Measure, i: int) -> Measure:
    """Zero every position beyond ``i`` (top stays top)."""
    if m is TOP:
        return TOP
    k = prefix_len(i)
    return m[:k] + (0,) * (len(m) - k)


def is_saturated(dom: MeasureDomain, m: Measure, i: int) -> bool:
    if m is TOP:
        raise TopMeasure("top has no positions")
    if i % 2 == 0:
        raise EvenPosition(f"position {i} is even")
    j = i // 2
    if not 0 <= j < dom.width:
        raise PositionOutOfRange(f"position {i} outside 0..{dom.d - 1}")
    return m[j] == dom.caps[j]


def saturated_through(dom: MeasureDomain, m: Measure, k: int) -> bool:
    """True when every odd position ``<= k`` holds its cap."""
    if m is TOP:
        return False
    return all(m[j] == dom.caps[j] for j in range(prefix_len(k)))


def prog_value(dom: MeasureDomain, m: Measure, p: int) -> Measure:
    """Least measure ``>=_p m`` (p even) or ``>_p m`` (p odd)."""
    if m is TOP:
        return TOP
    k = prefix_len(p)
    if p % 2 == 0:
        return m[:k] + (0,) * (len(m) - k)
    head = list(m[:k])
    caps = dom.caps
    j = k - 1
    while j >= 0:
        if head[j] < caps[j]:
            head[j] += 1
            return tuple(head) + (0,) * (len(m) - k)
        head[j] = 0
        j -= 1
    return TOP


class MeasureTable:
    """Assignment ``rho`` of measures to vertices, with counters."""

    def __init__(self, dom: MeasureDomain, n: int):
        self.dom = dom
        self.rho = [dom.zero] * n
        self.lifts = 0
        self.progs = 0
        self.before_top = None

    def __getitem__(self, v):
        return self.rho[v]

    def __setitem__(self, v, m):
        self.rho[v] = m

    def __len__(self):
        return len(self.rho)

    def __iter__(self):
        return iter(self.rho)

    def top_set(self) -> frozenset:
        return frozenset(v for v, m in enumerate(self.rho) if m is TOP)

    def copy(self) -> "MeasureTable":
        t = MeasureTable(self.dom, 0)
        t.rho = list(self.rho)
        t.lifts, t.progs = self.lifts, self.progs
        return t


def prog(dom: MeasureDomain, rho: MeasureTable, v: int, w: int,
         game: ParityGame) -> Measure:
    if w not in game.succ[v]:
        raise NotASuccessor(f"{w} is not a successor of {v}")
    if isinstance(rho, MeasureTable):
        rho.progs += 1
    return prog_value(dom, rho[w], game.priority[v])


def lift_value(dom: MeasureDomain, rho, v: int, game: ParityGame,
               within=None) -> Measure:
    """Candidate value of ``rho(v)`` after one Lift.

    With ``within`` given, only successors inside that set count
    (lifting on the induced subgame).
    """
    p = game.priority[v]
    succ = game.succ[v]
    if within is not None:
        succ = [w for w in succ if w in within]
    table = rho.rho if isinstance(rho, MeasureTable) else rho
    vals = [prog_value(dom, table[w], p) for w in succ]
    if isinstance(rho, MeasureTable):
        rho.progs += len(vals)
    best = min(vals) if game.owner[v] == Player.EVEN else max(vals)
    cur = table[v]
    return best if best > cur else cur


def lift(dom: MeasureDomain, rho, v: int, game: ParityGame, within=None) -> Measure:
    return lift_value(dom, rho, v, game, within)


def render(m: Measure, d: int) -> str:
    """``T`` or ``(a0,a1,...,a_{d-1})`` with even positions shown as 0."""
    if m is TOP:
        return "T"
    full = [0] * d
    for j, x in enumerate(m):
        full[2 * j + 1] = x
    return "(" + ",".join(map(str, full)) + ")"


def parse_measure(text: str) -> Measure:
    text = text.strip()
    if text == "T":
        return TOP
    body = text.strip("()")
    full = [int(x) for x in body.split(",")] if body else []
    return tuple(full[1::2])


def from_full(full) -> Tuple[int, ...]:
    """Convert an explicit d-tuple (even positions zero) to storage form."""
    if any(full[i] for i in range(0, len(full), 2)):
        raise ValueError(f"non-zero even position in {full!r}")
    return tuple(full[1::2])
