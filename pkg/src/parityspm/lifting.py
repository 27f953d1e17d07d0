"""Lifting policies and the fixpoint driver shared by both SPM variants.

A policy decides which vertex to try next.  The driver supplies a
``step(v)`` callback that returns ``UNCHANGED``, ``CHANGED`` or
``HALT`` (the vertex just became top and the caller asked to stop
there).  Every policy below keeps trying until a full pass finds no
liftable vertex, which makes them fair.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .core import ParityGame
from .measures import TOP, MeasureTable, lift_value

UNCHANGED, CHANGED, HALT = 0, 1, 2


class LiftingPolicy:
    name = "policy"

    def drive(self, vertices: Sequence[int], step, pred) -> Optional[int]:
        raise NotImplementedError

    def __str__(self):
        return self.name


class RoundRobin(LiftingPolicy):
    """Sweep all vertices in id order until a sweep changes nothing."""

    name = "roundrobin"

    def drive(self, vertices, step, pred):
        changed = True
        while changed:
            changed = False
            for v in vertices:
                r = step(v)
                if r == HALT:
                    return v
                changed |= r == CHANGED
        return None


class InputOrder(LiftingPolicy):
    """Always lift the lowest-id liftable vertex."""

    name = "input"

    def drive(self, vertices, step, pred):
        while True:
            for v in vertices:
                r = step(v)
                if r == HALT:
                    return v
                if r == CHANGED:
                    break
            else:
                return None


@dataclass
class SeededRandom(LiftingPolicy):
    """Sweeps in a freshly shuffled order, reproducible from ``seed``."""

    seed: int = 0

    @property
    def name(self):
        return f"random:{self.seed}"

    def drive(self, vertices, step, pred):
        rng = random.Random(self.seed)
        order = list(vertices)
        changed = True
        while changed:
            changed = False
            rng.shuffle(order)
            for v in order:
                r = step(v)
                if r == HALT:
                    return v
                changed |= r == CHANGED
        return None


class Worklist(LiftingPolicy):
    """FIFO queue; a vertex whose value changes re-queues its predecessors."""

    name = "worklist"

    def drive(self, vertices, step, pred):
        members = set(vertices)
        queue = deque(vertices)
        queued = set(vertices)
        while queue:
            v = queue.popleft()
            queued.discard(v)
            r = step(v)
            if r == HALT:
                return v
            if r == CHANGED:
                for u in pred[v]:
                    if u in members and u not in queued:
                        queued.add(u)
                        queue.append(u)
        return None


@dataclass
class Prefer(LiftingPolicy):
    """Round-robin over the preferred vertices until they are stable, then
    lift the lowest-id liftable other vertex and go back to the preferred
    ones.  Preferred vertices outside the current context are ignored."""

    preferred: Tuple[int, ...] = ()

    @property
    def name(self):
        return "prefer:" + ",".join(map(str, self.preferred))

    def drive(self, vertices, step, pred):
        members = set(vertices)
        first = [v for v in self.preferred if v in members]
        chosen = set(first)
        rest = [v for v in vertices if v not in chosen]
        while True:
            changed = True
            while changed:
                changed = False
                for v in first:
                    r = step(v)
                    if r == HALT:
                        return v
                    changed |= r == CHANGED
            for v in rest:
                r = step(v)
                if r == HALT:
                    return v
                if r == CHANGED:
                    break
            else:
                return None


def parse_policy(text: str, game: Optional[ParityGame] = None) -> LiftingPolicy:
    """``roundrobin|worklist|input|random:<seed>|prefer:<id-list>``.

    Entries of a prefer list may be vertex labels when ``game`` is given.
    """
    text = text.strip()
    if text == "roundrobin":
        return RoundRobin()
    if text == "worklist":
        return Worklist()
    if text == "input":
        return InputOrder()
    if text.startswith("random:"):
        return SeededRandom(int(text.split(":", 1)[1]))
    if text.startswith("prefer:"):
        items = [x for x in text.split(":", 1)[1].split(",") if x]
        if game is not None:
            ids = tuple(game.vertex_id(x) for x in items)
        else:
            ids = tuple(int(x) for x in items)
        return Prefer(ids)
    raise ValueError(f"unknown lifting policy {text!r}")


def lift_to_fixpoint(game: ParityGame, table: MeasureTable, policy: LiftingPolicy,
                     context: Optional[Iterable[int]] = None,
                     halt_on_top: bool = False) -> Optional[int]:
    """Apply Lift within ``context`` until nothing changes.

    Successors outside the context are ignored.  With ``halt_on_top``
    the run stops right after the first lift that produces top and that
    vertex is returned (its previous value is kept in
    ``table.before_top``); otherwise returns ``None``.
    """
    dom = table.dom
    rho = table.rho
    within = None if context is None else frozenset(context)
    vertices = sorted(within) if within is not None else list(game.vertices)

    def step(v):
        new = lift_value(dom, table, v, game, within)
        if new is rho[v] or new == rho[v]:
            return UNCHANGED
        old, rho[v] = rho[v], new
        table.lifts += 1
        if halt_on_top and new is TOP:
            table.before_top = old
            return HALT
        return CHANGED

    return policy.drive(vertices, step, game.pred)


def apply_lifts(game: ParityGame, table: MeasureTable, order: Iterable[int]) -> MeasureTable:
    """Apply Lift at the given vertices in sequence (no fixpoint)."""
    for v in order:
        new = lift_value(table.dom, table, v, game)
        if new != table[v]:
            table[v] = new
            table.lifts += 1
    return table
