"""Named fixture games (Figures 1, 2, 4 and 6) and seeded random games."""

from __future__ import annotations

import random

from .core import ParityGame, Player, build_game

E, O = Player.EVEN, Player.ODD


def _named(rows):
    """Build a game from ``[(label, owner, priority, [successor labels])]``."""
    names = [row[0] for row in rows]
    index = {name: i for i, name in enumerate(names)}
    return build_game([row[1] for row in rows], [row[2] for row in rows],
                      [[index[s] for s in row[3]] for row in rows], names)


def gen_figure1() -> ParityGame:
    """Six vertices, priorities 0..3; Even wins v1..v3, Odd wins v4..v6."""
    return _named([
        ("v1", O, 0, ["v1", "v2"]),
        ("v2", E, 3, ["v3", "v1"]),
        ("v3", E, 3, ["v4", "v2"]),
        ("v4", O, 2, ["v5", "v6"]),
        ("v5", O, 0, ["v6"]),
        ("v6", O, 1, ["v4"]),
    ])


def figure2_priorities(N: int) -> list:
    if N < 2:
        raise ValueError("the family starts at N = 2")
    return [0, 2, 1] + list(range(3, 2 * N + 1))


def gen_figure2(N: int) -> ParityGame:
    """Odd-owned chain with priorities ``0, 2, 1, 3, 4, ..., 2N``.

    The figure elides the middle of the chain; it is completed with
    consecutive priorities.  The last vertex loops on itself and jumps
    back to the priority-2 vertex, so the cycle through priority 1 is
    available to Odd everywhere.
    """
    prios = figure2_priorities(N)
    n = len(prios)
    succ = [[v + 1] for v in range(n - 1)] + [[1, n - 1]]
    return build_game([O] * n, prios, succ)


def gen_figure4() -> ParityGame:
    """Odd paradise where following the maximal successor measure fails."""
    return _named([
        ("v1", E, 1, ["v2"]),
        ("v2", O, 2, ["v3", "v4"]),
        ("v3", E, 1, ["v1"]),
        ("v4", E, 3, ["v2"]),
    ])


def gen_figure6() -> ParityGame:
    """Nine-vertex Odd paradise used for the one-pass walkthrough."""
    return _named([
        ("v1", E, 0, ["v3"]),
        ("v2", O, 4, ["v3", "v8"]),
        ("v3", O, 3, ["v7"]),
        ("v4", E, 1, ["v3", "v4"]),
        ("v5", O, 4, ["v4", "v6"]),
        ("v6", E, 5, ["v5", "v7"]),
        ("v7", O, 5, ["v6", "v8", "v9"]),
        ("v8", E, 6, ["v2", "v7"]),
        ("v9", O, 4, ["v1", "v9"]),
    ])


def gen_random(n: int, d: int, min_deg: int = 1, max_deg: int = 2,
               seed: int = 0) -> ParityGame:
    """Uniform owners, priorities in ``0..d-1`` and out-degrees in
    ``min_deg..max_deg``; successors drawn without replacement."""
    if n < 1 or d < 1 or not 1 <= min_deg <= max_deg <= n:
        raise ValueError(f"bad parameters n={n} d={d} deg={min_deg}..{max_deg}")
    rng = random.Random(seed)
    owners = [Player(rng.randrange(2)) for _ in range(n)]
    prios = [rng.randrange(d) for _ in range(n)]
    succ = [rng.sample(range(n), rng.randint(min_deg, max_deg)) for _ in range(n)]
    return build_game(owners, prios, succ)
