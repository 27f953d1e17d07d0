import pytest

from parityspm import gen_figure1, gen_figure4, gen_figure6, gen_random


@pytest.fixture
def fig1():
    return gen_figure1()


@pytest.fixture
def fig4():
    return gen_figure4()


@pytest.fixture
def fig6():
    return gen_figure6()


def named(game, *names):
    return frozenset(game.ids(names))


def random_games(count, n, d, max_deg=3, base=0):
    """Seeded random games with sizes cycling through 1..n."""
    for seed in range(base, base + count):
        size = 1 + seed % n
        yield seed, gen_random(size, d, 1, min(max_deg, size), seed=seed)
