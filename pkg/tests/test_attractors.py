import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import named
from parityspm import Player, attractor, gen_random, guarded_attractor, subgame
from parityspm.errors import BaseNotInContext, BaseViolatesGuard


def test_even_attractor_figure1(fig1):
    a = attractor(fig1, Player.EVEN, named(fig1, "v2"))
    assert a.set == named(fig1, "v2", "v3")
    assert a.strategy == {2: 1}


def test_odd_attractor_figure1(fig1):
    a = attractor(fig1, Player.ODD, named(fig1, "v4"))
    assert a.set == named(fig1, "v4", "v5", "v6")


def test_base_equals_context(fig1):
    a = attractor(fig1, Player.EVEN, fig1.vertices, fig1.vertices)
    assert a.set == frozenset(fig1.vertices) and a.strategy == {}


def test_base_outside_context(fig1):
    with pytest.raises(BaseNotInContext):
        attractor(fig1, Player.ODD, [0], [1, 2])


def test_guarded_figure1(fig1):
    # v5 has priority 0 and stays outside the k=1 guard
    a = guarded_attractor(fig1, 1, named(fig1, "v6"))
    assert a.set == named(fig1, "v4", "v6")
    assert a.strategy == {3: 5}
    assert guarded_attractor(fig1, 0, named(fig1, "v6")).set == named(fig1, "v4", "v5", "v6")


def test_guarded_figure6(fig6):
    a = guarded_attractor(fig6, 3, named(fig6, "v3"))
    assert a.set == named(fig6, "v2", "v3")
    assert a.strategy == {fig6.vertex_id("v2"): fig6.vertex_id("v3")}


def test_guarded_vacuous(fig1):
    assert guarded_attractor(fig1, 0, fig1.vertices).set == frozenset(fig1.vertices)


def test_guarded_rejects_low_base(fig1):
    with pytest.raises(BaseViolatesGuard):
        guarded_attractor(fig1, 1, named(fig1, "v5"))


def _forces(game, player, base, context, region, strategy, steps):
    """From every region vertex, all plays consistent with ``strategy``
    inside ``context`` hit ``base`` within ``steps`` moves."""
    hit = set(base)
    for _ in range(steps):
        new = set(hit)
        for v in region:
            if v in hit:
                continue
            if game.owner[v] == player:
                if strategy.get(v) in hit:
                    new.add(v)
            elif all(w in hit for w in game.succ[v] if w in context):
                new.add(v)
        hit = new
    return region <= hit


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 9), mask=st.integers(1, 2**9 - 1),
       player=st.sampled_from(list(Player)))
def test_attractor_sound_and_complement_total(seed, n, mask, player):
    g = gen_random(n, 4, 1, min(3, n), seed=seed)
    base = [v for v in g.vertices if mask >> v & 1] or [0]
    a = attractor(g, player, base)
    assert _forces(g, player, set(base), set(g.vertices), a.set, a.strategy, len(a.set))
    for v, w in a.strategy.items():
        assert w in g.succ[v] and w in a.set
    rest = set(g.vertices) - a.set
    if rest:
        subgame(g, rest)  # raises if the complement has a dead end


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 9), k=st.integers(0, 4))
def test_guarded_sound(seed, n, k):
    g = gen_random(n, 5, 1, min(3, n), seed=seed)
    base = [v for v in g.vertices if g.priority[v] >= k][:1]
    if not base:
        return
    a = guarded_attractor(g, k, base)
    assert all(g.priority[v] >= k for v in a.set)
    assert _forces(g, Player.ODD, set(base), set(g.vertices), a.set, a.strategy, len(a.set))
