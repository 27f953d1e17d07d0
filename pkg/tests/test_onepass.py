from conftest import named, random_games
from parityspm import (TOP, Prefer, RoundRobin, SeededRandom, build_game, gen_figure2,
                       parse_policy, solve_onepass, solve_spm, solve_zielonka, verify_partition)


def test_figure1(fig1):
    r = solve_onepass(fig1)
    assert r.win_even == named(fig1, "v1", "v2", "v3")
    assert verify_partition(fig1, r) == []
    assert r.strategy_even == {1: 0, 2: 1}
    assert r.stats["attractors"] > 0


def test_figure4_accepted(fig4):
    r = solve_onepass(fig4)
    assert r.win_odd == frozenset(fig4.vertices)
    assert verify_partition(fig4, r) == []
    assert r.strategy_odd[fig4.vertex_id("v2")] == fig4.vertex_id("v3")


FIG6_TRACE = """\
top v3 (k=3)
sigma v3 -> v7
sigma v2 -> v3
RES {v2,v3}
IRR {v1,v4}
REM {v5,v6,v7,v8,v9}
top v7 (k=5)
sigma v7 -> v8
RES {v7,v8}
IRR {v5,v6,v9}
REM {}
DOM {v7,v8}
A {v7,v8}
fixpoint on {v5,v6,v9}
DOM {v2,v3,v7,v8}
sigma v9 -> v1
A {v1,v2,v3,v7,v8,v9}
top v4 (k=1)
sigma v5 -> v4
RES {v4,v5,v6}
IRR {}
REM {}
DOM {v4,v5,v6}
A {v4,v5,v6}"""


def test_figure6_trace_golden(fig6):
    lines = []
    solve_onepass(fig6, parse_policy("prefer:v2,v3,v7,v8", fig6), lines.append)
    assert "\n".join(lines) == FIG6_TRACE


def test_no_odd_vertex_breaks_immediately():
    g = build_game([0, 1], [0, 2], [[1], [0]])
    lines = []
    r = solve_onepass(g, trace=lines.append)
    assert r.win_odd == frozenset() and r.strategy_odd == {}
    assert lines == ["fixpoint on {0,1}"]


def test_figure2_cheap():
    for N in range(2, 10):
        g = gen_figure2(N)
        r = solve_onepass(g)
        assert r.win_odd == frozenset(g.vertices)
        assert verify_partition(g, r) == []
        assert r.stats["lifts"] == 3 * N


def test_agrees_with_zielonka_under_several_policies():
    policies = [None, RoundRobin(), SeededRandom(3), Prefer((2, 0))]
    for seed, g in random_games(150, 8, 5):
        expected = solve_zielonka(g).win_even
        for p in policies:
            r = solve_onepass(g, p)
            assert r.win_even == expected, (seed, p)
            assert verify_partition(g, r) == [], (seed, p)


def test_measures_match_least_measure_on_even_region():
    for seed, g in random_games(150, 8, 5):
        one, spm = solve_onepass(g), solve_spm(g)
        for v in one.win_even:
            assert one.measures[v] == spm.measures[v], seed
        assert all(one.measures[v] is TOP for v in one.win_odd)
