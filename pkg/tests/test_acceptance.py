"""Acceptance criteria 1-9.  Each test prints one PASS/FAIL line, then
asserts the same condition so pytest reports it too."""

import time

import pytest

import test_attractors
import test_formats
import test_measures
import test_spm
from parityspm import (TOP, Player, gen_figure1, gen_figure2, gen_figure4, gen_figure6, gen_random,
                       parse_policy, solve_bruteforce, solve_onepass, solve_spm, solve_two_pass,
                       solve_zielonka, verify_partition, verify_strategy)
from parityspm.lifting import apply_lifts
from parityspm.measures import MeasureDomain, MeasureTable, from_full, render
from parityspm.playvalue import optimal_values, word_value

FAST_MS = 1.0


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")
        return ok
    return emit


def best_ms(fn, *args, repeat=30):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best * 1e3


def criterion5_games():
    # sizes 2..6, priorities 0..d-1 with d in 2..4
    return [gen_random(2 + s % 5, 2 + s % 3, 1, min(3, 2 + s % 5), seed=s) for s in range(200)]


def criterion6_games():
    # sizes 2..8, d in 2..4
    return [gen_random(2 + s % 7, 2 + s % 3, 1, min(3, 2 + s % 7), seed=10_000 + s) for s in range(1000)]


def test_criterion_1_figure1(report):
    g = gen_figure1()
    solvers = [solve_spm, solve_onepass, solve_zielonka, solve_bruteforce]
    expected = (frozenset(g.ids(["v1", "v2", "v3"])), frozenset(g.ids(["v4", "v5", "v6"])))
    partitions_ok = all((s(g).win_even, s(g).win_odd) == expected for s in solvers)
    one = solve_onepass(g)
    strategies_ok = (verify_strategy(g, Player.ODD, one.win_odd, one.strategy_odd) is None
                     and verify_strategy(g, Player.EVEN, one.win_even, one.strategy_even) is None)
    v1, v2, v3 = g.ids(["v1", "v2", "v3"])
    extract_ok = solve_spm(g).strategy_even.get(v2) == v1 and solve_spm(g).strategy_even.get(v3) == v2
    times = {s.__name__: best_ms(s, g) for s in solvers}
    fast = all(t < FAST_MS for t in times.values())
    ok = partitions_ok and strategies_ok and extract_ok and fast
    report(1, ok, f"partition={partitions_ok} strategies={strategies_ok} "
                  f"sigma_even={extract_ok} best_ms=" +
                  ",".join(f"{k}:{v:.3f}" for k, v in times.items()))
    assert ok


def test_criterion_2_figure4(report):
    g = gen_figure4()
    t = MeasureTable(MeasureDomain.for_game(g), g.n)
    apply_lifts(g, t, g.ids(["v1", "v3", "v2", "v4", "v1"]))
    measures = [render(m, g.d) for m in t]
    measures_ok = measures == ["T", "(0,2,0,0)", "(0,2,0,0)", "(0,2,0,1)"]
    v2, v3, v4 = g.ids(["v2", "v3", "v4"])
    everything = frozenset(g.vertices)
    literal = verify_strategy(g, Player.ODD, everything, {v2: v3})
    literal_rejected = literal is not None
    # the move a max-measure rule would pick at v2
    greedy = max(g.succ[v2], key=lambda w: t[w])
    greedy_rejected = verify_strategy(g, Player.ODD, everything, {v2: greedy}) is not None
    onepass_ok = verify_partition(g, solve_onepass(g)) == []
    ms = best_ms(solve_onepass, g)
    ok = measures_ok and literal_rejected and onepass_ok and ms < FAST_MS
    report(2, ok, f"measures={measures} sigma(v2)=v3 rejected={literal_rejected} "
                  f"max-measure move=v{greedy + 1} rejected={greedy_rejected} "
                  f"onepass accepted={onepass_ok} best_ms={ms:.3f}")
    assert greedy == v4 and greedy_rejected
    assert measures_ok and onepass_ok and ms < FAST_MS
    assert literal_rejected, "sigma(v2)=v3 forms the cycle v1 v2 v3 (min priority 1) and is winning for Odd"


def test_criterion_3_figure6(report):
    g = gen_figure6()
    r = solve_onepass(g, parse_policy("prefer:v2,v3,v7,v8", g))
    got = {g.label(v): g.label(w) for v, w in r.strategy_odd.items()}
    want = {"v3": "v7", "v2": "v3", "v7": "v8", "v9": "v1", "v5": "v4"}
    ok = got == want and r.win_odd == frozenset(g.vertices) and verify_partition(g, r) == []
    report(3, ok, f"sigma_odd={got} odd_region_size={len(r.win_odd)}")
    assert ok


def test_criterion_4_play_value(report):
    got = word_value([4, 5, 3, 4, 5, 3, 2, 1, 3], [4, 7], 8)
    ok = got == from_full((0, 1, 0, 2, 0, 0, 0, 0))
    report(4, ok, f"value={render(got, 8)}")
    assert ok


def test_criterion_5_minmax_equals_least_measure(report):
    start = time.perf_counter()
    games = criterion5_games() + [gen_figure1()]
    mismatches = []
    for i, g in enumerate(games):
        spm = solve_spm(g).measures
        best = optimal_values(g)
        mismatches += [(i, v) for v in g.vertices if best[v] != spm[v]]
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60
    report(5, ok, f"games={len(games)} mismatches={len(mismatches)} seconds={elapsed:.2f}")
    assert ok, mismatches[:5]


def test_criterion_6_oracle_agreement(report):
    start = time.perf_counter()
    disagreements, bad_strategies = [], []
    for i, g in enumerate(criterion6_games()):
        spm, one, zie, brute = (solve_spm(g), solve_onepass(g), solve_zielonka(g),
                                solve_bruteforce(g))
        if len({(r.win_even, r.win_odd) for r in (spm, one, zie, brute)}) != 1:
            disagreements.append(i)
        if (verify_partition(g, spm, (Player.EVEN,)) or verify_partition(g, one)
                or verify_partition(g, zie)):
            bad_strategies.append(i)
    elapsed = time.perf_counter() - start
    ok = not disagreements and not bad_strategies and elapsed < 120
    report(6, ok, f"games=1000 disagreements={len(disagreements)} "
                  f"failed_certificates={len(bad_strategies)} seconds={elapsed:.2f}")
    assert ok


def test_criterion_7_onepass_measures(report):
    games = ([gen_figure1(), gen_figure4(), gen_figure6()]
             + criterion5_games() + criterion6_games())
    bad = []
    for i, g in enumerate(games):
        one, spm = solve_onepass(g), solve_spm(g)
        if any(one.measures[v] != spm.measures[v] for v in one.win_even):
            bad.append(i)
        if any(one.measures[v] is not TOP for v in spm.win_odd):
            bad.append(i)
    ok = not bad
    report(7, ok, f"games={len(games)} mismatching={len(bad)}")
    assert ok


def test_criterion_8_figure2_asymmetry(report):
    dual = {N: solve_two_pass(gen_figure2(N)).stats["second_pass_lifts"] for N in range(3, 10)}
    one = {N: solve_onepass(gen_figure2(N)).stats["lifts"] for N in range(4, 10)}
    ratios = {N: dual[N] / dual[N - 1] for N in range(4, 10)}
    doubling = all(r >= 2 for r in ratios.values())
    c = one[4] / 4 ** 3
    cubic = all(one[N] <= c * N ** 3 for N in one)
    for N in range(4, 10):
        g = gen_figure2(N)
        assert solve_spm(g).stats["lifts"] <= g.n * MeasureDomain.for_game(g).size
    ok = doubling and cubic
    report(8, ok, "dual lifts=" + ",".join(f"{N}:{dual[N]}" for N in range(4, 10)) +
                  " ratios=" + ",".join(f"{r:.3f}" for r in ratios.values()) +
                  f" onepass lifts={list(one.values())} cubic_bound={cubic}")
    assert cubic
    assert all(r > 1.9 for r in ratios.values())
    assert doubling, "dual re-run lift ratio per N step falls just short of 2"


def test_criterion_9_property_suites(report):
    suites = {
        "prog minimality": test_measures.test_prog_minimality_exhaustive,
        "lift monotone/inflationary": test_measures.test_lift_monotone_and_inflationary,
        "policy independence": test_spm.test_policy_independence,
        "attractor soundness": test_attractors.test_attractor_sound_and_complement_total,
        "guarded attractor soundness": test_attractors.test_guarded_sound,
        "parse/write round trip": test_formats.test_write_parse_round_trip,
    }
    failed = []
    for name, fn in suites.items():
        try:
            fn()
        except AssertionError:
            failed.append(name)
    ok = not failed
    report(9, ok, f"suites={len(suites)} failed={failed}")
    assert ok
