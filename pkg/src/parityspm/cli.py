"""Command-line front end: ``solve``, ``verify``, ``gen``, ``bench``.

Exit codes: 0 success, 1 usage or input error, 2 a solver result failed
its own verification (or ``verify`` found violations).
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import formats
from .core import Player
from .errors import GameError
from .generators import gen_figure1, gen_figure2, gen_figure4, gen_figure6, gen_random
from .lifting import parse_policy
from .onepass import solve_onepass
from .oracle import solve_bruteforce, solve_zielonka
from .spm import solve_spm, solve_two_pass
from .verify import verify_partition

ALGORITHMS = ("spm", "onepass", "twopass", "zielonka", "brute")
# which players' strategies each algorithm produces
CERTIFIED = {
    "spm": (Player.EVEN,),
    "onepass": (Player.EVEN, Player.ODD),
    "twopass": (Player.EVEN, Player.ODD),
    "zielonka": (Player.EVEN, Player.ODD),
    "brute": (),
}
FAMILIES = {"fig2": gen_figure2}
CSV_HEADER = ["family", "N", "algo", "lifts", "progs", "attractors", "wall_ms"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def run_algorithm(name, game, policy=None, trace=None):
    if name == "spm":
        return solve_spm(game, policy)
    if name == "onepass":
        return solve_onepass(game, policy, trace)
    if name == "twopass":
        return solve_two_pass(game, policy)
    if name == "zielonka":
        return solve_zielonka(game)
    if name == "brute":
        return solve_bruteforce(game)
    raise UsageError(f"unknown algorithm {name!r}")


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_solve(args) -> int:
    try:
        game = formats.parse_game(_read(args.input), args.convention)
        policy = parse_policy(args.policy, game)
        trace = (lambda line: print(line, file=sys.stderr)) if args.trace else None
        result = run_algorithm(args.algo, game, policy, trace)
    except (GameError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    violations = None
    if not args.no_verify:
        violations = verify_partition(game, result, CERTIFIED[args.algo])
    if not args.stats:
        result.stats = {}
    if args.format == "json":
        sys.stdout.write(formats.write_solution(game, result, "json", violations,
                                                stats=args.stats))
    else:
        sys.stdout.write(formats.write_solution(game, result, "pgsol"))
    if violations:
        for v in violations:
            print(f"violation: {v.describe(game)}", file=sys.stderr)
        return 2
    return 0


def cmd_verify(args) -> int:
    try:
        game = formats.parse_game(_read(args.game), args.convention)
        result = formats.read_solution(_read(args.solution))
    except (GameError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    violations = verify_partition(game, result)
    for v in violations:
        print(v.describe(game))
    if violations:
        return 2
    print("ok")
    return 0


def cmd_gen(args) -> int:
    try:
        if args.family == "fig1":
            game = gen_figure1()
        elif args.family == "fig2":
            game = gen_figure2(args.N)
        elif args.family == "fig4":
            game = gen_figure4()
        elif args.family == "fig6":
            game = gen_figure6()
        else:
            game = gen_random(args.n, args.d, args.min_deg, args.max_deg, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = formats.write_dot(game) if args.dot else formats.write_game(game)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"range must look like A..B, got {text!r}")
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def cmd_bench(args) -> int:
    try:
        if args.family not in FAMILIES:
            raise UsageError(f"unknown family {args.family!r}; known: {', '.join(FAMILIES)}")
        Ns = _parse_range(args.range)
        algos = [a for a in args.algos.split(",") if a]
        for a in algos:
            if a not in ALGORITHMS:
                raise UsageError(f"unknown algorithm {a!r}")
        if args.repeat < 1:
            raise UsageError("--repeat must be positive")
        policy = parse_policy(args.policy)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(CSV_HEADER)
    for N in Ns:
        game = FAMILIES[args.family](N)
        for algo in algos:
            runs = [run_algorithm(algo, game, policy) for _ in range(args.repeat)]
            counters = {(r.stats["lifts"], r.stats["progs"], r.stats["attractors"]) for r in runs}
            assert len(counters) == 1, "counters must not vary between repetitions"
            s = runs[0].stats
            wall = min(r.stats["wall_ms"] for r in runs)
            out.writerow([args.family, N, algo, s["lifts"], s["progs"], s["attractors"],
                          f"{wall:.3f}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parityspm", description="Parity game solving with progress measures.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve a game and print a verified report")
    p.add_argument("input", nargs="?", default="-", help="game file (default: stdin)")
    p.add_argument("--algo", choices=ALGORITHMS, default="onepass")
    p.add_argument("--policy", default="worklist",
                   help="roundrobin|worklist|input|random:<seed>|prefer:<id-list>")
    p.add_argument("--convention", choices=("min", "max"), default="min")
    p.add_argument("--format", choices=("json", "pgsol"), default="json")
    p.add_argument("--stats", action="store_true", help="include counters and wall time")
    p.add_argument("--trace", action="store_true", help="log one-pass events to stderr")
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a solution against a game")
    p.add_argument("game")
    p.add_argument("solution")
    p.add_argument("--convention", choices=("min", "max"), default="min")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a fixture or random game")
    p.add_argument("family", choices=("fig1", "fig2", "fig4", "fig6", "random"))
    p.add_argument("-N", type=int, default=4, help="Figure 2 family size")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--min-deg", type=int, default=1)
    p.add_argument("--max-deg", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dot", action="store_true", help="emit Graphviz instead of game text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="lift/attractor counters over a game family as CSV")
    p.add_argument("--family", default="fig2")
    p.add_argument("--range", default="4..9")
    p.add_argument("--algos", default="onepass,twopass")
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--policy", default="worklist")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
