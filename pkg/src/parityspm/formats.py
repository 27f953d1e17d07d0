"""PGSolver-style game text, solution reports (JSON / paritysol) and DOT export.

Game grammar, statements terminated by ``;``::

    parity <max-id>;                                  (optional header)
    <id> <priority> <owner> <succ>(,<succ>)* ["<label>"];

Owner ``0`` is Even, ``1`` is Odd.  Labels escape ``"`` and ``\\`` with a
backslash.  ``convention="max"`` reads max-wins priorities and maps each
``p`` to ``M - p`` where ``M`` is the least even number ``>=`` the largest
priority.
"""

from __future__ import annotations

import json
import re
from typing import Iterator, List, Optional, Tuple

from .core import ParityGame, Player, build_game
from .errors import ParseError
from .measures import parse_measure, render
from .result import SolveResult

FORMAT_VERSION = 1
MIN_WINS, MAX_WINS = "min", "max"

_LABEL = re.compile(r'"((?:[^"\\]|\\.)*)"\s*$')


def _statements(text: str) -> Iterator[Tuple[int, str]]:
    """Split on ``;`` outside quotes; yields (line number, statement)."""
    buf = []
    line = 1
    start = None
    quoted = escaped = False
    for ch in text:
        if ch == "\n":
            line += 1
        if start is None and not ch.isspace():
            start = line
        if quoted:
            buf.append(ch)
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                quoted = False
            continue
        if ch == '"':
            quoted = True
            buf.append(ch)
        elif ch == ";":
            yield start or line, "".join(buf).strip()
            buf, start = [], None
        else:
            buf.append(ch)
    if quoted:
        raise ParseError("unterminated label", start)
    if "".join(buf).strip():
        raise ParseError("missing ';'", start)


def _unescape(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s)


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def max_to_min(priorities) -> List[int]:
    """Parity-preserving, order-reversing map used for max-wins input."""
    top = max(priorities)
    M = top + (top % 2)
    return [M - p for p in priorities]


def parse_game(text: str, convention: str = MIN_WINS) -> ParityGame:
    if convention not in (MIN_WINS, MAX_WINS):
        raise ValueError(f"unknown convention {convention!r}")
    rows = {}
    declared = None
    for line, stmt in _statements(text):
        if not stmt:
            continue
        if stmt.startswith("parity"):
            parts = stmt.split()
            if len(parts) != 2 or not parts[1].isdigit() or declared is not None or rows:
                raise ParseError(f"bad header {stmt!r}", line)
            declared = int(parts[1])
            continue
        label = None
        m = _LABEL.search(stmt)
        if m:
            label = _unescape(m.group(1))
            stmt = stmt[:m.start()]
        parts = stmt.split()
        if len(parts) not in (3, 4):
            raise ParseError(f"expected '<id> <priority> <owner> <successors>', got {stmt!r}", line)
        try:
            vid, prio, owner = int(parts[0]), int(parts[1]), int(parts[2])
            succ = [int(x) for x in parts[3].split(",") if x] if len(parts) == 4 else []
        except ValueError:
            raise ParseError(f"non-numeric field in {stmt!r}", line) from None
        if owner not in (0, 1) or prio < 0 or vid < 0:
            raise ParseError(f"bad owner or priority in {stmt!r}", line)
        if vid in rows:
            raise ParseError(f"vertex {vid} defined twice", line)
        rows[vid] = (prio, owner, succ, label)
    if not rows:
        raise ParseError("no vertices")
    n = max(rows) + 1
    if len(rows) != n:
        missing = sorted(set(range(n)) - set(rows))
        raise ParseError(f"vertex ids not contiguous, missing {missing[:5]}")
    if declared is not None and declared != n - 1:
        raise ParseError(f"header declares max id {declared}, found {n - 1}")
    prios = [rows[v][0] for v in range(n)]
    if convention == MAX_WINS:
        prios = max_to_min(prios)
    labels = [rows[v][3] for v in range(n)]
    return build_game([Player(rows[v][1]) for v in range(n)], prios,
                      [rows[v][2] for v in range(n)],
                      labels if any(x is not None for x in labels) else None)


def write_game(game: ParityGame) -> str:
    lines = [f"parity {game.n - 1};"]
    for v in game.vertices:
        row = f"{v} {game.priority[v]} {int(game.owner[v])} " + ",".join(map(str, sorted(game.succ[v])))
        if game.labels is not None and game.labels[v] is not None:
            row += f' "{_escape(game.labels[v])}"'
        lines.append(row + ";")
    return "\n".join(lines) + "\n"


def solution_dict(game: ParityGame, result: SolveResult, violations=None) -> dict:
    """JSON-ready solution report."""
    doc = {
        "format": FORMAT_VERSION,
        "algorithm": result.algorithm,
        "policy": result.policy,
        "regions": {"even": sorted(result.win_even), "odd": sorted(result.win_odd)},
        "strategies": {
            "even": {str(v): w for v, w in sorted(result.strategy_even.items())},
            "odd": {str(v): w for v, w in sorted(result.strategy_odd.items())},
        },
        "measures": ({str(v): render(m, game.d) for v, m in enumerate(result.measures)}
                     if result.measures is not None else {}),
        "stats": dict(result.stats),
    }
    if violations is not None:
        doc["violations"] = [x.to_json() for x in violations]
    return doc


def write_solution(game: ParityGame, result: SolveResult, fmt: str = "json",
                   violations=None, stats: bool = True) -> str:
    if fmt == "json":
        doc = solution_dict(game, result, violations)
        if not stats:
            doc.pop("stats")
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "pgsol":
        lines = [f"paritysol {game.n - 1};"]
        for v in game.vertices:
            winner = result.winner(v)
            sigma = result.strategy(winner)
            row = f"{v} {winner}"
            if game.owner[v] == winner and v in sigma:
                row += f" {sigma[v]}"
            lines.append(row + ";")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown solution format {fmt!r}")


def read_solution(text: str) -> SolveResult:
    """Parse a JSON report or a ``paritysol`` text back into a result."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc), exc.lineno) from None
        if doc.get("format") != FORMAT_VERSION:
            raise ParseError(f"unsupported solution format {doc.get('format')!r}")
        try:
            regions, strategies = doc["regions"], doc["strategies"]
            result = SolveResult(
                frozenset(regions["even"]), frozenset(regions["odd"]),
                {int(k): int(w) for k, w in strategies["even"].items()},
                {int(k): int(w) for k, w in strategies["odd"].items()},
                algorithm=doc.get("algorithm", ""), policy=doc.get("policy", ""),
                stats=doc.get("stats", {}))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed solution report: {exc}") from None
        if doc.get("measures"):
            result.measures = [parse_measure(doc["measures"][str(v)])
                               for v in range(len(doc["measures"]))]
        return result
    even, odd, s_even, s_odd = set(), set(), {}, {}
    for line, stmt in _statements(text):
        if not stmt or stmt.startswith("paritysol"):
            continue
        parts = stmt.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise ParseError(f"non-numeric field in {stmt!r}", line) from None
        if len(nums) not in (2, 3) or nums[1] not in (0, 1):
            raise ParseError(f"bad solution line {stmt!r}", line)
        (even if nums[1] == 0 else odd).add(nums[0])
        if len(nums) == 3:
            (s_even if nums[1] == 0 else s_odd)[nums[0]] = nums[2]
    return SolveResult(frozenset(even), frozenset(odd), s_even, s_odd)


def write_dot(game: ParityGame, result: Optional[SolveResult] = None) -> str:
    """Graphviz digraph: diamonds for Even, boxes for Odd.

    With a result, nodes are filled by winner and strategy edges drawn
    bold red.
    """
    lines = ["digraph parity_game {"]
    for v in game.vertices:
        shape = "diamond" if game.owner[v] == Player.EVEN else "box"
        attrs = [f"shape={shape}",
                 f'label="{_escape(game.label(v))}\\n{game.priority[v]}"']
        if result is not None:
            color = "lightblue" if v in result.win_even else "salmon"
            attrs += ["style=filled", f"fillcolor={color}"]
        lines.append(f"  n{v} [{', '.join(attrs)}];")
    for v, w in game.edges():
        attr = ""
        if result is not None:
            sigma = result.strategy(game.owner[v])
            if sigma.get(v) == w:
                attr = " [color=red, penwidth=2, class=strategy]"
        lines.append(f"  n{v} -> n{w}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
