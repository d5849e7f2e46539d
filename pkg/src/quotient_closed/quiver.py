"""Acyclic quivers with admissible numbering and their integer invariants.

Vertices are 1-based.  An arrow ``(i, j)`` means ``i -> j`` and admissibility
requires ``i < j``.
"""
from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CycleError, DisconnectedError, NumberingError, QuiverError

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[tuple[int, int], ...]
    name: str | None = None
    dynkin_type: str | None = field(default=None, compare=False)

    @property
    def is_dynkin(self) -> bool:
        return self.dynkin_type is not None

    def to_json(self) -> dict:
        out = {"n": self.n, "arrows": [list(a) for a in self.arrows]}
        if self.name is not None:
            out["name"] = self.name
        return out

    def __str__(self) -> str:
        label = self.name or "Q"
        return f"{label}(n={self.n}, arrows={list(self.arrows)})"


@dataclass(frozen=True)
class DoubleQuiver:
    """Doubled quiver.  Arrow ``m`` of the base gives arrows ``m`` (original)
    and ``m + len(base.arrows)`` (starred, reversed)."""

    base: Quiver
    arrows: tuple[tuple[int, int], ...]
    starred: tuple[bool, ...]

    def partner(self, m: int) -> int:
        half = len(self.base.arrows)
        return m + half if m < half else m - half


def _find_cycle(n: int, arrows) -> bool:
    indeg = [0] * (n + 1)
    out: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i, j in arrows:
        out[i].append(j)
        indeg[j] += 1
    queue = deque(v for v in range(1, n + 1) if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for u in out[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                queue.append(u)
    return seen < n


def _connected(n: int, arrows) -> bool:
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for i, j in arrows:
        adj[i].add(j)
        adj[j].add(i)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in adj[v] - seen:
            seen.add(u)
            stack.append(u)
    return len(seen) == n


def classify_dynkin(n: int, arrows) -> str | None:
    """Return ``"A5"``, ``"D4"``, ``"E6"`` ... or None for non-Dynkin graphs."""
    edges = Counter(frozenset(a) for a in arrows)
    if any(m > 1 for m in edges.values()) or len(edges) != n - 1:
        return None
    # connected with n-1 simple edges: a tree
    deg = Counter()
    for e in edges:
        for v in e:
            deg[v] += 1
    branch = [v for v in range(1, n + 1) if deg[v] >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or deg[branch[0]] > 3:
        return None
    centre = branch[0]
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for e in edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    arms = []
    for start in adj[centre]:
        length, prev, cur = 1, centre, start
        while deg[cur] == 2:
            nxt = next(u for u in adj[cur] if u != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{n}"
    return None


def validate_quiver(raw) -> Quiver:
    """Build a :class:`Quiver` from a mapping ``{"n", "arrows", "name"?}``."""
    try:
        n = int(raw["n"])
        arrows = tuple((int(a[0]), int(a[1])) for a in raw["arrows"])
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise QuiverError(f"malformed quiver description: {raw!r}") from exc
    name = raw.get("name")
    if n < 1:
        raise QuiverError("a quiver needs at least one vertex")
    for i, j in arrows:
        if not (1 <= i <= n and 1 <= j <= n):
            raise QuiverError(f"arrow {(i, j)} out of range 1..{n}")
        if i == j:
            raise CycleError(f"loop at vertex {i}")
    if _find_cycle(n, arrows):
        raise CycleError("quiver has an oriented cycle")
    bad = [a for a in arrows if a[0] >= a[1]]
    if bad:
        raise NumberingError(
            f"arrows {bad} violate admissible numbering (need i < j); "
            f"try suggest_renumbering()")
    if not _connected(n, arrows):
        raise DisconnectedError("underlying graph is disconnected")
    return Quiver(n, arrows, name, classify_dynkin(n, arrows))


def suggest_renumbering(n: int, arrows) -> dict[int, int]:
    """Topological relabelling old -> new that makes the numbering admissible."""
    if _find_cycle(n, arrows):
        raise CycleError("quiver has an oriented cycle")
    indeg = {v: 0 for v in range(1, n + 1)}
    out: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for i, j in arrows:
        out[i].append(j)
        indeg[j] += 1
    ready = sorted(v for v in indeg if indeg[v] == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for u in out[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                ready.append(u)
        ready.sort()
    return {old: new for new, old in enumerate(order, start=1)}


def load_quiver(source: str) -> Quiver:
    """Resolve a built-in name, a JSON file path, or inline JSON."""
    if source in BUILTIN_NAMES or _parse_builtin(source) is not None:
        return builtin(source)
    path = Path(source)
    if path.exists():
        return validate_quiver(json.loads(path.read_text()))
    try:
        return validate_quiver(json.loads(source))
    except json.JSONDecodeError:
        raise QuiverError(f"unknown quiver {source!r}") from None


def cartan_matrix(q: Quiver) -> IntMatrix:
    a = [[0] * q.n for _ in range(q.n)]
    for i in range(q.n):
        a[i][i] = 2
    for i, j in q.arrows:
        a[i - 1][j - 1] -= 1
        a[j - 1][i - 1] -= 1
    return tuple(map(tuple, a))


def euler_matrix(q: Quiver) -> IntMatrix:
    e = [[int(i == j) for j in range(q.n)] for i in range(q.n)]
    for i, j in q.arrows:
        e[i - 1][j - 1] -= 1
    return tuple(map(tuple, e))


def coxeter_word(q: Quiver) -> tuple[int, ...]:
    return tuple(range(1, q.n + 1))


def double_quiver(q: Quiver) -> DoubleQuiver:
    arrows = q.arrows + tuple((j, i) for i, j in q.arrows)
    starred = (False,) * len(q.arrows) + (True,) * len(q.arrows)
    return DoubleQuiver(q, arrows, starred)


def _linear(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, n)]


def _parse_builtin(name: str):
    if len(name) >= 2 and name[0] in "ADE" and name[1:].isdigit():
        return name[0], int(name[1:])
    return None


BUILTIN_NAMES = ("triangle", "kronecker")


def builtin(name: str) -> Quiver:
    """Named quivers: A1..A8, D4..D6, E6..E8, ``triangle``, ``kronecker``."""
    if name == "triangle":
        return validate_quiver({"n": 3, "arrows": [(1, 2), (2, 3), (1, 3)], "name": name})
    if name == "kronecker":
        return validate_quiver({"n": 2, "arrows": [(1, 2), (1, 2)], "name": name})
    parsed = _parse_builtin(name)
    if parsed is None:
        raise QuiverError(f"unknown built-in quiver {name!r}")
    kind, n = parsed
    if kind == "A" and 1 <= n <= 8:
        arrows = _linear(n)
    elif kind == "D" and 4 <= n <= 6:
        arrows = _linear(n - 1) + [(n - 2, n)]
    elif kind == "E" and 6 <= n <= 8:
        arrows = _linear(n - 1) + [(3, n)]
    else:
        raise QuiverError(f"unsupported built-in quiver {name!r}")
    return validate_quiver({"n": n, "arrows": arrows, "name": name})
