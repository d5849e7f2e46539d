"""Grassmannian permutations in type A_n, partitions in a k x (n-k+1) box and
the bad-<= characterisation of leftmost reduced subwords.

Cells are ``(row, col)``, 1-based, row 1 at the top.  Cell ``(r, c)`` holds the
generator ``k - r + c``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import QuiverError
from .leftmost import is_leftmost
from .quiver import Quiver, builtin
from .weyl import WeylElement, Word, enumerate_group, weyl_group

Cell = tuple[int, int]


@dataclass(frozen=True)
class GridWord:
    n: int
    k: int

    @property
    def rows(self) -> int:
        return self.k

    @property
    def cols(self) -> int:
        return self.n - self.k + 1

    def letter(self, cell: Cell) -> int:
        r, c = cell
        return self.k - r + c

    def cells(self) -> list[Cell]:
        return [(r, c) for r in range(1, self.rows + 1) for c in range(1, self.cols + 1)]

    def word(self) -> Word:
        return tuple(self.letter(cell) for cell in self.cells())

    def table(self) -> list[list[int]]:
        return [[self.letter((r, c)) for c in range(1, self.cols + 1)]
                for r in range(1, self.rows + 1)]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]  # weakly decreasing, zeros dropped
    grid: GridWord

    def cells(self) -> list[Cell]:
        """Cells in reading order: rows left to right, top row first."""
        return [(r, c) for r, length in enumerate(self.parts, start=1)
                for c in range(1, length + 1)]

    def __len__(self) -> int:
        return sum(self.parts)


def type_a_quiver(n: int) -> Quiver:
    return builtin(f"A{n}")


def rectangle_word(n: int, k: int) -> GridWord:
    if not 1 <= k <= n:
        raise QuiverError(f"need 1 <= k <= n, got n={n}, k={k}")
    return GridWord(n, k)


def partitions_in_rectangle(n: int, k: int) -> list[Partition]:
    grid = rectangle_word(n, k)
    out = []

    def rec(prefix, cap):
        if len(prefix) == grid.rows:
            out.append(Partition(tuple(x for x in prefix if x), grid))
            return
        for x in range(cap, -1, -1):
            rec(prefix + [x], x)

    rec([], grid.cols)
    out.sort(key=lambda lam: (len(lam), lam.parts))
    return out


def word_of_partition(lam: Partition) -> Word:
    return tuple(lam.grid.letter(cell) for cell in lam.cells())


def diagonal_word(lam: Partition) -> Word:
    """Reading along lines sloping from bottom left to top right.  It respects
    the AR-quiver, so it gives the same element as the row reading."""
    cells = sorted(lam.cells(), key=lambda rc: (rc[0] + rc[1], -rc[0]))
    return tuple(lam.grid.letter(cell) for cell in cells)


def has_bad_le(lam: Partition, selection) -> bool:
    """A used cell with an unused cell above it in its column and an unused
    cell to its left in its row."""
    inside = set(lam.cells())
    used = set(selection)
    if not used <= inside:
        raise ValueError("selection lies outside the partition")
    for r, c in used:
        above = any((rr, c) not in used for rr in range(1, r))
        left = any((r, cc) not in used for cc in range(1, c))
        if above and left:
            return True
    return False


def grassmannian_permutations(n: int, k: int) -> list[WeylElement]:
    """Minimal length representatives of W_<k> \\ W: no left descent except s_k."""
    q = type_a_quiver(n)
    return [w for w in enumerate_group(q)
            if not any(w.left_descent(i) for i in range(1, n + 1) if i != k)]


def le_counterexamples(n: int, k: int, limit: int | None = None) -> list[dict]:
    """Reduced cell selections where leftmost-ness and the absence of a bad <=
    disagree (the list is empty when the characterisation holds)."""
    q = type_a_quiver(n)
    g = weyl_group(q)
    bad = []
    for lam in partitions_in_rectangle(n, k):
        cells = lam.cells()
        base = word_of_partition(lam)
        for size in range(len(cells) + 1):
            for chosen in combinations(range(len(cells)), size):
                sub = [base[t] for t in chosen]
                if g.evaluate(sub).length != len(sub):
                    continue
                positions = tuple(t + 1 for t in chosen)
                sel = [cells[t] for t in chosen]
                leftmost = is_leftmost(q, base, positions)
                if leftmost == has_bad_le(lam, sel):
                    bad.append({"partition": list(lam.parts), "cells": [list(c) for c in sel],
                                "leftmost": leftmost})
                    if limit is not None and len(bad) >= limit:
                        return bad
    return bad


def verify_le_theorem(n: int, k: int) -> bool:
    return not le_counterexamples(n, k, limit=1)


def expected_count(n: int, k: int) -> int:
    return comb(n + 1, k)
