"""Leftmost reduced subwords and the translation to preprojective modules.

The scan keeps a remainder ``r`` (initially the target) and selects base
position ``p`` with letter ``s`` exactly when ``s`` is a left descent of ``r``,
replacing ``r`` by ``s r``.  By the lifting property this greedy choice is the
leftmost reduced occurrence whenever one exists.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count

from .arquiver import PreprojIndex, enumerate_preprojectives
from .errors import NotASubword, QuotientClosedError, ZeroModuleHit
from .quiver import Quiver, coxeter_word
from .weyl import WeylElement, Word, _column, matmul, root_sign, weyl_group


class _CInfinity:
    def __repr__(self):
        return "C_INFINITY"


C_INFINITY = _CInfinity()


@dataclass(frozen=True)
class SubcategorySpec:
    """A cofinite subcategory, recorded by the indecomposables it misses."""

    quiver: Quiver
    missing: tuple[PreprojIndex, ...]

    def __post_init__(self):
        if list(self.missing) != sorted(self.missing, key=lambda x: (x.k, x.j)):
            raise ValueError("missing list must be sorted by (k, j)")
        if len(set(self.missing)) != len(self.missing):
            raise ValueError("missing list has repeated entries")

    def to_json(self) -> list[dict]:
        return [m.to_json() for m in self.missing]


def _letters(base, n: int, cword=None):
    if base is C_INFINITY:
        cw = tuple(cword) if cword is not None else tuple(range(1, n + 1))
        for p in count(0):
            yield cw[p % len(cw)]
    else:
        yield from base


def leftmost_positions(target: WeylElement, base=C_INFINITY, cword=None) -> tuple[int, ...]:
    """1-based positions of the leftmost reduced occurrence of ``target``.

    ``cword`` replaces the Coxeter word ``1..n`` when scanning ``C_INFINITY``.
    """
    g = target.group
    n = g.n
    rinv = target.inverse
    remaining = target.length
    cap = None
    if base is C_INFINITY:
        cap = n * n * (target.length + 1)
    positions: list[int] = []
    for p, s in enumerate(_letters(base, n, cword), start=1):
        if remaining == 0:
            break
        if cap is not None and p > cap:
            raise QuotientClosedError("c^infinity scan exceeded its safety cap")
        if root_sign(_column(rinv, s - 1)) < 0:
            positions.append(p)
            rinv = matmul(rinv, g.reflections[s - 1])
            remaining -= 1
    if remaining:
        raise NotASubword(f"{target!r} is not a subword of the base word")
    return tuple(positions)


def positions_to_indices(q: Quiver, positions) -> list[PreprojIndex]:
    n = q.n
    out = [PreprojIndex((p - 1) % n + 1, (p - 1) // n) for p in positions]
    if q.is_dynkin and out:
        vanish = enumerate_preprojectives(q).vanish
        for idx in out:
            if idx.k >= vanish.get(idx.j, float("inf")):
                raise ZeroModuleHit(
                    f"position maps to {idx.label()}, which is zero for {q}")
    return out


def word_from_missing(spec: SubcategorySpec) -> Word:
    return tuple(idx.j for idx in spec.missing)


def category_of(w: WeylElement) -> SubcategorySpec:
    q = w.group.quiver
    return SubcategorySpec(q, tuple(positions_to_indices(q, leftmost_positions(w))))


def element_of(spec: SubcategorySpec) -> WeylElement:
    return weyl_group(spec.quiver).evaluate(word_from_missing(spec))


def is_leftmost(q: Quiver, base, positions) -> bool:
    positions = tuple(positions)
    if not positions:
        return True
    g = weyl_group(q)
    sub = [base[p - 1] for p in positions]
    w = g.evaluate(sub)
    if w.length != len(sub):
        return False
    return leftmost_positions(w, tuple(base)) == positions


def c_infinity_prefix(q: Quiver, copies: int) -> Word:
    return coxeter_word(q) * copies
