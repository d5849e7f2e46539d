"""Set systems of leftmost subword positions and the antimatroid axioms."""
from __future__ import annotations

from dataclasses import dataclass

from .leftmost import leftmost_positions
from .quiver import Quiver
from .weyl import WeylElement, weyl_group


@dataclass(frozen=True)
class SetSystem:
    size: int
    feasible: frozenset  # of frozensets of 1-based positions

    def sorted_sets(self) -> list[list[int]]:
        return sorted((sorted(a) for a in self.feasible), key=lambda a: (len(a), a))


def subword_elements(q: Quiver, base) -> list[WeylElement]:
    """Elements having a reduced expression as a subword of ``base``.

    Prefix dynamic programme: a reduced subword of ``base[:p]`` either avoids
    position ``p`` or extends a reduced subword of ``base[:p-1]`` by a length-
    increasing letter.
    """
    g = weyl_group(q)
    reach = {g.identity.matrix: g.identity}
    for s in base:
        for v in list(reach.values()):
            if not v.right_descent(s):
                u = v.right_mult(s)
                reach.setdefault(u.matrix, u)
    return sorted(reach.values(), key=lambda v: (v.length, v.reduced_word()))


def feasible_sets_from_word(q: Quiver, base) -> SetSystem:
    base = tuple(base)
    sets = frozenset(frozenset(leftmost_positions(v, base)) for v in subword_elements(q, base))
    return SetSystem(len(base), sets)


def is_accessible(system: SetSystem) -> bool:
    return all(any(a - {x} in system.feasible for x in a) for a in system.feasible if a)


def antimatroid_violation(system: SetSystem):
    for a in system.feasible:
        for b in system.feasible:
            if b <= a:
                continue
            if not any(a | {x} in system.feasible for x in b - a):
                return sorted(a), sorted(b)
    return None


def is_antimatroid(system: SetSystem) -> bool:
    return antimatroid_violation(system) is None


def supersolvable_violation(system: SetSystem, order=None):
    rank = {x: t for t, x in enumerate(order)} if order is not None else None
    for a in system.feasible:
        for b in system.feasible:
            if b <= a:
                continue
            x = min(b - a, key=rank.__getitem__) if rank else min(b - a)
            if a | {x} not in system.feasible:
                return sorted(a), sorted(b)
    return None


def is_supersolvable(system: SetSystem, order=None) -> bool:
    """Ordered exchange: ``A + min(B - A)`` is feasible whenever ``B`` is not
    inside ``A``.  ``order`` lists the ground set; default is increasing."""
    return supersolvable_violation(system, order) is None
