"""c-sortable elements, inversion sets and the torsion-class criterion.

Everything except :func:`c_sorting_blocks`, :func:`is_c_sortable` and
:func:`inversion_set` needs a finite Weyl group.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import (AmbiguousMaximum, CriterionMismatch, CrossCheckMismatch,
                     NotFiniteType, NotSortable)
from .leftmost import C_INFINITY, category_of, leftmost_positions
from .repkit import Catalogue, catalogue, complement, is_torsion_class
from .weyl import WeylElement, WeylGroup, matvec, weak_leq_right


def c_sorting_blocks(w: WeylElement, cword=None) -> list[tuple[int, ...]]:
    """Letters of the leftmost word of ``w`` in ``c^infinity``, one block per copy of ``c``."""
    cw = tuple(cword) if cword is not None else tuple(range(1, w.group.n + 1))
    blocks: dict[int, list[int]] = {}
    for p in leftmost_positions(w, C_INFINITY, cw):
        blocks.setdefault((p - 1) // len(cw), []).append(cw[(p - 1) % len(cw)])
    if not blocks:
        return []
    return [tuple(blocks.get(t, ())) for t in range(max(blocks) + 1)]


def is_c_sortable(w: WeylElement, cword=None) -> bool:
    blocks = c_sorting_blocks(w, cword)
    return all(set(b) <= set(a) for a, b in zip(blocks, blocks[1:]))


def reversed_coxeter_word(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def _require_finite(g: WeylGroup):
    if not g.quiver.is_dynkin:
        raise NotFiniteType(f"{g.quiver} is not of finite type")


@lru_cache(maxsize=None)
def _sortable_elements(g: WeylGroup) -> tuple[WeylElement, ...]:
    return tuple(u for u in g.enumerate() if is_c_sortable(u))


def sort_c(w: WeylElement) -> WeylElement:
    """Longest c-sortable ``u`` with ``u <=_R w``."""
    g = w.group
    _require_finite(g)
    below = [u for u in _sortable_elements(g) if u.length <= w.length and weak_leq_right(u, w)]
    top = max(u.length for u in below)
    best = [u for u in below if u.length == top]
    if len(best) != 1:
        raise AmbiguousMaximum(f"{len(best)} longest c-sortable prefixes of {w!r}")
    return best[0]


def is_torsion_candidate(w: WeylElement) -> bool:
    """Ascent condition on ``sort_c``, cross-checked against ``w w0`` being
    c^{-1}-sortable; the two must agree in finite type."""
    g = w.group
    _require_finite(g)
    base = sort_c(w).length
    ascent = all(sort_c(w.right_mult(i)).length > base
                 for i in range(1, g.n + 1) if not w.right_descent(i))
    flipped = is_c_sortable(w * g.longest_element(), reversed_coxeter_word(g.n))
    if ascent != flipped:
        raise CriterionMismatch(f"criteria disagree on {w!r}: {ascent} vs {flipped}")
    return ascent


def inversion_set(w: WeylElement) -> frozenset:
    g = w.group
    word = w.reduced_word()
    roots = []
    prefix = g.identity
    for i in word:
        simple = tuple(int(t == i - 1) for t in range(g.n))
        roots.append(matvec(prefix.matrix, simple))
        prefix = prefix.right_mult(i)
    return frozenset(roots)


def torsion_free_of(w: WeylElement, cat: Catalogue | None = None, pi=None) -> frozenset:
    """Torsion-free class of a c-sortable ``w``: the modules with dimension
    vectors in Inv(w).  Compared with the summands of ``Pi / I_w`` when
    ``pi`` is supplied."""
    if not is_c_sortable(w):
        raise NotSortable(f"{w!r} is not c-sortable")
    cat = cat or catalogue(w.group.quiver)
    cls = frozenset(inversion_set(w))
    if not cls <= cat.full:
        raise CrossCheckMismatch(f"Inv({w!r}) contains non-catalogue roots")
    if pi is not None:
        from .preproj import C_of_quotient
        other = C_of_quotient(pi, w, cat)
        if other != cls:
            raise CrossCheckMismatch(f"Inv and C(Pi/I_w) disagree for {w!r}")
    return cls


def verify_torsion_pair(w: WeylElement, cat: Catalogue | None = None, pi=None) -> bool:
    g = w.group
    _require_finite(g)
    cat = cat or catalogue(g.quiver)
    t = complement(cat, category_of(w).missing)
    f = torsion_free_of(sort_c(w), cat, pi)
    if not is_torsion_class(cat, t):
        return False
    if any(cat.hom_dim(x, y) for x in t for y in f):
        return False
    right_perp = {n for n in cat.keys if all(cat.hom_dim(x, n) == 0 for x in t)}
    left_perp = {m for m in cat.keys if all(cat.hom_dim(m, y) == 0 for y in f)}
    return right_perp == f and left_perp == t
