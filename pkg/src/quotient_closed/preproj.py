"""The preprojective algebra of a Dynkin quiver as an explicit algebra over F_p.

Paths compose right to left: an arrow ``a: i -> j`` equals ``e_j a e_i`` and a
product ``x y`` is nonzero only when ``x`` starts where ``y`` ends.  Right
multiplication by ``a`` then maps ``M e_j`` to ``M e_i``, which is exactly the
representation convention of :mod:`repkit`.

A monomial is stored as ``(left vertex, right vertex, arrow ids)``.  Arrow id
``m < N`` is the ``m``-th arrow of the quiver, ``m + N`` its starred reverse.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from . import linalg
from .arquiver import enumerate_preprojectives
from .errors import NotFiniteType, NotReduced
from .linalg import Subspace
from .quiver import Quiver, double_quiver
from .repkit import DEFAULT_P, Catalogue, Rep, catalogue, quotient_rep, subrep
from .weyl import WeylElement, weyl_group

Monomial = tuple[int, int, tuple[int, ...]]


@dataclass(eq=False)
class PreprojAlgebra:
    quiver: Quiver
    p: int
    basis: list[Monomial]
    degree: list[int]
    table: np.ndarray  # table[a, b] = coordinates of basis[a] * basis[b]
    idempotents: list[int]  # basis index of e_v, v = 1..n
    arrow_index: dict[int, int]  # original arrow id -> basis index
    _ideals: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def graded_dims(self) -> list[int]:
        top = max(self.degree)
        return [self.degree.count(d) for d in range(top + 1)]

    def unit(self, a: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[a] = 1
        return v

    def one(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.idempotents] = 1
        return v

    def mul(self, x, y) -> np.ndarray:
        return np.einsum("a,b,abc->c", x, y, self.table) % self.p

    def right_vertex(self, a: int) -> int:
        return self.basis[a][1]

    def left_vertex(self, a: int) -> int:
        return self.basis[a][0]

    def full(self) -> Subspace:
        return Subspace(np.eye(self.dim, dtype=np.int64), self.dim, self.p)

    def zero(self) -> Subspace:
        return Subspace([], self.dim, self.p)


def _arrow_ends(dq, m: int) -> tuple[int, int]:
    """(left, right) vertex of the doubled arrow ``m`` (``a = e_left a e_right``)."""
    src, tgt = dq.arrows[m]
    return tgt, src


def _paths(dq, n: int, d: int) -> list[Monomial]:
    if d == 0:
        return [(v, v, ()) for v in range(1, n + 1)]
    out = []
    ends = [_arrow_ends(dq, m) for m in range(len(dq.arrows))]
    for seq in product(range(len(dq.arrows)), repeat=d):
        if all(ends[seq[t]][1] == ends[seq[t + 1]][0] for t in range(d - 1)):
            out.append((ends[seq[0]][0], ends[seq[-1]][1], seq))
    return out


def _relations(dq, n: int) -> dict[int, list[tuple[int, tuple[int, int]]]]:
    """Mesh relation at each vertex as (sign, (x, y)) terms meaning x y."""
    half = len(dq.base.arrows)
    rho: dict[int, list] = {v: [] for v in range(1, n + 1)}
    for m, (i, j) in enumerate(dq.base.arrows):
        rho[j].append((1, (m, m + half)))    # a a*  lives at the target
        rho[i].append((-1, (m + half, m)))   # a* a  lives at the source
    return rho


def build_preprojective_algebra(q: Quiver, p: int = DEFAULT_P) -> PreprojAlgebra:
    if not q.is_dynkin:
        raise NotFiniteType(f"preprojective algebra of {q} is infinite-dimensional")
    dq = double_quiver(q)
    n = q.n
    rho = _relations(dq, n)
    pieces = []  # per degree: (paths, path->col, rref of relations, pivots)
    d = 0
    while True:
        paths = _paths(dq, n, d)
        if not paths:
            break
        col = {mono[2] if d else mono: c for c, mono in enumerate(paths)}
        rows = []
        if d >= 2:
            shorter = {s: _paths(dq, n, s) for s in range(d - 1)}
            for s in range(d - 1):
                for x in shorter[s]:
                    for y in shorter[d - 2 - s]:
                        v = x[1]
                        if y[0] != v:
                            continue
                        row = np.zeros(len(paths), dtype=np.int64)
                        for sign, mid in rho[v]:
                            row[col[x[2] + mid + y[2]]] += sign
                        if row.any():
                            rows.append(row % p)
        rel = np.array(rows, dtype=np.int64).reshape(-1, len(paths))
        r, pivots = linalg.rref(rel, p) if len(rows) else (rel, [])
        if len(paths) - len(pivots) == 0:
            break
        pieces.append((paths, col, r, pivots))
        d += 1
    basis, degree, local = [], [], []
    for deg, (paths, col, r, pivots) in enumerate(pieces):
        pivset = set(pivots)
        for c, mono in enumerate(paths):
            if c not in pivset:
                basis.append(mono)
                degree.append(deg)
                local.append((deg, c))
    index = {key: t for t, key in enumerate(local)}
    dim = len(basis)

    def normal_form(deg: int, mono_arrows) -> np.ndarray:
        out = np.zeros(dim, dtype=np.int64)
        if deg >= len(pieces):
            return out
        paths, col, r, pivots = pieces[deg]
        v = np.zeros(len(paths), dtype=np.int64)
        v[col[mono_arrows]] = 1
        for row, c in zip(r, pivots):
            if v[c]:
                v = (v - v[c] * row) % p
        for c in np.nonzero(v)[0]:
            out[index[(deg, int(c))]] = v[c]
        return out

    table = np.zeros((dim, dim, dim), dtype=np.int64)
    for a, (la, ra, xa) in enumerate(basis):
        for b, (lb, rb, xb) in enumerate(basis):
            if ra != lb:
                continue
            if not xa:
                table[a, b, b] = 1
            elif not xb:
                table[a, b, a] = 1
            else:
                table[a, b] = normal_form(len(xa) + len(xb), xa + xb)
    idempotents = [basis.index((v, v, ())) for v in range(1, n + 1)]
    arrow_index = {m: basis.index((*_arrow_ends(dq, m), (m,))) for m in range(len(q.arrows))}
    return PreprojAlgebra(q, p, basis, degree, table, idempotents, arrow_index)


@lru_cache(maxsize=None)
def preprojective_algebra(q: Quiver, p: int = DEFAULT_P) -> PreprojAlgebra:
    return build_preprojective_algebra(q, p)


def expected_dimension(q: Quiver) -> int:
    """Sum of total dimensions of all indecomposables (Pi over kQ is the sum of
    all tau^{-k} kQ)."""
    return sum(sum(d) for _, d in enumerate_preprojectives(q).rows)


def two_sided_closure(pi: PreprojAlgebra, gens) -> Subspace:
    """Span of ``x g y`` over basis elements ``x, y`` and generators ``g``."""
    rows = []
    for g in gens:
        right = np.einsum("g,gbc->bc", g, pi.table) % pi.p  # row b: g * basis[b]
        both = np.einsum("abc,xb->xac", pi.table, right) % pi.p  # basis[a] * (g basis[x])
        rows.extend(both.reshape(-1, pi.dim))
    return Subspace(rows, pi.dim, pi.p)


def ideal_Ii(pi: PreprojAlgebra, i: int) -> Subspace:
    """``Pi (1 - e_i) Pi``."""
    key = ("I", i)
    with pi._lock:
        if key in pi._ideals:
            return pi._ideals[key]
    gens = [pi.unit(pi.idempotents[j - 1]) for j in range(1, pi.quiver.n + 1) if j != i]
    ideal = two_sided_closure(pi, gens)
    with pi._lock:
        pi._ideals[key] = ideal
    return ideal


def multiply_ideals(pi: PreprojAlgebra, left: Subspace, right: Subspace) -> Subspace:
    if left.dim == 0 or right.dim == 0:
        return pi.zero()
    prods = np.einsum("xa,yb,abc->xyc", left.basis, right.basis, pi.table) % pi.p
    return Subspace(prods.reshape(-1, pi.dim), pi.dim, pi.p)


def is_two_sided(pi: PreprojAlgebra, ideal: Subspace) -> bool:
    for x in ideal.basis:
        for a in range(pi.dim):
            if not ideal.contains(pi.mul(x, pi.unit(a))):
                return False
            if not ideal.contains(pi.mul(pi.unit(a), x)):
                return False
    return True


def ideal_Iw(pi: PreprojAlgebra, word, use_cache: bool = True) -> Subspace:
    """``I_w = I_{i_t} ... I_{i_1}`` for a reduced word ``s_{i_1} ... s_{i_t}``.

    With ``use_cache`` the ideal of every prefix is memoised by group element,
    so later words reuse earlier products whatever reduced word produced them.
    """
    g = weyl_group(pi.quiver)
    word = tuple(word)
    w = g.evaluate(word)
    if w.length != len(word):
        raise NotReduced(f"word {word} is not reduced")
    current = pi.full()
    prefix = g.identity
    for i in word:
        prefix = prefix.right_mult(i)
        key = ("w", prefix.matrix)
        if use_cache:
            with pi._lock:
                hit = pi._ideals.get(key)
            if hit is not None:
                current = hit
                continue
        current = multiply_ideals(pi, ideal_Ii(pi, i), current)
        if use_cache:
            with pi._lock:
                current = pi._ideals.setdefault(key, current)
    return current


def ideal_of(pi: PreprojAlgebra, w: WeylElement) -> Subspace:
    return ideal_Iw(pi, w.reduced_word())


# -- restriction to kQ -----------------------------------------------------

def _vertex_coords(pi: PreprojAlgebra) -> list[list[int]]:
    return [[a for a in range(pi.dim) if pi.right_vertex(a) == v] for v in range(1, pi.quiver.n + 1)]


def regular_rep(pi: PreprojAlgebra) -> Rep:
    """Pi as a right kQ-module: spaces ``Pi e_v``, arrows act by right multiplication."""
    q = pi.quiver
    coords = _vertex_coords(pi)
    pos = [{a: t for t, a in enumerate(c)} for c in coords]
    mats = []
    for m, (i, j) in enumerate(q.arrows):
        arrow = pi.unit(pi.arrow_index[m])
        block = np.zeros((len(coords[i - 1]), len(coords[j - 1])), dtype=np.int64)
        for t, a in enumerate(coords[j - 1]):
            img = pi.mul(pi.unit(a), arrow)
            for b in np.nonzero(img)[0]:
                block[pos[i - 1][int(b)], t] = img[b]
        mats.append(block)
    return Rep(q.n, q.arrows, pi.p, tuple(len(c) for c in coords), tuple(mats))


def _vertex_parts(pi: PreprojAlgebra, space: Subspace) -> list[Subspace]:
    """``space * e_v`` for every vertex, in local coordinates of ``Pi e_v``."""
    out = []
    for c in _vertex_coords(pi):
        rows = space.basis[:, c] if space.dim else np.zeros((0, len(c)), dtype=np.int64)
        out.append(Subspace(rows, len(c), pi.p))
    return out


def restrict_to_kQ(pi: PreprojAlgebra, space: Subspace, quotient: bool = False) -> Rep:
    """Restrict a right ideal (or, with ``quotient``, Pi modulo it) to kQ."""
    parts = _vertex_parts(pi, space)
    reg = regular_rep(pi)
    return quotient_rep(reg, parts) if quotient else subrep(reg, parts)


def _category(pi: PreprojAlgebra, space: Subspace, quotient: bool, cat: Catalogue | None):
    cat = cat or catalogue(pi.quiver, pi.p)
    return frozenset(cat.decompose(restrict_to_kQ(pi, space, quotient)))


def C_of(pi: PreprojAlgebra, w: WeylElement, cat: Catalogue | None = None) -> frozenset:
    """Indecomposable summands of ``I_w`` restricted to kQ."""
    return _category(pi, ideal_of(pi, w), False, cat)


def C_of_quotient(pi: PreprojAlgebra, w: WeylElement, cat: Catalogue | None = None) -> frozenset:
    return _category(pi, ideal_of(pi, w), True, cat)


def right_graded_dims(pi: PreprojAlgebra, space: Subspace) -> list[int]:
    return [s.dim for s in _vertex_parts(pi, space)]


def left_graded_quotient_dims(pi: PreprojAlgebra, space: Subspace) -> list[int]:
    """``dim e_v (Pi / space)`` for each vertex."""
    out = []
    for v in range(1, pi.quiver.n + 1):
        cols = [a for a in range(pi.dim) if pi.left_vertex(a) == v]
        rows = space.basis[:, cols] if space.dim else np.zeros((0, len(cols)), dtype=np.int64)
        out.append(len(cols) - linalg.rank(rows, pi.p))
    return out


def verify_duality(pi: PreprojAlgebra, w: WeylElement) -> bool:
    """Dimension shadow of ``D I_w = Pi / I_{w0 w^-1}`` as left modules.

    The dual of ``I_w e_v`` is the ``e_v`` part of the left module, so the
    check is ``dim I_w e_v = dim e_v (Pi / I_{w0 w^-1})`` at every vertex.
    """
    g = w.group
    other = g.longest_element() * w.inv()
    iw = ideal_of(pi, w)
    io = ideal_of(pi, other)
    if iw.dim != pi.dim - io.dim:
        return False
    return right_graded_dims(pi, iw) == left_graded_quotient_dims(pi, io)


def ideal_contains(pi: PreprojAlgebra, v: WeylElement, w: WeylElement) -> bool:
    """Is ``I_w`` a subspace of ``I_v``?"""
    return ideal_of(pi, v).contains_space(ideal_of(pi, w))
