"""Explicit representations over F_p and brute-force category predicates.

Modules are right modules over the path algebra, i.e. representations of the
opposite quiver: for an arrow ``(i, j)`` (meaning ``i -> j``) the stored matrix
maps the space at ``j`` to the space at ``i`` and has shape ``(dim_i, dim_j)``.
With this convention ``P_1`` is the simple projective for an admissibly
numbered quiver.

In Dynkin type every indecomposable has a one-dimensional endomorphism ring,
and is determined by its dimension vector, so a subcategory is modelled as a
set of positive roots (an *IndecSet*).
"""
from __future__ import annotations

import itertools
import threading
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .arquiver import PreprojIndex, enumerate_preprojectives
from .errors import (DecompositionFailure, FieldTooLargeForEnumeration,
                     NotARoot, NotFiniteType)
from .quiver import Quiver

Root = tuple[int, ...]
IndecSet = frozenset

DEFAULT_P = 5
RETRY_BUDGET = 32


@dataclass(eq=False)
class Rep:
    n: int
    arrows: tuple[tuple[int, int], ...]
    p: int
    dim: tuple[int, ...]
    mats: tuple[np.ndarray, ...]

    def __post_init__(self):
        self.mats = tuple(np.array(m, dtype=np.int64).reshape(self.dim[i - 1], self.dim[j - 1]) % self.p
                          for m, (i, j) in zip(self.mats, self.arrows))

    @property
    def total_dim(self) -> int:
        return sum(self.dim)

    def __repr__(self):
        return f"Rep(dim={self.dim}, p={self.p})"


def zero_rep(n: int, arrows, p: int) -> Rep:
    dims = (0,) * n
    return Rep(n, tuple(arrows), p, dims, tuple(np.zeros((0, 0)) for _ in arrows))


def direct_sum(reps, n: int | None = None, arrows=None, p: int | None = None) -> Rep:
    reps = list(reps)
    if not reps:
        return zero_rep(n, arrows, p)
    first = reps[0]
    dim = tuple(sum(r.dim[v] for r in reps) for v in range(first.n))
    mats = []
    for m, (i, j) in enumerate(first.arrows):
        block = np.zeros((dim[i - 1], dim[j - 1]), dtype=np.int64)
        ri = rj = 0
        for r in reps:
            a = r.mats[m]
            block[ri:ri + a.shape[0], rj:rj + a.shape[1]] = a
            ri += a.shape[0]
            rj += a.shape[1]
        mats.append(block)
    return Rep(first.n, first.arrows, first.p, dim, tuple(mats))


def dual(rep: Rep) -> Rep:
    """k-dual: a representation of the quiver with every arrow reversed."""
    arrows = tuple((j, i) for i, j in rep.arrows)
    return Rep(rep.n, arrows, rep.p, rep.dim, tuple(m.T for m in rep.mats))


def conjugate(rep: Rep, rng: np.random.Generator) -> Rep:
    """An isomorphic copy obtained by random base changes at every vertex."""
    gs, ginvs = [], []
    for d in rep.dim:
        while True:
            g = rng.integers(0, rep.p, size=(d, d))
            if linalg.rank(g, rep.p) == d:
                break
        gs.append(g)
        ginvs.append(linalg.inverse(g, rep.p) if d else g)
    mats = tuple((gs[i - 1] @ m @ ginvs[j - 1]) % rep.p for m, (i, j) in zip(rep.mats, rep.arrows))
    return Rep(rep.n, rep.arrows, rep.p, rep.dim, mats)


# -- morphisms -------------------------------------------------------------

def _offsets(x: Rep, y: Rep):
    offs, pos = [], 0
    for v in range(x.n):
        offs.append(pos)
        pos += y.dim[v] * x.dim[v]
    return offs, pos


def hom_space(x: Rep, y: Rep) -> list[tuple[np.ndarray, ...]]:
    """Basis of Hom(x, y); each element is a tuple of vertex matrices ``f_v``.

    Unknowns are the entries of ``f_v`` (shape ``dim y_v x dim x_v``), subject
    to ``f_i X_a = Y_a f_j`` for every arrow ``a = (i, j)``.
    """
    p = x.p
    offs, nvars = _offsets(x, y)
    if nvars == 0:
        return []
    blocks = []
    for m, (i, j) in enumerate(x.arrows):
        xi, xj, yi, yj = x.dim[i - 1], x.dim[j - 1], y.dim[i - 1], y.dim[j - 1]
        if yi * xj == 0:
            continue
        eq = np.zeros((yi * xj, nvars), dtype=np.int64)
        # row-major vec:  vec(f_i X) = (I kron X^T) vec(f_i)
        if xi:
            eq[:, offs[i - 1]:offs[i - 1] + yi * xi] += np.kron(np.eye(yi, dtype=np.int64), x.mats[m].T)
        # vec(Y f_j) = (Y kron I) vec(f_j)
        if yj:
            eq[:, offs[j - 1]:offs[j - 1] + yj * xj] -= np.kron(y.mats[m], np.eye(xj, dtype=np.int64))
        blocks.append(eq)
    system = np.vstack(blocks) if blocks else np.zeros((0, nvars), dtype=np.int64)
    null = linalg.nullspace(system % p, p, nvars)
    out = []
    for vec in null:
        out.append(tuple(vec[offs[v]:offs[v] + y.dim[v] * x.dim[v]].reshape(y.dim[v], x.dim[v])
                         for v in range(x.n)))
    return out


def is_morphism(f, x: Rep, y: Rep) -> bool:
    p = x.p
    return all((((f[i - 1] @ x.mats[m]) - (y.mats[m] @ f[j - 1])) % p == 0).all()
               for m, (i, j) in enumerate(x.arrows))


def euler_form(arrows, x, y) -> int:
    """``<x, y> = dim Hom - dim Ext^1`` for representations with our convention."""
    total = sum(a * b for a, b in zip(x, y))
    for i, j in arrows:
        total -= x[j - 1] * y[i - 1]
    return total


def subrep(m: Rep, spaces) -> Rep:
    """Subrepresentation on the given per-vertex subspaces (their echelon bases)."""
    p = m.p
    dim = tuple(s.dim for s in spaces)
    mats = []
    for a, (i, j) in enumerate(m.arrows):
        cols = []
        for b in spaces[j - 1].basis:
            cols.append(spaces[i - 1].coords((m.mats[a] @ b) % p))
        mats.append(np.array(cols, dtype=np.int64).T.reshape(dim[i - 1], dim[j - 1]))
    return Rep(m.n, m.arrows, p, dim, tuple(mats))


def quotient_rep(m: Rep, spaces) -> Rep:
    """``m`` modulo the subrepresentation given by per-vertex subspaces."""
    p = m.p
    free = [[c for c in range(m.dim[v]) if c not in set(spaces[v].pivots)] for v in range(m.n)]
    dim = tuple(len(f) for f in free)
    mats = []
    for a, (i, j) in enumerate(m.arrows):
        block = np.zeros((dim[i - 1], dim[j - 1]), dtype=np.int64)
        for t, c in enumerate(free[j - 1]):
            img = spaces[i - 1].reduce(m.mats[a][:, c])
            block[:, t] = img[free[i - 1]]
        mats.append(block)
    return Rep(m.n, m.arrows, p, dim, tuple(mats))


def _image_spaces(y: Rep, maps) -> list[linalg.Subspace]:
    """Per-vertex span of the images of the given morphisms into ``y``."""
    out = []
    for v in range(y.n):
        cols = [f[v].T for f in maps if f[v].size]
        rows = np.vstack(cols) if cols else np.zeros((0, y.dim[v]), dtype=np.int64)
        out.append(linalg.Subspace(rows, y.dim[v], y.p))
    return out


def _kernel_spaces(x: Rep, maps) -> list[linalg.Subspace]:
    """Per-vertex common kernel of the given morphisms out of ``x``."""
    out = []
    for v in range(x.n):
        rows = [f[v] for f in maps if f[v].size]
        stacked = np.vstack(rows) if rows else np.zeros((0, x.dim[v]), dtype=np.int64)
        out.append(linalg.Subspace(linalg.nullspace(stacked, x.p, x.dim[v]), x.dim[v], x.p))
    return out


# -- decomposition ---------------------------------------------------------

def _endo_split(m: Rep, rng: np.random.Generator):
    """Find ``psi`` in End(m) with ``psi^N`` neither zero nor invertible."""
    p = m.p
    basis = hom_space(m, m)
    if len(basis) <= 1:
        return None, len(basis)
    big = m.total_dim
    for _ in range(RETRY_BUDGET):
        coeffs = rng.integers(0, p, size=len(basis))
        phi = [sum(int(c) * f[v] for c, f in zip(coeffs, basis)) % p for v in range(m.n)]
        for lam in range(p):
            psi = [(phi[v] - lam * np.eye(m.dim[v], dtype=np.int64)) % p for v in range(m.n)]
            powered = [linalg.matpow(psi[v], big, p) for v in range(m.n)]
            r = sum(linalg.rank(a, p) for a in powered)
            if 0 < r < big:
                return powered, len(basis)
    raise DecompositionFailure(f"no splitting endomorphism found for {m!r}")


def _decompose(m: Rep, rng) -> list[Root]:
    if m.total_dim == 0:
        return []
    powered, end_dim = _endo_split(m, rng)
    if powered is None:
        if end_dim != 1:
            raise DecompositionFailure(f"{m!r} has trivial endomorphism ring")
        return [m.dim]
    p = m.p
    kernel = [linalg.Subspace(linalg.nullspace(a, p, a.shape[1]), m.dim[v], p)
              for v, a in enumerate(powered)]
    image = [linalg.Subspace(a.T, m.dim[v], p) for v, a in enumerate(powered)]
    return _decompose(subrep(m, kernel), rng) + _decompose(subrep(m, image), rng)


def decompose(m: Rep, seed: int = 0, roots=None) -> Counter:
    """Krull-Schmidt multiset of dimension vectors of indecomposable summands.

    Every summand found has ``dim End = 1``; if ``roots`` is given each
    summand's dimension vector must be among them.
    """
    parts = _decompose(m, np.random.default_rng(seed))
    if roots is not None:
        bad = [d for d in parts if d not in roots]
        if bad:
            raise DecompositionFailure(f"summands {bad} are not positive roots")
    return Counter(parts)


# -- catalogue of indecomposables ------------------------------------------

def build_indecomposable(q: Quiver, root, p: int = DEFAULT_P, seed: int = 0,
                         tries: int = 500) -> Rep:
    """An indecomposable with dimension vector ``root`` (generic random maps)."""
    if not q.is_dynkin:
        raise NotFiniteType(f"{q} is not of Dynkin type")
    root = tuple(root)
    roots = {d for _, d in enumerate_preprojectives(q).rows}
    if root not in roots:
        raise NotARoot(f"{root} is not a positive root of {q.dynkin_type}")
    rng = np.random.default_rng(seed)
    for _ in range(tries):
        mats = tuple(rng.integers(0, p, size=(root[i - 1], root[j - 1])) for i, j in q.arrows)
        rep = Rep(q.n, q.arrows, p, root, mats)
        if len(hom_space(rep, rep)) == 1:
            return rep
    raise DecompositionFailure(f"could not construct indecomposable {root} over F_{p}")


class Catalogue:
    """One indecomposable per positive root of a Dynkin quiver, plus caches."""

    def __init__(self, q: Quiver, p: int = DEFAULT_P, seed: int = 0):
        if not q.is_dynkin:
            raise NotFiniteType(f"{q} is not of Dynkin type")
        self.quiver = q
        self.p = p
        self.seed = seed
        table = enumerate_preprojectives(q)
        self.keys: tuple[Root, ...] = tuple(d for _, d in table.rows)
        self.index: dict[Root, PreprojIndex] = {d: idx for idx, d in table.rows}
        self.root_of: dict[PreprojIndex, Root] = {idx: d for idx, d in table.rows}
        self.reps: dict[Root, Rep] = {
            d: build_indecomposable(q, d, p, seed + t) for t, d in enumerate(self.keys)}
        self.full = frozenset(self.keys)
        self._lock = threading.Lock()
        self._homs: dict[tuple[Root, Root], list] = {}
        self._images: dict[tuple[Root, Root], list] = {}
        self._middle: dict[tuple[Root, Root], frozenset] = {}

    def hom(self, x: Root, y: Root):
        key = (x, y)
        with self._lock:
            if key in self._homs:
                return self._homs[key]
        basis = hom_space(self.reps[x], self.reps[y])
        with self._lock:
            self._homs[key] = basis
        return basis

    def hom_dim(self, x: Root, y: Root) -> int:
        return len(self.hom(x, y))

    def ext_dim(self, z: Root, x: Root) -> int:
        """dim Ext^1(z, x)."""
        return self.hom_dim(z, x) - euler_form(self.quiver.arrows, z, x)

    def _image(self, x: Root, n: Root):
        key = (x, n)
        with self._lock:
            if key in self._images:
                return self._images[key]
        spaces = _image_spaces(self.reps[n], self.hom(x, n))
        with self._lock:
            self._images[key] = spaces
        return spaces

    def decompose(self, m: Rep) -> Counter:
        return decompose(m, self.seed, roots=self.full)

    def as_indices(self, s) -> list[PreprojIndex]:
        return sorted((self.index[d] for d in s), key=lambda i: (i.k, i.j))

    def middle_terms(self, x: Root, z: Root, max_hom_dim: int = 6) -> frozenset:
        """All middle terms ``M`` (as sorted root tuples) of exact sequences
        ``0 -> x -> M -> z -> 0``, found by enumerating Hom(x, M) over F_p."""
        key = (x, z)
        with self._lock:
            if key in self._middle:
                return self._middle[key]
        target = tuple(a + b for a, b in zip(x, z))
        found = set()
        for combo in _root_multisets(self.keys, target):
            m = direct_sum([self.reps[r] for r in combo])
            basis = hom_space(self.reps[x], m)
            if not basis:
                continue
            if len(basis) > max_hom_dim:
                raise FieldTooLargeForEnumeration(
                    f"Hom({x}, {combo}) has dimension {len(basis)} > {max_hom_dim}")
            for coeffs in _projective_points(len(basis), self.p):
                f = [sum(int(c) * g[v] for c, g in zip(coeffs, basis)) % self.p
                     for v in range(self.quiver.n)]
                if any(linalg.rank(f[v], self.p) < x[v] for v in range(self.quiver.n)):
                    continue
                image = [linalg.Subspace(f[v].T, m.dim[v], self.p) for v in range(self.quiver.n)]
                coker = quotient_rep(m, image)
                if len(hom_space(coker, coker)) == 1:
                    found.add(combo)
                    break
        result = frozenset(found)
        with self._lock:
            self._middle[key] = result
        return result


def _root_multisets(roots, target, start: int = 0):
    """Multisets of roots (non-decreasing index order) summing to ``target``."""
    if not any(target):
        yield ()
        return
    for t in range(start, len(roots)):
        r = roots[t]
        rest = tuple(a - b for a, b in zip(target, r))
        if min(rest) < 0:
            continue
        for tail in _root_multisets(roots, rest, t):
            yield (r,) + tail


def _projective_points(d: int, p: int):
    """One nonzero vector of F_p^d per line (first nonzero coordinate 1)."""
    for lead in range(d):
        for tail in itertools.product(range(p), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


@lru_cache(maxsize=None)
def catalogue(q: Quiver, p: int = DEFAULT_P, seed: int = 0) -> Catalogue:
    return Catalogue(q, p, seed)


# -- category predicates ---------------------------------------------------

def trace_dim(cat: Catalogue, s, n: Root) -> int:
    spaces = None
    for x in s:
        img = cat._image(x, n)
        spaces = img if spaces is None else [a + b for a, b in zip(spaces, img)]
    return 0 if spaces is None else sum(sp.dim for sp in spaces)


def is_generated(cat: Catalogue, s, n: Root) -> bool:
    """Is ``n`` a quotient of an object of add(s)?"""
    return trace_dim(cat, s, n) == sum(n)


def is_cogenerated(cat: Catalogue, s, n: Root) -> bool:
    """Does ``n`` embed into an object of add(s)?"""
    maps = [f for y in s for f in cat.hom(n, y)]
    return all(k.dim == 0 for k in _kernel_spaces(cat.reps[n], maps))


def is_quotient_closed(cat: Catalogue, s) -> bool:
    s = frozenset(s)
    return not any(is_generated(cat, s, n) for n in cat.keys if n not in s)


def is_subclosed(cat: Catalogue, s) -> bool:
    s = frozenset(s)
    return not any(is_cogenerated(cat, s, n) for n in cat.keys if n not in s)


def is_extension_closed(cat: Catalogue, s) -> bool:
    s = frozenset(s)
    for x in s:
        for z in s:
            if cat.ext_dim(z, x) == 0:
                continue
            for combo in cat.middle_terms(x, z):
                if any(r not in s for r in combo):
                    return False
    return True


def is_torsion_class(cat: Catalogue, s) -> bool:
    return is_quotient_closed(cat, s) and is_extension_closed(cat, s)


def is_torsion_free_class(cat: Catalogue, s) -> bool:
    return is_subclosed(cat, s) and is_extension_closed(cat, s)


def all_subsets(cat: Catalogue):
    keys = cat.keys
    for mask in range(1 << len(keys)):
        yield frozenset(k for t, k in enumerate(keys) if mask >> t & 1)


def quotient_closed_sets(cat: Catalogue) -> list[frozenset]:
    return [s for s in all_subsets(cat) if is_quotient_closed(cat, s)]


def subclosed_sets(cat: Catalogue) -> list[frozenset]:
    return [s for s in all_subsets(cat) if is_subclosed(cat, s)]


def complement(cat: Catalogue, missing) -> frozenset:
    """IndecSet of a cofinite subcategory given its missing PreprojIndex list."""
    return cat.full - {cat.root_of[idx] for idx in missing}
