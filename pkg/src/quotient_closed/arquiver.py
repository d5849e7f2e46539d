"""Dimension vectors of the preprojective component.

Modules are right modules over the path algebra, so ``dim(P_i)_j`` is the
number of paths ``j -> i`` and ``P_1`` is simple.  The inverse Auslander-Reiten
translate is computed two ways: by the Coxeter matrix (fast path) and by
knitting the mesh relations (oracle).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import NotFiniteType
from .quiver import IntMatrix, Quiver, euler_matrix
from .weyl import matvec

DimVector = tuple[int, ...]


class PreprojIndex(NamedTuple):
    """The module tau^{-k} P_j."""

    j: int
    k: int

    def label(self) -> str:
        if self.k == 0:
            return f"P{self.j}"
        return f"t^-{self.k}P{self.j}"

    def to_json(self) -> dict:
        return {"j": self.j, "k": self.k}


@dataclass(frozen=True)
class PreprojTable:
    quiver: Quiver
    rows: tuple[tuple[PreprojIndex, DimVector], ...]
    vanish: dict[int, int] | None  # vertex -> first k with tau^{-k}P_j = 0

    def index_of(self, idx: PreprojIndex) -> int:
        return [r[0] for r in self.rows].index(idx)

    def dim(self, idx: PreprojIndex) -> DimVector:
        for key, d in self.rows:
            if key == idx:
                return d
        raise KeyError(idx)

    def by_dim(self) -> dict[DimVector, PreprojIndex]:
        return {d: idx for idx, d in self.rows}

    def to_json(self) -> dict:
        return {"rows": [{"j": i.j, "k": i.k, "dim": list(d)} for i, d in self.rows]}


def projective_dim_vectors(q: Quiver) -> list[DimVector]:
    n = q.n
    # paths[j][i] = number of paths j -> i; admissible numbering means a
    # single pass in increasing target order suffices
    paths = [[int(a == b) for b in range(n + 1)] for a in range(n + 1)]
    for target in range(1, n + 1):
        for src, tgt in q.arrows:
            if tgt == target:
                for j in range(1, n + 1):
                    paths[j][target] += paths[j][src]
    return [tuple(paths[j][i] for j in range(1, n + 1)) for i in range(1, n + 1)]


def _inverse(m: IntMatrix) -> IntMatrix:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    out = []
    for row in a:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(v) for v in vals))
    return tuple(out)


def _mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in cols) for r in a)


def _transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a))


def coxeter_matrix(q: Quiver) -> IntMatrix:
    """``Phi`` with ``dim tau(M) = Phi dim M`` for non-projective ``M``."""
    e = euler_matrix(q)
    phi = _mul(_transpose(_inverse(e)), e)
    return tuple(tuple(-x for x in row) for row in phi)


def inverse_coxeter_matrix(q: Quiver) -> IntMatrix:
    e = euler_matrix(q)
    phi_inv = _mul(_inverse(e), _transpose(e))
    return tuple(tuple(-x for x in row) for row in phi_inv)


def preproj_dim(q: Quiver, j: int, k: int) -> DimVector | None:
    """``dim tau^{-k} P_j``, or None once the module has vanished."""
    v = projective_dim_vectors(q)[j - 1]
    phi_inv = inverse_coxeter_matrix(q)
    for _ in range(k):
        v = matvec(phi_inv, v)
        if not any(v) or min(v) < 0:
            return None
    return v


def enumerate_preprojectives(q: Quiver, k_max: int = 50) -> PreprojTable:
    projs = projective_dim_vectors(q)
    phi_inv = inverse_coxeter_matrix(q)
    current: dict[int, DimVector | None] = {j: projs[j - 1] for j in range(1, q.n + 1)}
    vanish: dict[int, int] = {}
    rows = []
    k = 0
    while True:
        for j in range(1, q.n + 1):
            v = current[j]
            if v is not None:
                rows.append((PreprojIndex(j, k), v))
        if q.is_dynkin:
            if all(v is None for v in current.values()):
                break
        elif k >= k_max:
            break
        k += 1
        for j in range(1, q.n + 1):
            v = current[j]
            if v is None:
                continue
            u = matvec(phi_inv, v)
            if not any(u) or min(u) < 0:
                current[j] = None
                vanish[j] = k
            else:
                current[j] = u
    return PreprojTable(q, tuple(rows), vanish if q.is_dynkin else None)


def knit_preprojectives(q: Quiver, k_max: int = 50) -> PreprojTable:
    """Mesh recursion ``dim tau^{-1}M = (sum of middle terms) - dim M``.

    For ``M = tau^{-k}P_j`` the middle term is the sum of ``tau^{-k}P_i`` over
    arrows ``j -> i`` and ``tau^{-k-1}P_i`` over arrows ``i -> j``.  A result
    that is zero or has a negative entry means ``M`` was injective.
    """
    projs = projective_dim_vectors(q)
    zero = (0,) * q.n
    layers: list[dict[int, DimVector | None]] = [
        {j: projs[j - 1] for j in range(1, q.n + 1)}]
    vanish: dict[int, int] = {}
    while True:
        prev = layers[-1]
        if q.is_dynkin and all(v is None for v in prev.values()):
            break
        if not q.is_dynkin and len(layers) > k_max:
            break
        nxt: dict[int, DimVector | None] = {}
        for j in range(1, q.n + 1):
            m = prev[j]
            if m is None:
                nxt[j] = None
                continue
            total = list(zero)
            for a, b in q.arrows:
                if a == j and prev[b] is not None:
                    total = [x + y for x, y in zip(total, prev[b])]
                if b == j and nxt[a] is not None:
                    total = [x + y for x, y in zip(total, nxt[a])]
            u = tuple(x - y for x, y in zip(total, m))
            if not any(u) or min(u) < 0:
                nxt[j] = None
                vanish[j] = len(layers)
            else:
                nxt[j] = u
        layers.append(nxt)
    rows = []
    for k, layer in enumerate(layers):
        for j in range(1, q.n + 1):
            if layer[j] is not None:
                rows.append((PreprojIndex(j, k), layer[j]))
    return PreprojTable(q, tuple(rows), vanish if q.is_dynkin else None)


def ar_word_w0(q: Quiver) -> tuple[int, ...]:
    if not q.is_dynkin:
        raise NotFiniteType(f"{q} is not of Dynkin type")
    return tuple(idx.j for idx, _ in enumerate_preprojectives(q).rows)


def irreducible_maps(table: PreprojTable) -> list[tuple[PreprojIndex, PreprojIndex]]:
    """Arrows of the preprojective component restricted to the table rows."""
    present = {idx for idx, _ in table.rows}
    out = []
    for idx, _ in table.rows:
        for a, b in table.quiver.arrows:
            if idx.j == a:
                tgt = PreprojIndex(b, idx.k)
            elif idx.j == b:
                tgt = PreprojIndex(a, idx.k + 1)
            else:
                continue
            if tgt in present:
                out.append((idx, tgt))
    return out


def emit_dot(table: PreprojTable, missing=None) -> str:
    marked = set(missing.missing) if missing is not None else set()
    lines = ["digraph preprojective {", "  rankdir=LR;"]
    for idx, d in table.rows:
        name = f"j{idx.j}k{idx.k}"
        attrs = f'label="{idx.label()}\\n{"".join(map(str, d))}"'
        if idx in marked:
            attrs += ", style=filled, fillcolor=gray"
        lines.append(f"  {name} [{attrs}];")
    for src, tgt in irreducible_maps(table):
        lines.append(f"  j{src.j}k{src.k} -> j{tgt.j}k{tgt.k};")
    lines.append("}")
    return "\n".join(lines) + "\n"
