"""Weyl groups of quivers through the integer geometric representation.

``s_i(alpha_j) = alpha_j - A_ij alpha_i`` with ``A`` the Cartan matrix.  An
element is stored as the matrix of its action on the simple-root basis
(column ``j`` is the image of ``alpha_j``) together with its inverse; two
elements are equal iff their matrices are.
"""
from __future__ import annotations

import re
import threading
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .errors import CapExceeded, NotFiniteType, QuotientClosedError
from .quiver import IntMatrix, Quiver, cartan_matrix

Word = tuple[int, ...]


def _identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: IntMatrix, v) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def root_sign(v) -> int:
    """+1 / -1 for a positive / negative root, 0 for the zero vector."""
    for x in v:
        if x:
            return 1 if x > 0 else -1
    return 0


def is_positive(v) -> bool:
    return any(v) and all(x >= 0 for x in v)


@dataclass(frozen=True, eq=False)
class WeylElement:
    matrix: IntMatrix
    inverse: IntMatrix
    length: int
    group: "WeylGroup" = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.element(matmul(self.matrix, other.matrix),
                                  matmul(other.inverse, self.inverse))

    def inv(self) -> "WeylElement":
        return self.group.element(self.inverse, self.matrix)

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def left_descent(self, i: int) -> bool:
        return root_sign(_column(self.inverse, i - 1)) < 0

    def right_descent(self, i: int) -> bool:
        return root_sign(_column(self.matrix, i - 1)) < 0

    def left_mult(self, i: int) -> "WeylElement":
        s = self.group.reflections[i - 1]
        return self.group.element(matmul(s, self.matrix), matmul(self.inverse, s))

    def right_mult(self, i: int) -> "WeylElement":
        s = self.group.reflections[i - 1]
        return self.group.element(matmul(self.matrix, s), matmul(s, self.inverse))

    def reduced_word(self) -> Word:
        """Lexicographically first reduced word (greedy smallest left descent)."""
        word = []
        w = self
        while not w.is_identity:
            i = next(i for i in range(1, self.group.n + 1) if w.left_descent(i))
            word.append(i)
            w = w.left_mult(i)
        return tuple(word)

    def apply(self, root) -> tuple[int, ...]:
        return matvec(self.matrix, root)

    def to_json(self) -> dict:
        return {"word": list(self.reduced_word()), "length": self.length}

    def __repr__(self):
        word = "".join(f"s{i}" for i in self.reduced_word()) or "e"
        return f"<{word}>"


def _column(m: IntMatrix, j: int) -> tuple[int, ...]:
    return tuple(row[j] for row in m)


class WeylGroup:
    """The Weyl group of a quiver.  Holds the per-group Bruhat memo."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.n = quiver.n
        self.cartan = cartan_matrix(quiver)
        self.reflections = tuple(self._reflection(i) for i in range(quiver.n))
        self._bruhat: dict[tuple[IntMatrix, IntMatrix], bool] = {}
        self._lock = threading.Lock()
        self._elements: list[WeylElement] | None = None

    def _reflection(self, i: int) -> IntMatrix:
        n = self.n
        rows = [list(r) for r in _identity(n)]
        for j in range(n):
            rows[i][j] -= self.cartan[i][j]
        return tuple(map(tuple, rows))

    def _peel_length(self, matrix: IntMatrix) -> int:
        """Strip right descents until the identity; count the steps."""
        length = 0
        ident = _identity(self.n)
        while matrix != ident:
            for i in range(self.n):
                if root_sign(_column(matrix, i)) < 0:
                    matrix = matmul(matrix, self.reflections[i])
                    length += 1
                    break
            else:  # pragma: no cover - impossible for a group element
                raise QuotientClosedError("matrix is not a Weyl group element")
        return length

    def element(self, matrix: IntMatrix, inverse: IntMatrix) -> WeylElement:
        return WeylElement(matrix, inverse, self._peel_length(matrix), self)

    @property
    def identity(self) -> WeylElement:
        ident = _identity(self.n)
        return WeylElement(ident, ident, 0, self)

    def generator(self, i: int) -> WeylElement:
        s = self.reflections[i - 1]
        return WeylElement(s, s, 1, self)

    def evaluate(self, word) -> WeylElement:
        m = _identity(self.n)
        inv = m
        for i in word:
            if not 1 <= i <= self.n:
                raise ValueError(f"letter {i} out of range 1..{self.n}")
            s = self.reflections[i - 1]
            m = matmul(m, s)
            inv = matmul(s, inv)
        return self.element(m, inv)

    def enumerate(self, cap: int = 100_000) -> list[WeylElement]:
        """All elements by breadth-first search, ordered by length."""
        if self._elements is not None:
            if len(self._elements) > cap:
                raise CapExceeded(f"group has more than {cap} elements")
            return list(self._elements)
        e = self.identity
        seen = {e.matrix: e}
        queue = deque([e])
        while queue:
            w = queue.popleft()
            for i in range(1, self.n + 1):
                if w.right_descent(i):
                    continue
                m = matmul(w.matrix, self.reflections[i - 1])
                if m in seen:
                    continue
                if len(seen) >= cap:
                    raise CapExceeded(f"group has more than {cap} elements")
                u = WeylElement(m, matmul(self.reflections[i - 1], w.inverse),
                                w.length + 1, self)
                seen[m] = u
                queue.append(u)
        self._elements = list(seen.values())
        return list(self._elements)

    def longest_element(self) -> WeylElement:
        if not self.quiver.is_dynkin:
            raise NotFiniteType(f"{self.quiver} is not of Dynkin type")
        w = self.identity
        while True:
            for i in range(1, self.n + 1):
                if not w.right_descent(i):
                    w = w.right_mult(i)
                    break
            else:
                return w

    def positive_roots(self) -> list[tuple[int, ...]]:
        """Orbit of the simple roots, positive part (finite type only)."""
        if not self.quiver.is_dynkin:
            raise NotFiniteType(f"{self.quiver} is not of Dynkin type")
        simple = [tuple(int(i == j) for j in range(self.n)) for i in range(self.n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            r = queue.popleft()
            for s in self.reflections:
                u = matvec(s, r)
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return sorted((r for r in seen if is_positive(r)), key=lambda r: (sum(r), r))

    def bruhat_leq(self, v: WeylElement, w: WeylElement) -> bool:
        key = (v.matrix, w.matrix)
        with self._lock:
            hit = self._bruhat.get(key)
        if hit is not None:
            return hit
        if v.is_identity:
            res = True
        elif v.length > w.length:
            res = False
        elif v.length == w.length:
            res = v == w
        else:
            i = next(i for i in range(1, self.n + 1) if w.left_descent(i))
            sw = w.left_mult(i)
            if v.left_descent(i):
                res = self.bruhat_leq(v.left_mult(i), sw)
            else:
                res = self.bruhat_leq(v, sw)
        with self._lock:
            self._bruhat[key] = res
        return res


@lru_cache(maxsize=None)
def weyl_group(q: Quiver) -> WeylGroup:
    return WeylGroup(q)


def simple_reflection_matrix(q: Quiver, i: int) -> IntMatrix:
    return weyl_group(q).reflections[i - 1]


def evaluate_word(q: Quiver, word) -> WeylElement:
    return weyl_group(q).evaluate(word)


def left_descent(w: WeylElement, i: int) -> bool:
    return w.left_descent(i)


def is_reduced(q: Quiver, word) -> bool:
    return evaluate_word(q, word).length == len(word)


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    return w.group.bruhat_leq(v, w)


def bruhat_leq_subword(v: WeylElement, w: WeylElement) -> bool:
    """Subword definition: some subword of a reduced word of ``w`` gives ``v``.

    Exponential; meant as an oracle at small rank.
    """
    word = w.reduced_word()
    g = w.group
    for mask in product((0, 1), repeat=len(word)):
        if sum(mask) == v.length:
            sub = [a for a, keep in zip(word, mask) if keep]
            if g.evaluate(sub) == v:
                return True
    return False


def weak_leq_right(v: WeylElement, w: WeylElement) -> bool:
    return v.length + (v.inv() * w).length == w.length


def longest_element(q: Quiver) -> WeylElement:
    return weyl_group(q).longest_element()


def enumerate_group(q: Quiver, cap: int = 100_000) -> list[WeylElement]:
    return weyl_group(q).enumerate(cap)


def all_reduced_words(w: WeylElement) -> list[Word]:
    """Every reduced word of ``w`` (exponential; small rank only)."""
    if w.is_identity:
        return [()]
    out = []
    for i in range(1, w.group.n + 1):
        if w.left_descent(i):
            out.extend((i,) + rest for rest in all_reduced_words(w.left_mult(i)))
    return out


_S_FORM = re.compile(r"s(\d+)")


def parse_word(text: str) -> Word:
    """Parse ``"1 2 3"``, ``"1,2,3"`` or ``"s1s2s3"``; empty or ``"e"`` is the identity."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    if text.startswith("s"):
        compact = text.replace(" ", "")
        letters = _S_FORM.findall(compact)
        if "".join(f"s{x}" for x in letters) != compact:
            raise ValueError(f"cannot parse word {text!r}")
        return tuple(int(x) for x in letters)
    return tuple(int(x) for x in re.split(r"[\s,]+", text) if x)
