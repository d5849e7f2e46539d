"""Independent brute-force oracles.  None of these call the code paths they
are used to check."""
from __future__ import annotations

from collections import deque
from itertools import permutations, product

import numpy as np


def reflection_matrices(cartan):
    n = len(cartan)
    out = []
    for i in range(n):
        s = np.eye(n, dtype=np.int64)
        s[i, :] -= np.array(cartan[i], dtype=np.int64)
        out.append(s)
    return out


def bfs_word_lengths(cartan, cap=10_000):
    """Minimal word length of every element, keyed by matrix bytes."""
    refl = reflection_matrices(cartan)
    n = len(cartan)
    start = np.eye(n, dtype=np.int64)
    dist = {start.tobytes(): 0}
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for s in refl:
            u = m @ s
            key = u.tobytes()
            if key not in dist:
                dist[key] = dist[m.tobytes()] + 1
                queue.append(u)
                if len(dist) > cap:
                    raise RuntimeError("group too large")
    return dist


def word_matrix(cartan, word):
    refl = reflection_matrices(cartan)
    m = np.eye(len(cartan), dtype=np.int64)
    for i in word:
        m = m @ refl[i - 1]
    return m


# -- symmetric group model of type A_n (s_i swaps i and i+1) ----------------

def perm_of_word(word, n):
    """Permutation of 1..n+1 as a tuple (one-line notation) for s_{i1} ... s_{it}."""
    p = list(range(1, n + 2))
    for i in word:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def perm_length(p):
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def perm_bruhat_leq(v, w):
    """Tableau criterion: compare sorted prefixes of one-line notation."""
    return all(a <= b for i in range(1, len(v) + 1)
               for a, b in zip(sorted(v[:i]), sorted(w[:i])))


def all_perms(n):
    return list(permutations(range(1, n + 2)))


def reduced_words_brute(cartan, target, length):
    """All words of the given length whose product equals ``target``."""
    n = len(cartan)
    key = np.array(target, dtype=np.int64).tobytes()
    out = []
    for word in product(range(1, n + 1), repeat=length):
        if word_matrix(cartan, word).tobytes() == key:
            out.append(word)
    return out


def positive_roots_brute(cartan, max_height=40):
    """Positive real roots by closing simple roots under reflections."""
    refl = reflection_matrices(cartan)
    n = len(cartan)
    seen = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    queue = deque(seen)
    while queue:
        r = queue.popleft()
        for s in refl:
            u = tuple(int(x) for x in s @ np.array(r))
            if u not in seen and sum(abs(x) for x in u) <= max_height:
                seen.add(u)
                queue.append(u)
    return {r for r in seen if all(x >= 0 for x in r)}
