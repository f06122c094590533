"""Weyl group elements acting exactly on the weight and root lattices.

An element is stored as two integer matrices: its action on fundamental-weight
coordinates (column i = image of omega_i) and on simple-root coordinates.  The
two are related by ``root = inverse(omega).T``, so inversion costs nothing.

Parabolic conventions: ``W^J`` is generated by ``s_j`` for j in J and
``W^(J)`` by ``s_j`` for j outside J.  Functions here take the generating set
of the subgroup directly.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache

import numpy as np

from .rootsys import RootSystem, Root, Weight


class WeylElement:
    __slots__ = ("system", "omega", "root", "_key")

    def __init__(self, system: RootSystem, omega: np.ndarray, root: np.ndarray):
        omega.setflags(write=False)
        root.setflags(write=False)
        self.system = system
        self.omega = omega
        self.root = root
        self._key = omega.tobytes()

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(self.system, self.omega @ other.omega, self.root @ other.root)

    def inverse(self) -> WeylElement:
        return WeylElement(self.system, self.root.T.copy(), self.omega.T.copy())

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"WeylElement({self.system.dynkin}, word={reduced_word(self)})"

    def apply_weight(self, w: Sequence[int]) -> Weight:
        return tuple(int(x) for x in self.omega @ np.asarray(w, dtype=np.int64))

    def apply_root(self, v: Sequence[int]) -> Root:
        return tuple(int(x) for x in self.root @ np.asarray(v, dtype=np.int64))

    def is_identity(self) -> bool:
        return self == identity(self.system)

    def has_right_descent(self, i: int) -> bool:
        # l(w s_i) < l(w)  iff  w(alpha_i) < 0
        return bool((self.root[:, i - 1] < 0).any())

    def has_left_descent(self, i: int) -> bool:
        # l(s_i w) < l(w)  iff  w^-1(alpha_i) < 0; w^-1 on roots is omega.T
        return bool((self.omega[i - 1, :] < 0).any())

    def right_descents(self) -> tuple[int, ...]:
        return tuple(i for i in self.system.vertices if self.has_right_descent(i))

    def left_descents(self) -> tuple[int, ...]:
        return tuple(i for i in self.system.vertices if self.has_left_descent(i))

    def length(self) -> int:
        img = self.root @ self.system.positive_root_matrix()
        return int((img < 0).any(axis=0).sum())


@lru_cache(maxsize=None)
def _generators(system: RootSystem) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    n = system.rank
    gens = []
    for i in range(n):
        om = np.eye(n, dtype=np.int64)
        om[:, i] -= system.cartan[i]
        rt = np.eye(n, dtype=np.int64)
        rt[i, :] -= system.cartan[i]
        gens.append((om, rt))
    return tuple(gens)


def identity(system: RootSystem) -> WeylElement:
    n = system.rank
    return WeylElement(system, np.eye(n, dtype=np.int64), np.eye(n, dtype=np.int64))


def simple_reflection(system: RootSystem, i: int) -> WeylElement:
    om, rt = _generators(system)[i - 1]
    return WeylElement(system, om.copy(), rt.copy())


def word_to_element(system: RootSystem, word: Iterable[int]) -> WeylElement:
    gens = _generators(system)
    n = system.rank
    om = np.eye(n, dtype=np.int64)
    rt = np.eye(n, dtype=np.int64)
    for i in word:
        if not 1 <= i <= n:
            raise ValueError(f"letter {i} outside 1..{n}")
        g_om, g_rt = gens[i - 1]
        om = om @ g_om
        rt = rt @ g_rt
    return WeylElement(system, om, rt)


def length(w: WeylElement) -> int:
    return w.length()


def is_reduced(system: RootSystem, word: Sequence[int]) -> bool:
    """True when no prefix extension ever decreases the length."""
    gens = _generators(system)
    n = system.rank
    rt = np.eye(n, dtype=np.int64)
    for i in word:
        if not 1 <= i <= n:
            raise ValueError(f"letter {i} outside 1..{n}")
        if (rt[:, i - 1] < 0).any():
            return False
        rt = rt @ gens[i - 1][1]
    return True


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """Lexicographically first reduced word, found by stripping left descents."""
    letters = []
    gens = _generators(w.system)
    om, rt = w.omega, w.root
    while True:
        for i in w.system.vertices:
            if (om[i - 1, :] < 0).any():
                g_om, g_rt = gens[i - 1]
                om, rt = g_om @ om, g_rt @ rt
                letters.append(i)
                break
        else:
            return tuple(letters)


def longest_element(system: RootSystem) -> WeylElement:
    return _longest(system)


@lru_cache(maxsize=None)
def _longest(system: RootSystem) -> WeylElement:
    w = identity(system)
    while True:
        for i in system.vertices:
            if not w.has_right_descent(i):
                w = w * simple_reflection(system, i)
                break
        else:
            return w


def min_coset_rep(w: WeylElement, gens: Iterable[int]) -> WeylElement:
    """Minimal-length element of the left coset ``w <gens>``."""
    gens = tuple(gens)
    g = _generators(w.system)
    om, rt = w.omega, w.root
    changed = True
    while changed:
        changed = False
        for j in gens:
            if (rt[:, j - 1] < 0).any():
                om, rt = om @ g[j - 1][0], rt @ g[j - 1][1]
                changed = True
    return WeylElement(w.system, om, rt)


def min_double_coset_rep(x: WeylElement, left: Iterable[int], right: Iterable[int]) -> WeylElement:
    """Minimal element of ``<left> x <right>``.

    Strips all left descents in ``left``, then all right descents in
    ``right``, and repeats until neither side moves.
    """
    left, right = tuple(left), tuple(right)
    g = _generators(x.system)
    om, rt = x.omega, x.root
    while True:
        moved = False
        again = True
        while again:
            again = False
            for j in left:
                if (om[j - 1, :] < 0).any():
                    om, rt = g[j - 1][0] @ om, g[j - 1][1] @ rt
                    again = moved = True
        again = True
        while again:
            again = False
            for j in right:
                if (rt[:, j - 1] < 0).any():
                    om, rt = om @ g[j - 1][0], rt @ g[j - 1][1]
                    again = moved = True
        if not moved:
            return WeylElement(x.system, om, rt)


def maximal_parabolic(system: RootSystem, i: int) -> tuple[int, ...]:
    """Generators of the stabiliser of omega_i, i.e. all vertices except i."""
    return tuple(j for j in system.vertices if j != i)


def coset_adjacent(w: WeylElement, i: int, w2: WeylElement, j: int) -> bool:
    """Whether ``w W^(i)`` and ``w2 W^(j)`` intersect (adjacent facets)."""
    if i == j:
        raise ValueError("adjacency is only defined between distinct vertices")
    system = w.system
    x = w.inverse() * w2
    rep = min_double_coset_rep(x, maximal_parabolic(system, i), maximal_parabolic(system, j))
    return rep.is_identity()


def erase_to_min_rep(system: RootSystem, word: Sequence[int], i: int) -> tuple[int, ...]:
    """Minimal presentation of ``w omega_i`` by erasing letters from a reduced word.

    Keeps letter k exactly when omega_i pairs nontrivially with
    ``s_{i_m} ... s_{i_{k+1}}(alpha_{i_k})``.
    """
    kept = []
    m = len(word)
    for k in range(m):
        beta = system.simple_root(word[k])
        for letter in word[k + 1:]:
            beta = system.simple_reflect_root(letter, beta)
        if beta[i - 1] != 0:
            kept.append(word[k])
    return tuple(kept)
