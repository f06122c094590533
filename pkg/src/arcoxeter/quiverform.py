"""Quiver orientations of a Dynkin diagram and the data they carry.

The Coxeter element of an orientation is ``c = s_{j_n} ... s_{j_1}`` where
``(j_1, ..., j_n)`` lists the vertices sinks-first (j_1 a sink of Q, j_2 a
sink of S_{j_1}Q, ...).  With this convention ``c`` maps each vertex of a
level of the AR quiver to its predecessor on that level.
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .rootsys import RootSystem
from .weyl import WeylElement, _generators, word_to_element
from .words import CommClass, normal_form_letters


class NotASinkError(ValueError):
    pass


class OrientationError(ValueError):
    pass


@dataclass(frozen=True)
class Orientation:
    system: RootSystem
    arrows: frozenset[tuple[int, int]]

    def __post_init__(self):
        arrows = frozenset((int(a), int(b)) for a, b in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        edges = {frozenset(e) for e in self.system.edges}
        seen = [frozenset(a) for a in arrows]
        if any(e not in edges for e in seen):
            raise OrientationError("arrow outside the Dynkin diagram")
        if len(set(seen)) != len(seen) or set(seen) != edges:
            raise OrientationError("each Dynkin edge must be oriented exactly once")

    @classmethod
    def parse(cls, system: RootSystem, text: str) -> Orientation:
        """Parse ``"1>2,3>2"``; an empty string is the orientation of a rank-1 diagram."""
        arrows = []
        for part in filter(None, (p.strip() for p in text.split(","))):
            if ">" in part:
                a, b = part.split(">", 1)
            elif "<" in part:
                b, a = part.split("<", 1)
            else:
                raise OrientationError(f"cannot parse arrow {part!r}")
            try:
                arrows.append((int(a), int(b)))
            except ValueError:
                raise OrientationError(f"cannot parse arrow {part!r}") from None
        return cls(system, frozenset(arrows))

    def __str__(self) -> str:
        return ",".join(f"{a}>{b}" for a, b in sorted(self.arrows, key=lambda e: (min(e), max(e))))

    def sinks(self) -> tuple[int, ...]:
        return tuple(v for v in self.system.vertices if not any(a == v for a, _ in self.arrows))

    def sources(self) -> tuple[int, ...]:
        return tuple(v for v in self.system.vertices if not any(b == v for _, b in self.arrows))

    def reflect_sink(self, k: int) -> Orientation:
        if k not in self.sinks():
            raise NotASinkError(f"vertex {k} is not a sink of {self}")
        return Orientation(self.system, frozenset((b, a) if b == k else (a, b) for a, b in self.arrows))

    @cached_property
    def ringel(self) -> RingelForm:
        return ringel_form(self)


def all_orientations(system: RootSystem) -> Iterator[Orientation]:
    edges = system.edges
    for bits in itertools.product((0, 1), repeat=len(edges)):
        yield Orientation(system, frozenset((i, j) if b == 0 else (j, i) for (i, j), b in zip(edges, bits)))


def linear_orientation(system: RootSystem) -> Orientation:
    """Type A orientation 1 -> 2 -> ... -> n."""
    return Orientation(system, frozenset((i, i + 1) for i in range(1, system.rank)))


def sinks(q: Orientation) -> tuple[int, ...]:
    return q.sinks()


def sources(q: Orientation) -> tuple[int, ...]:
    return q.sources()


def reflect_sink(q: Orientation, k: int) -> Orientation:
    return q.reflect_sink(k)


@dataclass(frozen=True, eq=False)
class RingelForm:
    """Ringel form of an orientation.

    ``matrix[i-1, j-1]`` is R(alpha_i, alpha_j).  Read in fundamental-weight
    coordinates, column i is rho_i, so the same matrix is phi_R taking
    root coordinates to weight coordinates.
    """

    matrix: np.ndarray

    @property
    def phi(self) -> np.ndarray:
        return self.matrix

    def rho(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.matrix[:, i - 1])

    def __call__(self, a, b) -> int:
        return int(np.asarray(a) @ self.matrix @ np.asarray(b))


def ringel_form(q: Orientation) -> RingelForm:
    n = q.system.rank
    m = np.eye(n, dtype=np.int64)
    for a, b in q.arrows:
        m[a - 1, b - 1] = -1
    m.setflags(write=False)
    return RingelForm(m)


def is_adapted(word: Sequence[int], q: Orientation) -> bool:
    """Each letter is a sink of the quiver reflected at all earlier letters.

    Works for any letter sequence; reducedness is not checked here.
    """
    try:
        for i in word:
            q = q.reflect_sink(i)
    except NotASinkError:
        return False
    return True


def adapted_word(q: Orientation) -> tuple[int, ...]:
    """A reduced word of w0 adapted to q, taking the least admissible sink each step."""
    system = q.system
    gens = _generators(system)
    rt = np.eye(system.rank, dtype=np.int64)
    letters: list[int] = []
    while len(letters) < system.num_positive:
        for k in q.sinks():
            if not (rt[:, k - 1] < 0).any():
                break
        else:
            raise RuntimeError(f"adapted word for {q} stalled after {letters}")
        letters.append(k)
        rt = rt @ gens[k - 1][1]
        q = q.reflect_sink(k)
    return tuple(letters)


def adapted_class(q: Orientation) -> CommClass:
    return CommClass(normal_form_letters(q.system, adapted_word(q)))


def sink_sequence(q: Orientation) -> tuple[int, ...]:
    """Every vertex once, each a sink of the quiver reflected at the previous ones."""
    order: list[int] = []
    while len(order) < q.system.rank:
        k = next(v for v in q.sinks() if v not in order)
        order.append(k)
        q = q.reflect_sink(k)
    return tuple(order)


def coxeter_word(q: Orientation) -> tuple[int, ...]:
    return tuple(reversed(sink_sequence(q)))


def coxeter_element(q: Orientation) -> WeylElement:
    return word_to_element(q.system, coxeter_word(q))


def compatible_orders(q: Orientation) -> Iterator[tuple[int, ...]]:
    """All sinks-first orderings of the vertices (brute force over permutations)."""
    for perm in itertools.permutations(q.system.vertices):
        if is_adapted(perm, q):
            yield perm


def level_size(q: Orientation, i: int) -> int:
    """N_i(Q): occurrences of letter i in an adapted word."""
    return adapted_word(q).count(i)


def level_size_formula(q: Orientation, i: int) -> int:
    """(n + 1 + a_i - b_i) / 2 in type A, counting arrows on the path from i to i*."""
    system = q.system
    if system.dynkin.family != "A":
        raise ValueError("closed formula only holds in type A")
    n = system.rank
    istar = system.star[i - 1]
    lo, hi = sorted((i, istar))
    toward_i = toward_star = 0
    for v in range(lo, hi):
        forward = (v, v + 1) in q.arrows  # points toward hi
        if (forward and hi == i) or (not forward and lo == i):
            toward_i += 1
        else:
            toward_star += 1
    num = n + 1 + toward_i - toward_star
    assert num % 2 == 0
    return num // 2


def adapted_prefix_orientations(q: Orientation, word: Iterable[int]) -> list[Orientation]:
    """Q_1 = Q, Q_{j+1} = S_{i_j} Q_j along an adapted word."""
    out = [q]
    for i in word:
        q = q.reflect_sink(i)
        out.append(q)
    return out
