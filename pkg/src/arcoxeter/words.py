"""Reduced words, root orders, commutation classes and the braid-move census.

A commutation class is handled through its heap: positions of a word ordered
by the transitive closure of "earlier and not commuting".  The canonical
representative is the Cartier-Foata normal form (greedy layers of pairwise
commuting letters, each layer sorted ascending).
"""
from __future__ import annotations

import logging
import time
from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .rootsys import DynkinType, Root, RootSystem, build_root_system
from .weyl import (
    WeylElement,
    _generators,
    is_reduced,
    longest_element,
    reduced_word,
    word_to_element,
)

log = logging.getLogger(__name__)

Word = tuple[int, ...]

DEFAULT_CLASS_BUDGET = 1000


class NotReducedError(ValueError):
    pass


class CensusBudgetExceeded(RuntimeError):
    """Raised when a census runs past its class or time budget.

    ``classes`` holds the normal forms found so far and ``frontier`` the
    number of classes still waiting to be expanded.
    """

    def __init__(self, message: str, classes: list[Word], frontier: int):
        super().__init__(message)
        self.classes = classes
        self.frontier = frontier


@dataclass(frozen=True)
class ReducedWord:
    system: RootSystem
    letters: Word

    def __post_init__(self):
        letters = tuple(int(i) for i in self.letters)
        object.__setattr__(self, "letters", letters)
        if not is_reduced(self.system, letters):
            raise NotReducedError(f"word {letters} is not reduced in {self.system.dynkin}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def target(self) -> WeylElement:
        return word_to_element(self.system, self.letters)

    def is_longest(self) -> bool:
        return len(self.letters) == self.system.num_positive


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}; expected comma-separated letters") from None


def as_reduced(system: RootSystem, word) -> ReducedWord:
    if isinstance(word, ReducedWord):
        return word
    return ReducedWord(system, tuple(word))


@dataclass(frozen=True)
class RootOrder:
    word: ReducedWord
    roots: tuple[Root, ...]

    def level(self, i: int) -> tuple[Root, ...]:
        """Roots at positions carrying letter i, in order."""
        return tuple(b for b, letter in zip(self.roots, self.word.letters) if letter == i)

    def positions(self, i: int) -> tuple[int, ...]:
        return tuple(k for k, letter in enumerate(self.word.letters, start=1) if letter == i)


def root_order(word) -> RootOrder:
    """beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}) for every position j."""
    system = word.system
    gens = _generators(system)
    rt = np.eye(system.rank, dtype=np.int64)
    roots = []
    for i in word.letters:
        roots.append(tuple(int(x) for x in rt[:, i - 1]))
        rt = rt @ gens[i - 1][1]
    return RootOrder(word, tuple(roots))


def is_convex(system: RootSystem, roots: Sequence[Root]) -> bool:
    """Every sum of two roots in the sequence sits between its summands."""
    pos = {tuple(r): k for k, r in enumerate(roots)}
    for a, pa in pos.items():
        for b, pb in pos.items():
            if pa >= pb:
                continue
            g = tuple(x + y for x, y in zip(a, b))
            if not system.is_positive_root(g):
                continue
            pg = pos.get(g)
            if pg is None or not pa < pg < pb:
                return False
    return True


# ---------------------------------------------------------------- heaps


@lru_cache(maxsize=None)
def _noncommute(system: RootSystem) -> tuple[tuple[bool, ...], ...]:
    n = system.rank
    return tuple(
        tuple(i == j or system.linked(i, j) for j in range(n + 1)) if i else (False,) * (n + 1)
        for i in range(n + 1)
    )


def normal_form_letters(system: RootSystem, letters: Sequence[int]) -> Word:
    nc = _noncommute(system)
    layer = []
    for p, a in enumerate(letters):
        lv = 0
        for q in range(p):
            if nc[a][letters[q]] and layer[q] >= lv:
                lv = layer[q] + 1
        layer.append(lv)
    return tuple(a for _, a in sorted(zip(layer, letters)))


@dataclass(frozen=True)
class CommClass:
    normal_form: Word
    member_count: int | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.normal_form)


def normal_form(word) -> CommClass:
    letters = word.letters if isinstance(word, ReducedWord) else tuple(word)
    system = word.system if isinstance(word, ReducedWord) else None
    if system is None:
        raise TypeError("normal_form needs a ReducedWord (or use normal_form_letters)")
    return CommClass(normal_form_letters(system, letters))


def _heap_above(nc, letters: Sequence[int]) -> list[int]:
    """Bitmask per position of the positions strictly above it in the heap."""
    m = len(letters)
    above = [0] * m
    for p in range(m - 1, -1, -1):
        a = letters[p]
        acc = 0
        row = nc[a]
        for q in range(p + 1, m):
            if row[letters[q]]:
                acc |= (1 << q) | above[q]
        above[p] = acc
    return above


def _braid_moves(nc, letters: Word) -> Iterator[Word]:
    """Words obtained by one long braid move from some member of the class."""
    m = len(letters)
    above = _heap_above(nc, letters)
    last = {}
    for r in range(m):
        a = letters[r]
        p = last.get(a)
        last[a] = r
        if p is None:
            continue
        between = above[p] & ~above[r] & ~(1 << r)
        # interval (p, r): above p and below r
        inner = [q for q in range(p + 1, r) if (between >> q) & 1 and (above[q] >> r) & 1]
        if len(inner) != 1:
            continue
        q = inner[0]
        b = letters[q]
        if not nc[a][b] or a == b:
            continue
        # elements below r that are not above p come first
        before, after = [], []
        for t in range(m):
            if t in (p, q, r):
                continue
            below_r = (above[t] >> r) & 1
            above_p = (above[p] >> t) & 1
            (before if below_r and not above_p else after).append(letters[t])
        yield tuple(before) + (b, a, b) + tuple(after)


def braid_neighbor_forms(system: RootSystem, nf: Word) -> set[Word]:
    nc = _noncommute(system)
    return {normal_form_letters(system, w) for w in _braid_moves(nc, nf)}


def braid_neighbors(system: RootSystem, cls: CommClass) -> set[CommClass]:
    return {CommClass(f) for f in braid_neighbor_forms(system, cls.normal_form)}


def class_members(system: RootSystem, cls: CommClass | Word, limit: int | None = None) -> Iterator[Word]:
    """All words of the class, as linear extensions of the heap."""
    letters = cls.normal_form if isinstance(cls, CommClass) else tuple(cls)
    nc = _noncommute(system)
    above = _heap_above(nc, letters)
    m = len(letters)
    below = [0] * m
    for p in range(m):
        for q in range(m):
            if (above[p] >> q) & 1:
                below[q] |= 1 << p
    count = 0
    full = (1 << m) - 1
    stack = [(0, ())]
    while stack:
        done, word = stack.pop()
        if done == full:
            yield word
            count += 1
            if limit is not None and count >= limit:
                return
            continue
        seen_letters = set()
        for q in range(m - 1, -1, -1):
            if (done >> q) & 1 or (below[q] & ~done):
                continue
            if letters[q] in seen_letters:
                continue
            seen_letters.add(letters[q])
            stack.append((done | (1 << q), word + (letters[q],)))


def class_size(system: RootSystem, cls: CommClass | Word) -> int:
    """Number of words in the class (linear extensions), by DP over order ideals."""
    letters = cls.normal_form if isinstance(cls, CommClass) else tuple(cls)
    nc = _noncommute(system)
    above = _heap_above(nc, letters)
    m = len(letters)
    below = [0] * m
    for p in range(m):
        for q in range(m):
            if (above[p] >> q) & 1:
                below[q] |= 1 << p
    counts = {0: 1}
    for _ in range(m):
        nxt: dict[int, int] = {}
        for done, c in counts.items():
            for q in range(m):
                if not (done >> q) & 1 and not (below[q] & ~done):
                    key = done | (1 << q)
                    nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return sum(counts.values())


def two_move_closure(system: RootSystem, word: Sequence[int]) -> set[Word]:
    """Word-level closure under swaps of adjacent commuting letters."""
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if a != b and not system.linked(a, b):
                v = w[:k] + (b, a) + w[k + 2:]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return seen


def reduced_words(system: RootSystem, w: WeylElement | None = None) -> Iterator[Word]:
    """Every reduced word of w (default w0), by peeling right descents."""
    w = longest_element(system) if w is None else w
    gens = _generators(system)

    def rec(om_rt, suffix):
        om, rt = om_rt
        descents = [i for i in system.vertices if (rt[:, i - 1] < 0).any()]
        if not descents:
            yield suffix
            return
        for i in descents:
            g_om, g_rt = gens[i - 1]
            yield from rec((om @ g_om, rt @ g_rt), (i,) + suffix)

    yield from rec((w.omega, w.root), ())


def random_longest_word(system: RootSystem, rng) -> Word:
    """A reduced word for w0 built by random length-increasing right steps."""
    gens = _generators(system)
    rt = np.eye(system.rank, dtype=np.int64)
    letters = []
    while True:
        options = [i for i in system.vertices if not (rt[:, i - 1] < 0).any()]
        if not options:
            return tuple(letters)
        i = options[int(rng.integers(len(options)))]
        letters.append(i)
        rt = rt @ gens[i - 1][1]


def seed_word(system: RootSystem) -> Word:
    """Some reduced word of w0."""
    return reduced_word(longest_element(system))


@dataclass
class Census:
    dynkin: DynkinType
    classes: list[CommClass]
    elapsed: float

    def __len__(self) -> int:
        return len(self.classes)


def census(
    dynkin: DynkinType | str,
    *,
    extended: bool = False,
    max_classes: int | None = None,
    timeout: float | None = None,
) -> Census:
    """All commutation classes of reduced words of w0, by BFS over braid moves.

    Without ``extended`` the search stops after ``DEFAULT_CLASS_BUDGET``
    classes; ``max_classes``/``timeout`` override the budget explicitly.
    """
    system = build_root_system(dynkin)
    if max_classes is None and not extended:
        max_classes = DEFAULT_CLASS_BUDGET
    nc = _noncommute(system)
    start = normal_form_letters(system, seed_word(system))
    seen = {start}
    order = [start]
    queue = deque([start])
    t0 = time.monotonic()
    while queue:
        nf = queue.popleft()
        for w in _braid_moves(nc, nf):
            f = normal_form_letters(system, w)
            if f in seen:
                continue
            seen.add(f)
            order.append(f)
            queue.append(f)
            if max_classes is not None and len(seen) > max_classes:
                raise CensusBudgetExceeded(
                    f"census of {system.dynkin} exceeded {max_classes} classes "
                    "(use extended=True / --extended)",
                    sorted(seen), len(queue))
        if timeout is not None and time.monotonic() - t0 > timeout:
            raise CensusBudgetExceeded(
                f"census of {system.dynkin} exceeded {timeout}s", sorted(seen), len(queue))
    elapsed = time.monotonic() - t0
    log.info("census %s: %d classes in %.2fs", system.dynkin, len(seen), elapsed)
    return Census(system.dynkin, [CommClass(f) for f in sorted(seen)], elapsed)
