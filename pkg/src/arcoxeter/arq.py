"""Auslander-Reiten quivers as labelled digraphs on positions 1..N.

Three independent constructions share one output type:

* ``arq_from_word``: arrows from the letter pattern of a reduced word
  (linked levels, no repeat of the source letter in between);
* ``arq_from_ringel``: arrows between positive roots with R(a, b) > 0 and
  no intermediate root g having R(a, g) > 0 and R(g, b) > 0;
* ``arq_from_cosets``: arrows between linked-level chamber cosets
  ``w_j W^(i_j)``, ``w_k W^(i_k)`` that intersect.
"""
from __future__ import annotations

import json
import warnings
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .chamber import chamber_weights
from .quiverform import Orientation, adapted_word
from .rootsys import Root, RootSystem, Weight, format_root, format_weight
from .weyl import coset_adjacent, identity, simple_reflection
from .words import ReducedWord, root_order

DEFAULT_READING_LIMIT = 10**6


@dataclass(frozen=True)
class ARQuiver:
    system: RootSystem
    levels: tuple[int, ...]  # letter i_k at position k (1-based positions)
    roots: tuple[Root, ...]
    arrows: frozenset[tuple[int, int]]
    weights: tuple[Weight, ...] | None = None

    def __len__(self) -> int:
        return len(self.levels)

    def level(self, i: int) -> tuple[int, ...]:
        """Positions on level i, left to right."""
        return tuple(k for k, lv in enumerate(self.levels, start=1) if lv == i)

    def projectives(self) -> dict[int, int]:
        return {i: lv[0] for i in self.system.vertices if (lv := self.level(i))}

    def injectives(self) -> dict[int, int]:
        return {i: lv[-1] for i in self.system.vertices if (lv := self.level(i))}

    def successors(self, k: int) -> tuple[int, ...]:
        return tuple(sorted(b for a, b in self.arrows if a == k))

    def has_path(self, j: int, k: int) -> bool:
        if j == k:
            return True
        stack, seen = [j], {j}
        while stack:
            a = stack.pop()
            for b in self.successors(a):
                if b == k:
                    return True
                if b not in seen and b < k:
                    seen.add(b)
                    stack.append(b)
        return False

    def label(self, k: int) -> str:
        parts = [str(k), format_root(self.roots[k - 1])]
        if self.weights is not None:
            parts.append(format_weight(self.weights[k - 1]))
        parts.append(str(self.levels[k - 1]))
        return f"{parts[0]}:" + "/".join(parts[1:])

    def to_dot(self, name: str = "arq") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for k in range(1, len(self) + 1):
            lines.append(f'  p{k} [label="{self.label(k)}"];')
        for a, b in sorted(self.arrows):
            lines.append(f"  p{a} -> p{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "schema": "arcoxeter.arq/1",
            "dynkin": str(self.system.dynkin),
            "positions": [
                {
                    "k": k,
                    "level": self.levels[k - 1],
                    "root": list(self.roots[k - 1]),
                    "weight": None if self.weights is None else list(self.weights[k - 1]),
                }
                for k in range(1, len(self) + 1)
            ],
            "arrows": [list(a) for a in sorted(self.arrows)],
        }

    @classmethod
    def from_json(cls, system: RootSystem, data: dict | str) -> ARQuiver:
        if isinstance(data, str):
            data = json.loads(data)
        pos = data["positions"]
        weights = None
        if pos and pos[0]["weight"] is not None:
            weights = tuple(tuple(p["weight"]) for p in pos)
        return cls(
            system,
            tuple(p["level"] for p in pos),
            tuple(tuple(p["root"]) for p in pos),
            frozenset(tuple(a) for a in data["arrows"]),
            weights,
        )


def is_alternating(system: RootSystem, word: Sequence[int]) -> bool:
    """For each linked pair {a, b}, the subword on {a, b} strictly alternates."""
    word = tuple(word)
    for a, b in system.edges:
        sub = [x for x in word if x in (a, b)]
        if any(x == y for x, y in zip(sub, sub[1:])):
            return False
    return True


def _word_arrows(system: RootSystem, letters: Sequence[int]) -> frozenset[tuple[int, int]]:
    arrows = set()
    m = len(letters)
    for j in range(m):
        a = letters[j]
        for k in range(j + 1, m):
            b = letters[k]
            if b == a:
                break
            if system.linked(a, b):
                arrows.add((j + 1, k + 1))
    return frozenset(arrows)


def arq_from_word(word: ReducedWord) -> ARQuiver:
    system = word.system
    return ARQuiver(
        system,
        word.letters,
        root_order(word).roots,
        _word_arrows(system, word.letters),
        chamber_weights(word).weights,
    )


def arq_from_ringel(q: Orientation) -> ARQuiver:
    """Vertices in the order of the adapted word; arrows from the Ringel form alone."""
    system = q.system
    letters = adapted_word(q)
    roots = root_order(ReducedWord(system, letters)).roots
    b = np.array(roots, dtype=np.int64).T  # n x N
    r = b.T @ q.ringel.matrix @ b  # r[x, y] = R(beta_x, beta_y)
    pos = r > 0
    np.fill_diagonal(pos, False)
    m = len(roots)
    arrows = set()
    for x in range(m):
        for y in range(m):
            if not pos[x, y]:
                continue
            through = pos[x, :] & pos[:, y]
            through[x] = through[y] = False
            if not through.any():
                if x > y:
                    raise AssertionError(f"Ringel arrow {x + 1}->{y + 1} against the adapted order")
                arrows.add((x + 1, y + 1))
    weights = tuple(tuple(int(v) for v in -(q.ringel.matrix @ col)) for col in b.T)
    return ARQuiver(system, letters, tuple(roots), frozenset(arrows), weights)


def arq_from_cosets(word: ReducedWord) -> ARQuiver:
    """Arrows from intersections of the chamber cosets w_k W^(i_k)."""
    system = word.system
    letters = word.letters
    prefixes = []
    w = identity(system)
    for i in letters:
        w = w * simple_reflection(system, i)
        prefixes.append(w)
    arrows = set()
    m = len(letters)
    for j in range(m):
        for k in range(j + 1, m):
            a, b = letters[j], letters[k]
            if system.linked(a, b) and coset_adjacent(prefixes[j], a, prefixes[k], b):
                arrows.add((j + 1, k + 1))
    return ARQuiver(
        system,
        letters,
        root_order(word).roots,
        frozenset(arrows),
        chamber_weights(word).weights,
    )


def readings(arq: ARQuiver, limit: int = DEFAULT_READING_LIMIT) -> set[tuple[int, ...]]:
    """Level words of all linear extensions of the arrow DAG (capped at ``limit``)."""
    m = len(arq)
    preds = [0] * (m + 1)
    for a, b in arq.arrows:
        preds[b] |= 1 << a
    out: set[tuple[int, ...]] = set()
    full = sum(1 << k for k in range(1, m + 1))
    stack: list[tuple[int, tuple[int, ...]]] = [(0, ())]
    while stack:
        done, word = stack.pop()
        if done == full:
            out.add(word)
            if len(out) >= limit:
                warnings.warn(f"readings capped at {limit}", stacklevel=2)
                return out
            continue
        for k in range(m, 0, -1):
            if not (done >> k) & 1 and not (preds[k] & ~done):
                stack.append((done | (1 << k), word + (arq.levels[k - 1],)))
    return out


def mesh_violations(arq: ARQuiver) -> list[tuple[int, int]]:
    """Arrows a->b not followed by b -> (next position on the level of a)."""
    bad = []
    for a, b in sorted(arq.arrows):
        lv = arq.level(arq.levels[a - 1])
        idx = lv.index(a)
        if idx + 1 < len(lv) and (b, lv[idx + 1]) not in arq.arrows:
            bad.append((a, b))
    return bad
