"""Type A: Young columns, the Coxeter cycle, and wiring diagrams.

W = S_{n+1} acts on index sets through s_i = (i, i+1); words act with the
rightmost letter applied first.  A box m has weight omega_m - omega_{m-1}
(omega_0 = omega_{n+1} = 0), so a column J has weight sum of its boxes and
``w . {1..i}`` is the column of ``w omega_i``.

The cycle ``[c] = (a_1 ... a_{n+1})`` with a_{n+1} = n+1 lists the orbit of
the permutation ``c^{-1}``: c shifts every segment of the cycle one step
back, which is how the levels of the AR quiver move right to left.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .quiverform import Orientation, coxeter_word, level_size
from .rootsys import RootSystem, Weight
from .words import ReducedWord

Column = tuple[int, ...]


class NotTypeAError(ValueError):
    """Operation only defined in type A."""


def _require_a(system: RootSystem) -> None:
    if system.dynkin.family != "A":
        raise NotTypeAError(f"operation only defined in type A, got {system.dynkin}")


def column(indices: Iterable[int]) -> Column:
    return tuple(sorted(set(indices)))


def dotted(col: Iterable[int], n1: int) -> str:
    """Padded display of a column, e.g. ``(.13.)`` for {1, 3} with 4 boxes."""
    col = set(col)
    sep = "" if n1 < 10 else " "
    return "(" + sep.join(str(m) if m in col else "." for m in range(1, n1 + 1)) + ")"


def column_to_weight(system: RootSystem, col: Iterable[int]) -> Weight:
    _require_a(system)
    n = system.rank
    w = [0] * (n + 2)
    for m in col:
        if not 1 <= m <= n + 1:
            raise ValueError(f"index {m} outside 1..{n + 1}")
        w[m] += 1
        w[m - 1] -= 1
    return tuple(w[1:n + 1])


def weight_to_column(system: RootSystem, weight: Sequence[int], size: int) -> Column:
    """Inverse of ``column_to_weight`` on the orbit of omega_size."""
    _require_a(system)
    n = system.rank
    # epsilon-coordinates up to a common shift: x_m = sum_{k >= m} lambda_k
    y = [sum(weight[m - 1:]) for m in range(1, n + 1)] + [0]
    shift, rem = divmod(size - sum(y), n + 1)
    x = [v + shift for v in y]
    if rem or any(v not in (0, 1) for v in x):
        raise ValueError(f"weight {tuple(weight)} is not in the orbit of omega_{size}")
    return tuple(m for m, v in enumerate(x, start=1) if v)


def apply_perm_word(word: Sequence[int], indices: Iterable[int]) -> Column:
    """Act by s_{i_1} ... s_{i_m} on a set of indices."""
    out = []
    for x in indices:
        for i in reversed(word):
            if x == i:
                x = i + 1
            elif x == i + 1:
                x = i
        out.append(x)
    return column(out)


def perm_of_word(word: Sequence[int], n: int) -> tuple[int, ...]:
    """One-line notation (images of 1..n+1) of the product of the word."""
    return tuple(apply_perm_word(word, [x])[0] for x in range(1, n + 2))


def word_of_column(col: Column, n: int) -> tuple[int, ...]:
    """A word w with w . {1..|col|} = col (bubble the column's entries into place)."""
    arr = list(col) + [x for x in range(1, n + 2) if x not in col]
    # bubble sort the one-line notation; swapping positions p, p+1 is right
    # multiplication by s_p, so the word is the swaps in reverse
    swaps = []
    for end in range(len(arr) - 1, 0, -1):
        for p in range(end):
            if arr[p] > arr[p + 1]:
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
                swaps.append(p + 1)
    return tuple(reversed(swaps))


def column_adjacent(col: Column, col2: Column) -> bool:
    """Cosets of consecutive sizes are adjacent iff one column contains the other."""
    if len(col2) != len(col) + 1:
        raise ValueError(f"columns must have sizes i and i+1, got {len(col)} and {len(col2)}")
    return set(col) < set(col2)


@dataclass(frozen=True)
class CoxeterCycle:
    cycle: tuple[int, ...]
    offsets: dict[int, int] = field(compare=False)  # level i -> m_i (1-based, mod n+1)

    def segment(self, start: int, size: int) -> Column:
        """Sorted entries a_start, ..., a_{start+size-1}, indices mod n+1."""
        n1 = len(self.cycle)
        return column(self.cycle[(start - 1 + t) % n1] for t in range(size))

    def __str__(self) -> str:
        return "(" + "".join(str(a) for a in self.cycle) + ")" if len(self.cycle) < 10 else \
            "(" + " ".join(str(a) for a in self.cycle) + ")"


def cycle_writing(q: Orientation) -> CoxeterCycle:
    system = q.system
    _require_a(system)
    n = system.rank
    # index permutation of c^{-1} = s_{j_1} ... s_{j_n}
    perm = perm_of_word(tuple(reversed(coxeter_word(q))), n)
    cyc = [n + 1]
    while len(cyc) < n + 1:
        cyc.append(perm[cyc[-1] - 1])
    if perm[cyc[-1] - 1] != n + 1:
        raise AssertionError("Coxeter element is not an (n+1)-cycle")
    cycle = tuple(cyc[1:] + cyc[:1])
    offsets = {1: n + 1}
    for i in range(2, n + 1):
        s = system.star[i - 1]
        offsets[i] = offsets[i - 1] if (s, s + 1) in q.arrows else offsets[i - 1] - 1
    out = CoxeterCycle(cycle, offsets)
    for i in range(1, n + 1):
        s = system.star[i - 1]
        if out.segment(offsets[i], i) != tuple(range(s + 1, n + 2)):
            raise AssertionError(f"segment property fails at level {i}")
    return out


def level_columns(q: Orientation) -> dict[int, list[Column]]:
    """Columns of each level of the AR quiver, listed left to right.

    Counted from the right (j = 0 is the last vertex), column j is the cycle
    segment of length i starting at m_i - j.
    """
    _require_a(q.system)
    cyc = cycle_writing(q)
    out = {}
    for i in q.system.vertices:
        size = level_size(q, i)
        from_right = [cyc.segment(cyc.offsets[i] - j, i) for j in range(size)]
        out[i] = from_right[::-1]
    return out


@dataclass(frozen=True)
class Zone:
    k: int | None  # crossing index bounding it on the left; None for trivial zones
    level: int  # gap between strand positions level and level+1 (0 = above all)
    label: frozenset[int]


@dataclass(frozen=True)
class WiringDiagram:
    n_strands: int
    word: tuple[int, ...]
    bands: tuple[tuple[int, ...], ...]  # bands[k] = strands top to bottom after k crossings
    zones: tuple[Zone, ...]  # left-bounded zones Z_1..Z_N
    trivial_zones: tuple[Zone, ...]

    @property
    def crossings(self) -> tuple[tuple[int, int, int], ...]:
        """(level, upper strand, lower strand) for each crossing, before the swap."""
        return tuple(
            (i, self.bands[k][i - 1], self.bands[k][i]) for k, i in enumerate(self.word)
        )

    def labels(self) -> list[Column]:
        return [column(z.label) for z in self.zones]

    def zone_arrows(self) -> frozenset[tuple[int, int]]:
        """Pairs (j, k), j < k, of zones on consecutive levels whose labels nest."""
        arrows = set()
        for a in self.zones:
            for b in self.zones:
                if a.k < b.k and abs(a.level - b.level) == 1:
                    small, big = (a, b) if a.level < b.level else (b, a)
                    if small.label < big.label:
                        arrows.add((a.k, b.k))
        return frozenset(arrows)


def wiring_diagram(word: ReducedWord) -> WiringDiagram:
    system = word.system
    _require_a(system)
    n1 = system.rank + 1
    band = tuple(range(1, n1 + 1))
    bands = [band]
    zones = []
    for k, i in enumerate(word.letters, start=1):
        b = list(band)
        b[i - 1], b[i] = b[i], b[i - 1]
        band = tuple(b)
        bands.append(band)
        zones.append(Zone(k, i, frozenset(band[:i])))
    trivial = tuple(Zone(None, p, frozenset(range(1, p + 1))) for p in range(n1 + 1))
    return WiringDiagram(n1, word.letters, tuple(bands), tuple(zones), trivial)


# ---------------------------------------------------------------- rendering


def _label_text(label: Iterable[int], n1: int) -> str:
    items = sorted(label)
    if n1 < 10:
        return "".join(str(x) for x in items)
    return ",".join(str(x) for x in items)


def render_wiring(wd: WiringDiagram, fmt: str = "text") -> str:
    if fmt == "text":
        return _render_text(wd)
    if fmt == "svg":
        return _render_svg(wd)
    raise ValueError(f"unknown format {fmt!r}")


def _render_text(wd: WiringDiagram) -> str:
    """Strands on even rows, zone labels on the odd rows between them."""
    n1 = wd.n_strands
    lw = len(_label_text(range(1, n1 + 1), n1)) + 1
    tag = len(str(n1))
    nrows = 2 * n1 - 1
    rows = [
        f"{wd.bands[0][r // 2]:>{tag}} " if r % 2 == 0 else " " * (tag + 1)
        for r in range(nrows)
    ]
    for r in range(nrows):
        rows[r] += "-" * lw if r % 2 == 0 else _label_text(range(1, r // 2 + 2), n1).ljust(lw)
    for z in wd.zones:
        i = z.level
        for r in range(nrows):
            p = r // 2 + 1
            if r % 2 == 0:
                cross = {i: "\\ /", i + 1: "/ \\"}.get(p, "---")
                rows[r] += cross + "-" * lw
            elif p == i:
                rows[r] += " X " + _label_text(z.label, n1).ljust(lw)
            else:
                rows[r] += " " * (3 + lw)
    for r in range(0, nrows, 2):
        rows[r] += f" {wd.bands[-1][r // 2]}"
    return "\n".join(row.rstrip() for row in rows) + "\n"


def _render_svg(wd: WiringDiagram) -> str:
    n1 = wd.n_strands
    step, gap, margin = 60, 40, 40
    ncross = len(wd.zones)
    width = 2 * margin + step * (ncross + 1)
    height = 2 * margin + gap * (n1 - 1)

    def y(pos):
        return margin + gap * (pos - 1)

    def x(k):  # left edge of crossing k (1-based)
        return margin + step * k - step // 2

    paths = {s: [(margin, y(p))] for p, s in enumerate(wd.bands[0], start=1)}
    for k, z in enumerate(wd.zones, start=1):
        before, after = wd.bands[k - 1], wd.bands[k]
        for p, s in enumerate(before, start=1):
            q = after.index(s) + 1
            paths[s].append((x(k), y(p)))
            paths[s].append((x(k) + step // 2, y(q)))
    for s in paths:
        p = wd.bands[-1].index(s) + 1
        paths[s].append((width - margin, y(p)))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g fill="none" stroke="black" stroke-width="2">',
    ]
    for s in sorted(paths):
        pts = " ".join(f"{a},{b}" for a, b in paths[s])
        out.append(f'<polyline id="strand{s}" points="{pts}"/>')
    out.append("</g>")
    out.append('<g font-family="monospace" font-size="12" text-anchor="middle">')
    for s in sorted(paths):
        out.append(f'<text x="{margin - 15}" y="{y(wd.bands[0].index(s) + 1) + 4}">{s}</text>')
    for z in wd.zones:
        tx = x(z.k) + step // 2 + (step // 2) // 2 + 4
        ty = (y(z.level) + y(z.level + 1)) // 2 + 4
        out.append(f'<text x="{tx}" y="{ty}">{escape(_label_text(z.label, n1))}</text>')
    for z in wd.trivial_zones[1:-1]:
        ty = (y(z.level) + y(z.level + 1)) // 2 + 4
        out.append(f'<text x="{margin + 10}" y="{ty}">{escape(_label_text(z.label, n1))}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
