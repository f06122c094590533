"""Chamber weights of a reduced word and the linearity of beta_k -> mu_k."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .quiverform import Orientation, all_orientations, adapted_class, coxeter_element, is_adapted
from .rootsys import DynkinType, RootSystem, Weight, build_root_system, format_weight
from .weyl import _generators
from .words import Census, ReducedWord, census, root_order


class NotAdaptedError(ValueError):
    pass


@dataclass(frozen=True)
class ChamberSeq:
    word: ReducedWord
    weights: tuple[Weight, ...]

    def level(self, i: int) -> tuple[Weight, ...]:
        return tuple(mu for mu, letter in zip(self.weights, self.word.letters) if letter == i)

    def levels(self) -> dict[int, tuple[Weight, ...]]:
        return {i: self.level(i) for i in self.word.system.vertices}


def chamber_weights(word: ReducedWord) -> ChamberSeq:
    """mu_j = s_{i_1} ... s_{i_j}(omega_{i_j})."""
    system = word.system
    gens = _generators(system)
    om = np.eye(system.rank, dtype=np.int64)
    out = []
    for i in word.letters:
        om = om @ gens[i - 1][0]
        out.append(tuple(int(x) for x in om[:, i - 1]))
    return ChamberSeq(word, tuple(out))


@dataclass(frozen=True)
class Linearity:
    linear: bool
    matrix: np.ndarray | None = None
    # first position k whose weight is not the image of its root, with the
    # positions of the simple roots combined to predict it
    failure: tuple[int, tuple[tuple[int, int], ...]] | None = None

    def describe(self) -> str:
        if self.linear:
            return "linear=true"
        k, combo = self.failure
        terms = "+".join(("" if c == 1 else f"{c}*") + f"mu{p}" for p, c in combo)
        return f"linear=false witness: {terms} != mu{k}"


def linearity_witness(word: ReducedWord) -> Linearity:
    """Decide whether one linear map sends every beta_k to mu_k.

    The map is fixed by the simple roots (each occurs once in the order of a
    w0-word) and then checked on the remaining positions.
    """
    system = word.system
    if not word.is_longest():
        raise ValueError("linearity is defined for reduced words of w0")
    betas = root_order(word).roots
    mus = chamber_weights(word).weights
    n = system.rank
    simple_pos = {}
    for k, beta in enumerate(betas, start=1):
        if sum(beta) == 1:
            simple_pos[beta.index(1) + 1] = k
    lin = np.zeros((n, n), dtype=np.int64)
    for i, k in simple_pos.items():
        lin[:, i - 1] = mus[k - 1]
    for k, (beta, mu) in enumerate(zip(betas, mus), start=1):
        if tuple(int(x) for x in lin @ np.asarray(beta)) != mu:
            combo = tuple((simple_pos[i], c) for i, c in enumerate(beta, start=1) if c)
            return Linearity(False, None, (k, combo))
    lin.setflags(write=False)
    return Linearity(True, lin)


@dataclass
class LevelReport:
    levels: dict[int, tuple[Weight, ...]]
    tails_ok: bool
    coxeter_ok: bool | None = None
    failures: list[str] = field(default_factory=list)


def level_structure(seq: ChamberSeq, q: Orientation | None = None) -> LevelReport:
    """Per-level chamber weights with the tail and Coxeter-orbit checks.

    Every level must end at -omega_{i*}.  When ``q`` is given the word must be
    adapted to it, and each level must read (c^{N_i-1}(t), ..., c(t), t) with
    t = -omega_{i*}.
    """
    system = seq.word.system
    levels = seq.levels()
    report = LevelReport(levels, tails_ok=True)
    for i, lv in levels.items():
        if not lv:
            continue
        tail = tuple(-int(j == system.star[i - 1]) for j in system.vertices)
        if lv[-1] != tail:
            report.tails_ok = False
            report.failures.append(f"level {i} ends at {format_weight(lv[-1])}, expected {format_weight(tail)}")
    if q is None:
        return report
    if not is_adapted(seq.word.letters, q):
        raise NotAdaptedError(
            f"word {seq.word.letters} is not adapted to {q}; its levels need not be Coxeter orbits")
    c = coxeter_element(q)
    report.coxeter_ok = True
    for i, lv in levels.items():
        for earlier, later in zip(lv, lv[1:]):
            if c.apply_weight(later) != earlier:
                report.coxeter_ok = False
                report.failures.append(f"level {i}: c({format_weight(later)}) != {format_weight(earlier)}")
    return report


@dataclass
class SweepRow:
    normal_form: tuple[int, ...]
    adapted: bool
    linear: bool
    orientation: str | None = None


@dataclass
class SweepReport:
    dynkin: DynkinType
    rows: list[SweepRow]

    @property
    def num_classes(self) -> int:
        return len(self.rows)

    @property
    def num_adapted(self) -> int:
        return sum(r.adapted for r in self.rows)

    @property
    def num_linear(self) -> int:
        return sum(r.linear for r in self.rows)

    @property
    def exceptions(self) -> list[SweepRow]:
        return [r for r in self.rows if r.adapted != r.linear]

    @property
    def holds(self) -> bool:
        return not self.exceptions

    def to_json(self) -> dict:
        return {
            "schema": "arcoxeter.census/1",
            "dynkin": str(self.dynkin),
            "classes": self.num_classes,
            "adapted": self.num_adapted,
            "linear": self.num_linear,
            "conjecture_holds": self.holds,
            "rows": [
                {
                    "normal_form": list(r.normal_form),
                    "adapted": r.adapted,
                    "linear": r.linear,
                    "orientation": r.orientation,
                }
                for r in self.rows
            ],
        }


def adapted_classes(system: RootSystem) -> dict[tuple[int, ...], Orientation]:
    return {adapted_class(q).normal_form: q for q in all_orientations(system)}


def conjecture_sweep(dynkin: DynkinType | str, *, extended: bool = False, result: Census | None = None) -> SweepReport:
    """Adaptedness against linearity for every commutation class of w0."""
    system = build_root_system(dynkin)
    result = census(system.dynkin, extended=extended) if result is None else result
    adapted = adapted_classes(system)
    rows = []
    for cls in result.classes:
        nf = cls.normal_form
        lin = linearity_witness(ReducedWord(system, nf)).linear
        q = adapted.get(nf)
        rows.append(SweepRow(nf, q is not None, lin, str(q) if q is not None else None))
    return SweepReport(system.dynkin, rows)


def format_table(reports: list[SweepReport]) -> str:
    """card A / card O table, one column per type."""
    head = ["", *(str(r.dynkin) for r in reports)]
    rows = [
        ["card A", *(str(r.num_adapted) for r in reports)],
        ["card O", *(str(r.num_classes) for r in reports)],
        ["linear", *(str(r.num_linear) for r in reports)],
    ]
    widths = [max(len(row[c]) for row in [head, *rows]) for c in range(len(head))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in [head, *rows])


def weight_orbit_union(system: RootSystem) -> set[Weight]:
    """Union of the W-orbits of all fundamental weights."""
    out: set[Weight] = set()
    for i in system.vertices:
        start = system.fundamental_weight(i)
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for j in system.vertices:
                    v = system.simple_reflect_weight(j, w)
                    if v not in orbit:
                        orbit.add(v)
                        nxt.append(v)
            frontier = nxt
        out |= orbit
    return out
