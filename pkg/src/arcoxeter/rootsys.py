"""Simply-laced root systems with exact integer arithmetic.

Roots are integer tuples in the simple-root basis, weights are integer tuples
in the fundamental-weight basis.  Vertices are numbered 1..n following Kac's
tables:

    A_n   1 - 2 - ... - n
    D_n   1 - 2 - ... - (n-2) - (n-1),  and (n-2) - n
    E_6   1 - 2 - 3 - 4 - 5,  3 - 6
    E_7   1 - 2 - 3 - 4 - 5 - 6,  4 - 7
    E_8   1 - 2 - 3 - 4 - 5 - 6 - 7,  5 - 8
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

Root = tuple[int, ...]
Weight = tuple[int, ...]

MAX_RANK = {"A": 9, "D": 9, "E": 8}


class ConfigurationError(ValueError):
    """Unsupported Dynkin type or rank."""


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        n = self.rank
        if fam == "A":
            ok = 1 <= n <= MAX_RANK["A"]
        elif fam == "D":
            ok = 4 <= n <= MAX_RANK["D"]
        elif fam == "E":
            ok = n in (6, 7, 8)
        else:
            ok = False
        if not ok:
            raise ConfigurationError(f"unsupported Dynkin type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> DynkinType:
        m = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", text)
        if not m:
            raise ConfigurationError(f"cannot parse Dynkin type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges of the diagram as pairs (i, j) with i < j."""
        n = self.rank
        if self.family == "A":
            return tuple((i, i + 1) for i in range(1, n))
        if self.family == "D":
            return tuple((i, i + 1) for i in range(1, n - 1)) + ((n - 2, n),)
        chain = tuple((i, i + 1) for i in range(1, n - 1))
        branch = {6: 3, 7: 4, 8: 5}[n]
        return tuple(sorted(chain + ((branch, n),)))


def _as_dynkin(dynkin: DynkinType | str) -> DynkinType:
    return DynkinType.parse(dynkin) if isinstance(dynkin, str) else dynkin


@dataclass(frozen=True, eq=False)
class RootSystem:
    dynkin: DynkinType
    cartan: np.ndarray
    positive_roots: tuple[Root, ...]
    star: tuple[int, ...]  # star[i-1] = i*
    _index: dict[Root, int] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.dynkin.edges()

    def linked(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i - 1, j - 1] == -1

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in self.vertices if self.linked(i, j))

    def simple_root(self, i: int) -> Root:
        return tuple(int(i == j) for j in self.vertices)

    def fundamental_weight(self, i: int) -> Weight:
        return self.simple_root(i)

    def is_root(self, v) -> bool:
        v = tuple(int(x) for x in v)
        return v in self._index or tuple(-x for x in v) in self._index

    def is_positive_root(self, v) -> bool:
        return tuple(int(x) for x in v) in self._index

    def root_index(self, v) -> int:
        """Position of a positive root in ``positive_roots``."""
        return self._index[tuple(int(x) for x in v)]

    def pairing(self, a, b) -> int:
        """Symmetric form (a, b) for vectors in root coordinates."""
        return int(np.asarray(a) @ self.cartan @ np.asarray(b))

    def positive_root_matrix(self) -> np.ndarray:
        """n x N integer matrix whose columns are the positive roots."""
        return _root_matrix(self)

    def from_root_coords(self, v) -> Weight:
        return tuple(int(x) for x in self.cartan @ np.asarray(v, dtype=np.int64))

    def to_root_coords(self, w) -> tuple[Fraction, ...]:
        return _solve_exact(self.cartan, w)

    def simple_reflect_root(self, i: int, v) -> Root:
        v = list(v)
        v[i - 1] -= int(self.cartan[i - 1] @ np.asarray(v))
        return tuple(v)

    def simple_reflect_weight(self, i: int, w) -> Weight:
        w = tuple(w)
        c = w[i - 1]
        return tuple(x - c * int(a) for x, a in zip(w, self.cartan[i - 1]))


def cartan_matrix(dynkin: DynkinType) -> np.ndarray:
    n = dynkin.rank
    c = 2 * np.eye(n, dtype=np.int64)
    for i, j in dynkin.edges():
        c[i - 1, j - 1] = c[j - 1, i - 1] = -1
    c.setflags(write=False)
    return c


def _positive_roots(cartan: np.ndarray) -> list[Root]:
    n = cartan.shape[0]
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            b = np.asarray(beta)
            for i in range(n):
                c = int(cartan[i] @ b)
                if c >= 0:
                    continue
                gamma = list(beta)
                gamma[i] -= c
                gamma = tuple(gamma)
                if gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return sorted(seen, key=lambda r: (sum(r), r))


def _star(cartan: np.ndarray) -> tuple[int, ...]:
    # Build w0 by greedily extending on the right while the length grows,
    # tracking the action on root coordinates.
    n = cartan.shape[0]
    refl = []
    for i in range(n):
        s = np.eye(n, dtype=np.int64)
        s[i, :] -= cartan[i]
        refl.append(s)
    w = np.eye(n, dtype=np.int64)
    while True:
        for i in range(n):
            if (w[:, i] > 0).any():  # w(alpha_i) > 0
                w = w @ refl[i]
                break
        else:
            break
    star = []
    for i in range(n):
        img = -w[:, i]
        j = int(np.flatnonzero(img)[0])
        assert img[j] == 1 and np.count_nonzero(img) == 1
        star.append(j + 1)
    return tuple(star)


def _solve_exact(matrix: np.ndarray, rhs) -> tuple[Fraction, ...]:
    n = matrix.shape[0]
    a = [[Fraction(int(x)) for x in row] + [Fraction(int(b))] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(row[n] for row in a)


@lru_cache(maxsize=None)
def _build(dynkin: DynkinType) -> RootSystem:
    cartan = cartan_matrix(dynkin)
    roots = tuple(_positive_roots(cartan))
    return RootSystem(
        dynkin=dynkin,
        cartan=cartan,
        positive_roots=roots,
        star=_star(cartan),
        _index={r: k for k, r in enumerate(roots)},
    )


def build_root_system(dynkin: DynkinType | str) -> RootSystem:
    """Root system of an ADE type, cached per type."""
    return _build(_as_dynkin(dynkin))


@lru_cache(maxsize=None)
def _root_matrix_cached(dynkin: DynkinType) -> np.ndarray:
    rs = _build(dynkin)
    m = np.array(rs.positive_roots, dtype=np.int64).T
    m.setflags(write=False)
    return m


def _root_matrix(rs: RootSystem) -> np.ndarray:
    return _root_matrix_cached(rs.dynkin)


def format_vector(v, symbol: str) -> str:
    """Render integer coordinates as e.g. ``w1-w2+w3`` (symbol ``w``) or ``0``."""
    parts = []
    for i, c in enumerate(v, start=1):
        c = int(c) if not isinstance(c, Fraction) else c
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag}*"
        parts.append(f"{sign}{coef}{symbol}{i}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def format_root(v) -> str:
    return format_vector(v, "a")


def format_weight(v) -> str:
    return format_vector(v, "w")
