"""Finite biquasiles: construction, axiom checks, enumeration and text I/O.

Elements are the labels ``1..n``.  For the Alexander family the label ``N``
stands for the residue class of 0, so label ``k`` is the residue ``k mod N``.
Internally every table is also kept 0-based for fast lookups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Sequence

import numpy as np

from .errors import ExchangeAxiomError, MalformedTableError, NotLatinError, ParseError

__all__ = [
    "OpTable",
    "Biquasile",
    "validate_latin",
    "make_biquasile",
    "alexander_biquasile",
    "enumerate_biquasiles",
    "latin_squares",
    "exchange_witness",
    "serialize_matrix",
    "parse_matrix",
    "from_block",
    "all_unit_triples",
]


@dataclass(frozen=True)
class OpTable:
    """An ``n x n`` operation table; ``entries[x-1][y-1]`` is ``x op y``."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0:
            raise MalformedTableError("empty table")
        for i, row in enumerate(rows, 1):
            if len(row) != n:
                raise MalformedTableError(f"row {i} has {len(row)} entries, expected {n}")
            for v in row:
                if not 1 <= v <= n:
                    raise MalformedTableError(f"entry {v} in row {i} is outside 1..{n}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "OpTable":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def order(self) -> int:
        return len(self.entries)

    def __call__(self, x: int, y: int) -> int:
        return self.entries[x - 1][y - 1]

    def zero_based(self) -> list[list[int]]:
        return [[v - 1 for v in row] for row in self.entries]


def validate_latin(t: OpTable) -> bool:
    """True iff every row and every column of ``t`` is a permutation of 1..n.

    Out-of-range entries are rejected when the table is built, raising
    :class:`MalformedTableError` rather than returning False.
    """
    n = t.order
    full = set(range(1, n + 1))
    for row in t.entries:
        if set(row) != full:
            return False
    for j in range(n):
        if {row[j] for row in t.entries} != full:
            return False
    return True


def _divisions(t: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Left and right division tables of a 0-based Latin square.

    ``ldiv[y][z]`` is the x with ``y op x = z``; ``rdiv[z][y]`` is the x with
    ``x op y = z``.
    """
    n = len(t)
    ldiv = [[0] * n for _ in range(n)]
    rdiv = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            z = t[x][y]
            ldiv[x][z] = y
            rdiv[z][y] = x
    return ldiv, rdiv


def exchange_witness(s: list[list[int]], d: list[list[int]]) -> tuple[int, int, int, int] | None:
    """First 0-based (x, y, a, b) violating the exchange axiom, or None.

    Both identities are checked:

        a*(x.[y*(a.b)]) = (a*[x.y]) * (x.[y*([a*(x.y)].b)])
        y*([a*(x.y)].b) = (y*[a.b]) * ([a*(x.[y*(a.b)])].b)
    """
    S, D = np.asarray(s), np.asarray(d)
    n = len(S)
    # axes (x, y, a, b)
    x = np.arange(n)[:, None, None, None]
    y = np.arange(n)[None, :, None, None]
    a = np.arange(n)[None, None, :, None]
    b = np.arange(n)[None, None, None, :]
    xy = D[x, y]
    a_xy = S[a, xy]
    y_ab = S[y, D[a, b]]
    lhs1 = S[a, D[x, y_ab]]
    y2 = S[y, D[a_xy, b]]
    bad = (lhs1 != S[a_xy, D[x, y2]]) | (y2 != S[y_ab, D[lhs1, b]])
    if not bad.any():
        return None
    return tuple(int(v) for v in np.unravel_index(int(np.argmax(bad)), bad.shape))


@dataclass(frozen=True, eq=False)
class Biquasile:
    """A pair of Latin squares (``star``, ``dot``) satisfying the exchange axiom.

    Build instances through :func:`make_biquasile`, which runs the checks.
    The four division tables are derived once at construction.
    """

    star: OpTable
    dot: OpTable
    name: str | None = None
    star_ldiv: OpTable = field(init=False, repr=False)
    star_rdiv: OpTable = field(init=False, repr=False)
    dot_ldiv: OpTable = field(init=False, repr=False)
    dot_rdiv: OpTable = field(init=False, repr=False)

    def __post_init__(self):
        s, d = self.star.zero_based(), self.dot.zero_based()
        sl, sr = _divisions(s)
        dl, dr = _divisions(d)
        one = lambda t: OpTable.from_rows([[v + 1 for v in row] for row in t])  # noqa: E731
        object.__setattr__(self, "star_ldiv", one(sl))
        object.__setattr__(self, "star_rdiv", one(sr))
        object.__setattr__(self, "dot_ldiv", one(dl))
        object.__setattr__(self, "dot_rdiv", one(dr))
        # 0-based copies used by the solver and weight code
        object.__setattr__(self, "_s", s)
        object.__setattr__(self, "_d", d)
        object.__setattr__(self, "_sl", sl)
        object.__setattr__(self, "_sr", sr)
        object.__setattr__(self, "_dl", dl)
        object.__setattr__(self, "_dr", dr)

    @property
    def order(self) -> int:
        return self.star.order

    def key(self) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
        return (self.star.entries, self.dot.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Biquasile):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def rule(self, x: int, a: int, b: int) -> int:
        """The region colour forced across a crossing: ``x * (a . b)``."""
        return self.star(x, self.dot(a, b))

    def tables(self):
        """0-based (star, dot, star_ldiv, star_rdiv, dot_ldiv, dot_rdiv)."""
        return (self._s, self._d, self._sl, self._sr, self._dl, self._dr)

    def division_identities_hold(self) -> bool:
        """Exhaustively check the eight division identities."""
        s, d, sl, sr, dl, dr = self.tables()
        r = range(self.order)
        for x in r:
            for y in r:
                if sl[y][s[y][x]] != x or sr[s[x][y]][y] != x:
                    return False
                if dl[y][d[y][x]] != x or dr[d[x][y]][y] != x:
                    return False
                if s[y][sl[y][x]] != x or s[sr[x][y]][y] != x:
                    return False
                if d[y][dl[y][x]] != x or d[dr[x][y]][y] != x:
                    return False
        return True

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Biquasile{label} order={self.order}>"


def make_biquasile(star: OpTable, dot: OpTable, name: str | None = None) -> Biquasile:
    """Validate two tables and return the biquasile they define.

    Raises :class:`NotLatinError` if either table is not a Latin square and
    :class:`ExchangeAxiomError` (carrying a 1-based witness) if the exchange
    axiom fails for some quadruple.
    """
    if not isinstance(star, OpTable):
        star = OpTable.from_rows(star)
    if not isinstance(dot, OpTable):
        dot = OpTable.from_rows(dot)
    if star.order != dot.order:
        raise MalformedTableError(f"orders differ: {star.order} and {dot.order}")
    for label, t in (("star", star), ("dot", dot)):
        if not validate_latin(t):
            raise NotLatinError(f"{label} table is not a Latin square")
    w = exchange_witness(star.zero_based(), dot.zero_based())
    if w is not None:
        w1 = tuple(v + 1 for v in w)
        raise ExchangeAxiomError(f"exchange axiom fails at (x, y, a, b) = {w1}", w1)
    return Biquasile(star, dot, name)


def alexander_biquasile(modulus: int, d: int, s: int, nn: int) -> Biquasile:
    """Alexander biquasile on Z_N: ``x*y = -d s n^2 x + n y``, ``x.y = d x + s y``."""
    N = int(modulus)
    if N < 1:
        raise MalformedTableError("modulus must be positive")
    for label, v in (("d", d), ("s", s), ("n", nn)):
        if gcd(v % N, N) != 1 and N > 1:
            raise MalformedTableError(f"{label}={v} is not a unit mod {N}")
    cx = (-d * s * nn * nn) % N
    cy = nn % N
    lab = lambda r: (r % N) or N  # noqa: E731
    star = [[lab(cx * x + cy * y) for y in range(1, N + 1)] for x in range(1, N + 1)]
    dot = [[lab(d * x + s * y) for y in range(1, N + 1)] for x in range(1, N + 1)]
    return make_biquasile(OpTable.from_rows(star), OpTable.from_rows(dot),
                          name=f"alexander({N},{d},{s},{nn})")


def latin_squares(n: int) -> Iterator[list[list[int]]]:
    """All 0-based Latin squares of order ``n`` in row-major lexicographic order."""
    grid = [[-1] * n for _ in range(n)]
    col_used = [[False] * n for _ in range(n)]
    row_used = [[False] * n for _ in range(n)]

    def place(k: int):
        if k == n * n:
            yield [row[:] for row in grid]
            return
        i, j = divmod(k, n)
        for v in range(n):
            if row_used[i][v] or col_used[j][v]:
                continue
            grid[i][j] = v
            row_used[i][v] = col_used[j][v] = True
            yield from place(k + 1)
            row_used[i][v] = col_used[j][v] = False
        grid[i][j] = -1

    yield from place(0)


def enumerate_biquasiles(order: int) -> Iterator[Biquasile]:
    """Every biquasile of the given order, lexicographic in (star, dot) rows.

    Labelled tables are listed; no isomorphism reduction is done.
    """
    if order < 1:
        return
    squares = list(latin_squares(order))
    for s in squares:
        for d in squares:
            if exchange_witness(s, d) is None:
                yield Biquasile(
                    OpTable.from_rows([[v + 1 for v in row] for row in s]),
                    OpTable.from_rows([[v + 1 for v in row] for row in d]),
                )


def from_block(rows: Sequence[Sequence[int]], name: str | None = None) -> Biquasile:
    """Build from an ``n x 2n`` block: left half is ``star``, right half ``dot``."""
    rows = [list(r) for r in rows]
    n = len(rows)
    for i, r in enumerate(rows, 1):
        if len(r) != 2 * n:
            raise MalformedTableError(f"row {i} has {len(r)} entries, expected {2 * n}")
    return make_biquasile(OpTable.from_rows([r[:n] for r in rows]),
                          OpTable.from_rows([r[n:] for r in rows]), name=name)


def serialize_matrix(b: Biquasile) -> str:
    lines = [f"order {b.order}"]
    for srow, drow in zip(b.star.entries, b.dot.entries):
        lines.append(" ".join(str(v) for v in srow + drow))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, name: str | None = None) -> Biquasile:
    """Parse the block format written by :func:`serialize_matrix`.

    The result is re-validated; axiom failures propagate as domain errors.
    """
    order = None
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if order is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "order":
                raise ParseError("expected header 'order <n>'", lineno)
            try:
                order = int(parts[1])
            except ValueError:
                raise ParseError(f"bad order {parts[1]!r}", lineno) from None
            if order < 1:
                raise ParseError("order must be positive", lineno)
            continue
        try:
            row = [int(v) for v in line.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno) from None
        if len(row) != 2 * order:
            raise ParseError(f"expected {2 * order} entries, got {len(row)}", lineno)
        bad = [v for v in row if not 1 <= v <= order]
        if bad:
            raise ParseError(f"entry {bad[0]} outside 1..{order}", lineno)
        rows.append(row)
    if order is None:
        raise ParseError("missing header 'order <n>'")
    if len(rows) != order:
        raise ParseError(f"expected {order} rows, got {len(rows)}")
    return from_block(rows, name=name)


def all_unit_triples(N: int) -> Iterator[tuple[int, int, int]]:
    units = [u for u in range(1, N + 1) if gcd(u % N, N) == 1 or N == 1]
    return itertools.product(units, repeat=3)
