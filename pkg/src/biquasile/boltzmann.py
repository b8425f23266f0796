"""Boltzmann weights on biquasiles and the enhanced counting invariant."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .algebra import Biquasile
from .diagram import DEFAULT_SCHEMA, MarkedGraphDiagram, VertexKind
from .errors import BiquasileError, ParseError
from .solver import Coloring, is_coloring, list_colorings

__all__ = [
    "BoltzmannWeight",
    "Violation",
    "WeightedInvariant",
    "check_weight",
    "indicator",
    "weight_of_coloring",
    "enhanced_invariant",
    "parse_weight",
    "serialize_weight",
    "load_weight",
    "weight_space_basis",
]


class BoltzmannWeight:
    """A map ``X^3 -> Z_m`` stored densely; keys and values are 1-based triples."""

    def __init__(self, algebra: Biquasile, modulus: int,
                 values: Mapping[tuple[int, int, int], int] | None = None):
        if modulus < 1:
            raise BiquasileError("modulus must be positive")
        n = algebra.order
        self.algebra = algebra
        self.modulus = int(modulus)
        self._t = [[[0] * n for _ in range(n)] for _ in range(n)]
        for (x, a, b), v in (values or {}).items():
            for e in (x, a, b):
                if not 1 <= e <= n:
                    raise BiquasileError(f"element {e} outside 1..{n}")
            self._t[x - 1][a - 1][b - 1] = int(v) % self.modulus

    def __call__(self, x: int, a: int, b: int) -> int:
        return self._t[x - 1][a - 1][b - 1]

    def items(self):
        """Nonzero entries as ``((x, a, b), value)`` in lexicographic order."""
        n = self.algebra.order
        for x in range(n):
            for a in range(n):
                for b in range(n):
                    v = self._t[x][a][b]
                    if v:
                        yield (x + 1, a + 1, b + 1), v

    def __add__(self, other: "BoltzmannWeight") -> "BoltzmannWeight":
        if other.algebra != self.algebra or other.modulus != self.modulus:
            raise BiquasileError("weights live on different algebras or moduli")
        vals = Counter(dict(self.items()))
        for k, v in other.items():
            vals[k] += v
        return BoltzmannWeight(self.algebra, self.modulus, vals)

    def scaled(self, c: int) -> "BoltzmannWeight":
        return BoltzmannWeight(self.algebra, self.modulus, {k: c * v for k, v in self.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoltzmannWeight):
            return NotImplemented
        return (self.algebra == other.algebra and self.modulus == other.modulus
                and self._t == other._t)

    def __repr__(self) -> str:
        return f"BoltzmannWeight(order={self.algebra.order}, modulus={self.modulus}, " \
               f"nonzero={sum(1 for _ in self.items())})"


def indicator(algebra: Biquasile, x: int, a: int, b: int, modulus: int) -> BoltzmannWeight:
    """The weight equal to 1 at ``(x, a, b)`` and 0 elsewhere."""
    return BoltzmannWeight(algebra, modulus, {(x, a, b): 1})


@dataclass(frozen=True)
class Violation:
    axiom: str  # "i" or "ii"
    witness: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"axiom ({self.axiom}) fails at {self.witness}: {self.detail}"


def _axiom_terms(X: Biquasile):
    """Yield (axiom, witness, lhs_triples, rhs_triples) over all inputs, 0-based."""
    s, d, sl, sr, dl, dr = X.tables()
    r = range(X.order)
    for x in r:
        xx = sl[x][x]
        for a in r:
            yield "i", (x, a), [(x, a, dl[a][xx])], []
        for b in r:
            yield "i", (x, b), [(x, dr[xx][b], b)], []
    for x in r:
        for a in r:
            for b in r:
                xab = s[x][d[a][b]]
                for y in r:
                    bxy = s[b][d[x][y]]
                    lhs = [(x, a, b), (b, xab, y), (xab, a, s[b][d[xab][y]])]
                    rhs = [(b, x, y), (x, a, bxy), (bxy, s[x][d[a][bxy]], y)]
                    yield "ii", (x, a, b, y), lhs, rhs


def check_weight(w: BoltzmannWeight, limit: int | None = None) -> list[Violation]:
    """All failures of the two weight axioms (empty list for a valid weight).

    (i)  ``phi(x, a, a \\ (x \\* x)) = 0`` and ``phi(x, (x \\* x) / b, b) = 0``;
    (ii) ``phi(x,a,b) + phi(b, x*(a.b), y) + phi(x*(a.b), a, b*([x*(a.b)].y))
         = phi(b,x,y) + phi(x, a, b*(x.y)) + phi(b*(x.y), x*(a.[b*(x.y)]), y)``.
    """
    t, m = w._t, w.modulus
    out: list[Violation] = []
    for axiom, wit, lhs, rhs in _axiom_terms(w.algebra):
        left = sum(t[p][q][u] for p, q, u in lhs)
        right = sum(t[p][q][u] for p, q, u in rhs)
        if (left - right) % m:
            trip = ", ".join(str(tuple(e + 1 for e in tr)) for tr in lhs + rhs)
            out.append(Violation(axiom, tuple(e + 1 for e in wit), f"terms {trip}"))
            if limit is not None and len(out) >= limit:
                break
    return out


def weight_space_basis(X: Biquasile, p: int) -> list[BoltzmannWeight]:
    """A basis of all weights ``X^3 -> Z_p`` for prime ``p`` (nullspace of the axioms)."""
    n = X.order
    ncols = n ** 3
    idx = lambda tr: (tr[0] * n + tr[1]) * n + tr[2]  # noqa: E731
    rows = []
    for _, _, lhs, rhs in _axiom_terms(X):
        row = [0] * ncols
        for tr in lhs:
            row[idx(tr)] += 1
        for tr in rhs:
            row[idx(tr)] -= 1
        if any(v % p for v in row):
            rows.append([v % p for v in row])
    basis = _nullspace_mod_p(rows, p, ncols)
    out = []
    for vec in basis:
        vals = {}
        for k, v in enumerate(vec):
            if v:
                x, rem = divmod(k, n * n)
                a, b = divmod(rem, n)
                vals[(x + 1, a + 1, b + 1)] = v
        out.append(BoltzmannWeight(X, p, vals))
    return out


def _nullspace_mod_p(rows: list[list[int]], p: int, ncols: int) -> list[list[int]]:
    rows = [r[:] for r in rows]
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-rows[i][fc]) % p
        basis.append(vec)
    return basis


# ---------------------------------------------------------------- invariant

def weight_of_coloring(d: MarkedGraphDiagram, X: Biquasile, w: BoltzmannWeight,
                       f: Coloring, schema: str = DEFAULT_SCHEMA) -> int:
    """Signed sum of ``phi(f(x), f(a), f(b))`` over the classical crossings, mod m.

    Marked vertices contribute nothing.
    """
    if not is_coloring(d, X, f, schema):
        raise BiquasileError("not a colouring of this diagram")
    total = 0
    for v in d.vertices:
        if v.kind is VertexKind.MARKED:
            continue
        total += v.kind.sign * w(f[v.x], f[v.a], f[v.b])
    return total % w.modulus


@dataclass(frozen=True)
class WeightedInvariant:
    """Multiset of coloring weights in Z_m, rendered as a polynomial in ``u``."""

    modulus: int
    multiset: tuple[tuple[int, int], ...]  # (exponent, multiplicity), exponent ascending

    @classmethod
    def from_counter(cls, modulus: int, c: Counter) -> "WeightedInvariant":
        return cls(modulus, tuple(sorted((e % modulus, k) for e, k in c.items() if k)))

    @property
    def cardinality(self) -> int:
        return sum(k for _, k in self.multiset)

    def as_dict(self) -> dict[int, int]:
        return dict(self.multiset)

    def is_trivial(self) -> bool:
        return all(e == 0 for e, _ in self.multiset)

    def issubset(self, other: "WeightedInvariant") -> bool:
        mine, theirs = self.as_dict(), other.as_dict()
        return all(theirs.get(e, 0) >= k for e, k in mine.items())

    def polynomial(self) -> str:
        """Terms with the highest exponent first, e.g. ``4u^2+u+3``; empty is ``0``."""
        if not self.multiset:
            return "0"
        parts = []
        for e, k in sorted(self.multiset, reverse=True):
            if e == 0:
                parts.append(str(k))
            else:
                coef = "" if k == 1 else str(k)
                parts.append(f"{coef}u" if e == 1 else f"{coef}u^{e}")
        return "+".join(parts)

    def __str__(self) -> str:
        return self.polynomial()


def enhanced_invariant(d: MarkedGraphDiagram, X: Biquasile, w: BoltzmannWeight,
                       schema: str = DEFAULT_SCHEMA) -> WeightedInvariant:
    """The multiset of :func:`weight_of_coloring` over all colourings."""
    if w.algebra != X:
        raise BiquasileError("the weight is defined on a different biquasile")
    crossings = [(v.kind.sign, v.x - 1, v.a - 1, v.b - 1)
                 for v in d.vertices if v.kind is not VertexKind.MARKED]
    c: Counter = Counter()
    for f in list_colorings(d, X, schema):
        a = f.assignment
        c[sum(sg * w(a[x], a[p], a[q]) for sg, x, p, q in crossings) % w.modulus] += 1
    return WeightedInvariant.from_counter(w.modulus, c)


# ---------------------------------------------------------------------- I/O

def parse_weight(text: str, algebra: Biquasile) -> BoltzmannWeight:
    header = None
    vals: dict[tuple[int, int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 4 or parts[0] != "order" or parts[2] != "modulus":
                raise ParseError("expected header 'order <n> modulus <m>'", lineno)
            try:
                header = (int(parts[1]), int(parts[3]))
            except ValueError:
                raise ParseError("order and modulus must be integers", lineno) from None
            if header[0] != algebra.order:
                raise ParseError(f"weight order {header[0]} does not match algebra order "
                                 f"{algebra.order}", lineno)
            if header[1] < 1:
                raise ParseError("modulus must be positive", lineno)
            continue
        if len(parts) != 4:
            raise ParseError("expected 'x a b v'", lineno)
        try:
            x, a, b, v = (int(p) for p in parts)
        except ValueError:
            raise ParseError("entries must be integers", lineno) from None
        for e in (x, a, b):
            if not 1 <= e <= header[0]:
                raise ParseError(f"element {e} outside 1..{header[0]}", lineno)
        vals[(x, a, b)] = (vals.get((x, a, b), 0) + v) % header[1]
    if header is None:
        raise ParseError("missing header 'order <n> modulus <m>'")
    return BoltzmannWeight(algebra, header[1], vals)


def serialize_weight(w: BoltzmannWeight) -> str:
    lines = [f"order {w.algebra.order} modulus {w.modulus}"]
    lines += [f"{x} {a} {b} {v}" for (x, a, b), v in w.items()]
    return "\n".join(lines) + "\n"


def load_weight(path: str | Path, algebra: Biquasile) -> BoltzmannWeight:
    return parse_weight(Path(path).read_text(), algebra)
