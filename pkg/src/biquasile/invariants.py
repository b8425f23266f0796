"""Batch invariants: tables, pairwise comparison and cobordism checks."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Biquasile
from .boltzmann import BoltzmannWeight, WeightedInvariant, enhanced_invariant
from .diagram import DEFAULT_SCHEMA, MarkedGraphDiagram, resolve
from .solver import count_colorings

__all__ = [
    "counting_invariant",
    "InvariantTable",
    "invariant_table",
    "Verdict",
    "compare",
    "cobordism_inclusion_check",
]


def counting_invariant(d: MarkedGraphDiagram, X: Biquasile, schema: str = DEFAULT_SCHEMA,
                       jobs: int = 1) -> int:
    return count_colorings(d, X, schema, jobs=jobs)


def _label(obj, k: int, prefix: str) -> str:
    return getattr(obj, "name", None) or f"{prefix}{k + 1}"


@dataclass(frozen=True)
class InvariantTable:
    diagrams: tuple[str, ...]
    algebras: tuple[str, ...]
    values: tuple[tuple[int, ...], ...]  # values[i][j]: algebra i, diagram j

    def row(self, algebra: str) -> tuple[int, ...]:
        return self.values[self.algebras.index(algebra)]

    def cell(self, algebra: str, diagram: str) -> int:
        return self.row(algebra)[self.diagrams.index(diagram)]

    def lines(self) -> list[str]:
        """Machine-readable ``diagram algebra count`` lines, diagram-major."""
        return [f"{dg} {al} {self.values[i][j]}"
                for j, dg in enumerate(self.diagrams)
                for i, al in enumerate(self.algebras)]

    def render(self) -> str:
        """Aligned plain-text table, one row per algebra."""
        head = [""] + list(self.diagrams)
        body = [[al] + [str(v) for v in row] for al, row in zip(self.algebras, self.values)]
        widths = [max(len(r[c]) for r in [head] + body) for c in range(len(head))]
        fmt = lambda r: "  ".join(s.rjust(w) for s, w in zip(r, widths)).rstrip()  # noqa: E731
        return "\n".join(fmt(r) for r in [head] + body) + "\n"


def _cell(args) -> int:
    d, X, schema = args
    return count_colorings(d, X, schema)


def invariant_table(diagrams: Sequence[MarkedGraphDiagram], algebras: Sequence[Biquasile],
                    schema: str = DEFAULT_SCHEMA, jobs: int = 1) -> InvariantTable:
    """Counting invariant of every diagram under every algebra."""
    cells = [(d, X, schema) for X in algebras for d in diagrams]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            flat = list(ex.map(_cell, cells))
    else:
        flat = [_cell(c) for c in cells]
    nd = len(diagrams)
    values = tuple(tuple(flat[i * nd:(i + 1) * nd]) for i in range(len(algebras)))
    return InvariantTable(tuple(_label(d, k, "D") for k, d in enumerate(diagrams)),
                          tuple(_label(X, k, "A") for k, X in enumerate(algebras)),
                          values)


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`compare` with the evidence for every invariant tried."""

    distinguished: bool
    counts: tuple[tuple[str, int, int], ...] = ()
    enhancements: tuple[tuple[str, str, str], ...] = field(default=())

    def witnesses(self) -> list[str]:
        out = [f"{name}: {u} vs {v}" for name, u, v in self.counts if u != v]
        out += [f"{name}: {u} vs {v}" for name, u, v in self.enhancements if u != v]
        return out

    def report(self) -> str:
        lines = [f"{name}: {u} vs {v}" for name, u, v in self.counts]
        lines += [f"{name}: {u} vs {v}" for name, u, v in self.enhancements]
        lines.append("distinguished" if self.distinguished else "not distinguished")
        return "\n".join(lines) + "\n"


def compare(d1: MarkedGraphDiagram, d2: MarkedGraphDiagram, algebras: Sequence[Biquasile] = (),
            weights: Sequence[BoltzmannWeight] = (), schema: str = DEFAULT_SCHEMA) -> Verdict:
    """Whether some counting invariant or some enhancement tells ``d1`` and ``d2`` apart."""
    counts = []
    for k, X in enumerate(algebras):
        counts.append((_label(X, k, "A"), count_colorings(d1, X, schema),
                       count_colorings(d2, X, schema)))
    enh = []
    for k, w in enumerate(weights):
        e1 = enhanced_invariant(d1, w.algebra, w, schema)
        e2 = enhanced_invariant(d2, w.algebra, w, schema)
        name = f"{_label(w.algebra, k, 'A')}/phi{k + 1}"
        enh.append((name, e1.polynomial(), e2.polynomial(), e1 != e2))
    distinguished = any(u != v for _, u, v in counts) or any(diff for *_, diff in enh)
    return Verdict(distinguished, tuple(counts), tuple((n, u, v) for n, u, v, _ in enh))


def cobordism_inclusion_check(d: MarkedGraphDiagram, X: Biquasile, w: BoltzmannWeight,
                              schema: str = DEFAULT_SCHEMA) -> bool:
    """True iff the enhancement of ``d`` sits inside that of both resolutions."""
    mine: WeightedInvariant = enhanced_invariant(d, X, w, schema)
    for sign in ("+", "-"):
        other = enhanced_invariant(resolve(d, sign), X, w, schema)
        if not mine.issubset(other):
            return False
    return True
