"""Counting and listing biquasile colourings.

Four independent routes are provided:

* :func:`count_colorings` - backtracking over a static elimination plan in
  which most regions are forced through the division tables;
* :func:`oracle_count` - a plain loop over every assignment, kept as the
  reference semantics;
* :func:`contraction_count` - the count as a contraction of one 0/1 tensor
  per equation, evaluated by ``numpy.einsum``;
* :func:`count_solutions_linear` - for Alexander biquasiles the colouring
  conditions are linear over Z_N and the solutions are counted from the
  invariant factors of the coefficient matrix.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterator

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .algebra import Biquasile
from .diagram import DEFAULT_SCHEMA, Equation, MarkedGraphDiagram, constraints
from .errors import BudgetExceededError

__all__ = [
    "Coloring",
    "LinearSystem",
    "count_colorings",
    "list_colorings",
    "oracle_count",
    "oracle_budget",
    "contraction_count",
    "build_linear_system",
    "count_solutions_linear",
    "is_coloring",
]

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Coloring:
    """Region colours, ``assignment[r-1]`` is the colour (1-based) of region ``r``."""

    assignment: tuple[int, ...]

    def __getitem__(self, region: int) -> int:
        return self.assignment[region - 1]

    def __len__(self) -> int:
        return len(self.assignment)


def _holds(eq: Equation, f, tabs) -> bool:
    s, d = tabs[0], tabs[1]
    if eq.kind == "equal":
        u, v = eq.slots
        return f[u - 1] == f[v - 1]
    x, a, b, y = eq.slots
    return s[f[x - 1]][d[f[a - 1]][f[b - 1]]] == f[y - 1]


def is_coloring(d: MarkedGraphDiagram, X: Biquasile, f, schema: str = DEFAULT_SCHEMA) -> bool:
    """True iff the 1-based assignment ``f`` satisfies every condition of ``d``."""
    vals = [c - 1 for c in (f.assignment if isinstance(f, Coloring) else f)]
    if len(vals) != d.region_count or any(not 0 <= c < X.order for c in vals):
        return False
    tabs = X.tables()
    return all(_holds(eq, vals, tabs) for eq in constraints(d, X, schema))


# ------------------------------------------------------------------ planning

# step kinds
_BRANCH, _FORCE = 0, 1


def _plan(R: int, eqs: list[Equation]):
    """Static elimination order over 0-based regions.

    Each step binds one region, either by branching over all colours or by
    solving an equation whose other slots are already bound.  After a region
    is bound, every equation that just became fully bound is checked.
    """
    eqs0 = [(e.kind, tuple(r - 1 for r in e.slots)) for e in eqs]
    touching: dict[int, list[int]] = {}
    for k, (_, slots) in enumerate(eqs0):
        for r in set(slots):
            touching.setdefault(r, []).append(k)
    bound = [False] * R
    done = [False] * len(eqs0)
    steps = []
    free_regions = [r for r in range(R) if r not in touching]
    todo = [r for r in range(R) if r in touching]

    def unbound_slots(k):
        return {r for r in eqs0[k][1] if not bound[r]}

    def bind(r, step):
        bound[r] = True
        checks = []
        for k in touching.get(r, ()):
            if not done[k] and not unbound_slots(k):
                done[k] = True
                if step is None or step[2] != k:
                    checks.append(k)
        steps.append((step, checks))

    remaining = set(todo)
    while remaining:
        forced = None
        for k, (kind, slots) in enumerate(eqs0):
            if done[k]:
                continue
            ub = unbound_slots(k)
            if len(ub) == 1:
                forced = (k, ub.pop())
                break
        if forced is not None:
            k, r = forced
            remaining.discard(r)
            bind(r, (_FORCE, r, k))
        else:
            r = min(remaining)
            remaining.discard(r)
            bind(r, (_BRANCH, r, None))
    return eqs0, steps, free_regions


def _solver_fn(eq, target, tabs):
    """Return a function computing ``target`` from a colour vector, or None."""
    s, d, sl, sr, dl, dr = tabs
    kind, slots = eq
    if kind == "equal":
        u, v = slots
        if u == v:
            return None
        other = v if target == u else u
        return lambda f: f[other]
    x, a, b, y = slots
    if [x, a, b, y].count(target) > 1:
        return None
    if target == y:
        return lambda f: s[f[x]][d[f[a]][f[b]]]
    if target == x:
        return lambda f: sr[f[y]][d[f[a]][f[b]]]
    if target == a:
        return lambda f: dr[sl[f[x]][f[y]]][f[b]]
    return lambda f: dl[f[a]][sl[f[x]][f[y]]]


def _compile(d: MarkedGraphDiagram, X: Biquasile, schema: str):
    eqs = constraints(d, X, schema)
    R = d.region_count
    eqs0, steps, free = _plan(R, eqs)
    tabs = X.tables()
    s, dd = tabs[0], tabs[1]

    def checker(k):
        kind, slots = eqs0[k]
        if kind == "equal":
            u, v = slots
            return lambda f: f[u] == f[v]
        x, a, b, y = slots
        return lambda f: s[f[x]][dd[f[a]][f[b]]] == f[y]

    compiled = []
    for (kind, r, k), checks in steps:
        fn = None
        if kind == _FORCE:
            fn = _solver_fn(eqs0[k], r, tabs)
            if fn is None:
                # region occurs twice in the equation: branch and check instead
                kind = _BRANCH
                checks = checks + [k]
        compiled.append((kind, r, fn, [checker(c) for c in checks]))
    return compiled, free


def _walk(compiled, n: int, f: list[int], depth: int, emit):
    if depth == len(compiled):
        emit(f)
        return
    kind, r, fn, checks = compiled[depth]
    if kind == _BRANCH:
        for c in range(n):
            f[r] = c
            if all(ch(f) for ch in checks):
                _walk(compiled, n, f, depth + 1, emit)
        f[r] = -1
    else:
        f[r] = fn(f)
        if all(ch(f) for ch in checks):
            _walk(compiled, n, f, depth + 1, emit)
        f[r] = -1


def _count_subtree(args) -> int:
    d, X, schema, first = args
    compiled, free = _compile(d, X, schema)
    total = [0]

    def emit(_f):
        total[0] += 1

    f = [-1] * d.region_count
    kind, r, _, checks = compiled[0]
    f[r] = first
    if all(ch(f) for ch in checks):
        _walk(compiled, X.order, f, 1, emit)
    return total[0]


def count_colorings(d: MarkedGraphDiagram, X: Biquasile, schema: str = DEFAULT_SCHEMA,
                    jobs: int = 1) -> int:
    """Number of colourings of ``d`` by ``X``.

    With ``jobs > 1`` the colours of the first branching region are counted
    in separate worker processes and summed.
    """
    compiled, free = _compile(d, X, schema)
    n = X.order
    factor = n ** len(free)
    if not compiled:
        return factor
    if jobs > 1 and compiled[0][0] == _BRANCH:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = ex.map(_count_subtree, [(d, X, schema, c) for c in range(n)])
            return factor * sum(parts)
    total = [0]

    def emit(_f):
        total[0] += 1

    _walk(compiled, n, [-1] * d.region_count, 0, emit)
    return factor * total[0]


def list_colorings(d: MarkedGraphDiagram, X: Biquasile, schema: str = DEFAULT_SCHEMA
                   ) -> Iterator[Coloring]:
    """Every colouring of ``d`` once, in lexicographic order of the assignment."""
    compiled, free = _compile(d, X, schema)
    found: list[tuple[int, ...]] = []
    n = X.order

    def emit(f):
        base = list(f)
        for combo in itertools.product(range(n), repeat=len(free)):
            for r, c in zip(free, combo):
                base[r] = c
            found.append(tuple(c + 1 for c in base))

    _walk(compiled, n, [-1] * d.region_count, 0, emit)
    found.sort()
    for a in found:
        yield Coloring(a)


# -------------------------------------------------------------------- oracle

def oracle_budget() -> int:
    raw = os.environ.get("BIQUASILE_ORACLE_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    return int(float(raw))


def oracle_count(d: MarkedGraphDiagram, X: Biquasile, schema: str = DEFAULT_SCHEMA,
                 budget: int | None = None) -> int:
    """Count colourings by trying every one of ``n**regions`` assignments."""
    budget = oracle_budget() if budget is None else budget
    n, R = X.order, d.region_count
    if n ** R > budget:
        raise BudgetExceededError(f"{n}^{R} assignments exceed the oracle budget {budget}")
    tabs = X.tables()
    eqs = constraints(d, X, schema)
    count = 0
    for f in itertools.product(range(n), repeat=R):
        if all(_holds(eq, f, tabs) for eq in eqs):
            count += 1
    return count


def _einsum(terms, out) -> np.ndarray:
    """``numpy.einsum`` on region labels, renumbered locally (einsum allows 52)."""
    local: dict[int, int] = {}
    args: list = []
    for t, lab in terms:
        args += [t, [local.setdefault(r, len(local)) for r in lab]]
    return np.einsum(*args, [local[r] for r in out])


def contraction_count(d: MarkedGraphDiagram, X: Biquasile, schema: str = DEFAULT_SCHEMA) -> int:
    """Count colourings by contracting the tensor network of the equations.

    Each ``rule`` equation is the tensor ``T[x, a, b, y] = [y == x * (a . b)]``
    and each ``equal`` equation the identity matrix; regions in no equation
    contribute a factor ``n`` each.
    """
    n = X.order
    s, dd = X.tables()[:2]
    rule = np.zeros((n, n, n, n), dtype=np.int64)
    for x in range(n):
        for a in range(n):
            for b in range(n):
                rule[x, a, b, s[x][dd[a][b]]] = 1
    eye = np.eye(n, dtype=np.int64)
    factors: list[tuple[np.ndarray, tuple[int, ...]]] = []
    seen: set[int] = set()
    for eq in constraints(d, X, schema):
        t, labels = (rule if eq.kind == "rule" else eye), [r - 1 for r in eq.slots]
        # a repeated label inside one equation takes a diagonal
        uniq = tuple(dict.fromkeys(labels))
        factors.append((_einsum([(t, labels)], uniq), uniq))
        seen.update(uniq)
    factor = n ** (d.region_count - len(seen))
    # eliminate regions one at a time, always the one giving the smallest merged tensor
    remaining = set(seen)
    while remaining:
        def merged(r):
            return set().union(*(lab for _, lab in factors if r in lab)) - {r}
        r = min(sorted(remaining), key=lambda q: len(merged(q)))
        out = tuple(sorted(merged(r)))
        group = [f for f in factors if r in f[1]]
        factors = [f for f in factors if r not in f[1]]
        factors.append((_einsum(group, out), out))
        remaining.discard(r)
    total = 1
    for t, _ in factors:
        total *= int(t)
    return factor * total


# -------------------------------------------------------------- linear route

@dataclass(frozen=True)
class LinearSystem:
    """Rows of integer coefficients (one per equation) over Z_N, columns = regions."""

    modulus: int
    rows: tuple[tuple[int, ...], ...]
    columns: int

    def as_matrix(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def build_linear_system(d: MarkedGraphDiagram, N: int, dparam: int, sparam: int, nparam: int,
                        schema: str = DEFAULT_SCHEMA) -> LinearSystem:
    """Coefficient matrix of the colouring conditions for an Alexander biquasile.

    ``y = x * (a . b)`` becomes ``-d s n^2 x + n d a + n s b - y = 0`` and an
    equality ``u = v`` becomes ``u - v = 0``, all modulo ``N``.
    """
    R = d.region_count
    cx = (-dparam * sparam * nparam * nparam) % N
    ca = (nparam * dparam) % N
    cb = (nparam * sparam) % N
    rows = []
    for eq in constraints(d, None, schema):
        row = [0] * R
        if eq.kind == "equal":
            u, v = eq.slots
            row[u - 1] += 1
            row[v - 1] -= 1
        else:
            x, a, b, y = eq.slots
            row[x - 1] += cx
            row[a - 1] += ca
            row[b - 1] += cb
            row[y - 1] -= 1
        rows.append(tuple(c % N for c in row))
    return LinearSystem(N, tuple(rows), R)


def count_solutions_linear(system: LinearSystem) -> int:
    """Solutions in Z_N^r of ``A v = 0`` from the invariant factors of ``A``.

    With invariant factors ``d_1..d_k`` the count is ``N^(r-k) * prod gcd(d_i, N)``.
    """
    N, r = system.modulus, system.columns
    if not system.rows:
        return N ** r
    factors = [int(f) for f in invariant_factors(Matrix(system.as_matrix()), domain=ZZ)]
    factors = [f for f in factors if f != 0]
    k = len(factors)
    return N ** (r - k) * prod(gcd(f, N) for f in factors)
