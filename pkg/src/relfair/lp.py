"""Exact two-phase simplex over rationals with Bland's rule.

Sized for desk problems (a handful of variables, a few dozen
constraints); the tableau is dense and nothing is cached.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from ._rat import ONE, ZERO, as_rat
from .errors import DimensionMismatch

LE, GE, EQ = "<=", ">=", "=="
_SENSES = (LE, GE, EQ)


@dataclass(frozen=True)
class LinConstraint:
    coeffs: tuple
    rhs: object
    sense: str = LE

    def __post_init__(self):
        if self.sense not in _SENSES:
            raise ValueError(f"unknown constraint sense {self.sense!r}")

    def satisfied(self, x) -> bool:
        lhs = sum((a * b for a, b in zip(self.coeffs, x)), ZERO)
        if self.sense == LE:
            return lhs <= self.rhs
        if self.sense == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


def constraint(coeffs, rhs, sense=LE) -> LinConstraint:
    return LinConstraint(tuple(as_rat(c) for c in coeffs), as_rat(rhs), sense)


@dataclass(frozen=True)
class HPolyhedron:
    dim: int
    constraints: tuple = ()

    def __post_init__(self):
        for c in self.constraints:
            if len(c.coeffs) != self.dim:
                raise DimensionMismatch(
                    f"constraint has {len(c.coeffs)} coefficients, polyhedron dim is {self.dim}"
                )

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.dim, self.constraints))
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def le_rows(self) -> tuple:
        """Constraints as (a, b) pairs meaning a.x <= b, equalities split in two."""
        rows = self.__dict__.get("_rows")
        if rows is None:
            rows = _le_rows(self.constraints)
            object.__setattr__(self, "_rows", rows)
        return rows

    def contains(self, x) -> bool:
        return all(c.satisfied(x) for c in self.constraints)

    def with_constraints(self, extra) -> "HPolyhedron":
        extra = tuple(extra)
        P = HPolyhedron(self.dim, self.constraints + extra)
        object.__setattr__(P, "_rows", self.le_rows + _le_rows(extra))
        return P


def _le_rows(constraints) -> tuple:
    out = []
    for c in constraints:
        if c.sense != GE:
            out.append((c.coeffs, c.rhs))
        if c.sense != LE:
            out.append((tuple(-a for a in c.coeffs), -c.rhs))
    return tuple(out)


def box(lower, upper) -> HPolyhedron:
    """The box lower <= x <= upper as an H-polyhedron."""
    return _box(tuple(lower), tuple(upper))


@lru_cache(maxsize=65536)
def _box(lower, upper) -> HPolyhedron:
    n = len(upper)
    cons = []
    for i, e in enumerate(_units(n)):
        cons.append(LinConstraint(e, as_rat(upper[i]), LE))
        cons.append(LinConstraint(e, as_rat(lower[i]), GE))
    P = HPolyhedron(n, tuple(cons))
    # the corners and rows are known; seed the memos used by the polyhedra module
    lo, hi = tuple(map(as_rat, lower)), tuple(map(as_rat, upper))
    rows = []
    for e, ne, a, b in zip(_units(n), _neg_units(n), lo, hi):
        rows += [(e, b), (ne, -a)]
    object.__setattr__(P, "_rows", tuple(rows))
    if all(a <= b for a, b in zip(lo, hi)):
        corners = [()]
        for a, b in zip(lo, hi):
            corners = [c + (v,) for c in corners for v in ((a,) if a == b else (a, b))]
        object.__setattr__(P, "_vertices", tuple(sorted(corners)))
    else:
        object.__setattr__(P, "_vertices", ())
    return P


@lru_cache(maxsize=None)
def _units(n):
    return tuple(tuple(ONE if j == i else ZERO for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def _neg_units(n):
    return tuple(tuple(-c for c in e) for e in _units(n))


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: object = None
    point: Optional[tuple] = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def _pivot(T, basis, r, c):
    row = T[r]
    piv = row[c]
    if piv != 1:
        row = [v / piv for v in row]
        T[r] = row
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                T[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _run(T, basis, allowed):
    """Minimize the objective stored in T[-1]; Bland's rule on columns < allowed."""
    m = len(T) - 1
    while True:
        obj = T[-1]
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(T, basis, best[1], enter)


def lp_solve(c: Sequence, P: HPolyhedron, direction: str = "max") -> LPResult:
    """Optimize c.x over P. Variables are free; P may be empty or unbounded."""
    n = P.dim
    if len(c) != n:
        raise DimensionMismatch(f"objective has {len(c)} entries, polyhedron dim is {n}")
    if direction not in ("max", "min"):
        raise ValueError("direction must be 'max' or 'min'")
    cost = [as_rat(v) for v in c]
    if direction == "max":
        cost = [-v for v in cost]

    cons = P.constraints
    m = len(cons)
    n_slack = sum(1 for k in cons if k.sense != EQ)
    # columns: u (n), v (n), slacks, artificials
    rows, basis, art_cols = [], [], []
    base_cols = 2 * n + n_slack
    slack_at = 2 * n
    art_at = base_cols
    for k in cons:
        coeffs = list(k.coeffs)
        row = coeffs + [-a for a in coeffs] + [ZERO] * n_slack
        rhs = k.rhs
        slack_col = None
        if k.sense != EQ:
            slack_col = slack_at
            row[slack_col] = ONE if k.sense == LE else -ONE
            slack_at += 1
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        if slack_col is not None and row[slack_col] == 1:
            rows.append((row, rhs, slack_col))
        else:
            rows.append((row, rhs, None))
    n_art = sum(1 for _, _, s in rows if s is None)
    width = base_cols + n_art
    T = []
    for row, rhs, s in rows:
        full = row + [ZERO] * n_art + [rhs]
        if s is None:
            full[art_at] = ONE
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        else:
            basis.append(s)
        T.append(full)

    if n_art:
        obj = [ZERO] * (width + 1)
        for j in art_cols:
            obj[j] = ONE
        for i, b in enumerate(basis):
            if b >= base_cols:
                obj = [a - v for a, v in zip(obj, T[i])]
        T.append(obj)
        _run(T, basis, width)
        if T[-1][-1] != 0:
            return LPResult("infeasible")
        T.pop()
        # drive artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(T):
            if basis[i] >= base_cols:
                col = next((j for j in range(base_cols) if T[i][j] != 0), None)
                if col is None:
                    del T[i]
                    del basis[i]
                    continue
                _pivot(T, basis, i, col)
            i += 1
        T = [row[:base_cols] + [row[-1]] for row in T]
    else:
        T = [row[:base_cols] + [row[-1]] for row in T]

    full_cost = cost + [-v for v in cost] + [ZERO] * n_slack
    obj = full_cost + [ZERO]
    for i, b in enumerate(basis):
        f = full_cost[b]
        if f:
            obj = [a - f * v for a, v in zip(obj, T[i])]
    T.append(obj)
    status = _run(T, basis, base_cols)
    if status == "unbounded":
        return LPResult("unbounded")
    y = [ZERO] * base_cols
    for i, b in enumerate(basis):
        y[b] = T[i][-1]
    x = tuple(y[j] - y[n + j] for j in range(n))
    value = sum((a * b for a, b in zip(c, x)), ZERO)
    return LPResult("optimal", as_rat(value), x)


def feasible_point(P: HPolyhedron):
    """Some exact point of P, or None when P is empty."""
    res = lp_solve([ZERO] * P.dim, P, "min")
    return res.point if res.optimal else None
