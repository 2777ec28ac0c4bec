"""Sparse exact linear solving over the rationals.

Rows are reduced incrementally, in the caller's order, against the pivot
rows found so far; every stored row is scaled to a primitive integer
vector (cross-multiplication followed by a gcd division), so the whole
elimination is fraction-free and bit-for-bit reproducible.  Pivot columns
are the leading (smallest-index) columns of the echelon rows; the
particular solution sets every free column to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

RHS = -1  # augmented-column key inside a row dict


def _primitive(row: dict) -> dict:
    """Scale a sparse Fraction row to coprime integers with a positive
    leading (smallest-column) entry."""
    if not row:
        return row
    mult = lcm(*(c.denominator for c in row.values()))
    ints = {k: int(c * mult) for k, c in row.items()}
    g = gcd(*(abs(v) for v in ints.values()))
    if g > 1:
        ints = {k: v // g for k, v in ints.items()}
    lead = min(k for k in ints if k != RHS) if any(k != RHS for k in ints) else RHS
    if ints[lead] < 0:
        ints = {k: -v for k, v in ints.items()}
    return {k: Fraction(v) for k, v in ints.items()}


def _eliminate(row: dict, pivot_row: dict, col) -> dict:
    """row * pivot[col] - pivot_row * row[col], dropping zeros."""
    a = pivot_row[col]
    b = row[col]
    out = {k: v * a for k, v in row.items() if k != col}
    for k, v in pivot_row.items():
        if k == col:
            continue
        w = out.get(k, _F0) - v * b
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


_F0 = Fraction(0)


@dataclass
class LinearSolution:
    status: str                      # "solved" or "inconsistent"
    ncols: int
    pivot_cols: list = field(default_factory=list)
    free_cols: list = field(default_factory=list)
    particular: list | None = None   # Fractions, len ncols
    nullspace: list = field(default_factory=list)
    pivot_log: list = field(default_factory=list)


def solve_sparse(rows, rhs, ncols: int) -> LinearSolution:
    """Solve A x = b for sparse rows (dicts col->Fraction) in the given
    deterministic order; returns a particular solution with free columns
    zeroed plus a nullspace basis (one vector per free column)."""
    pivots: dict = {}
    pivot_order: list = []
    inconsistent = False
    for idx, (row, b) in enumerate(zip(rows, rhs)):
        work = {k: Fraction(v) for k, v in row.items() if v}
        if b:
            work[RHS] = Fraction(b)
        while True:
            cols = [k for k in work if k != RHS]
            if not cols:
                if work.get(RHS):
                    inconsistent = True
                break
            lead = min(cols)
            if lead in pivots:
                work = _eliminate(work, pivots[lead], lead)
            else:
                work = _primitive(work)
                pivots[lead] = work
                pivot_order.append((lead, idx))
                break
        if inconsistent:
            break

    sol = LinearSolution(status="inconsistent" if inconsistent else "solved",
                         ncols=ncols, pivot_log=pivot_order)
    if inconsistent:
        return sol

    pivot_cols = sorted(pivots)
    free_cols = [c for c in range(ncols) if c not in pivots]
    sol.pivot_cols = pivot_cols
    sol.free_cols = free_cols

    # back-reduce to simplify extraction: clear later pivot columns
    for c in reversed(pivot_cols):
        row = pivots[c]
        for later in pivot_cols:
            if later > c and later in row:
                row = _eliminate(row, pivots[later], later)
        pivots[c] = _primitive(row)

    particular = [_F0] * ncols
    for c in pivot_cols:
        row = pivots[c]
        # after back-reduction only the pivot column, free columns and RHS remain
        particular[c] = row.get(RHS, _F0) / row[c]
    sol.particular = particular

    for f in free_cols:
        vec = [_F0] * ncols
        vec[f] = Fraction(1)
        for c in pivot_cols:
            row = pivots[c]
            if f in row:
                vec[c] = -row[f] / row[c]
        sol.nullspace.append(vec)
    return sol
