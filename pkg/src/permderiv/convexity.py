"""Convex permutations: non-decreasing derivatives.

A convex permutation matrix can be grown column by column: the rows holding
1s in the first k columns always form an interval, and each new column may
only extend that interval at one of its two ends, subject to keeping the
row-wise column assignment convex.  Exhausting those choices enumerates all
convex permutations, which form four families (identity, two near-cyclic
shifts, and the rotated zigzag) plus their reversals.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .perm_core import Permutation, derivative, reverse
from .variation import pi_star


class StateNotKConvex(ValueError):
    """The partial fill does not satisfy the k-convexity clauses."""


@dataclass(frozen=True)
class PartialColumnFill:
    """The first k columns of an order-n 0/1 matrix, one 1 per filled column.

    rows_by_column[c] is the row holding the 1 in column c+1; the remaining
    columns are all zero.
    """

    n: int
    rows_by_column: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows_by_column", tuple(self.rows_by_column))
        rows = self.rows_by_column
        if not 0 < len(rows) <= self.n:
            raise ValueError(f"need between 1 and {self.n} filled columns, got {len(rows)}")
        if len(set(rows)) != len(rows) or not all(1 <= r <= self.n for r in rows):
            raise ValueError(f"rows {rows} are not distinct rows in 1..{self.n}")

    @property
    def k(self) -> int:
        return len(self.rows_by_column)


def is_convex(p: Permutation) -> bool:
    """True iff consecutive differences are non-decreasing (vacuous for n <= 2)."""
    d = derivative(p).diffs
    return all(d[i] <= d[i + 1] for i in range(len(d) - 1))


def interval_rows(state: PartialColumnFill) -> frozenset[int]:
    """The set of rows occupied by the filled columns."""
    return frozenset(state.rows_by_column)


def _column_of_row(state: PartialColumnFill) -> dict[int, int]:
    return {row: c + 1 for c, row in enumerate(state.rows_by_column)}


def is_k_convex(state: PartialColumnFill) -> bool:
    """Occupied rows form an interval and their column assignment is convex.

    One 1 per filled column is guaranteed by the type; this checks the
    interval clause and that column differences between consecutive occupied
    rows are non-decreasing.
    """
    rows = state.rows_by_column
    low, high = min(rows), max(rows)
    if high - low + 1 != len(rows):
        return False
    columns = _column_of_row(state)
    diffs = [columns[r + 1] - columns[r] for r in range(low, high)]
    return all(diffs[i] <= diffs[i + 1] for i in range(len(diffs) - 1))


def extension_rows(state: PartialColumnFill) -> frozenset[int]:
    """Rows where the next column's 1 keeps the fill (k+1)-convex.

    At most the two interval endpoints r-1 and s+1 qualify; the result may
    be empty, which is the construction's dead end.
    """
    if not is_k_convex(state):
        raise StateNotKConvex(f"fill {state.rows_by_column} is not {state.k}-convex")
    if state.k == state.n:
        return frozenset()
    rows = state.rows_by_column
    low, high = min(rows), max(rows)
    out = []
    for candidate in (low - 1, high + 1):
        if 1 <= candidate <= state.n:
            extended = PartialColumnFill(state.n, rows + (candidate,))
            if is_k_convex(extended):
                out.append(candidate)
    return frozenset(out)


def _fill_to_permutation(state: PartialColumnFill) -> Permutation:
    columns = _column_of_row(state)
    return Permutation(tuple(columns[r] for r in range(1, state.n + 1)))


def algorithm1(n: int, chooser: Callable[[Sequence[int]], int]) -> Permutation | None:
    """Grow a convex permutation column by column, or report failure.

    The chooser is called on each candidate tuple (ascending): first the
    start rows 1..n, then each nonempty extension set.  Returns None when
    the extension set empties before all n columns are filled; a completed
    fill is always convex, and every convex permutation is reachable under
    some sequence of choices.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    choice = chooser(tuple(range(1, n + 1)))
    if not 1 <= choice <= n:
        raise ValueError(f"chooser returned {choice!r}, not a row in 1..{n}")
    state = PartialColumnFill(n, (choice,))
    while state.k < n:
        candidates = tuple(sorted(extension_rows(state)))
        if not candidates:
            return None
        choice = chooser(candidates)
        if choice not in candidates:
            raise ValueError(f"chooser returned {choice!r}, not one of {candidates}")
        state = PartialColumnFill(n, state.rows_by_column + (choice,))
    return _fill_to_permutation(state)


def enumerate_convex(n: int) -> frozenset[Permutation]:
    """All convex permutations of order n, by exhausting the growth choices."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    results = []

    def grow(state: PartialColumnFill) -> None:
        if state.k == n:
            results.append(_fill_to_permutation(state))
            return
        for candidate in sorted(extension_rows(state)):
            grow(PartialColumnFill(n, state.rows_by_column + (candidate,)))

    for start in range(1, n + 1):
        grow(PartialColumnFill(n, (start,)))
    return frozenset(results)


def classify_convex(n: int) -> frozenset[Permutation]:
    """The four convex families and their reversals, deduplicated.

    Families: identity, (n, 1, 2, ..., n-1), (n-1, 1, 2, ..., n-2, n), and
    the rotated zigzag pi_star(n).  Overlaps at small orders collapse under
    set semantics.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    members: set[Permutation] = set()

    def add(entries: tuple[int, ...]) -> None:
        if sorted(entries) == list(range(1, n + 1)):
            p = Permutation(entries)
            members.add(p)
            members.add(reverse(p))

    add(tuple(range(1, n + 1)))
    add((n,) + tuple(range(1, n)))
    add((n - 1,) + tuple(range(1, n - 1)) + (n,))
    add(pi_star(n).entries)
    return frozenset(members)
