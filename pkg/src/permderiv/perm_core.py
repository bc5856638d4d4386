"""Permutations of {1..n} and their discrete derivatives.

A permutation is stored as a tuple of 1-based entries; the matrix view (a 1
in position (i, pi_i), zeros elsewhere) is derived on demand.  Differencing
is invertible: ``integrate`` recovers the unique permutation from a
difference sequence, and ``is_realizable`` decides which integer sequences
arise this way — exactly those whose running sums, together with 0, form a
set of n consecutive integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 10**6
MAX_MATRIX_ORDER = 64


class NotRealizable(ValueError):
    """The sequence is not the derivative of any permutation."""


class InvalidTree(ValueError):
    """The edge list is not a spanning tree on {1..n}."""


class InconsistentTree(ValueError):
    """Propagated tree weights do not shift onto {1..n}."""


def parse_int_sequence(text: str) -> tuple[int, ...]:
    """Parse a comma-separated integer sequence; the empty string is ()."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"not a comma-separated integer sequence: {text!r}") from None


def format_int_sequence(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}, entries 1-based."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        n = len(self.entries)
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be between 1 and {MAX_ORDER}, got {n}")
        seen = bytearray(n + 1)
        for v in self.entries:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise ValueError(f"entry {v!r} outside 1..{n}")
            if seen[v]:
                raise ValueError(f"duplicate entry {v}")
            seen[v] = 1

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        return cls(parse_int_sequence(text))

    def __str__(self) -> str:
        return format_int_sequence(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]


@dataclass(frozen=True)
class Derivative:
    """Consecutive differences of a permutation; length n-1 at order n."""

    diffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "diffs", tuple(self.diffs))
        n = self.n
        for d in self.diffs:
            if not isinstance(d, int) or d == 0 or abs(d) > n - 1:
                raise ValueError(f"difference {d!r} impossible at order {n}")

    @property
    def n(self) -> int:
        return len(self.diffs) + 1

    @classmethod
    def from_string(cls, text: str) -> "Derivative":
        return cls(parse_int_sequence(text))

    def __str__(self) -> str:
        return format_int_sequence(self.diffs)

    def __len__(self) -> int:
        return len(self.diffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.diffs)

    def __getitem__(self, index):
        return self.diffs[index]


@dataclass(frozen=True)
class WeightedTree:
    """A weighted spanning tree on vertices {1..n}.

    Each edge is (i, j, w) with 1 <= i < j <= n; the weight states that the
    permutation value at j exceeds the value at i by w.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        n = self.n
        if n < 1:
            raise InvalidTree(f"vertex count must be positive, got {n}")
        if len(self.edges) != n - 1:
            raise InvalidTree(f"a spanning tree on {n} vertices needs {n - 1} edges, got {len(self.edges)}")
        for e in self.edges:
            if len(e) != 3:
                raise InvalidTree(f"edge {e!r} is not (i, j, weight)")
            i, j, _ = e
            if not (1 <= i < j <= n):
                raise InvalidTree(f"edge endpoints ({i},{j}) must satisfy 1 <= i < j <= {n}")
        # n-1 edges + connected => acyclic, so connectivity is the whole check
        adjacency = _adjacency(self)
        reached = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for v, _ in adjacency[u]:
                if v not in reached:
                    reached.add(v)
                    stack.append(v)
        if len(reached) != n:
            raise InvalidTree("edges do not connect all vertices")


def _adjacency(tree: WeightedTree) -> dict[int, list[tuple[int, int]]]:
    adjacency: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, tree.n + 1)}
    for i, j, w in tree.edges:
        adjacency[i].append((j, w))
        adjacency[j].append((i, -w))
    return adjacency


def derivative(p: Permutation) -> Derivative:
    """The sequence of consecutive differences; empty at order 1.

    >>> str(derivative(Permutation((5, 2, 7, 4, 1, 6, 3))))
    '-3,5,-3,-3,5,-3'
    """
    e = p.entries
    return Derivative(tuple(e[i + 1] - e[i] for i in range(len(e) - 1)))


def sum_characteristic(z: Iterable[int]) -> frozenset[int]:
    """{0} together with every running sum of z."""
    out = {0}
    total = 0
    for x in z:
        total += x
        out.add(total)
    return frozenset(out)


def is_realizable(z: Iterable[int]) -> bool:
    """True iff z is the derivative of some permutation.

    Holds exactly when the running-sum set is len(z)+1 consecutive integers
    (0 is always a member), which is also when ``integrate`` succeeds.
    """
    z = tuple(z)
    sums = sum_characteristic(z)
    n = len(z) + 1
    return len(sums) == n and max(sums) - min(sums) == n - 1


def integrate(z: Iterable[int]) -> Permutation:
    """Recover the unique permutation whose derivative is z.

    Running values are anchored so the minimum maps to 1.  Raises
    NotRealizable when the input is not a permutation derivative.

    >>> integrate((-3, 5, -3, -3, 5, -3)).entries
    (5, 2, 7, 4, 1, 6, 3)
    """
    z = tuple(z)
    n = len(z) + 1
    values = [0] * n
    total = 0
    for i, x in enumerate(z):
        total += x
        values[i + 1] = total
    shift = 1 - min(values)
    entries = tuple(v + shift for v in values)
    seen = bytearray(n + 1)
    for v in entries:
        if not 1 <= v <= n or seen[v]:
            raise NotRealizable(
                f"running sums of {format_int_sequence(z)!r} do not cover {n} consecutive integers"
            )
        seen[v] = 1
    return Permutation(entries)


def realize_shift(n: int, s: int) -> Permutation:
    """The permutation (s+1, 1, 2, ..., s, s+2, ..., n).

    Its sum-characteristic is {-s, ..., n-s-1}; varying s over 0..n-1 hits
    every set of n consecutive integers containing 0.
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be between 1 and {MAX_ORDER}, got {n}")
    if not 0 <= s <= n - 1:
        raise ValueError(f"shift must be between 0 and {n - 1}, got {s}")
    return Permutation((s + 1,) + tuple(range(1, s + 1)) + tuple(range(s + 2, n + 1)))


def from_tree(tree: WeightedTree) -> Permutation:
    """Rebuild the unique permutation consistent with a weighted spanning tree.

    Weights are propagated from vertex 1, then shifted so the values are
    exactly {1..n}.  Raises InconsistentTree when no such shift exists.
    """
    n = tree.n
    adjacency = _adjacency(tree)
    values: dict[int, int] = {1: 0}
    stack = [1]
    while stack:
        u = stack.pop()
        for v, w in adjacency[u]:
            if v not in values:
                values[v] = values[u] + w
                stack.append(v)
    shift = 1 - min(values.values())
    entries = tuple(values[v] + shift for v in range(1, n + 1))
    if sorted(entries) != list(range(1, n + 1)):
        raise InconsistentTree("tree weights do not shift onto {1..%d}" % n)
    return Permutation(entries)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def anti_identity(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def reverse(p: Permutation) -> Permutation:
    """Reverse the entry order (matrix rows flipped top-to-bottom)."""
    return Permutation(tuple(reversed(p.entries)))


def complement(p: Permutation) -> Permutation:
    """Replace each entry v by n+1-v (matrix columns flipped); negates the derivative."""
    n = p.n
    return Permutation(tuple(n + 1 - v for v in p.entries))


def inverse(p: Permutation) -> Permutation:
    """The inverse permutation (matrix transpose)."""
    inv = [0] * p.n
    for i, v in enumerate(p.entries):
        inv[v - 1] = i + 1
    return Permutation(tuple(inv))


def rotate90(p: Permutation) -> Permutation:
    """Rotate the matrix view 90 degrees counter-clockwise.

    Position (i, j) moves to (n+1-j, i), so the result is the reverse of the
    inverse.  With reverse, complement and inverse this generates the full
    dihedral symmetry group of the square.
    """
    return reverse(inverse(p))


def matrix(p: Permutation) -> tuple[tuple[int, ...], ...]:
    """The 0/1 matrix view, row i holding a 1 in column p[i].  Small orders only."""
    n = p.n
    if n > MAX_MATRIX_ORDER:
        raise ValueError(f"matrix view limited to order {MAX_MATRIX_ORDER}, got {n}")
    rows = []
    for v in p.entries:
        row = [0] * n
        row[v - 1] = 1
        rows.append(tuple(row))
    return tuple(rows)


def descent_count(p: Permutation) -> int:
    """Number of positions where the next entry is smaller."""
    e = p.entries
    return sum(1 for i in range(len(e) - 1) if e[i + 1] < e[i])


def is_grassmannian(p: Permutation) -> bool:
    """True iff there is exactly one descent (one negative derivative entry)."""
    return descent_count(p) == 1
