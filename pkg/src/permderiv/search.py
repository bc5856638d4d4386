"""Exact enumeration over permutations with hereditary prefix pruning.

The engine walks value choices depth-first in ascending order, masking used
values and cutting subtrees as soon as the supplied prefix predicate fails;
because the predicate is hereditary (a failing prefix never extends to an
accepted permutation) the pruned walk visits exactly the permutations the
naive n!-filter would accept.  Counting, collecting and optimizing share
the same walk, and results are identical for any worker count: workers
partition the tree by first entry and their contributions are recombined
in first-entry order.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Callable, NamedTuple, Sequence

from . import convexity
from .perm_core import Permutation

MAX_SEARCH_ORDER = 64

_MODES = ("count", "collect", "optimize")
_TABLE_KINDS = {"one-costas": 12, "costas": 9, "convex": 64}


@dataclass(frozen=True)
class SearchSpec:
    """One pruned search: order, hereditary prefix predicate, acceptance, mode.

    prefix_ok receives each partial sequence (a list of 1-based values) and
    must be pure and monotone under truncation; accept, if given, filters
    complete permutations (as tuples).  For mode="optimize", objective maps a
    complete tuple to a comparable value and direction is "max" or "min".
    """

    n: int
    prefix_ok: Callable[[Sequence[int]], bool]
    accept: Callable[[tuple[int, ...]], bool] | None = None
    mode: str = "count"
    objective: Callable[[tuple[int, ...]], int] | None = None
    direction: str = "max"

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_SEARCH_ORDER:
            raise ValueError(f"search order must be between 1 and {MAX_SEARCH_ORDER}, got {self.n}")
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")
        if self.mode == "optimize":
            if self.objective is None:
                raise ValueError("optimize mode needs an objective")
            if self.direction not in ("max", "min"):
                raise ValueError(f"direction must be 'max' or 'min', got {self.direction!r}")


class CountRow(NamedTuple):
    """One table row: order, n!, matching count, and percentage to one decimal."""

    n: int
    total: int
    count: int
    fraction: float


def _fraction(count: int, total: int) -> float:
    q = (Decimal(count) * 100 / Decimal(total)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP)
    return float(q)


def one_costas_prefix_ok(prefix: Sequence[int]) -> bool:
    """All consecutive differences of the prefix are distinct."""
    m = len(prefix)
    if m < 3:
        return True
    seen = set()
    for i in range(m - 1):
        d = prefix[i + 1] - prefix[i]
        if d in seen:
            return False
        seen.add(d)
    return True


def costas_prefix_ok(prefix: Sequence[int]) -> bool:
    """Every row of the prefix's difference triangle is repeat-free."""
    m = len(prefix)
    for k in range(1, m - 1):
        seen = set()
        for i in range(m - k):
            d = prefix[i + k] - prefix[i]
            if d in seen:
                return False
            seen.add(d)
    return True


def convex_prefix_ok(prefix: Sequence[int]) -> bool:
    """Consecutive differences of the prefix are non-decreasing."""
    m = len(prefix)
    for i in range(m - 2):
        if prefix[i + 1] - prefix[i] > prefix[i + 2] - prefix[i + 1]:
            return False
    return True


def k_costas_prefix_ok(k: int) -> Callable[[Sequence[int]], bool]:
    """Prefix predicate for rows 1..k of the difference triangle being repeat-free."""

    def check(prefix: Sequence[int]) -> bool:
        m = len(prefix)
        for order in range(1, min(k, m - 1) + 1):
            seen = set()
            for i in range(m - order):
                d = prefix[i + order] - prefix[i]
                if d in seen:
                    return False
                seen.add(d)
        return True

    return check


def _count_subtree(spec: SearchSpec, first: int) -> int:
    n = spec.n
    prefix_ok = spec.prefix_ok
    accept = spec.accept
    prefix = [first]
    if not prefix_ok(prefix):
        return 0

    def walk(used: int) -> int:
        if len(prefix) == n:
            if accept is None or accept(tuple(prefix)):
                return 1
            return 0
        total = 0
        for v in range(1, n + 1):
            bit = 1 << v
            if used & bit:
                continue
            prefix.append(v)
            if prefix_ok(prefix):
                total += walk(used | bit)
            prefix.pop()
        return total

    return walk(1 << first)


def _collect_subtree(spec: SearchSpec, first: int) -> list[tuple[int, ...]]:
    n = spec.n
    prefix_ok = spec.prefix_ok
    accept = spec.accept
    prefix = [first]
    out: list[tuple[int, ...]] = []
    if not prefix_ok(prefix):
        return out

    def walk(used: int) -> None:
        if len(prefix) == n:
            full = tuple(prefix)
            if accept is None or accept(full):
                out.append(full)
            return
        for v in range(1, n + 1):
            bit = 1 << v
            if used & bit:
                continue
            prefix.append(v)
            if prefix_ok(prefix):
                walk(used | bit)
            prefix.pop()

    walk(1 << first)
    return out


def _optimize_subtree(spec: SearchSpec, first: int) -> tuple[int, tuple[int, ...]] | None:
    best: list[tuple[int, tuple[int, ...]] | None] = [None]
    objective = spec.objective
    better = (lambda a, b: a > b) if spec.direction == "max" else (lambda a, b: a < b)

    n = spec.n
    prefix_ok = spec.prefix_ok
    accept = spec.accept
    prefix = [first]
    if not prefix_ok(prefix):
        return None

    def walk(used: int) -> None:
        if len(prefix) == n:
            full = tuple(prefix)
            if accept is None or accept(full):
                value = objective(full)
                if best[0] is None or better(value, best[0][0]):
                    best[0] = (value, full)
            return
        for v in range(1, n + 1):
            bit = 1 << v
            if used & bit:
                continue
            prefix.append(v)
            if prefix_ok(prefix):
                walk(used | bit)
            prefix.pop()

    walk(1 << first)
    return best[0]


def _subtree_results(spec: SearchSpec, worker: Callable, workers: int) -> list:
    firsts = range(1, spec.n + 1)
    if workers <= 1:
        return [worker(spec, f) for f in firsts]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda f: worker(spec, f), firsts))


def enumerate(spec: SearchSpec, workers: int = 1):
    """Run the pruned search; result shape depends on spec.mode.

    count -> int; collect -> list of Permutation in ascending entry order;
    optimize -> (best value, Permutation witness) or None when nothing is
    accepted.  Results are independent of the worker count.
    """
    if spec.mode == "count":
        return sum(_subtree_results(spec, _count_subtree, workers))
    if spec.mode == "collect":
        collected: list[Permutation] = []
        for part in _subtree_results(spec, _collect_subtree, workers):
            collected.extend(Permutation(t) for t in part)
        return collected
    best: tuple[int, tuple[int, ...]] | None = None
    better = (lambda a, b: a > b) if spec.direction == "max" else (lambda a, b: a < b)
    for part in _subtree_results(spec, _optimize_subtree, workers):
        if part is not None and (best is None or better(part[0], best[0])):
            best = part
    if best is None:
        return None
    return best[0], Permutation(best[1])


def count_one_costas(n: int, workers: int = 1) -> CountRow:
    """Count distinct-derivative permutations of order n (practical bound n <= 12)."""
    if not 1 <= n <= 12:
        raise ValueError(f"order must be between 1 and 12, got {n}")
    spec = SearchSpec(n=n, prefix_ok=one_costas_prefix_ok)
    count = enumerate(spec, workers=workers)
    total = math.factorial(n)
    return CountRow(n, total, count, _fraction(count, total))


def count_costas(n: int, workers: int = 1) -> int:
    """Count Costas permutations of order n (practical bound n <= 9)."""
    if not 1 <= n <= 9:
        raise ValueError(f"order must be between 1 and 9, got {n}")
    spec = SearchSpec(n=n, prefix_ok=costas_prefix_ok)
    return enumerate(spec, workers=workers)


def table(kind: str, n_max: int, workers: int = 1) -> tuple[CountRow, ...]:
    """CountRow rows for n = 1..n_max for one of the shipped predicates."""
    if kind not in _TABLE_KINDS:
        raise ValueError(f"kind must be one of {sorted(_TABLE_KINDS)}, got {kind!r}")
    if not 1 <= n_max <= _TABLE_KINDS[kind]:
        raise ValueError(f"max order for {kind} tables is {_TABLE_KINDS[kind]}, got {n_max}")
    rows = []
    for n in range(1, n_max + 1):
        if kind == "one-costas":
            rows.append(count_one_costas(n, workers=workers))
            continue
        if kind == "costas":
            count = count_costas(n, workers=workers)
        else:
            count = len(convexity.enumerate_convex(n))
        total = math.factorial(n)
        rows.append(CountRow(n, total, count, _fraction(count, total)))
    return tuple(rows)
