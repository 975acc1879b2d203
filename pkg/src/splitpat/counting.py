"""Exact counting of the split-pattern avoidance classes.

Counts come from three independent routes: a brute-force sweep over all of
S_n (the oracle), a closed-form double sum, and a peeling recurrence that
repeatedly removes the maximal value.  All arithmetic is arbitrary-precision
integer or rational; nothing here touches floating point, so every table
entry is bit-exact no matter how large.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from .perms import Permutation, _avoids

__all__ = [
    "DEFAULT_SEARCH_LIMIT",
    "SearchLimitError",
    "falling_factorial",
    "binomial",
    "avoider_count",
    "max_left_avoider_count",
    "avoider_count_by_peeling",
    "enumerate_avoiders",
    "brute_count",
    "partition_by_smallest_right",
    "normalized_excess",
    "RecursionReport",
    "check_excess_recursion",
    "CountTable",
    "build_count_table",
]

# 10! permutations, each scanned in cubic time, is the practical ceiling for
# a desk machine; larger sizes must be requested explicitly.
DEFAULT_SEARCH_LIMIT = 10


class SearchLimitError(ValueError):
    """Raised when a brute-force sweep would exceed the size guard."""


def _check_rn(r: int, n: int) -> None:
    if n < 0 or not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")


def _check_limit(n: int, limit: int) -> None:
    if n > limit:
        raise SearchLimitError(
            f"exhaustive search over S_{n} exceeds the guard ({limit}); "
            f"raise the limit explicitly to proceed"
        )


def falling_factorial(m: int, i: int) -> int:
    """Product m(m-1)...(m-i+1) of i factors; the empty product (i=0) is 1.

    >>> falling_factorial(5, 2)
    20
    >>> falling_factorial(3, 5)
    0
    """
    if i < 0:
        raise ValueError("falling factorial needs a nonnegative length")
    out = 1
    for t in range(i):
        out *= m - t
    return out


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n.

    The top argument must be nonnegative; no generalized-binomial extension
    is offered because none of the closed forms here ever needs one.
    """
    if n < 0:
        raise ValueError("binomial needs a nonnegative top argument")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def avoider_count(r: int, n: int) -> int:
    """Closed-form count of permutations in S_n avoiding both split
    patterns 3|12 and 23|1 with respect to position r.

    Equals r!(n-r)! plus a double sum of binomials weighted by falling
    factorials; the value for (0, 0) is 1 (the empty permutation).

    >>> avoider_count(2, 5)
    47
    """
    _check_rn(r, n)
    total = factorial(r) * factorial(n - r)
    ff_left = 1  # (r)_{i-1}
    for i in range(1, r + 1):
        ff_right = 1  # (n-r)_{j-1}
        for j in range(1, n - r + 1):
            total += binomial(n - i - j, r - i) * ff_left * ff_right
            ff_right *= n - r - j + 1
        ff_left *= r - i + 1
    return total


def max_left_avoider_count(r: int, n: int) -> int:
    """Count of avoiders whose maximal value n sits at a position <= r.

    Closed form for 1 <= r < n; for r = n every permutation of S_n
    qualifies, giving n!.
    """
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if r == n:
        return factorial(r)
    total = 0
    ff = 1  # (r)_{i-1}
    for i in range(1, r + 1):
        total += binomial(n - i - 1, r - i) * ff
        ff *= r - i + 1
    return total


def avoider_count_by_peeling(r: int, n: int) -> int:
    """Count avoiders by repeatedly peeling off the maximal value.

    Each peel either keeps the class position (max right of r, n-r ways to
    reinsert) or ends in a max-left count; summing the resulting telescope
    must reproduce ``avoider_count`` for every 1 <= r <= n.
    """
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    total = 0
    ff = 1  # (n-r)_j
    for j in range(0, n - r + 1):
        total += ff * max_left_avoider_count(r, n - j)
        ff *= n - r - j
    return total


def enumerate_avoiders(
    r: int, n: int, limit: int = DEFAULT_SEARCH_LIMIT
) -> list[Permutation]:
    """All avoiders in S_n with respect to position r, in lexicographic
    one-line order.  Refuses n > limit."""
    _check_rn(r, n)
    _check_limit(n, limit)
    return [
        Permutation(vals)
        for vals in permutations(range(1, n + 1))
        if _avoids(vals, r)
    ]


def brute_count(r: int, n: int, limit: int = DEFAULT_SEARCH_LIMIT) -> int:
    """Cardinality of the avoidance class by exhaustive sweep over S_n.

    Independent oracle for ``avoider_count``; does not materialize the
    permutations.
    """
    _check_rn(r, n)
    _check_limit(n, limit)
    return sum(1 for vals in permutations(range(1, n + 1)) if _avoids(vals, r))


def partition_by_smallest_right(
    r: int, n: int, limit: int = DEFAULT_SEARCH_LIMIT
) -> dict[int, set[Permutation]]:
    """Partition the max-left avoiders by the smallest value right of r.

    Class i collects the avoiders with max at a position <= r whose
    smallest value appearing right of position r equals i; only classes
    1 <= i <= r are inhabited and class i has exactly
    binomial(n-i-1, r-i) * (r)_{i-1} members.
    """
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    groups: dict[int, set[Permutation]] = {}
    for w in enumerate_avoiders(r, n, limit=limit):
        vals = w.values
        if n in vals[:r]:
            groups.setdefault(min(vals[r:]), set()).add(w)
    return groups


def normalized_excess(r: int, s: int) -> Fraction:
    """How far the avoidance count at (r, r+s) exceeds its factorial floor,
    normalized: count / (r! s!) - 1.

    Zero whenever r = 0 or s = 0, and symmetric in (r, s).

    >>> normalized_excess(2, 2)
    Fraction(5, 2)
    """
    if r < 0 or s < 0:
        raise ValueError("arguments must be nonnegative")
    return Fraction(avoider_count(r, r + s), factorial(r) * factorial(s)) - 1


@dataclass(frozen=True)
class RecursionReport:
    """Outcome of checking the excess recursion on a grid of cells."""

    r_max: int
    s_max: int
    violations: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_excess_recursion(r_max: int, s_max: int) -> RecursionReport:
    """Check that the normalized excess satisfies, for all cells in
    [1, r_max] x [1, s_max],

        e(r,s) = e(r,s-1) + e(r-1,s) - e(r-1,s-1) + C(r+s-2, r-1)/(r! s!)

    exactly over rationals.  Violations are report content, not errors.
    """
    if r_max < 1 or s_max < 1:
        raise ValueError("bounds must be at least 1")
    excess = {
        (r, s): normalized_excess(r, s)
        for r in range(r_max + 1)
        for s in range(s_max + 1)
    }
    violations = []
    for r in range(1, r_max + 1):
        for s in range(1, s_max + 1):
            expected = (
                excess[(r, s - 1)]
                + excess[(r - 1, s)]
                - excess[(r - 1, s - 1)]
                + Fraction(binomial(r + s - 2, r - 1), factorial(r) * factorial(s))
            )
            if excess[(r, s)] != expected:
                violations.append((r, s))
    return RecursionReport(r_max, s_max, tuple(violations))


@dataclass(frozen=True)
class CountTable:
    """Avoidance counts for every 0 <= r <= n <= n_max.

    Treat ``entries`` as read-only after construction.
    """

    n_max: int
    entries: dict[tuple[int, int], int]

    def k(self, r: int, n: int) -> int:
        return self.entries[(r, n)]

    def rows(
        self, r_max: int | None = None, n_min: int = 0
    ) -> list[tuple[int, int, int]]:
        """(r, n, count) triples sorted by (n, r), optionally filtered."""
        out = [
            (r, n, k)
            for (r, n), k in self.entries.items()
            if n >= n_min and (r_max is None or r <= r_max)
        ]
        out.sort(key=lambda row: (row[1], row[0]))
        return out

    def to_csv(self, r_max: int | None = None, n_min: int = 0) -> str:
        lines = ["r,n,k"]
        lines.extend(f"{r},{n},{k}" for r, n, k in self.rows(r_max, n_min))
        return "\n".join(lines) + "\n"

    def to_json(self, r_max: int | None = None, n_min: int = 0) -> str:
        # Counts are serialized as decimal strings so consumers with fixed
        # integer widths can still read large factorials.
        return json.dumps(
            [{"r": r, "n": n, "k": str(k)} for r, n, k in self.rows(r_max, n_min)]
        )


def build_count_table(n_max: int) -> CountTable:
    """Closed-form counts for all 0 <= r <= n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    entries = {
        (r, n): avoider_count(r, n)
        for n in range(n_max + 1)
        for r in range(n + 1)
    }
    return CountTable(n_max, entries)
