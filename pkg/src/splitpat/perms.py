"""Permutations in one-line notation and split-pattern containment.

A split pattern is a permutation of size k divided at an index j into a left
block and a right block, written for example 3|12 or 23|1.  A permutation w
contains a split pattern with respect to a position r when some increasing
choice of positions i_1 < ... < i_k carries the relative order of the pattern
and the first j chosen positions lie at or before r while the remaining ones
lie strictly after.  The permutations avoiding both built-in patterns with
respect to r form the classes counted in splitpat.counting; the same
condition characterises when the projection of the associated Schubert
variety to the rank-r Grassmannian is a fiber bundle, hence the
``is_fiber_bundle`` alias.

Positions and values are 1-based in every public interface; the empty
permutation (n = 0) is valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "Permutation",
    "SplitPattern",
    "PatternWitness",
    "PATTERN_3_12",
    "PATTERN_23_1",
    "identity",
    "parse_permutation",
    "format_permutation",
    "contains_split",
    "is_avoider",
    "is_fiber_bundle",
    "left_values",
    "right_values",
    "remove_max",
    "insert_max",
    "rotate180",
    "rank_function",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation w(1) ... w(n).

    Construction validates that ``values`` is a rearrangement of 1..n and
    rejects duplicates, zeros, negatives and out-of-range entries.

    >>> Permutation((3, 1, 2)).w(1)
    3
    >>> Permutation(())
    Permutation(values=())
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a rearrangement of 1..{len(values)}: {values!r}")

    @property
    def n(self) -> int:
        return len(self.values)

    def w(self, k: int) -> int:
        """Value at the 1-indexed position k (defined for 1 <= k <= n)."""
        if not 1 <= k <= len(self.values):
            raise IndexError(f"position {k} outside 1..{len(self.values)}")
        return self.values[k - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return format_permutation(self)


def identity(n: int) -> Permutation:
    """The identity permutation 1 2 ... n."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    return Permutation(tuple(range(1, n + 1)))


def parse_permutation(text: str) -> Permutation:
    """Parse compact ("315642") or comma-separated ("3,1,5,6,4,2") notation.

    The compact form carries one digit per value and therefore only exists
    for n <= 9; the comma-separated form works for any size.  The empty
    string parses to the empty permutation.
    """
    text = text.strip()
    if not text:
        return Permutation(())
    if "," in text:
        try:
            values = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"bad permutation text: {text!r}") from None
    elif text.isdigit():
        values = tuple(int(ch) for ch in text)
    else:
        raise ValueError(f"bad permutation text: {text!r}")
    return Permutation(values)


def format_permutation(w: Permutation) -> str:
    """Compact digit string for n <= 9, comma-separated list otherwise."""
    if w.n <= 9:
        return "".join(str(v) for v in w.values)
    return ",".join(str(v) for v in w.values)


@dataclass(frozen=True)
class SplitPattern:
    """A pattern permutation together with the split index 0 <= j <= k."""

    pattern: Permutation
    split: int

    def __post_init__(self) -> None:
        if not 0 <= self.split <= self.pattern.n:
            raise ValueError(f"split {self.split} outside 0..{self.pattern.n}")

    def __str__(self) -> str:
        digits = [str(v) for v in self.pattern.values]
        return "".join(digits[: self.split]) + "|" + "".join(digits[self.split :])


PATTERN_3_12 = SplitPattern(Permutation((3, 1, 2)), 1)
PATTERN_23_1 = SplitPattern(Permutation((2, 3, 1)), 2)


@dataclass(frozen=True)
class PatternWitness:
    """Strictly increasing 1-based positions realising a split pattern."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        indices = tuple(self.indices)
        object.__setattr__(self, "indices", indices)
        if any(a >= b for a, b in zip(indices, indices[1:])) or any(
            i < 1 for i in indices
        ):
            raise ValueError(f"indices must be strictly increasing and >= 1: {indices!r}")


def _check_position(r: int, n: int) -> None:
    if not 0 <= r <= n:
        raise ValueError(f"position r={r} outside 0..{n}")


def contains_split(
    w: Permutation, pattern: SplitPattern, r: int
) -> PatternWitness | None:
    """Search for an occurrence of ``pattern`` in ``w`` with respect to r.

    Returns the lexicographically smallest witness (by index sequence) or
    None when w avoids the pattern with respect to r.  The split constraint
    is a hard position filter: the first ``pattern.split`` chosen positions
    must be <= r and the rest must be > r.  For split index 0 the whole
    occurrence must sit right of r, for split index k entirely at or left
    of r.

    >>> contains_split(Permutation((3, 1, 5, 6, 4, 2)), PATTERN_23_1, 3).indices
    (1, 3, 6)
    >>> contains_split(Permutation((3, 1, 5, 6, 4, 2)), PATTERN_3_12, 3) is None
    True
    """
    _check_position(r, w.n)
    u = pattern.pattern.values
    j = pattern.split
    k = len(u)
    vals = w.values
    n = len(vals)
    chosen: list[int] = []

    def search(slot: int, start: int) -> bool:
        if slot == k:
            return True
        if slot == j:
            start = max(start, r)
        # 0-based position bounds: slots before the split stay left of r,
        # and enough room must remain for the slots still to be placed.
        stop = min(r if slot < j else n, n - (k - slot - 1))
        uv = u[slot]
        for p in range(start, stop):
            v = vals[p]
            if all((u[t] < uv) == (vals[q] < v) for t, q in enumerate(chosen)):
                chosen.append(p)
                if search(slot + 1, p + 1):
                    return True
                chosen.pop()
        return False

    if search(0, 0):
        return PatternWitness(tuple(p + 1 for p in chosen))
    return None


def _contains_3_12(vals: tuple[int, ...], r: int) -> bool:
    # 0-based witness a < r <= b < c with vals[b] < vals[c] < vals[a].
    # Must agree with contains_split(w, PATTERN_3_12, r); tested exhaustively.
    n = len(vals)
    for b in range(r, n - 1):
        vb = vals[b]
        for c in range(b + 1, n):
            vc = vals[c]
            if vb < vc:
                for a in range(r):
                    if vals[a] > vc:
                        return True
    return False


def _contains_23_1(vals: tuple[int, ...], r: int) -> bool:
    # 0-based witness a < b < r <= c with vals[c] < vals[a] < vals[b].
    n = len(vals)
    for a in range(r - 1):
        va = vals[a]
        for b in range(a + 1, r):
            if va < vals[b]:
                for c in range(r, n):
                    if vals[c] < va:
                        return True
    return False


def _avoids(vals: tuple[int, ...], r: int) -> bool:
    """Raw-tuple avoidance test used by the brute-force sweeps."""
    return not _contains_3_12(vals, r) and not _contains_23_1(vals, r)


def is_avoider(w: Permutation, r: int) -> bool:
    """True iff w avoids both 3|12 and 23|1 with respect to position r.

    Avoidance at r = 0 and r = n is universal: the split constraint leaves
    no room for the block on the short side of the divider.
    """
    _check_position(r, w.n)
    return _avoids(w.values, r)


def is_fiber_bundle(w: Permutation, r: int) -> bool:
    """Whether projecting the Schubert variety of w to the rank-r
    Grassmannian gives a Zariski-locally trivial fiber bundle.

    The verdict is identical to ``is_avoider(w, r)``; the name records the
    geometric meaning.  Requires 1 <= r <= n since the projection needs a
    proper rank.
    """
    if not 1 <= r <= w.n:
        raise ValueError(f"position r={r} outside 1..{w.n}")
    return _avoids(w.values, r)


def left_values(w: Permutation, r: int) -> set[int]:
    """Values appearing at positions <= r."""
    _check_position(r, w.n)
    return set(w.values[:r])


def right_values(w: Permutation, r: int) -> set[int]:
    """Values appearing at positions > r."""
    _check_position(r, w.n)
    return set(w.values[r:])


def remove_max(w: Permutation) -> Permutation:
    """Delete the maximal value n from the one-line notation.

    >>> str(remove_max(parse_permutation("432615")))
    '43215'
    """
    if w.n == 0:
        raise ValueError("cannot remove from the empty permutation")
    return Permutation(tuple(v for v in w.values if v != w.n))


def insert_max(w: Permutation, pos: int) -> Permutation:
    """Insert a new maximal value n+1 at position pos (1 <= pos <= n+1).

    Inverse of remove_max: ``remove_max(insert_max(w, pos)) == w``.

    >>> str(insert_max(parse_permutation("43215"), 4))
    '432615'
    """
    if not 1 <= pos <= w.n + 1:
        raise ValueError(f"position {pos} outside 1..{w.n + 1}")
    vals = w.values
    return Permutation(vals[: pos - 1] + (w.n + 1,) + vals[pos - 1 :])


def rotate180(w: Permutation) -> Permutation:
    """Rotate the permutation matrix by 180 degrees.

    The result satisfies result(k) = n+1-w(n+1-k); the operation is an
    involution and maps the avoidance class at position r bijectively onto
    the one at position n-r.

    >>> str(rotate180(parse_permutation("315642")))
    '531264'
    """
    n = w.n
    return Permutation(tuple(n + 1 - v for v in reversed(w.values)))


def rank_function(w: Permutation, i: int, j: int) -> int:
    """Number of positions k <= j whose value w(k) <= i.

    Monotone nondecreasing in both arguments, with value n at (n, n); these
    counts define the incidence conditions cut out by the Schubert variety
    of w.
    """
    n = w.n
    if not 0 <= i <= n:
        raise ValueError(f"value bound i={i} outside 0..{n}")
    if not 0 <= j <= n:
        raise ValueError(f"position bound j={j} outside 0..{n}")
    return sum(1 for v in w.values[:j] if v <= i)
