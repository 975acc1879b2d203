"""Shared golden data and independent oracles for the test suite.

The oracles here deliberately re-derive everything from first principles
(index-subset enumeration, pairwise order comparison) so they share no code
path with the library's own search.
"""

from itertools import combinations

from splitpat import Permutation, SplitPattern

# The published count table: (r, n) -> count, every printed cell.
TABLE1 = {
    (0, 1): 1, (0, 2): 2, (0, 3): 6, (0, 4): 24, (0, 5): 120, (0, 6): 720,
    (0, 7): 5040, (0, 8): 40320, (0, 9): 362880,
    (1, 1): 1, (1, 2): 2, (1, 3): 5, (1, 4): 16, (1, 5): 65, (1, 6): 326,
    (1, 7): 1957, (1, 8): 13700, (1, 9): 109601,
    (2, 2): 2, (2, 3): 5, (2, 4): 14, (2, 5): 47, (2, 6): 194, (2, 7): 977,
    (2, 8): 5870, (2, 9): 41099,
    (3, 3): 6, (3, 4): 16, (3, 5): 47, (3, 6): 162, (3, 7): 676, (3, 8): 3416,
    (3, 9): 20541,
    (4, 4): 24, (4, 5): 65, (4, 6): 194, (4, 7): 676, (4, 8): 2836, (4, 9): 14359,
}


def same_relative_order(window, pattern_vals):
    k = len(pattern_vals)
    return all(
        (window[a] < window[b]) == (pattern_vals[a] < pattern_vals[b])
        for a in range(k)
        for b in range(a + 1, k)
    )


def oracle_witnesses(w: Permutation, pattern: SplitPattern, r: int):
    """All witnesses, in lexicographic index order, by plain enumeration of
    index subsets."""
    u = pattern.pattern.values
    k = len(u)
    j = pattern.split
    found = []
    for idx in combinations(range(1, w.n + 1), k):
        if j > 0 and idx[j - 1] > r:
            continue
        if j < k and idx[j] <= r:
            continue
        if same_relative_order([w.w(i) for i in idx], u):
            found.append(idx)
    return found


def oracle_contains(w: Permutation, pattern: SplitPattern, r: int) -> bool:
    return bool(oracle_witnesses(w, pattern, r))


def assert_valid_witness(w: Permutation, pattern: SplitPattern, r: int, witness):
    """Independent re-check of a witness against the containment definition."""
    idx = witness.indices
    u = pattern.pattern.values
    k = len(u)
    j = pattern.split
    assert len(idx) == k
    assert all(1 <= i <= w.n for i in idx)
    assert all(a < b for a, b in zip(idx, idx[1:]))
    if j > 0:
        assert idx[j - 1] <= r
    if j < k:
        assert idx[j] > r
    assert same_relative_order([w.w(i) for i in idx], u)
