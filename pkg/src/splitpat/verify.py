"""Verification suites tying the oracle, the closed forms and the series
identities together.  Every check is exact; a failure anywhere means a bug,
not a tolerance issue."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial

from .counting import (
    DEFAULT_SEARCH_LIMIT,
    SearchLimitError,
    avoider_count,
    avoider_count_by_peeling,
    binomial,
    brute_count,
    check_excess_recursion,
    enumerate_avoiders,
    falling_factorial,
    max_left_avoider_count,
    partition_by_smallest_right,
)
from .perms import Permutation, remove_max, rotate180
from .series import (
    BivariateSeries,
    bessel_i0_series,
    binomial_egf_series,
    count_egf,
    excess_ogf,
    exp_sum_series,
    geometric_series,
    integrated_binomial_egf,
    verify_identities,
)

__all__ = ["Check", "TARGETS", "run_target"]

TARGETS = ("main2", "bessel", "recursion", "symmetry", "fibers", "oracle", "all")


@dataclass(frozen=True)
class Check:
    key: str
    name: str
    passed: bool
    detail: str = ""


def oracle_checks(n_max: int, limit: int = DEFAULT_SEARCH_LIMIT) -> list[Check]:
    """Brute force vs closed form vs peeling, for every r at each size.

    The peeling route is only defined for r >= 1, so at r = 0 the brute
    count is compared against the closed form alone.
    """
    checks = []
    for n in range(n_max + 1):
        ok = True
        detail = ""
        for r in range(n + 1):
            counts = {brute_count(r, n, limit=limit), avoider_count(r, n)}
            if r >= 1:
                counts.add(avoider_count_by_peeling(r, n))
            if len(counts) != 1:
                ok = False
                detail = f"disagreement at r={r}: {sorted(counts)}"
                break
        checks.append(
            Check("oracle", f"oracle = closed form = peeling at n={n}, all r", ok, detail)
        )
    return checks


def structure_checks(n_max: int, limit: int = DEFAULT_SEARCH_LIMIT) -> list[Check]:
    """Structural facts about the avoidance classes, checked by exhaustive
    enumeration for all sizes up to n_max and all positions r."""
    classes: dict[tuple[int, int], list[Permutation]] = {
        (r, n): enumerate_avoiders(r, n, limit=limit)
        for n in range(n_max + 1)
        for r in range(n + 1)
    }

    split_ok, split_detail = True, ""
    fiber_ok, fiber_detail = True, ""
    peel_left_ok, peel_left_detail = True, ""
    partition_ok, partition_detail = True, ""
    rotate_ok, rotate_detail = True, ""

    for n in range(1, n_max + 1):
        for r in range(n + 1):
            members = classes[(r, n)]
            max_left = [w for w in members if n in w.values[:r]]
            max_right = [w for w in members if n not in w.values[:r]]

            expected_left = max_left_avoider_count(r, n) if r >= 1 else 0
            if (
                len(max_left) != expected_left
                or len(max_left) + len(max_right) != avoider_count(r, n)
            ):
                split_ok = False
                split_detail = f"split sizes wrong at (r,n)=({r},{n})"

            if r <= n - 1:
                fibers = Counter(remove_max(w) for w in max_right)
                smaller = classes[(r, n - 1)]
                if set(fibers) != set(smaller) or any(
                    fibers[w] != n - r for w in smaller
                ):
                    fiber_ok = False
                    fiber_detail = f"fiber sizes wrong at (r,n)=({r},{n})"

            if r >= 1:
                smaller = set(classes[(r - 1, n - 1)])
                if any(remove_max(w) not in smaller for w in max_left):
                    peel_left_ok = False
                    peel_left_detail = f"max-left peel leaves the class at (r,n)=({r},{n})"

            if 1 <= r < n:
                groups = partition_by_smallest_right(r, n, limit=limit)
                sizes_ok = set(groups) == set(range(1, r + 1)) and all(
                    len(groups[i])
                    == binomial(n - i - 1, r - i) * falling_factorial(r, i - 1)
                    for i in groups
                )
                if not sizes_ok or sum(len(g) for g in groups.values()) != len(max_left):
                    partition_ok = False
                    partition_detail = f"partition sizes wrong at (r,n)=({r},{n})"

            if {rotate180(w) for w in members} != set(classes[(n - r, n)]):
                rotate_ok = False
                rotate_detail = f"rotation image wrong at (r,n)=({r},{n})"

    scope = f"n <= {n_max}, all r"
    return [
        Check("split", f"max-left/max-right split sizes sum to the count ({scope})", split_ok, split_detail),
        Check("fibers", f"removing the max fibers the max-right side with fiber size n-r ({scope})", fiber_ok, fiber_detail),
        Check("peel-left", f"removing a max-left max lands in the class at r-1 ({scope})", peel_left_ok, peel_left_detail),
        Check("partition", f"smallest-right partition classes have the predicted sizes ({scope})", partition_ok, partition_detail),
        Check("rotate", f"rotate180 bijects class (r,n) onto (n-r,n) ({scope})", rotate_ok, rotate_detail),
    ]


def symmetry_checks(order: int, n_count_max: int = 30) -> list[Check]:
    """Symmetry and lower bound of the closed-form counts, plus x/y symmetry
    of every named series."""
    count_sym = all(
        avoider_count(r, n) == avoider_count(n - r, n)
        for n in range(n_count_max + 1)
        for r in range(n + 1)
    )
    bound = all(
        avoider_count(r, n) >= factorial(r) * factorial(n - r)
        for n in range(n_count_max + 1)
        for r in range(n + 1)
    )
    named: dict[str, BivariateSeries] = {
        "exp_sum": exp_sum_series(order, order),
        "bessel_i0": bessel_i0_series(order, order),
        "binomial_egf": binomial_egf_series(order, order),
        "geometric": geometric_series(order, order),
        "integrated_binomial_egf": integrated_binomial_egf(order, order),
        "count_egf": count_egf(order, order),
        "excess_ogf": excess_ogf(order, order),
    }
    asymmetric = sorted(name for name, s in named.items() if not s.is_symmetric())
    return [
        Check("count-symmetry", f"count(r,n) = count(n-r,n) for n <= {n_count_max}", count_sym),
        Check("count-bound", f"count(r,n) >= r!(n-r)! for n <= {n_count_max}", bound),
        Check(
            "series-symmetry",
            f"named series symmetric under swapping x and y at order {order}",
            not asymmetric,
            "" if not asymmetric else f"asymmetric: {', '.join(asymmetric)}",
        ),
    ]


def recursion_checks(order: int) -> list[Check]:
    report = check_excess_recursion(order, order)
    return [
        Check(
            "recursion",
            f"excess recursion holds on [1,{order}]x[1,{order}]",
            report.ok,
            "" if report.ok else f"violations at {list(report.violations)[:5]}",
        )
    ]


def run_target(
    target: str,
    order: int = 12,
    n_max: int = 7,
    limit: int = DEFAULT_SEARCH_LIMIT,
) -> tuple[list[Check], BivariateSeries | None]:
    """Run one verification target and return its checks plus, for the
    targets that compute it, the residual of the alternative exponential
    boundary choice."""
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}")
    if target in ("oracle", "fibers", "all") and n_max > limit:
        # Refuse up front instead of grinding through the sizes below the cap.
        raise SearchLimitError(
            f"exhaustive search over S_{n_max} exceeds the guard ({limit}); "
            f"raise the limit explicitly to proceed"
        )

    checks: list[Check] = []
    residual: BivariateSeries | None = None

    ident = None
    if target in ("bessel", "main2", "all"):
        ident = verify_identities(order)

    if target in ("oracle", "all"):
        checks.extend(oracle_checks(n_max, limit=limit))
    if target in ("fibers", "all"):
        checks.extend(structure_checks(n_max, limit=limit))
    if target in ("symmetry", "all"):
        checks.extend(symmetry_checks(order))
    if target in ("recursion", "all"):
        checks.extend(recursion_checks(order))
    if ident is not None:
        if target in ("bessel", "all"):
            checks.extend(
                Check(c.key, c.name, c.passed, c.detail)
                for c in ident.by_key("product", "diagonal")
            )
        if target in ("main2", "all"):
            checks.extend(
                Check(c.key, c.name, c.passed, c.detail)
                for c in ident.by_key("derivative", "integral", "excess", "count", "boundary")
            )
            residual = ident.stated_boundary_residual

    return checks, residual
