"""Truncated bivariate formal power series over exact rationals.

A series holds a rectangular coefficient window c[r][s] for 0 <= r <= nx,
0 <= s <= ny.  Coefficients outside the window are undefined, never assumed
zero: binary operations act on the intersection of the operand windows and
equality compares there too, so a low-order truncation equals any higher
order truncation of the same series.  The named constructors build the
generating functions tied to the avoidance counts, and ``verify_identities``
checks the identities linking them coefficient by coefficient with zero
tolerance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Mapping

from .counting import avoider_count, binomial, normalized_excess

__all__ = [
    "BivariateSeries",
    "divide_by_unit",
    "integrate_xy",
    "partial_xy",
    "diagonal_collapse",
    "exp_sum_series",
    "bessel_i0_series",
    "binomial_egf_series",
    "geometric_series",
    "one_minus_x_minus_y_plus_xy",
    "integrated_binomial_egf",
    "count_egf",
    "excess_ogf",
    "IdentityCheck",
    "IdentityReport",
    "verify_identities",
]

RationalLike = Fraction | int


@dataclass(frozen=True, eq=False)
class BivariateSeries:
    """Rectangular truncation of a formal power series in x and y.

    ``coeffs[r][s]`` is the coefficient of x^r y^s.  All coefficients are
    exact rationals; instances are immutable and safe to share.
    """

    coeffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(c) for c in row) for row in self.coeffs)
        if not rows or not rows[0]:
            raise ValueError("coefficient window must be nonempty")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("coefficient grid must be rectangular")
        object.__setattr__(self, "coeffs", rows)

    @classmethod
    def from_fn(
        cls, fn: Callable[[int, int], RationalLike], nx: int, ny: int
    ) -> "BivariateSeries":
        """Series with coefficient fn(r, s) on the window [0,nx] x [0,ny]."""
        return cls(
            tuple(
                tuple(Fraction(fn(r, s)) for s in range(ny + 1))
                for r in range(nx + 1)
            )
        )

    @classmethod
    def constant(cls, c: RationalLike, nx: int, ny: int) -> "BivariateSeries":
        return cls.from_fn(lambda r, s: c if r == s == 0 else 0, nx, ny)

    @classmethod
    def from_terms(
        cls, terms: Mapping[tuple[int, int], RationalLike], nx: int, ny: int
    ) -> "BivariateSeries":
        """Series with the given monomial coefficients, zero elsewhere."""
        for r, s in terms:
            if not (0 <= r <= nx and 0 <= s <= ny):
                raise ValueError(f"term ({r},{s}) outside window [0,{nx}]x[0,{ny}]")
        return cls.from_fn(lambda r, s: terms.get((r, s), 0), nx, ny)

    @property
    def nx(self) -> int:
        return len(self.coeffs) - 1

    @property
    def ny(self) -> int:
        return len(self.coeffs[0]) - 1

    def coeff(self, r: int, s: int) -> Fraction:
        """Coefficient of x^r y^s; raises outside the window."""
        if not (0 <= r <= self.nx and 0 <= s <= self.ny):
            raise IndexError(f"({r},{s}) outside window [0,{self.nx}]x[0,{self.ny}]")
        return self.coeffs[r][s]

    def _common_window(self, other: "BivariateSeries") -> tuple[int, int]:
        return min(self.nx, other.nx), min(self.ny, other.ny)

    def __eq__(self, other: object) -> bool:
        # Equality only over the window intersection: truncation order is a
        # storage artifact, not part of the value.
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        nx, ny = self._common_window(other)
        return all(
            self.coeffs[r][s] == other.coeffs[r][s]
            for r in range(nx + 1)
            for s in range(ny + 1)
        )

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        nx, ny = self._common_window(other)
        return BivariateSeries.from_fn(
            lambda r, s: self.coeffs[r][s] + other.coeffs[r][s], nx, ny
        )

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        nx, ny = self._common_window(other)
        return BivariateSeries.from_fn(
            lambda r, s: self.coeffs[r][s] - other.coeffs[r][s], nx, ny
        )

    def __neg__(self) -> "BivariateSeries":
        return self.scale(-1)

    def scale(self, c: RationalLike) -> "BivariateSeries":
        c = Fraction(c)
        return BivariateSeries.from_fn(lambda r, s: self.coeffs[r][s] * c, self.nx, self.ny)

    def __mul__(self, other: "BivariateSeries | RationalLike") -> "BivariateSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        nx, ny = self._common_window(other)
        a, b = self.coeffs, other.coeffs
        rows = []
        for r in range(nx + 1):
            row = []
            for s in range(ny + 1):
                acc = Fraction(0)
                for p in range(r + 1):
                    ap = a[p]
                    for q in range(s + 1):
                        if ap[q]:
                            acc += ap[q] * b[r - p][s - q]
                row.append(acc)
            rows.append(tuple(row))
        return BivariateSeries(tuple(rows))

    __rmul__ = __mul__

    def is_symmetric(self) -> bool:
        """Whether the coefficients are invariant under swapping x and y
        (checked wherever both cells sit inside the window)."""
        return all(
            self.coeffs[r][s] == self.coeffs[s][r]
            for r in range(self.nx + 1)
            for s in range(self.ny + 1)
            if s <= self.nx and r <= self.ny
        )

    def _json_dict(self) -> dict:
        return {
            "nx": self.nx,
            "ny": self.ny,
            "coeffs": [
                [[str(c.numerator), str(c.denominator)] for c in row]
                for row in self.coeffs
            ],
        }

    def to_json(self) -> str:
        """Dump as JSON with numerators and denominators as decimal strings,
        row-major in the x exponent."""
        return json.dumps(self._json_dict())

    @classmethod
    def from_json(cls, text: str) -> "BivariateSeries":
        data = json.loads(text)
        return cls(
            tuple(
                tuple(Fraction(int(num), int(den)) for num, den in row)
                for row in data["coeffs"]
            )
        )


def divide_by_unit(num: BivariateSeries, den: BivariateSeries) -> BivariateSeries:
    """Quotient Q with Q * den = num on the common window.

    The denominator must have a nonzero constant term; the quotient cells
    are filled row by row, so every cell the recurrence needs is already
    available when it is read.
    """
    d0 = den.coeff(0, 0)
    if d0 == 0:
        raise ZeroDivisionError("denominator has zero constant term")
    nx, ny = num._common_window(den)
    d = den.coeffs
    q: list[list[Fraction]] = [[Fraction(0)] * (ny + 1) for _ in range(nx + 1)]
    for r in range(nx + 1):
        for s in range(ny + 1):
            acc = num.coeffs[r][s]
            for p in range(r + 1):
                qp = q[p]
                for t in range(s + 1):
                    if (p, t) != (r, s) and qp[t]:
                        dc = d[r - p][s - t]
                        if dc:
                            acc -= qp[t] * dc
            q[r][s] = acc / d0
    return BivariateSeries(tuple(tuple(row) for row in q))


def integrate_xy(series: BivariateSeries) -> BivariateSeries:
    """Formal double integral in x and y with zero integration constants.

    The (r, s) output coefficient is input (r-1, s-1) divided by r*s; the
    output's first row and column vanish.  The input's top row and column
    shift beyond the window and are consumed.
    """
    return BivariateSeries.from_fn(
        lambda r, s: series.coeffs[r - 1][s - 1] / (r * s) if r and s else 0,
        series.nx,
        series.ny,
    )


def partial_xy(series: BivariateSeries) -> BivariateSeries:
    """Mixed partial derivative; exact left inverse of integrate_xy on the
    window shrunk by one in each variable."""
    if series.nx < 1 or series.ny < 1:
        raise ValueError("window too small to differentiate")
    return BivariateSeries.from_fn(
        lambda r, s: series.coeffs[r + 1][s + 1] * (r + 1) * (s + 1),
        series.nx - 1,
        series.ny - 1,
    )


def diagonal_collapse(series: BivariateSeries) -> tuple[Fraction, ...]:
    """Specialize y = x: the m-th output coefficient sums the window cells
    of total degree m.  Requires a square window; only total degrees up to
    nx stay fully inside it."""
    if series.nx != series.ny:
        raise ValueError("diagonal collapse needs a square window")
    return tuple(
        sum((series.coeffs[r][m - r] for r in range(m + 1)), Fraction(0))
        for m in range(series.nx + 1)
    )


def exp_sum_series(nx: int, ny: int) -> BivariateSeries:
    """e^(x+y): coefficient 1/(a! b!)."""
    return BivariateSeries.from_fn(
        lambda a, b: Fraction(1, factorial(a) * factorial(b)), nx, ny
    )


def bessel_i0_series(nx: int, ny: int) -> BivariateSeries:
    """Modified Bessel function I0 evaluated at 2*sqrt(xy): the series
    sum_m (xy)^m / (m!)^2, supported on the diagonal."""
    return BivariateSeries.from_fn(
        lambda r, s: Fraction(1, factorial(r) ** 2) if r == s else 0, nx, ny
    )


def binomial_egf_series(nx: int, ny: int) -> BivariateSeries:
    """Exponential generating function of the binomial coefficients:
    coefficient C(r+s, r)/(r! s!)."""
    return BivariateSeries.from_fn(
        lambda r, s: Fraction(comb(r + s, r), factorial(r) * factorial(s)), nx, ny
    )


def geometric_series(nx: int, ny: int) -> BivariateSeries:
    """1/((1-x)(1-y)): every coefficient is 1."""
    return BivariateSeries.from_fn(lambda r, s: 1, nx, ny)


def one_minus_x_minus_y_plus_xy(nx: int, ny: int) -> BivariateSeries:
    """The polynomial 1 - x - y + xy = (1-x)(1-y)."""
    if nx < 1 or ny < 1:
        raise ValueError("window must reach degree 1 in each variable")
    return BivariateSeries.from_terms(
        {(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1}, nx, ny
    )


def integrated_binomial_egf(nx: int, ny: int) -> BivariateSeries:
    """Double integral of the binomial EGF with zero integration constants:
    coefficient C(r+s-2, r-1)/(r! s!) for r, s >= 1 and 0 on the axes.

    The axis coefficients are set to 0 directly rather than through any
    negative-argument binomial convention.
    """
    return BivariateSeries.from_fn(
        lambda r, s: (
            Fraction(binomial(r + s - 2, r - 1), factorial(r) * factorial(s))
            if r >= 1 and s >= 1
            else 0
        ),
        nx,
        ny,
    )


def count_egf(nx: int, ny: int) -> BivariateSeries:
    """Bivariate EGF of the avoidance counts: coefficient
    avoider_count(r, r+s) / (r! s!)."""
    return BivariateSeries.from_fn(
        lambda r, s: Fraction(avoider_count(r, r + s), factorial(r) * factorial(s)),
        nx,
        ny,
    )


def excess_ogf(nx: int, ny: int) -> BivariateSeries:
    """Ordinary generating function of the normalized excess values."""
    return BivariateSeries.from_fn(normalized_excess, nx, ny)


@dataclass(frozen=True)
class IdentityCheck:
    key: str
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class IdentityReport:
    """Coefficient-exact verification of the series identities."""

    order: int
    checks: tuple[IdentityCheck, ...]
    stated_boundary_residual: BivariateSeries

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def by_key(self, *keys: str) -> tuple[IdentityCheck, ...]:
        return tuple(c for c in self.checks if c.key in keys)


def _compare(key: str, name: str, left: BivariateSeries, right: BivariateSeries) -> IdentityCheck:
    if left == right:
        nx, ny = left._common_window(right)
        return IdentityCheck(key, name, True, f"exact on [0,{nx}]x[0,{ny}]")
    nx, ny = left._common_window(right)
    for r in range(nx + 1):
        for s in range(ny + 1):
            if left.coeff(r, s) != right.coeff(r, s):
                return IdentityCheck(
                    key,
                    name,
                    False,
                    f"first mismatch at ({r},{s}): {left.coeff(r, s)} != {right.coeff(r, s)}",
                )
    raise AssertionError("unreachable")


def _stated_boundary_alternative(order: int) -> BivariateSeries:
    # The integral with boundary rows e^x and e^y instead of zero: axis
    # coefficients 1/r! and 1/s!, both boundary rows force 1 at the origin.
    def alt(r: int, s: int) -> Fraction:
        if r == 0 and s == 0:
            return Fraction(1)
        if s == 0:
            return Fraction(1, factorial(r))
        if r == 0:
            return Fraction(1, factorial(s))
        return Fraction(binomial(r + s - 2, r - 1), factorial(r) * factorial(s))

    return BivariateSeries.from_fn(alt, order, order)


def verify_identities(order: int) -> IdentityReport:
    """Check every series identity on the window [0, order]^2, exactly.

    The checks: the binomial EGF factors as e^(x+y) times the Bessel
    series; it is the mixed partial of its zero-boundary double integral
    and recovers that integral under integrate_xy; multiplying the excess
    OGF by (1-x-y+xy) gives the integral; dividing (integral + 1) by the
    same polynomial gives the count EGF; and collapsing the binomial EGF to
    the diagonal yields the central binomial EGF.  A final entry evaluates
    the alternative exponential boundary choice for the integral and
    records that its residual against the count EGF is nonzero, so the
    discrepancy between the two boundary conventions is documented rather
    than patched.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    o = order
    binom_egf = binomial_egf_series(o, o)
    integral = integrated_binomial_egf(o, o)
    denom = one_minus_x_minus_y_plus_xy(o, o)
    one = BivariateSeries.constant(1, o, o)
    counts = count_egf(o, o)

    checks = [
        _compare(
            "product",
            "binomial EGF = exp_sum * bessel_i0",
            binom_egf,
            exp_sum_series(o, o) * bessel_i0_series(o, o),
        ),
        _compare(
            "derivative",
            "partial_xy(integrated binomial EGF) = binomial EGF",
            partial_xy(integrated_binomial_egf(o + 1, o + 1)),
            binom_egf,
        ),
        _compare(
            "integral",
            "integrate_xy(binomial EGF) = integrated binomial EGF",
            integrate_xy(binom_egf),
            integral,
        ),
        _compare(
            "excess",
            "(1-x-y+xy) * excess OGF = integrated binomial EGF",
            denom * excess_ogf(o, o),
            integral,
        ),
        _compare(
            "count",
            "count EGF = (integrated binomial EGF + 1) / (1-x-y+xy)",
            counts,
            divide_by_unit(integral + one, denom),
        ),
    ]

    diag = diagonal_collapse(binom_egf)
    bad = [
        m for m in range(o + 1) if diag[m] != Fraction(comb(2 * m, m), factorial(m))
    ]
    checks.append(
        IdentityCheck(
            "diagonal",
            "diagonal of binomial EGF = central binomial EGF",
            not bad,
            f"m <= {o}" if not bad else f"first mismatch at m={bad[0]}",
        )
    )

    residual = divide_by_unit(_stated_boundary_alternative(o) + one, denom) - counts
    nonzero = sum(
        1
        for r in range(o + 1)
        for s in range(o + 1)
        if residual.coeff(r, s) != 0
    )
    checks.append(
        IdentityCheck(
            "boundary",
            "exponential-boundary variant leaves a nonzero residual",
            nonzero > 0,
            f"residual(0,0) = {residual.coeff(0, 0)}; "
            f"nonzero in {nonzero} of {(o + 1) ** 2} cells",
        )
    )

    return IdentityReport(order=o, checks=tuple(checks), stated_boundary_residual=residual)
