"""Exact shape analysis of f(x) = x^3 + a x + b and its scaling f_n.

Everything is decided with integer arithmetic.  The local extremes of f sit at
x = +-sqrt(-a/3) (for a < 0) and the extreme values are b -+ (2a/3)sqrt(-a/3);
squaring the threshold (2a/3)sqrt(-a/3) gives -4a^3/27, so comparing b with
it reduces to the sign of 4a^3 + 27b^2 together with the sign of b.

For f_n(x) = x^3 + a n^2 x + b n^3 = n^3 f(x/n) the roots and critical points
are n times those of f.  Their integer floors are found by bracketing f_n at
integers and bisecting, never through floating point.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import isqrt

from .errors import InternalInconsistency, MalformedInput

DEGENERATE_FAMILY = "S0 = {(r^2, r^3) : r rational}"


class Region(enum.Enum):
    R0_degenerate = "R0_degenerate"  # a = b = 0
    R1 = "R1"  # one simple root, f increasing past it
    R2_touch_below = "R2_touch_below"  # double root at the local maximum
    R4_three_roots = "R4_three_roots"
    R5_touch_above = "R5_touch_above"  # double root at the local minimum
    R6_one_root_pos_b = "R6_one_root_pos_b"
    R7_b_zero = "R7_b_zero"

    @property
    def condition(self):
        """The matching condition number (1..7) of the existence criterion, or None for R0."""
        return _CONDITION[self]


_CONDITION = {
    Region.R0_degenerate: None,
    Region.R1: 1,
    Region.R2_touch_below: 2,  # or 3 when n*x0 is not an integer
    Region.R4_three_roots: 4,
    Region.R5_touch_above: 5,
    Region.R6_one_root_pos_b: 6,
    Region.R7_b_zero: 7,
}


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def discriminant_sign(a: int, b: int) -> int:
    """sign(4a^3 + 27b^2); negative means three distinct real roots."""
    return _sign(4 * a**3 + 27 * b**2)


def classify(a: int, b: int) -> Region:
    a, b = int(a), int(b)
    if a == 0 and b == 0:
        return Region.R0_degenerate
    if b == 0:
        return Region.R7_b_zero
    if a >= 0:
        return Region.R1
    d = discriminant_sign(a, b)
    if d < 0:
        return Region.R4_three_roots
    if b < 0:
        return Region.R2_touch_below if d == 0 else Region.R1
    return Region.R5_touch_above if d == 0 else Region.R6_one_root_pos_b


def scaled_cubic(a: int, b: int, n: int, x: int) -> int:
    """f_n(x) = x^3 + a n^2 x + b n^3."""
    return x**3 + a * n * n * x + b * n**3


def cauchy_bound(a: int, b: int, n: int) -> int:
    """Integer C with every real root of f_n inside (-C, C)."""
    return 1 + max(abs(a) * n * n, abs(b) * n**3)


def critical_floor(a: int, n: int, sign: str) -> int:
    """floor(n*x_+) for sign '+', floor(n*x_-) for sign '-', with x_+- = +-sqrt(-a/3)."""
    if a >= 0:
        raise MalformedInput(f"critical points exist only for a < 0, got a = {a}")
    if n < 1:
        raise MalformedInput(f"n must be positive, got {n}")
    m = -a * n * n
    t = isqrt(m // 3)  # largest t >= 0 with 3t^2 <= m
    if sign == "+":
        return t
    if sign == "-":
        return -t if 3 * t * t == m else -t - 1
    raise MalformedInput(f"sign must be '+' or '-', got {sign!r}")


def _last_true(lo: int, hi: int, pred) -> int:
    """Largest t in [lo, hi] with pred(t), for pred true-then-false; lo - 1 if none."""
    if lo > hi or not pred(lo):
        return lo - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if pred(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def _exact_half_scale(a: int, b: int) -> int:
    """s with a = -3s^2 and b = -+2s^3, for the double-root regions."""
    if a % 3:
        raise InternalInconsistency(f"double root with a = {a} not divisible by 3")
    s = isqrt(-a // 3)
    if 3 * s * s != -a or 2 * s**3 != abs(b):
        raise InternalInconsistency(f"(a, b) = ({a}, {b}) does not factor as (x -+ s)^2 (x +- 2s)")
    return s


@dataclass
class CubicAnalysis:
    a: int
    b: int
    region: Region
    n: int
    root_floors: list = field(default_factory=list)
    crit_floor_minus: int | None = None
    crit_floor_plus: int | None = None
    lattice_roots: tuple = ()

    @property
    def lattice_root(self):
        """Smallest integer root of f_n, if any."""
        return self.lattice_roots[0] if self.lattice_roots else None

    def floor(self, k: int) -> int:
        """J_kn: k = 0, 1, 2 index the root floors, 3 is floor(n x_+), 4 is floor(n x_-)."""
        if k == 3:
            value = self.crit_floor_plus
        elif k == 4:
            value = self.crit_floor_minus
        else:
            value = self.root_floors[k] if k < len(self.root_floors) else None
        if value is None:
            raise MalformedInput(f"J_{k}n is not defined in region {self.region.value}")
        return value


def root_floors(a: int, b: int, n: int) -> CubicAnalysis:
    """Floors of the real roots of f_n, plus the critical-point floors when a < 0."""
    a, b, n = int(a), int(b), int(n)
    if n < 1:
        raise MalformedInput(f"n must be positive, got {n}")
    region = classify(a, b)
    if region is Region.R0_degenerate:
        raise MalformedInput(f"a = b = 0 is the degenerate family {DEGENERATE_FAMILY}")

    def f(x):
        return scaled_cubic(a, b, n, x)

    C = cauchy_bound(a, b, n)
    out = CubicAnalysis(a, b, region, n)
    if a < 0:
        out.crit_floor_minus = critical_floor(a, n, "-")
        out.crit_floor_plus = critical_floor(a, n, "+")
    lo_c, hi_c = out.crit_floor_minus, out.crit_floor_plus

    if region in (Region.R1, Region.R6_one_root_pos_b):
        # a single simple root: f < 0 left of it and f > 0 right of it
        floors = [_last_true(-C, C, lambda x: f(x) <= 0)]
    elif region is Region.R4_three_roots:
        x0 = _last_true(-C, lo_c, lambda x: f(x) <= 0)
        x1 = _last_true(lo_c + 1, hi_c, lambda x: f(x) >= 0)
        x1 = lo_c if x1 < lo_c + 1 else x1
        x2 = _last_true(hi_c + 1, C, lambda x: f(x) <= 0)
        x2 = hi_c if x2 < hi_c + 1 else x2
        floors = [x0, x1, x2]
    elif region is Region.R2_touch_below:
        s = _exact_half_scale(a, b)
        floors = [-n * s, 2 * n * s]  # (x + ns)^2 (x - 2ns)
    elif region is Region.R5_touch_above:
        s = _exact_half_scale(a, b)
        floors = [-2 * n * s, n * s]  # (x - ns)^2 (x + 2ns)
    else:  # R7: x (x^2 + a n^2)
        if a > 0:
            floors = [0]
        else:
            t = isqrt(-a * n * n)
            neg = -t if t * t == -a * n * n else -t - 1
            floors = [neg, 0, t]
    out.root_floors = floors
    out.lattice_roots = tuple(sorted({x for x in floors if f(x) == 0}))
    return out


@dataclass(frozen=True)
class Branch:
    """A stretch of integers on which f_n is nonnegative and strictly monotone.

    ``stop`` is None for the unbounded branch running to +infinity.
    """

    k: int
    start: int
    stop: int | None
    direction: str  # "increasing" or "decreasing"


def monotone_branches(analysis: CubicAnalysis) -> list[Branch]:
    """Branches consulted by the existence criterion, in ascending k."""
    r = analysis.region
    J = analysis.floor
    inc, dec = "increasing", "decreasing"
    if r is Region.R1:
        out = [Branch(0, J(0), None, inc)]
    elif r is Region.R2_touch_below:
        out = [Branch(1, J(1), None, inc)]
    elif r is Region.R4_three_roots:
        out = [Branch(2, J(2), None, inc), Branch(4, J(0), J(4), inc), Branch(5, J(4), J(1), dec)]
    elif r is Region.R5_touch_above:
        out = [Branch(1, J(1), None, inc), Branch(4, J(0), J(4), inc), Branch(5, J(4), J(1), dec)]
    elif r is Region.R6_one_root_pos_b:
        out = [Branch(3, J(3), None, inc), Branch(4, J(0), J(4), inc), Branch(6, J(4), J(3), dec)]
    else:
        out = []
    return sorted(out, key=lambda br: br.k)
