"""Rational point search driven by the windowed existence criterion.

A rational point (Q/P, S/R) corresponds to an integer solution (X, Y) of
n Y^2 = X^3 + a n^2 X + b n^3 with n = PR, X = QR, Y = SP, and back via
(X/n, Y/n).  ``search`` sweeps (n, I, J) diagonally, stops at the first window
whose condition holds, and pins the solution down with the window scan.

The criterion certifies existence only.  Running out of limits yields
"inconclusive", never a claim that no point exists.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from .cubic import DEGENERATE_FAMILY, Region, cauchy_bound, classify, root_floors, scaled_cubic
from .diophantine import theorem2_evaluate, window_scan_oracle
from .errors import InternalInconsistency, MalformedInput
from .limits import DEFAULT_MAX_WIDTH


@dataclass(frozen=True)
class RationalPoint:
    x_num: int
    x_den: int
    y_num: int
    y_den: int
    witness: tuple  # (X, Y, n) with n Y^2 = f_n(X)

    @property
    def x(self) -> Fraction:
        return Fraction(self.x_num, self.x_den)

    @property
    def y(self) -> Fraction:
        return Fraction(self.y_num, self.y_den)

    @classmethod
    def from_fractions(cls, x, y) -> "RationalPoint":
        x, y = Fraction(x), Fraction(y)
        n = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
        witness = (x.numerator * (n // x.denominator), y.numerator * (n // y.denominator), n)
        return cls(x.numerator, x.denominator, y.numerator, y.denominator, witness)

    def __str__(self):
        return f"({self.x}, {self.y})"


def _reduce(num, den):
    g = gcd(num, den)
    return num // g, den // g


def to_rational_point(X: int, Y: int, n: int, a: int, b: int) -> RationalPoint:
    if n < 1:
        raise MalformedInput(f"n must be positive, got {n}")
    if n * Y * Y != scaled_cubic(a, b, n, X):
        raise MalformedInput(f"(X, Y, n) = ({X}, {Y}, {n}) does not satisfy n Y^2 = f_n(X)")
    xn, xd = _reduce(X, n)
    yn, yd = _reduce(Y, n)
    point = RationalPoint(xn, xd, yn, yd, (X, Y, n))
    if not verify_point(a, b, point):
        raise InternalInconsistency(f"reduced point {point} fails the curve equation")
    return point


def verify_point(a: int, b: int, p: RationalPoint) -> bool:
    """Exact curve membership, checked in integers through a common denominator."""
    if p.x_den < 1 or p.y_den < 1:
        return False
    n = p.x_den * p.y_den // gcd(p.x_den, p.y_den)
    X = p.x_num * (n // p.x_den)
    Y = p.y_num * (n // p.y_den)
    return n * Y * Y == scaled_cubic(a, b, n, X)


def x_axis_points(a: int, b: int) -> list[RationalPoint]:
    """Points (r, 0) for the rational roots r of x^3 + a x + b.

    A monic integer cubic has only integer rational roots, and each sits on
    its own floor, so the exact root floors already list them.
    """
    if a == 0 and b == 0:
        raise MalformedInput("a = b = 0 is the degenerate family")
    return [RationalPoint(r, 1, 0, 1, (r, 0, 1)) for r in root_floors(a, b, 1).lattice_roots]


def brute_force_height_search(a: int, b: int, H: int) -> list[RationalPoint]:
    """Every point (x, y), y >= 0, with den(x) <= H and |num(x)| <= H (C + 1).

    C = 1 + max(|a|, |b|).  f(p/q) is a rational square exactly when
    q (p^3 + a p q^2 + b q^3) is a perfect square, and then y = sqrt(.)/q^2.
    """
    if H < 1:
        raise MalformedInput(f"H must be positive, got {H}")
    bound = H * (cauchy_bound(a, b, 1) + 1)
    found = []
    for q in range(1, H + 1):
        for p in range(-bound, bound + 1):
            if gcd(p, q) != 1:
                continue
            v = q * scaled_cubic(a, b, q, p)
            if v < 0:
                continue
            r = isqrt(v)
            if r * r == v:
                found.append(RationalPoint.from_fractions(Fraction(p, q), Fraction(r, q * q)))
    return sorted(found, key=lambda pt: (pt.x, pt.y))


@dataclass(frozen=True)
class SearchLimits:
    max_n: int = 3
    max_I: int = 12
    max_J: int = 12
    deadline: float | None = None  # seconds of wall-clock time
    window_guard: int = DEFAULT_MAX_WIDTH
    threads: int = 1

    def __post_init__(self):
        if min(self.max_n, self.max_I, self.max_J, self.window_guard, self.threads) < 1:
            raise MalformedInput("all search limits must be >= 1")


@dataclass(frozen=True)
class TraceEntry:
    n: int
    I: int
    J: int
    branch: int | None  # None for lattice conditions (2) and (7)
    outcome: str  # "+", "0" for the omega sign, "guarded", or "lattice"
    width: int | None = None


@dataclass
class SearchOutcome:
    status: str  # "found", "inconclusive" or "degenerate"
    point: RationalPoint | None = None
    condition_index: int | None = None
    trace: list = field(default_factory=list)
    reason: str = ""
    family: str | None = None
    peak_bits: int = 0

    @property
    def evaluated(self) -> int:
        return sum(1 for e in self.trace if e.outcome != "guarded")

    @property
    def guarded(self) -> int:
        return sum(1 for e in self.trace if e.outcome == "guarded")

    @property
    def max_width(self) -> int:
        return max((e.width for e in self.trace if e.width is not None), default=0)


def recover_witness(a, b, n, branch, I, J) -> tuple[int, int]:
    hit = window_scan_oracle(a, b, n, I, J, branch)
    if hit is None:
        raise InternalInconsistency(
            f"omega > 0 on branch {branch} for (n, I, J) = ({n}, {I}, {J}) but the scan found nothing"
        )
    return hit


def schedule(limits: SearchLimits):
    """Diagonal sweep: for H = 1, 2, ..., every n <= H with I = J = H (capped)."""
    seen = set()
    for H in range(1, max(limits.max_n, limits.max_I, limits.max_J) + 1):
        level = []
        for n in range(1, min(H, limits.max_n) + 1):
            cell = (n, min(H, limits.max_I), min(H, limits.max_J))
            if cell not in seen:
                seen.add(cell)
                level.append(cell)
        if level:
            yield level


def _trace_entries(report):
    if report.lattice_solution is not None:
        return [TraceEntry(report.n, report.I, report.J, None, "lattice")]
    out = []
    for r in report.per_branch:
        if r.skipped:
            out.append(TraceEntry(report.n, report.I, report.J, r.branch, "guarded", r.width))
        else:
            out.append(TraceEntry(report.n, report.I, report.J, r.branch, "+" if r.omega > 0 else "0", r.width))
    return out


def _point_from_report(a, b, report) -> RationalPoint:
    if report.lattice_solution is not None:
        X, Y = report.lattice_solution
        return to_rational_point(X, Y, report.n, a, b)
    for r in report.per_branch:
        if r.omega:
            X, Y = recover_witness(a, b, report.n, r.branch, report.I, report.J)
            return to_rational_point(X, Y, report.n, a, b)
    raise InternalInconsistency("satisfied report without a positive branch")


def search(a: int, b: int, limits: SearchLimits | None = None) -> SearchOutcome:
    a, b = int(a), int(b)
    limits = limits or SearchLimits()
    if classify(a, b) is Region.R0_degenerate:
        # r = 1 in the family (r^2, r^3)
        return SearchOutcome(
            "degenerate", RationalPoint(1, 1, 1, 1, (1, 1, 1)), None, [], "a = b = 0", DEGENERATE_FAMILY
        )

    started = time.monotonic()
    outcome = SearchOutcome("inconclusive")
    peak = 0

    def evaluate(cell):
        n, I, J = cell
        return theorem2_evaluate(a, b, n, I, J, limit=limits.window_guard)

    pool = ThreadPoolExecutor(limits.threads) if limits.threads > 1 else None
    try:
        for level in schedule(limits):
            if limits.deadline is not None and time.monotonic() - started > limits.deadline:
                outcome.reason = f"deadline of {limits.deadline} s reached"
                break
            # a whole level may run concurrently; results are consumed in schedule order
            reports = pool.map(evaluate, level) if pool else map(evaluate, level)
            for report in reports:
                outcome.trace.extend(_trace_entries(report))
                peak = max([peak] + [r.peak_bits for r in report.per_branch])
                if report.satisfied:
                    outcome.status = "found"
                    outcome.condition_index = report.condition_index
                    outcome.point = _point_from_report(a, b, report)
                    outcome.peak_bits = peak
                    return outcome
        else:
            outcome.reason = (
                f"limits exhausted (max_n={limits.max_n}, max_I={limits.max_I}, max_J={limits.max_J}); "
                "the criterion certifies existence only, so the question stays open"
            )
    finally:
        if pool:
            pool.shutdown(wait=True, cancel_futures=True)
    outcome.peak_bits = peak
    return outcome
