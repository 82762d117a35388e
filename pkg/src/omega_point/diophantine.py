"""Search windows for integer solutions of n y^2 = x^3 + a n^2 x + b n^3.

A_n = {n i^2 : 1 <= i <= I} holds the admissible left-hand sides.  Each
branch set B_kn holds f_n sampled at consecutive integers along a stretch
where f_n is nonnegative and monotone:

    k = 0, 1, 2   start at the root floor J_kn, J + 1 samples
    k = 3         starts at floor(n x_+), J + 1 samples
    k = 4         J_0n .. J_4n   (root to local maximum)
    k = 5         J_4n .. J_1n   (local maximum down to the middle root)
    k = 6         J_4n .. J_3n   (local maximum down to the local minimum)

A solution in a window exists exactly when A_n and B_kn intersect, which the
omega certificate decides.  ``window_scan_oracle`` answers the same question
by direct search.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .certificate import CertificateInput, omega_with_stats
from .cubic import Region, classify, monotone_branches, root_floors, scaled_cubic
from .errors import BranchNotAdmissible, MalformedInput, ResourceLimit
from .limits import check_width

BOUNDED_BRANCHES = (4, 5, 6)


def f_n_eval(a: int, b: int, n: int, x: int) -> int:
    if n < 1:
        raise MalformedInput(f"n must be positive, got {n}")
    return scaled_cubic(a, b, n, x)


def build_A(n: int, I: int) -> list[int]:
    if n < 1 or I < 1:
        raise MalformedInput(f"n and I must be positive, got n={n}, I={I}")
    return [n * i * i for i in range(1, I + 1)]


@dataclass(frozen=True)
class WindowSpec:
    n: int
    I: int
    J: int
    branch: int

    def __post_init__(self):
        if self.n < 1 or self.I < 1 or self.J < 1:
            raise MalformedInput(f"n, I, J must be positive, got {self.n}, {self.I}, {self.J}")
        if self.branch not in range(7):
            raise MalformedInput(f"branch must be in 0..6, got {self.branch}")


@dataclass
class BranchSets:
    A: list
    B: list
    M: int
    N: int
    start: int
    count: int
    branch: int


def branch_window(a: int, b: int, n: int, J: int, branch: int, analysis=None) -> tuple[int, int]:
    """(start, count) of the x-values sampled by B_kn."""
    if analysis is None:
        analysis = root_floors(a, b, n)
    admissible = {br.k: br for br in monotone_branches(analysis)}
    if branch not in admissible:
        raise BranchNotAdmissible(
            f"branch {branch} is not used in region {analysis.region.value}; "
            f"admissible: {sorted(admissible)}"
        )
    br = admissible[branch]
    if branch in BOUNDED_BRANCHES:
        return br.start, br.stop - br.start + 1
    if J < 1:
        raise MalformedInput(f"J must be positive, got {J}")
    return br.start, J + 1


def build_branch(a, b, n, I, J, branch, limit=None, analysis=None) -> BranchSets:
    A = build_A(n, I)
    start, count = branch_window(a, b, n, J, branch, analysis)
    B = [scaled_cubic(a, b, n, start + j) for j in range(count)]
    M = min(A[0], min(B))
    N = max(A[-1], max(B))
    check_width(N - M, limit)
    return BranchSets(A, B, M, N, start, count, branch)


def window_scan_oracle(a, b, n, I, J, branch, analysis=None):
    """First (X, Y) in the branch window with f_n(X) = n Y^2 and 1 <= Y <= I, else None."""
    if I < 1:
        raise MalformedInput(f"I must be positive, got {I}")
    start, count = branch_window(a, b, n, J, branch, analysis)
    for x in range(start, start + count):
        v = scaled_cubic(a, b, n, x)
        if v <= 0 or v % n:
            continue
        y = isqrt(v // n)
        if y * y * n == v and y <= I:
            return x, y
    return None


@dataclass
class BranchResult:
    branch: int
    omega: int | None  # None when the window was over the guard
    M: int
    N: int
    start: int
    count: int
    peak_bits: int = 0
    skipped: str | None = None

    @property
    def width(self) -> int:
        return self.N - self.M


@dataclass
class Theorem2Report:
    a: int
    b: int
    n: int
    I: int
    J: int
    region: Region
    condition_index: int
    per_branch: list = field(default_factory=list)
    satisfied: bool = False
    lattice_solution: tuple | None = None

    @property
    def complete(self) -> bool:
        """True when no consulted window was skipped by the guard."""
        return all(r.skipped is None for r in self.per_branch)

    @property
    def all_guarded(self) -> bool:
        return bool(self.per_branch) and all(r.skipped is not None for r in self.per_branch)

    @property
    def omega_total(self) -> int:
        return sum(r.omega for r in self.per_branch if r.omega is not None)


_CONSULTED = {
    Region.R1: (0,),
    Region.R2_touch_below: (1,),  # only when n x0 is not an integer
    Region.R4_three_roots: (2, 4, 5),
    Region.R5_touch_above: (1, 4, 5),
    Region.R6_one_root_pos_b: (3, 4, 6),
}


def evaluate_branch(a, b, n, I, J, branch, limit=None, analysis=None, backend=None) -> BranchResult:
    A = build_A(n, I)
    start, count = branch_window(a, b, n, J, branch, analysis)
    B = [scaled_cubic(a, b, n, start + j) for j in range(count)]
    M, N = min(A[0], min(B)), max(A[-1], max(B))
    try:
        value, peak = omega_with_stats(CertificateInput(tuple(A), tuple(B), M, N), limit, backend)
    except ResourceLimit as exc:
        return BranchResult(branch, None, M, N, start, count, skipped=str(exc))
    return BranchResult(branch, value, M, N, start, count, peak)


def theorem2_evaluate(a, b, n, I, J, limit=None, backend=None) -> Theorem2Report:
    """Evaluate the applicable existence condition for one (n, I, J).

    Guarded windows are recorded with ``skipped`` set instead of raising, so a
    partially evaluated condition can still be satisfied by its other branches.
    """
    a, b = int(a), int(b)
    if n < 1 or I < 1 or J < 1:
        raise MalformedInput(f"n, I, J must be positive, got {n}, {I}, {J}")
    region = classify(a, b)
    if region is Region.R0_degenerate:
        raise MalformedInput("a = b = 0 is the degenerate family, not covered by the criterion")
    report = Theorem2Report(a, b, n, I, J, region, region.condition)

    if region is Region.R7_b_zero:
        report.lattice_solution = (0, 0)
        report.satisfied = True
        return report

    analysis = root_floors(a, b, n)
    if region is Region.R2_touch_below:
        x0 = analysis.floor(0)
        if scaled_cubic(a, b, n, x0) == 0:
            report.lattice_solution = (x0, 0)
            report.satisfied = True
            return report
        report.condition_index = 3

    report.per_branch = [
        evaluate_branch(a, b, n, I, J, k, limit, analysis, backend) for k in _CONSULTED[region]
    ]
    report.satisfied = report.omega_total > 0
    return report
