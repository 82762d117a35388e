"""Exact symmetric-function kernels over Python integers.

Elementary symmetric polynomials e_m, power sums p_k, parity-signed power sums
and the Newton-identity recurrence linking e and p.  Conventions used
throughout: e_0 = 1, 0**0 = 1 (so p_0 = len(values)), and (-1)**v is decided
by ``v & 1`` so negative elements take the parity of their absolute value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidBounds, MalformedInput
from .limits import check_width


def factorial(k: int, limit: int | None = None) -> int:
    """k! exactly; refuses k above the window guard."""
    if k < 0:
        raise MalformedInput(f"factorial of negative integer {k}")
    check_width(k, limit, what="factorial argument")
    return math.factorial(k)


def parity_sign(v: int) -> int:
    return -1 if v & 1 else 1


def _expand(values) -> list[int]:
    # coefficients of prod(t + v), highest power first, one factor at a time
    e = [1]
    for v in values:
        if v == 0:
            e.append(0)
        else:
            e = [cur + v * prev for cur, prev in zip(e + [0], [0] + e)]
    return e


def elementary_symmetric(values, limit: int | None = None) -> list[int]:
    """[e_0, ..., e_K] for the multiset ``values`` (K = len(values))."""
    values = [int(v) for v in values]
    check_width(len(values), limit, what="multiset size")
    return _expand(values)


def elementary_symmetric_range(M: int, N: int, limit: int | None = None) -> list[int]:
    """sigma_m(M, N) for m = 0..N-M+1: elementary symmetric polynomials of M..N."""
    if M > N:
        raise InvalidBounds(f"empty range: M={M} > N={N}")
    check_width(N - M, limit)
    return _expand(range(M, N + 1))


def power_sums(values, max_k: int) -> list[int]:
    """[p_0, ..., p_max_k] with p_k = sum(v**k)."""
    if max_k < 0:
        raise MalformedInput(f"max_k must be nonnegative, got {max_k}")
    values = [int(v) for v in values]
    out = [len(values)]
    powers = [1] * len(values)
    for _ in range(max_k):
        powers = [p * v for p, v in zip(powers, values)]
        out.append(sum(powers))
    return out


def signed_power_sums(values, max_k: int) -> list[int]:
    """[S_0, ..., S_max_k] with S_j = sum((-1)**v * v**j)."""
    if max_k < 0:
        raise MalformedInput(f"max_k must be nonnegative, got {max_k}")
    values = [int(v) for v in values]
    powers = [parity_sign(v) for v in values]
    out = [sum(powers)]
    for _ in range(max_k):
        powers = [p * v for p, v in zip(powers, values)]
        out.append(sum(powers))
    return out


def power_sums_via_newton(esp, count: int, max_k: int) -> list[int]:
    """Power sums recovered from elementary symmetric polynomials.

    Uses p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)**(k-1) k e_k with e_m = 0
    for m > count.  Independent of :func:`power_sums`, so the two cross-check.
    """
    if not esp or esp[0] != 1:
        raise MalformedInput("elementary symmetric list must start with e_0 = 1")
    if count < 0 or max_k < 0:
        raise MalformedInput("count and max_k must be nonnegative")

    def e(m):
        return esp[m] if m <= count and m < len(esp) else 0

    p = [count]
    for k in range(1, max_k + 1):
        acc = (-1) ** (k - 1) * k * e(k)
        for i in range(1, k):
            ei = e(i)
            if ei:
                acc += (-1) ** (i - 1) * ei * p[k - i]
        p.append(acc)
    return p


@dataclass
class SymmetricTable:
    values: list[int]
    max_power: int
    esp: list[int] = field(default_factory=list)
    power_sums: list[int] = field(default_factory=list)

    @classmethod
    def build(cls, values, max_power: int, limit: int | None = None) -> "SymmetricTable":
        values = [int(v) for v in values]
        return cls(values, max_power, elementary_symmetric(values, limit), power_sums(values, max_power))
