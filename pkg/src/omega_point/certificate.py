"""Intersection counts of two integer lists through symmetric functions.

For lists A = (i_1..i_K1), B = (j_1..j_K2) inside a window [M, N] of width
W = N - M, the count of matching pairs is

    chi(A, B) = sum_k (-1)**(N+i_k) / ((i_k-M)! (N-i_k)!)
                * sum_{l=0}^{W} sum_{m=0}^{l} (-1)**m sigma_m i_k**(l-m) T_{W-l}

with sigma_m the elementary symmetric polynomials of M..N and T the power sums
of B.  Each summand is a Lagrange indicator: the inner double sum is the
synthetic division of prod_{M<=n<=N}(t - n) by (t - i_k), evaluated at every
element of B.  Dropping the factorial denominators gives the companion

    omega(A, B) = (-1)**N sum_l sum_m (-1)**m sigma_m S_{l-m} T_{W-l}

with S the parity-signed power sums of A.  Every per-element contribution to
omega is a nonnegative multiple of the matching count, so omega > 0 exactly
when chi > 0.

``omega`` is evaluated twice, once from S as a single convolution and once
per element, and the two must agree; ``certify`` additionally checks both
against a direct pair count.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import _kernels
from .errors import InternalInconsistency, InvalidBounds, MalformedInput
from .limits import check_width
from .symmetric import (
    elementary_symmetric_range,
    factorial,
    parity_sign,
    power_sums,
    signed_power_sums,
)


@dataclass(frozen=True)
class CertificateInput:
    A: tuple
    B: tuple
    M: int
    N: int

    @classmethod
    def of(cls, A, B, M=None, N=None) -> "CertificateInput":
        """Build an input; omitted bounds default to the tightest window."""
        A = tuple(int(v) for v in A)
        B = tuple(int(v) for v in B)
        if not A or not B:
            raise MalformedInput("both A and B must be nonempty")
        if M is None:
            M = min(min(A), min(B))
        if N is None:
            N = max(max(A), max(B))
        return cls(A, B, int(M), int(N))

    @property
    def width(self) -> int:
        return self.N - self.M

    def validate(self, limit=None) -> None:
        if not self.A or not self.B:
            raise MalformedInput("both A and B must be nonempty")
        lo = min(min(self.A), min(self.B))
        hi = max(max(self.A), max(self.B))
        if self.M > lo or self.N < hi:
            raise InvalidBounds(
                f"window [{self.M}, {self.N}] does not cover the elements, which span [{lo}, {hi}]"
            )
        check_width(self.N - self.M, limit)


@dataclass
class CertificateReport:
    chi: int | None = None
    omega: int | None = None
    nonempty: bool | None = None
    per_term_chi: list = field(default_factory=list)
    per_term_omega: list = field(default_factory=list)
    direct_count: int | None = None
    width: int = 0
    peak_bits: int = 0


@dataclass
class _Tables:
    sigma: list
    T: list
    W: int
    peak_bits: int


def _tables(inp: CertificateInput, limit) -> _Tables:
    inp.validate(limit)
    W = inp.width
    sigma = elementary_symmetric_range(inp.M, inp.N, limit)
    T = power_sums(inp.B, W)
    peak = max(abs(v).bit_length() for v in (*sigma, *T))
    return _Tables(sigma, T, W, peak)


def _element_numerator(i: int, tables: _Tables) -> int:
    """Inner double sum of chi for one element of A (no sign, no factorials)."""
    sigma, T, W = tables.sigma, tables.T, tables.W
    c = 1
    acc = T[W]
    for l in range(1, W + 1):
        c = i * c + (-sigma[l] if l & 1 else sigma[l])
        acc += c * T[W - l]
    # the division of prod(t - n) by (t - i) leaves no remainder when M <= i <= N
    rem = i * c + (-sigma[W + 1] if (W + 1) & 1 else sigma[W + 1])
    if rem != 0:
        raise InternalInconsistency(f"synthetic division by (t - {i}) left remainder {rem}")
    return acc


def _signed_numerators(inp: CertificateInput, tables: _Tables) -> list[int]:
    sign_n = parity_sign(inp.N)
    return [sign_n * parity_sign(i) * _element_numerator(i, tables) for i in inp.A]


def _omega_from_power_sums(inp: CertificateInput, tables: _Tables, backend=None) -> tuple[int, int]:
    sigma, T, W = tables.sigma, tables.T, tables.W
    S = signed_power_sums(inp.A, W)
    alt_sigma = [-s if m & 1 else s for m, s in enumerate(sigma[: W + 1])]
    # U_l = sum_m (-1)^m sigma_m S_{l-m}
    U = _kernels.convolve(alt_sigma, S, W + 1, backend=backend)
    total = sum(u * T[W - l] for l, u in enumerate(U))
    if inp.N & 1:
        total = -total
    peak = max(tables.peak_bits, max(abs(v).bit_length() for v in S), abs(total).bit_length())
    return total, peak


def omega_value(A, B, M=None, N=None, limit=None, backend=None) -> int:
    """Omega alone, from signed power sums.  Cheapest route; no per-term data."""
    inp = CertificateInput.of(A, B, M, N)
    value, _ = _omega_from_power_sums(inp, _tables(inp, limit), backend)
    return value


def omega_with_stats(inp: CertificateInput, limit=None, backend=None) -> tuple[int, int]:
    """(omega, peak bit length of every intermediate table)."""
    return _omega_from_power_sums(inp, _tables(inp, limit), backend)


def chi(inp: CertificateInput, limit=None) -> CertificateReport:
    tables = _tables(inp, limit)
    per_term = []
    peak = tables.peak_bits
    for i, numerator in zip(inp.A, _signed_numerators(inp, tables)):
        weight = factorial(i - inp.M, limit) * factorial(inp.N - i, limit)
        q, r = divmod(numerator, weight)
        if r:
            raise InternalInconsistency(f"chi term for element {i} is not an integer: {numerator}/{weight}")
        per_term.append(q)
        peak = max(peak, abs(numerator).bit_length())
    return CertificateReport(chi=sum(per_term), per_term_chi=per_term, width=tables.W, peak_bits=peak)


def omega(inp: CertificateInput, limit=None, backend=None) -> CertificateReport:
    tables = _tables(inp, limit)
    total, peak = _omega_from_power_sums(inp, tables, backend)
    per_term = _signed_numerators(inp, tables)
    if sum(per_term) != total:
        raise InternalInconsistency(
            f"omega from power sums ({total}) differs from the per-element sum ({sum(per_term)})"
        )
    peak = max([peak] + [abs(v).bit_length() for v in per_term])
    return CertificateReport(omega=total, per_term_omega=per_term, width=tables.W, peak_bits=peak)


def direct_intersection_count(A, B) -> int:
    """Number of index pairs (k, h) with A[k] == B[h]."""
    counts = Counter(B)
    return sum(counts[v] for v in A)


def certify(inp: CertificateInput, limit=None, backend=None) -> CertificateReport:
    """chi, omega and the direct count together; any disagreement raises."""
    c = chi(inp, limit)
    o = omega(inp, limit, backend)
    direct = direct_intersection_count(inp.A, inp.B)
    if c.chi != direct:
        raise InternalInconsistency(f"chi = {c.chi} but the direct pair count is {direct}")
    if (o.omega > 0) != (c.chi > 0) or o.omega < 0:
        raise InternalInconsistency(f"sign mismatch: chi = {c.chi}, omega = {o.omega}")
    return CertificateReport(
        chi=c.chi,
        omega=o.omega,
        nonempty=direct > 0,
        per_term_chi=c.per_term_chi,
        per_term_omega=o.per_term_omega,
        direct_count=direct,
        width=c.width,
        peak_bits=max(c.peak_bits, o.peak_bits),
    )
