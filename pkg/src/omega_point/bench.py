"""Cost of the symmetric-function certificate as the window widens.

For each width w the window is [0, w] and the synthetic sets span it:
A = {0, w/4, w/2, 3w/4, w} and B = {0, w/3, 2w/3, w}.  Reported per width:
time for sigma_m(0, w), for chi, and for omega under both kernel backends,
plus the largest bit length of any intermediate integer.
"""
from __future__ import annotations

import time

from . import _kernels
from .certificate import CertificateInput, chi, omega_with_stats
from .limits import check_width
from .symmetric import elementary_symmetric_range


def widths(max_width: int, step: int = 8) -> list[int]:
    out = list(range(step, max_width + 1, step))
    if max_width >= 1 and (not out or out[-1] != max_width):
        out.append(max_width)
    return out


def synthetic_sets(w: int) -> CertificateInput:
    A = sorted({0, w // 4, w // 2, 3 * w // 4, w})
    B = sorted({0, w // 3, 2 * w // 3, w})
    return CertificateInput(tuple(A), tuple(B), 0, w)


def _timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, (time.perf_counter() - t0) * 1000.0


def bench_width(w: int, limit=None) -> dict:
    inp = synthetic_sets(w)
    sigma, esp_ms = _timed(elementary_symmetric_range, 0, w, limit)
    report, chi_ms = _timed(chi, inp, limit)
    row = {
        "width": w,
        "esp_ms": round(esp_ms, 3),
        "chi_ms": round(chi_ms, 3),
        "chi": report.chi,
    }
    peak = max(report.peak_bits, max(abs(s).bit_length() for s in sigma))
    for backend in _kernels.BACKENDS:
        (value, bits), ms = _timed(omega_with_stats, inp, limit, backend)
        row[f"omega_{backend}_ms"] = round(ms, 3)
        peak = max(peak, bits)
    row["peak_bits"] = peak
    return row


def run(max_width: int, limit=None) -> list[dict]:
    check_width(max_width, limit, what="benchmark width")
    return [bench_width(w, limit) for w in widths(max_width)]
