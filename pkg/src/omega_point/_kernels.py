"""Exact big-integer convolution kernels.

Two interchangeable backends, selected per call by the ``OMEGA_POINT_KERNEL``
environment variable (``packed`` by default):

``packed``
    Kronecker substitution.  Each signed sequence is shifted by a power-of-two
    bias so every entry is nonnegative, laid out at a fixed bit stride inside a
    single integer, and the two integers are multiplied once.  With gmpy2
    available the product runs on GMP's FFT multiply; otherwise on CPython's
    Karatsuba, which is still correct but much slower at large widths.
``schoolbook``
    The plain O(n*m) double loop in pure Python.  Kept as the fallback and as
    the reference the packed path is tested against.

Both return identical lists of Python ints.
"""
import os
from itertools import accumulate

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpz = None

ENV_KERNEL = "OMEGA_POINT_KERNEL"
BACKENDS = ("packed", "schoolbook")

# below this many entries on the shorter side, packing costs more than it saves
PACKED_MIN_LEN = 24


def active_backend(override=None):
    name = override or os.environ.get(ENV_KERNEL, "").strip().lower() or "packed"
    if name not in BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; expected one of {BACKENDS}")
    return name


def convolve_schoolbook(x, y, length):
    out = [0] * length
    ny = len(y)
    for i, xi in enumerate(x[:length]):
        if not xi:
            continue
        for j in range(min(ny, length - i)):
            out[i + j] += xi * y[j]
    return out


def _pack(seq, bias, nbytes):
    raw = b"".join(int(v + bias).to_bytes(nbytes, "little") for v in seq)
    if _mpz is not None:
        return _mpz.from_bytes(raw, "little")
    return int.from_bytes(raw, "little")


def _to_bytes(value, size):
    return value.to_bytes(size, "little")


def convolve_packed(x, y, length):
    xs, ys = list(x[:length]), list(y[:length])
    if not xs or not ys:
        return [0] * length
    bx = 1 << max(abs(v) for v in xs).bit_length()
    by = 1 << max(abs(v) for v in ys).bit_length()
    # every biased product coefficient is < min(len) * 2bx * 2by
    stride = (2 * bx).bit_length() + (2 * by).bit_length() + min(len(xs), len(ys)).bit_length()
    nbytes = (stride + 8) // 8
    product = _pack(xs, bx, nbytes) * _pack(ys, by, nbytes)
    raw = _to_bytes(product, nbytes * (len(xs) + len(ys)))

    px = [0, *accumulate(xs)]
    py = [0, *accumulate(ys)]
    nx, ny = len(xs), len(ys)
    from_bytes = int.from_bytes
    out = []
    for l in range(length):
        lo = max(0, l - ny + 1)
        hi = min(l, nx - 1)
        if hi < lo:
            out.append(0)
            continue
        c = from_bytes(raw[l * nbytes:(l + 1) * nbytes], "little")
        # strip the bias: (x+bx)*(y+by) = xy + bx*y + by*x + bx*by
        c -= bx * (py[l - lo + 1] - py[l - hi]) + by * (px[hi + 1] - px[lo]) + bx * by * (hi - lo + 1)
        out.append(c)
    return out


def convolve(x, y, length=None, backend=None):
    """Return ``[sum_m x[m] * y[l-m] for l in range(length)]``.

    ``length`` defaults to the full product length ``len(x) + len(y) - 1``.
    """
    if length is None:
        length = max(len(x) + len(y) - 1, 0)
    if length <= 0:
        return []
    name = active_backend(backend)
    if name == "packed" and min(len(x), len(y), length) >= PACKED_MIN_LEN:
        return convolve_packed(x, y, length)
    return convolve_schoolbook(x, y, length)
