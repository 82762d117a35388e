"""Compare the two omega convolution backends as the window widens.

    python benchmarks/compare_kernels.py [max_width] [step]

"packed" multiplies Kronecker-packed integers through GMP, "schoolbook" is the
plain double loop.  Both return identical integers; only the time differs.
The default run also times a wide window above the usual guard.
"""
import sys
import time

from omega_point import _kernels
from omega_point.bench import synthetic_sets
from omega_point.certificate import omega_with_stats


def best_of(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best * 1000.0


def main(max_width=1024, step=128):
    print(f"{'width':>6} {'peak_bits':>10} " + " ".join(f"{b + '_ms':>14}" for b in _kernels.BACKENDS) + f" {'speedup':>8}")
    for w in range(step, max_width + 1, step):
        inp = synthetic_sets(w)
        times, values = {}, set()
        for backend in _kernels.BACKENDS:
            (value, bits), ms = best_of(lambda: omega_with_stats(inp, w, backend))
            times[backend] = ms
            values.add(value)
        assert len(values) == 1, "backends disagree"
        speedup = times["schoolbook"] / times["packed"]
        print(f"{w:>6} {bits:>10} " + " ".join(f"{times[b]:>14.2f}" for b in _kernels.BACKENDS) + f" {speedup:>8.1f}")


if __name__ == "__main__":
    main(*(int(v) for v in sys.argv[1:3]))
