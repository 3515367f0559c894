"""Timing comparison of the compiled and pure-Python kernels.

Run from the repository root after an editable install:

    python benchmarks/bench_kernels.py

Each workload runs cold (caches cleared) several times per backend and the
best time is reported; the sanity column must match across backends.
"""

import time
from fractions import Fraction

from quasisym import _core_py

try:
    from quasisym import _core_cy
except ImportError:
    _core_cy = None

from quasisym.composition import compositions_of, enumerate_compositions

REPEATS = 5


def bench_quasi_shuffle(kernel):
    comps = [tuple(c) for c in enumerate_compositions(7)]
    total = 0
    for a in comps:
        for b in comps:
            total += len(kernel.quasi_shuffle(a, b))
    return total


def bench_chain_monomials(kernel):
    total = 0
    for c in compositions_of(7):
        gaps = max(len(c) - 1, 0)
        for pattern in range(1 << gaps):
            strict = tuple(bool(pattern >> i & 1) for i in range(gaps))
            total += len(kernel.chain_monomials(tuple(c), strict, 11))
    return total


def bench_h6_square(kernel):
    import quasisym.products as products

    original = products.quasi_shuffle
    products.quasi_shuffle = kernel.quasi_shuffle
    try:
        from quasisym.elements import QSymElem

        h6 = QSymElem("M", {c: Fraction(1) for c in compositions_of(6)})
        out = products.mul(h6, h6)
    finally:
        products.quasi_shuffle = original
    return len(out.terms)


BENCHES = [
    ("quasi_shuffle, all pairs weight<=7", bench_quasi_shuffle),
    ("chain_monomials, weight-7 chains, N=11", bench_chain_monomials),
    ("end-to-end h_6 * h_6", bench_h6_square),
]


def measure(kernel, bench):
    best = None
    check = None
    for _ in range(REPEATS):
        kernel.clear_caches()
        t0 = time.perf_counter()
        check = bench(kernel)
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, check


def main():
    if _core_cy is None:
        print("compiled kernels are not built; run `pip install -e .` first")
    backends = [("python", _core_py)] + ([("cython", _core_cy)] if _core_cy else [])
    width = max(len(name) for name, _ in BENCHES)
    for name, bench in BENCHES:
        times = {}
        checks = set()
        for bname, kernel in backends:
            elapsed, check = measure(kernel, bench)
            times[bname] = elapsed
            checks.add(check)
        assert len(checks) == 1, f"backends disagree on {name}"
        line = f"{name:<{width}}"
        for bname, elapsed in times.items():
            line += f"  {bname}: {elapsed * 1000:8.1f} ms"
        if len(times) == 2:
            line += f"  speedup: {times['python'] / times['cython']:.1f}x"
        print(line)


if __name__ == "__main__":
    main()
