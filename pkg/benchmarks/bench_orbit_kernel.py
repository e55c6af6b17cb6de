"""Benchmark: compiled vs pure-Python orbit-enumeration kernel.

Run with:  python3 benchmarks/bench_orbit_kernel.py
"""

import time

from powerstruct.kernels import available_backends

# (m_size, f_values, blocks) instances of growing size; blocks are
# (k_i, x_size, g_values, y_size) per charge, matching the kernel contract.
CASES = [
    (
        "m=6, profile {1:3}, |X_1|=4",
        (6, [x % 2 for x in range(6)], [(3, 4, [0, 1, 0, 1], 2)]),
    ),
    (
        "m=7, profile {1:4}, |X_1|=4",
        (7, [x % 3 for x in range(7)], [(4, 4, [0, 1, 2, 0], 3)]),
    ),
    (
        "m=8, profile {1:3, 2:2}, |X_1|=3, |X_2|=3",
        (8, [x % 2 for x in range(8)], [(3, 3, [0, 0, 1], 2), (2, 3, [1, 0, 1], 2)]),
    ),
]


def main():
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    for label, (m_size, f_values, blocks) in CASES:
        print(f"\n{label}")
        results = {}
        for name, kernel in backends.items():
            start = time.perf_counter()
            value = kernel(m_size, f_values, blocks)
            elapsed = time.perf_counter() - start
            results[name] = (value, elapsed)
            print(f"  {name:9s} {elapsed * 1000:9.1f} ms  orbits={value}")
        values = {v for v, _ in results.values()}
        assert len(values) == 1, f"backends disagree: {results}"
        if len(results) == 2:
            speedup = results["python"][1] / results["compiled"][1]
            print(f"  speedup   {speedup:9.1f}x")


if __name__ == "__main__":
    main()
