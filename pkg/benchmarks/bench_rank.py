"""Compare the compiled rank kernel with the numpy fallback.

    python3 benchmarks/bench_rank.py [--repeat 3]

Times a random dense rank computation and a real generic-forms slice
(the degree 2s+1 slice of four generic quadrics in four variables).
"""

import argparse
import time

import numpy as np

from hilbert_powers import linalg
from hilbert_powers.generic import GenericIdealSpec, power_slice_dim


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--rows", type=int, default=1300)
    ap.add_argument("--cols", type=int, default=455)
    args = ap.parse_args()

    backends = ["numpy"]
    if linalg._ext is not None:
        backends.insert(0, "compiled")
    else:
        print("compiled kernel not built; run `python3 setup.py build_ext --inplace`")

    p = linalg.DEFAULT_PRIME
    mat = np.random.default_rng(0).integers(0, p, size=(args.rows, args.cols))
    cases = [
        (f"random {args.rows}x{args.cols}",
         lambda b: linalg.matrix_rank(mat, p, backend=b)),
        ("slice n=4 r=4 s=3 d=7",
         lambda b: power_slice_dim(GenericIdealSpec(4, 4, p=p, seed=7), 3, 7, backend=b)),
        ("slice n=4 r=6 s=4 d=9",
         lambda b: power_slice_dim(GenericIdealSpec(4, 6, p=p, seed=7), 4, 9, backend=b)),
    ]
    print(f"{'case':28} " + " ".join(f"{b:>12}" for b in backends) + "   result")
    for name, fn in cases:
        cells, results = [], set()
        for b in backends:
            secs, res = best_of(args.repeat, lambda: fn(b))
            cells.append(f"{secs:11.3f}s")
            results.add(res)
        assert len(results) == 1, f"backends disagree on {name}: {results}"
        print(f"{name:28} " + " ".join(cells) + f"   {results.pop()}")


if __name__ == "__main__":
    main()
