"""Time the polynomial kernels over a size sweep and fit a growth exponent.

The dedicated-selection path is cubic in the state count and the
condensation path is linear in pattern size, so the fitted log-log
slopes should sit near 3 and 1.  Example:

    python scripts/bench_scaling.py --sizes 100,200,400,800
"""

from __future__ import annotations

import argparse

from structctrl.bench import condense_times, dedicated_selection_times, loglog_slope


def sweep(label: str, samples: list[tuple[int, float]]) -> None:
    print(label)
    for n, seconds in samples:
        print(f"  n={n:<6d} {seconds * 1000.0:8.2f} ms")
    print(f"  log-log slope: {loglog_slope(samples):.2f}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="100,200,400")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(token) for token in args.sizes.split(",") if token.strip()]
    if len(sizes) < 2:
        parser.error("need at least two sizes")

    sweep("dedicated input selection", dedicated_selection_times(sizes, seed=args.seed))
    sweep("condensation", condense_times(sizes, seed=args.seed))


if __name__ == "__main__":
    main()
