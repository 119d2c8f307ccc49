"""Recompute the minimum-edge table for small orders.

For each order n this scans candidate hosts (biconnected, minimum degree 3)
by increasing edge count and reports the first count where some host forces
a monochromatic outcome: every red-matching coloring leaves a blue spanning
cycle.  Run with --through 10 for the orders that finish in seconds.
"""

import argparse
import time

from p3ramsey.search import compute_r_star, lower_bound, verify_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--through", type=int, default=9,
                    help="largest order to include (default 9; 10 adds "
                         "about ten seconds)")
    args = ap.parse_args()

    print(f"{'n':>3} {'lower':>6} {'minimum':>8} {'witnesses':>10} "
          f"{'seconds':>8}")
    for n in range(4, args.through + 1):
        t0 = time.perf_counter()
        report = compute_r_star(n)
        dt = time.perf_counter() - t0
        assert verify_report(report)
        print(f"{n:>3} {lower_bound(n):>6} {report.r_star:>8} "
              f"{report.witness_count:>10} {dt:>8.2f}")
        for w in report.witnesses:
            print(f"      witness {w}")


if __name__ == "__main__":
    main()
