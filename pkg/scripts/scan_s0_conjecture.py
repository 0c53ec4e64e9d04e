"""Compare type-D symbol classes of w and s0*w over W(D_d)."""

import argparse
import time

from cellkit.signed_perm import format_word, reduced_word
from cellkit.symbols import scan_s0_invariance


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-d", type=int, default=5)
    parser.add_argument("--list", action="store_true", help="print every counterexample")
    args = parser.parse_args()
    print(f"{'d':>2} {'|W(D_d)|':>9} {'counterexamples':>16} {'exact mismatches':>17} {'seconds':>8}")
    for d in range(1, args.max_d + 1):
        start = time.perf_counter()
        result = scan_s0_invariance(d)
        elapsed = time.perf_counter() - start
        print(f"{d:>2} {result.checked:>9} {len(result.counterexamples):>16} "
              f"{result.exact_mismatches:>17} {elapsed:>8.2f}")
        if args.list:
            for w, a, b in result.counterexamples:
                print(f"    {format_word(reduced_word(w))}: {a} vs {b}")


if __name__ == "__main__":
    main()
