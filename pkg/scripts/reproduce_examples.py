"""Recompute every stored worked example and print a per-example summary."""

import argparse
import json
import sys

from cellkit.verify import EXAMPLE_IDS, verify_example


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("ids", nargs="*", default=list(EXAMPLE_IDS))
    parser.add_argument("--show-failures", action="store_true")
    args = parser.parse_args()
    failed_total = 0
    for example_id in args.ids:
        verdicts = verify_example(example_id)
        failed = [v for v in verdicts if not v.passed]
        failed_total += len(failed)
        print(f"{example_id:8s} {len(verdicts):4d} checks  {len(failed)} failed")
        if args.show_failures:
            for v in failed:
                print("   ", json.dumps(v.to_json()))
    return 1 if failed_total else 0


if __name__ == "__main__":
    sys.exit(main())
