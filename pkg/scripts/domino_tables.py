"""Semistandard domino counts against Schur-algebra left-cell counts (report only)."""

import argparse

from cellkit.hecke.schur import domino_comparison


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cases", nargs="*", default=["3,1,j", "3,2,j", "3,3,j", "2,2,i", "2,3,i", "4,2,i"],
                        help="n,d,kind triples")
    args = parser.parse_args()
    for case in args.cases:
        n, d, kind = case.split(",")
        print(f"n={n} d={d} kind={kind}")
        for row in domino_comparison(int(n), int(d), kind):
            flag = "" if row["match"] else "  <- differs"
            print(f"    {str(tuple(row['partition'])):16s} domino={row['domino_count']:3d} "
                  f"left cells={row['left_cells']:3d}{flag}")


if __name__ == "__main__":
    main()
