"""Hecke cell counts for W(B_d) under both weight functions, plus the D subalgebra."""

import argparse
import time

from cellkit.hecke import HeckeAlgebra, OracleConfig, hecke_cells
from cellkit.hecke.schur import hecke_left_cells_per_special
from cellkit.tableaux import count_standard_domino


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-d", type=int, default=3, choices=(1, 2, 3, 4))
    args = parser.parse_args()
    config = OracleConfig(max_rank=args.max_d)
    for d in range(1, args.max_d + 1):
        for weight in ("equal", "ell_a"):
            start = time.perf_counter()
            H = HeckeAlgebra(d, weight, config)
            subgroups = ("B", "D") if weight == "ell_a" else ("B",)
            for sub in subgroups:
                cells = hecke_cells(d, weight, sub, algebra=H)
                print(f"d={d} weight={weight:5s} {sub}: {len(cells.two_sided):3d} two-sided, "
                      f"{len(cells.left):3d} left  ({time.perf_counter() - start:.2f}s)")
        per_special = hecke_left_cells_per_special(d, hecke_cells(d, "equal", config=config))
        for key, count in per_special.items():
            print(f"    {key}: {count} left cells, {count_standard_domino(key)} standard domino tableaux")


if __name__ == "__main__":
    main()
