"""Hecke algebra of W(B_d) with a weight function: KL basis, structure constants, cells."""

from cellkit.hecke.algebra import HeckeAlgebra, OracleConfig, WeightFunction
from cellkit.hecke.cells import CellDecomposition, hecke_cells
from cellkit.hecke.laurent import LaurentPoly, format_laurent, parse_laurent
from cellkit.hecke.schur import (
    SchurOracle,
    double_coset_data,
    left_cell_count_via_R,
    pi_J,
    schur_cells,
    schur_structure_constant,
)

__all__ = [
    "CellDecomposition",
    "HeckeAlgebra",
    "LaurentPoly",
    "OracleConfig",
    "SchurOracle",
    "WeightFunction",
    "double_coset_data",
    "format_laurent",
    "hecke_cells",
    "left_cell_count_via_R",
    "parse_laurent",
    "pi_J",
    "schur_cells",
    "schur_structure_constant",
]
