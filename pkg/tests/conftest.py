from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from cellkit.hecke.algebra import HeckeAlgebra
from cellkit.hecke.cells import hecke_cells

settings.register_profile(
    "cellkit", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("cellkit")


@lru_cache(maxsize=None)
def algebra(d: int, weight: str = "equal") -> HeckeAlgebra:
    return HeckeAlgebra(d, weight)


@lru_cache(maxsize=None)
def cells(d: int, weight: str = "equal", subgroup: str = "B"):
    return hecke_cells(d, weight, subgroup, algebra=algebra(d, weight))


@pytest.fixture
def hecke():
    return algebra


@pytest.fixture
def hecke_cell_data():
    return cells
