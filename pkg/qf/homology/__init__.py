from qf.homology.chains import Chain, boundary, chain_basis, is_degenerate
from qf.homology.cocycles import Cochain, coboundary, cochain_from_json, is_2cocycle, is_3cocycle, random_cochain
from qf.homology.cohomology import (
    boundary_matrix,
    cocycle_basis,
    cohomology_dimension,
    cohomology_generators,
    homology_dimension,
    is_coboundary,
)
