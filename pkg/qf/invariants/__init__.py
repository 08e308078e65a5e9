from qf.invariants.colorings import (
    Coloring,
    brute_force_colorings,
    coloring_from_labels,
    constant_coloring,
    enumerate_colorings,
    is_coloring,
)
from qf.invariants.lifting import LiftResult, extends_coloring, find_lifts
from qf.invariants.state_sum import InvariantModel, InvariantValue, contribution, psi, smallest_nontrivial_level, weight
