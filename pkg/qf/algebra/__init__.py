from qf.algebra.group_ring import GroupRingValue
from qf.algebra.laurent import LaurentPoly
from qf.algebra.matrix import RingMatrix, column_reduce, kernel, kernel_with_report, laurent_det
from qf.algebra.ring import (
    FiniteRing,
    RingElement,
    family_ring,
    invert_T,
    make_ring,
    project,
    section,
    strip_ideal_factor,
    u_ring,
    w_ring,
)
