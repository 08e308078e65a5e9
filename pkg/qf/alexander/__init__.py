from qf.alexander.conway import ConwayData, conway_coefficients, conway_min_degree
from qf.alexander.inoue import inoue_count, invariant_factors, module_size, presentation_matrix, to_gf_poly
from qf.alexander.matrix import (
    AlexanderMatrix,
    alexander_matrix,
    deleted_minor,
    kernel_colorings,
    matrix_contribution,
    section_vector,
    z_vector,
)
