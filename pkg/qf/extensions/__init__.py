from qf.extensions.abelian import (
    AbelianExtension,
    AlexanderExtensionSearch,
    abelian_extension,
    alexander_extension,
    cocycle_from_section,
    ring_of,
    search_alexander_extension,
)
from qf.extensions.dynamical import (
    DynamicalCocycle,
    cocycle_from_fibration,
    dynamical_cocycle,
    dynamical_extension,
    trivial_dynamical_cocycle,
    validate_dynamical_cocycle,
)
from qf.extensions.wreath import MonomialMatrix, WreathQuandle, reflection, wreath_quandle
