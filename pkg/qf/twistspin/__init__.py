from qf.twistspin.twist import (
    TwistSpinProblem,
    TwistSpinResult,
    twist_action,
    twist_orbit_length,
    twist_spin_colorings,
)
