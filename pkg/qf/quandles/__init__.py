from qf.quandles.families import alexander_quandle, conjugation_quandle, dihedral, qs4, transpositions, trivial_quandle
from qf.quandles.isomorphism import are_isomorphic, find_homomorphisms, find_isomorphism
from qf.quandles.quandle import FiniteQuandle, QuandleHom, check_axioms, from_operation, validate_quandle
