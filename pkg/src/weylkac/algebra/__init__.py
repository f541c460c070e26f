from .phase import PhaseExponent, ThetaTerm, phase_shift, phase_star
from .elements import (
    AlgebraElement,
    coinvolution,
    commutator,
    coproduct,
    dagger,
    dual_function,
    dual_involution,
    dual_unit,
    generator,
    multiply,
    tensor,
)
from .heisenberg import H3Element, h3_coinvolution, h3_coproduct, h3_multiply, project
from .pointmap import PointMapWithPhase, compose, fundamental_map
from .catalog import verify_all, verify_identity
