from .grid import Grid2D, GridError, GridFunction2D, OperatorKernel, WaveFunction1D
from .weyl import (
    Residual,
    apply_projective_rep,
    operator_trace,
    plancherel_residual,
    trace_calibration,
    translation_kernel,
    twisted_convolution,
    weyl_quantize,
    weyl_selfadjoint_decompose,
    wigner_recover,
)
from .fourier import fourier2d
from .moyal import classical_limit_residual, moyal_star, moyal_unit, poisson_bracket
from .wigner import cross_ambiguity, wigner_distribution
from .fixtures import first_excited, gaussian, ground_state, random_band_limited
from .lattice import haar_axiom_residuals, yang_baxter_residual
