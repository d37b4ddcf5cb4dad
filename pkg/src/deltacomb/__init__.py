"""Transmission through N equally spaced Dirac deltas via exact transfer-matrix polynomials."""
from .multinomial import (
    BivariatePolynomial,
    coeff,
    eval_polynomial,
    m11_polynomial,
    submultinomial,
    triangle_rows,
)
from .scatter import (
    DegenerateMatrixError,
    DomainError,
    PhysicalParams,
    TransferMatrix,
    alpha_beta,
    energy_param_c,
    matrix_power,
    phase_param_K,
    scattering_from_matrix,
    transfer_matrix,
)
from .transmission import (
    ResonanceRecord,
    SweepRecord,
    find_resonances,
    omega,
    omega4_re_im,
    sweep,
    transmission_closed,
    transmission_double,
    transmission_quad,
    transmission_single,
)

__version__ = "0.1.0"
