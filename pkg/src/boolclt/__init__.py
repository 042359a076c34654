"""Exact Boolean convolution of atomic measures, finite-y Stieltjes-Perron
brackets, and the Berry-Esseen rate of the Boolean central limit theorem."""

from .boolean import W_n, boolean_convolve, boolean_power, clt_normalize, eval_F_mu_n
from .errors import (
    BoolCLTError,
    DegeneracyError,
    DegenerateFitError,
    HypothesisError,
    InvalidMeasureError,
    InvalidPointError,
    InvalidTransformError,
    PreconditionError,
    QuadratureBudgetError,
    RepresentationError,
    UnsupportedError,
)
from .experiments import (
    ConstantLedger,
    CltReport,
    assembly_check,
    lemma_integral_checks,
    paper_constants,
    powers_of_two,
    rate_fit,
    theorem1_experiment,
)
from .inversion import (
    MassBracket,
    TransformEvaluator,
    levy_cauchy_bound,
    levy_smoothing_bound,
    poisson_smoothed_mass,
    smoothed_mass_quadrature,
    smoothed_measure,
    theorem2_bracket,
)
from .measure import (
    AtomicMeasure,
    abs_moment,
    bernoulli_concentration,
    dilate,
    levy_distance,
    moment,
)
from .polynomial import Polynomial, RationalFn
from .transform import (
    ReprData,
    bound_prop2,
    bound_trivial,
    eval_F,
    eval_G,
    extract_representation,
    measure_from_G,
    rational_F,
    rational_G,
    recover_measure,
    two_atom,
)

__version__ = "0.1.0"
