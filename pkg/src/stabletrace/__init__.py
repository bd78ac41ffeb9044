"""Heat kernels, killed semigroups, and trace asymptotics of symmetric stable processes.

Exact kernels of the free process, domains with closed-form geometry,
splittable random streams, first-exit Monte Carlo, the universal boundary
constant of the two-term small-time trace expansion, a restricted fractional
Laplacian eigensolver, and the experiment pipeline tying them together.
"""

from .errors import ConvergenceError, SamplingError, UnboundedDomainError
from .streams import RngStream
from .kernels import (
    StableParams,
    TransitionDensity,
    ball_harmonic_measure_density,
    cauchy_density,
    fit_kernel_bound_constant,
    gaussian_density,
    leading_constant,
    levy_density,
    levy_intensity_constant,
    transition_density,
    unit_sphere_area,
)
from .geometry import (
    Annulus,
    Ball,
    Box,
    HalfSpace,
    Interval,
    ParallelSetReport,
    WholeSpace,
    distance_to_boundary,
    inradius,
    measures,
    parallel_set,
)
from .sampling import (
    IncrementSample,
    sample_ball_exit_position,
    sample_ball_exit_positions,
    sample_stable_increment,
    sample_subordinator_increment,
)
from .exits import (
    ExitEnsemble,
    ExitRecord,
    MCEstimate,
    estimate_mean_exit_time,
    estimate_remainder,
    estimate_remainder_nested,
    estimate_trace,
    simulate_exit_ensemble,
    simulate_first_exit,
    validate_ikeda_watanabe,
)
from .halfspace import (
    BoundaryConstantResult,
    boundary_constant,
    c2_subordination_value,
    halfspace_remainder,
)
from .spectral import (
    Spectrum,
    assemble_generator,
    counting_function,
    eigen_spectrum,
    karamata_ratio,
    trace_from_spectrum,
    trace_truncation_bound,
)
from .experiments import (
    ExperimentConfig,
    TraceCurve,
    emit_report,
    fit_second_term,
    run_trace_experiment,
)

__version__ = "0.1.0"
