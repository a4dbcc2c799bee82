"""rmtlab — a random-matrix laboratory.

Samplers for the classical ensembles (Wigner, Wishart, Ginibre,
elliptical, Haar unitary/orthogonal, prescribed singular values),
spectral decompositions and empirical spectral measures, reference
limiting laws (semicircle, Marčenko–Pastur, quarter-circle, circular and
elliptical, Tracy–Widom F₂ via Painlevé II, Gumbel spectral-radius
fluctuations, single-ring support radii), distance metrics (Kolmogorov–
Smirnov, Wasserstein-1 on the line and the circle, moment comparison),
and a config-driven Monte Carlo verification harness with CSV/JSON/SVG
reporting and the ``rmt`` command-line tool.

Set the environment variable ``RMTLAB_NO_NUMBA=1`` before import to run
the hot kernels (Airy evaluation, circular Wasserstein search, Chebyshev
evaluation) on their pure-numpy fallbacks instead of numba.
"""
from __future__ import annotations

from ._kernels import NUMBA_ENABLED
from .entries import EntryDistribution
from .matrixio import DenseMatrix, read_matrix, write_matrix
from .rng import RngStream
from .ensembles import (
    SingularProfile,
    bai_yin_normalize,
    sample_elliptical,
    sample_ginibre,
    sample_goe,
    sample_gue,
    sample_haar_orthogonal,
    sample_haar_unitary,
    sample_iid,
    sample_prescribed_singular,
    sample_wigner,
    sample_wishart,
    weyl_horn_check,
)
from .spectra import (
    EmpiricalMeasure,
    Region,
    Spectrum,
    counting,
    eigvals_general,
    eigvals_hermitian,
    eigvec_delocalization,
    empirical_measure,
    singular_values,
    spectral_moment,
    stieltjes,
    stieltjes_invert,
)
from .laws import (
    Law1D,
    Law2D,
    RingRadii,
    airy,
    ellipse_axes,
    gumbel_cdf,
    gumbel_law,
    marchenko_pastur,
    painleve_hm,
    quarter_circle,
    rider_correction,
    rider_gamma,
    rider_Y,
    semicircle,
    single_ring_radii,
    tracy_widom_f2,
    tracy_widom_law,
    uniform_disc,
    uniform_ellipse,
)
from .metrics import (
    DistanceReport,
    ks_distance,
    moment_compare,
    w1_empirical,
    wasserstein1_circle,
    wasserstein1_line,
)
from .harness import (
    DEFAULT_MASTER_SEED,
    ExperimentConfig,
    ExperimentReport,
    ResourceLimitError,
    TrialRecord,
    counting_local,
    run_experiment,
    seed_sweep,
    verify_circular,
    verify_elliptical,
    verify_gumbel,
    verify_hard_edge,
    verify_mp,
    verify_quarter_circle,
    verify_rigidity,
    verify_semicircle,
    verify_single_ring,
    verify_tw,
)
from .emit import LawTable, emit_csv, emit_json, emit_svg_histogram, emit_svg_scatter

__version__ = "0.1.0"

__all__ = [
    "NUMBA_ENABLED",
    "EntryDistribution",
    "DenseMatrix",
    "read_matrix",
    "write_matrix",
    "RngStream",
    "SingularProfile",
    "bai_yin_normalize",
    "sample_elliptical",
    "sample_ginibre",
    "sample_goe",
    "sample_gue",
    "sample_haar_orthogonal",
    "sample_haar_unitary",
    "sample_iid",
    "sample_prescribed_singular",
    "sample_wigner",
    "sample_wishart",
    "weyl_horn_check",
    "EmpiricalMeasure",
    "Region",
    "Spectrum",
    "counting",
    "eigvals_general",
    "eigvals_hermitian",
    "eigvec_delocalization",
    "empirical_measure",
    "singular_values",
    "spectral_moment",
    "stieltjes",
    "stieltjes_invert",
    "Law1D",
    "Law2D",
    "RingRadii",
    "airy",
    "ellipse_axes",
    "gumbel_cdf",
    "gumbel_law",
    "marchenko_pastur",
    "painleve_hm",
    "quarter_circle",
    "rider_correction",
    "rider_gamma",
    "rider_Y",
    "semicircle",
    "single_ring_radii",
    "tracy_widom_f2",
    "tracy_widom_law",
    "uniform_disc",
    "uniform_ellipse",
    "DistanceReport",
    "ks_distance",
    "moment_compare",
    "w1_empirical",
    "wasserstein1_circle",
    "wasserstein1_line",
    "DEFAULT_MASTER_SEED",
    "ExperimentConfig",
    "ExperimentReport",
    "ResourceLimitError",
    "TrialRecord",
    "counting_local",
    "run_experiment",
    "seed_sweep",
    "verify_circular",
    "verify_elliptical",
    "verify_gumbel",
    "verify_hard_edge",
    "verify_mp",
    "verify_quarter_circle",
    "verify_rigidity",
    "verify_semicircle",
    "verify_single_ring",
    "verify_tw",
    "LawTable",
    "emit_csv",
    "emit_json",
    "emit_svg_histogram",
    "emit_svg_scatter",
]
