"""Coherence generating power of unital maps and the geometry of maximal abelian subalgebras."""
from .cgp import (
    CgpEstimate,
    cgp_from_distance,
    cgp_unital,
    cgp_unitary,
    estimate_cgp,
    fourier_unitary,
    haar_unitary,
    max_cgp,
    normalization,
    sample_incoherent_state,
    sample_simplex,
)
from .channel import (
    KrausChannel,
    Superoperator,
    apply_channel,
    dephase,
    dephasing_channel,
    is_incoherent,
    is_incoherent_weak,
    q_project,
    superop_matrix,
    unitary_channel,
)
from .coherence import coherence, coherence_commutator, coherence_raw
from .diffgeo import (
    HamiltonianPath,
    MetricSample,
    aligned_frames,
    metric_speed,
    susceptibilities,
    sweep,
)
from .errors import (
    CgplabError,
    DegeneracyError,
    DimensionError,
    InvalidStateError,
    NonUnitaryError,
    TrackingError,
    ValidationError,
)
from .grassmann import (
    abs_det_overlap,
    cgp_tilde,
    dfs_distance,
    masa_distance,
    masa_distance_commutator,
    masa_distance_superop,
    overlap_matrix,
    phi_measure,
    x_matrix,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    commutator,
    hs_inner,
    hs_norm,
    kron,
    singular_values,
    validate_density,
    validate_unitary,
)
from .mori import (
    Mori,
    canonical_form,
    computational_mori,
    equal_as_masa,
    mori_from_frame,
    mori_from_hermitian,
    product_mori,
    rotate_mori,
)

__version__ = "0.1.0"
