"""Exact combinatorics of toric quotients of C^r and vortex moduli bookkeeping."""

__version__ = "0.1.0"

from .errors import (
    DegreeTooSmall,
    LimitExceeded,
    MalformedFan,
    ParseError,
    PreconditionFailed,
    RankDeficient,
    SingularCone,
    ToricError,
)
from .weights import WeightMatrix, as_lift
from .lattice import (
    FinAbelianGroup,
    SNFDecomposition,
    cokernel_group,
    component_group_order,
    is_primitive_column,
    smith_normal_form,
)
from .polyhedra import (
    cone_is_simplicial_pointed,
    cones_intersect_in_common_face,
    nonneg_solve,
    positive_span_is_full,
)
from .fans import Fan, NonGeneric, enumerate_complete_fans, fan_from_lift, fan_is_complete
from .chambers import (
    ChamberDescription,
    ChamberResult,
    chamber_membership,
    classify_parameter,
    gkz_chambers,
    support_functional,
)
from .stability import (
    SmoothnessReport,
    fan_smoothness,
    hm_destabilizer,
    required_support,
    stabilizer_group,
    support_in_U,
)
from .moment import NORM_CONVENTION, MomentVector, in_moment_image, moment_vector, properness_constant
from .moduli import (
    EmbeddingReport,
    ModuliProblem,
    base_dimension,
    embedding_report,
    expected_dimension,
    invariant_algebra_dimension,
    picard_fiber_components,
)
