"""Integer invariants, cohomology and numerical curvature bounds for a family
of 13-dimensional biquotients of U(5) parameterized by five integers."""
from .biquotient import (
    CertifyConfig, CurvatureCertificate, FreeActionReport, HorizontalFrame, VerticalFrame,
    action_apply, certify_positivity, free_action_check, horizontal_frame, plane_lower_bound,
    vertical_frame,
)
from .cohomology import (
    AbelianGroupPresentation, CohomologySummary, RelationMatrix, cohomology_summary,
    det_exact, invariant_factors, relation_matrix, smith_normal_form,
)
from .errors import (
    BiquotientError, DegeneratePlaneError, NonFreeActionError, NotAdmissibleError,
    NotOrthonormalError, ParityError, RankDeficiencyError, ZeroSplitError,
)
from .liealg import (
    BlockSplit, block_split, bracket, haar_unitary, inner0, root_pattern, sp2_basis,
)
from .metric import (
    LiftedVector, biinvariant_curvature, curvature_lower_bound_G, is_flat_plane, lift,
    metric_inner,
)
from .oracles import (
    OrbitExtremumReport, classify_root_pattern, extremal_family_check, lemma8_complement,
    orbit_extrema,
)
from .tuples import (
    AdmissibilityReport, SymmetricInvariants, abresch_shift, check_admissibility,
    enumerate_admissible, extremal_values, fundamental_group_order, invariant_collisions,
    invariant_r, symmetric_invariants,
)

__version__ = "0.1.0"
