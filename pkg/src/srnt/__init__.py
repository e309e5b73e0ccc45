"""Parameter theory and exact verification for strongly regular graphs with no triangles."""

from .enumeration import DivisibilityConstants, enumerate_for_q, enumerate_up_to_n, n_bounds
from .graph import (
    Graph,
    SrntCertificate,
    SubconstituentDecomposition,
    Violation,
    block_identities_check,
    from_json,
    matrix_identity_check,
    moore_antipodal_check,
    subconstituent,
    to_json,
    verify_srnt,
    x2_annihilator_check,
    x2_diameter,
    x2_multiplicities,
)
from .linked import LinkedPairParams, linked_pair_family, solve_k_for_c, subconstituent_params
from .params import (
    KNOWN_SIX,
    FeasibilityReport,
    ParamSet,
    degree_bound_check,
    derive_from_kc,
    derive_from_qc,
    krein_params,
)

__version__ = "0.1.0"
