"""Exact Dedekind sums, cyclotomic norms and Lescop invariants for Seifert 2/q surgery."""

__version__ = "0.1.0"

from .cyclotomic import LaurentPolynomial, cyclotomic_poly, fig8_cover_norm, norm_d, norm_exceeds_4q2, resultant
from .dedekind import (
    bound_f2p,
    check_f2p_bound,
    check_p_over_24_bound,
    dedekind_fast,
    dedekind_naive,
    sawtooth,
)
from .lescop import (
    SeifertCandidate,
    SurgerySpec,
    doteq,
    euler_number,
    h1_order,
    lescop_seifert,
    lescop_surgery_2q,
)
from .verifier import (
    CandidateRecord,
    VerificationReport,
    check_candidate,
    check_q2_residue,
    enumerate_candidates,
    lambda_lower_bound_gap,
    sweep,
    verify_theorem,
)
