"""Permutation binomials over finite fields.

Field arithmetic with a deterministic construction, exhaustive and
criterion-based PB testing for X^n (X^{d(q-1)} + a), canonical forms under
equivalence, the curve N(G) attached to a candidate PB, and checks of known
results against brute force.
"""

from .binomial import (
    Binomial,
    PBFamilyParams,
    as_function_table,
    family,
    from_family,
    is_pb_mu_criterion,
    is_permutation,
    transform_alpha,
    transform_beta,
    transform_gamma,
)
from .canonical import (
    CanonicalTriple,
    EquivalenceWitness,
    canonical_form,
    classify,
    compute_Adn,
    compute_Gdn,
    compute_Nd,
    equivalent,
    equivalent_bruteforce,
)
from .curves import (
    BivariatePoly,
    CurveDiagnostics,
    RationalMap,
    build_G,
    count_offdiagonal_points,
    hasse_weil_lower,
    numerator_NG,
    primitivity_check,
)
from .errors import CapacityError, DomainError
from .field import FieldCtx, FieldElement, field_of_order, make_field, mu_subgroup
from .kernels import BACKEND
from .residue import coprime_lift, g_orbits
from .results import ScanRecord, Verdict, scan_T19, scan_T110, verify_result

__all__ = [
    "BACKEND",
    "BivariatePoly",
    "Binomial",
    "CanonicalTriple",
    "CapacityError",
    "CurveDiagnostics",
    "DomainError",
    "EquivalenceWitness",
    "FieldCtx",
    "FieldElement",
    "PBFamilyParams",
    "RationalMap",
    "ScanRecord",
    "Verdict",
    "as_function_table",
    "build_G",
    "canonical_form",
    "classify",
    "compute_Adn",
    "compute_Gdn",
    "compute_Nd",
    "coprime_lift",
    "count_offdiagonal_points",
    "equivalent",
    "equivalent_bruteforce",
    "family",
    "field_of_order",
    "from_family",
    "g_orbits",
    "hasse_weil_lower",
    "is_pb_mu_criterion",
    "is_permutation",
    "make_field",
    "mu_subgroup",
    "numerator_NG",
    "primitivity_check",
    "scan_T19",
    "scan_T110",
    "transform_alpha",
    "transform_beta",
    "transform_gamma",
    "verify_result",
]
