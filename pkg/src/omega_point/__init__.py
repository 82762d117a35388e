"""Exact certificates for integer and rational points on y^2 = x^3 + a x + b.

Membership of a value in a finite integer set is tested with Lagrange
indicators expressed through elementary symmetric functions, which turns
"does this search window contain a solution" into the sign of one big integer.
"""
from .certificate import CertificateInput, CertificateReport, certify, chi, direct_intersection_count, omega
from .cubic import Region, classify, monotone_branches, root_floors
from .diophantine import build_branch, theorem2_evaluate, window_scan_oracle
from .errors import (
    BranchNotAdmissible,
    InternalInconsistency,
    InvalidBounds,
    MalformedInput,
    OmegaPointError,
    ResourceLimit,
)
from .search import RationalPoint, SearchLimits, brute_force_height_search, search, verify_point
from .symmetric import elementary_symmetric, power_sums, power_sums_via_newton

__version__ = "0.1.0"
