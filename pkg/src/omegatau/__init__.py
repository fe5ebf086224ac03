"""Link-homotopy invariants omega_+ and tau of link maps S^2 u S^2 -> S^4,
computed from Whitney-disk certificates, with exact group-ring arithmetic
and checkable normal-form certificates for the quotient Z/2<t : t^2 = 1>.
"""

from .algebra import (
    BiLaurent,
    ExponentOverflow,
    GroupElem,
    LaurentPoly,
    NotDivisible,
    ParseError,
    augment,
    divide_exact_one_minus_s,
    extract_q,
)
from .certify import RangeExceeded, certify_nf, verify_certificate
from .intersection import (
    IdentityMeridian,
    IntersectionRecord,
    SurgeryConfig,
    basis_sphere_lambda,
    lambda_sum,
    relative_elem,
    surgery_pushoff,
)
from .invariants import (
    InvalidCertificate,
    InvariantReport,
    LinkMapCertificate,
    Point,
    WhitneyDiskRecord,
    gen_random,
    load_link_map,
    omega_plus,
    parse_link_map,
    tau,
    tau_raw,
    theorem_check,
    validate,
)
from .quotient import (
    NFCertificate,
    PiElement,
    RelationInstance,
    expand_relation,
    nf,
    parse_nf_certificate,
    phi,
)
from .window import WindowDiagnostics, WindowTooLarge, window_report

__version__ = "0.1.0"
