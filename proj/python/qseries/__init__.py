"""q-series engine and congruence verification harness."""

from ._qseries import (
    EtaParseError,
    UnknownClaim,
    UnknownIdentity,
    check_claim,
    check_family,
    claim_ids,
    enumerate_pjk,
    expand,
    identity_ids,
    legendre,
    pjk,
    statement,
    verify_identity,
)

__all__ = [
    "EtaParseError",
    "UnknownClaim",
    "UnknownIdentity",
    "check_claim",
    "check_family",
    "claim_ids",
    "enumerate_pjk",
    "expand",
    "identity_ids",
    "legendre",
    "pjk",
    "statement",
    "verify_identity",
]
