"""Signature-code toolkit for the weighted binary adder channel.

Construction, verification, decoding, exhaustive search and size bounds
for binary signature codes and their relatives (sum-distinct codes,
frameproof and superimposed codes, union-free families), built on exact
rational polytope geometry.
"""

from .core import (
    BinaryCode,
    CoalitionCertificate,
    CodeError,
    GroupedCode,
    QaryCode,
    VerificationReport,
    parse_code,
    parse_rational,
    parse_rational_vector,
    puncture,
    support,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryCode",
    "CoalitionCertificate",
    "CodeError",
    "GroupedCode",
    "QaryCode",
    "VerificationReport",
    "parse_code",
    "parse_rational",
    "parse_rational_vector",
    "puncture",
    "support",
    "__version__",
]
