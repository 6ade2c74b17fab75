"""Exact root systems, nilpotent orbits and highest-weight certificates.

Weights are sequences of exact rationals in epsilon coordinates: ints,
strings like "7/6", or fractions.Fraction. Results come back as "p/q"
strings, matching the CLI's JSON.
"""

from ._core import (
    BoundExceeded,
    centralizer_oracle,
    certify,
    collapse,
    delta_prime,
    dim_z,
    duality_table,
    induce,
    info,
    integral,
    is_rigid,
    jordan_oracle,
    pairing,
    rho,
    rigid_table,
    run_cli,
    simple_roots,
)

__all__ = [
    "BoundExceeded",
    "centralizer_oracle",
    "certify",
    "collapse",
    "delta_prime",
    "dim_z",
    "duality_table",
    "induce",
    "info",
    "integral",
    "is_rigid",
    "jordan_oracle",
    "pairing",
    "rho",
    "rigid_table",
    "run_cli",
    "simple_roots",
]
