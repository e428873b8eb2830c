"""Tableau bases of the osp(1|2n) paraboson Fock spaces L_n(p).

Tableaux are lists of rows, e.g. [[1, 1, 2], [2]]. Coefficients are Python ints.
"""

import json

from ._ospbasis import (
    SCHEMA_VERSION,
    ConsistencyError,
    InvalidTableau,
    act,
    coeff,
    enumerate,
    kostka,
    n2_oracle,
    n2_tableau,
    orbit_stats,
    tableau_less,
    u_matrix,
    vector,
    verify_json,
)


def verify(suite="all", **options):
    """Run a property suite and return the parsed report."""
    return json.loads(verify_json(suite, **options))


__all__ = [
    "SCHEMA_VERSION",
    "ConsistencyError",
    "InvalidTableau",
    "act",
    "coeff",
    "enumerate",
    "kostka",
    "n2_oracle",
    "n2_tableau",
    "orbit_stats",
    "tableau_less",
    "u_matrix",
    "vector",
    "verify",
    "verify_json",
]
