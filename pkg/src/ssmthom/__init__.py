"""Exact SSM-Thom polynomials of A_0, A_0^2, A_1 and their applications to maps of projective spaces."""

__version__ = "0.1.0"

from .polyring import Poly, Ring, Variable, series_quotient
from .thomclasses import (
    ClassPoly,
    SingularityId,
    ssm_a0_component,
    ssm_a02_component,
    ssm_a1_component,
    ssm_truncated,
    thom_evaluate,
)
from .prototypes import PrototypeId, prototype, verify, verify_all
from .projective import ProjectiveSetup, ci_feasible, report

__all__ = [
    "ClassPoly", "Poly", "ProjectiveSetup", "PrototypeId", "Ring", "SingularityId", "Variable",
    "ci_feasible", "prototype", "report", "series_quotient", "ssm_a0_component",
    "ssm_a02_component", "ssm_a1_component", "ssm_truncated", "thom_evaluate", "verify",
    "verify_all",
]
