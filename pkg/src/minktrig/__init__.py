"""Trigonometry of smooth Minkowski planes.

Norm models, Birkhoff orthogonality and the b-map, the generalized cosine cm
(three equivalent definitions) and signed sine sn, the norm generating
semi-inner product, the outer distortion functional, angular bisectors, and
the arc-length/area calculus of the unit circle, all validated by brute-force
oracles.
"""

__version__ = "0.1.0"

from .birkhoff import ConjugatePair, birkhoff_b, conjugate_pair, is_birkhoff, is_radon
from .calculus import (OdeKind, area_param_check, b_image_coverage,
                       d_ds_identities, ode_initial_conditions, ode_profile,
                       ode_residual, param_coincidence, param_point, rho)
from .context import (ArcParam, CirclePoint, ParamKind, PlaneContext,
                      RadonFlag, build_context)
from .distortion import (TangentPair, busemann_ray, gamma_from_point,
                         gamma_limit_probe, gamma_pair, glogovskii_defect,
                         parallel_chords_check, radon_gamma_formula,
                         tangent_points)
from .errors import (ConfigError, DomainError, MinktrigError, NumericalError,
                     OutputError, UnsupportedOperationError)
from .norms import NormKind, NormSpec, parse_norm_arg, spec_from_json, spec_to_json
from .oracles import (equilateral_triangle, finite_diff, minimize_line,
                      sup_circle)
from .report import VerifyReport
from .suites import run_suite
from .trig import (ca, cm, cm_external_form, cm_inf_form, cn, gateaux,
                   norm_gradient_direction, semi_inner, sn)

__all__ = [
    "ArcParam", "CirclePoint", "ConjugatePair", "ConfigError", "DomainError",
    "MinktrigError", "NormKind", "NormSpec", "NumericalError", "OdeKind",
    "OutputError", "ParamKind", "PlaneContext", "RadonFlag", "TangentPair",
    "UnsupportedOperationError", "VerifyReport", "area_param_check",
    "b_image_coverage", "birkhoff_b", "build_context", "busemann_ray", "ca",
    "cm", "cm_external_form", "cm_inf_form", "cn", "conjugate_pair",
    "d_ds_identities", "equilateral_triangle", "finite_diff", "gamma_from_point",
    "gamma_limit_probe", "gamma_pair", "gateaux", "glogovskii_defect",
    "is_birkhoff", "is_radon", "minimize_line", "norm_gradient_direction",
    "ode_initial_conditions", "ode_profile", "ode_residual",
    "parallel_chords_check", "param_coincidence", "param_point",
    "parse_norm_arg", "radon_gamma_formula", "rho", "run_suite", "semi_inner",
    "sn", "spec_from_json", "spec_to_json", "sup_circle", "tangent_points",
]
