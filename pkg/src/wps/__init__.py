"""Exact quasismoothness and GIT stability checks for hypersurfaces in
weighted projective spaces."""

from .aut import (
    AutReport,
    GradingOneParameter,
    LieElement,
    adapted_twist,
    aut_report,
    lambda_weight,
    lie_stabilizer,
    lie_stabilizer_dimension,
    omega_min,
)
from .core import (
    WeightedPolynomial,
    WeightedSpace,
    apply_substitution,
    enumerate_monomials,
    graded_dimension,
    is_cartier_degree,
    make_space,
    parse_polynomial,
    partial_derivative,
    random_polynomial,
)
from .cstar import ZminDescription, cstar_holds, cstar_oracle, in_U_orbit_of_zmin, in_Ymin0, uhat_stable, zmin
from .groebner import GroebnerBasis, MonomialOrder, PolyIdeal, buchberger, cone_is_origin_only, groebner, has_torus_zero
from .polytope import (
    HPointSet,
    MembershipStatus,
    emit_svg2d,
    newton_points,
    origin_certificate,
    origin_membership,
    project_exponent,
    section_polytope,
)
from .quasismooth import FletcherVerdict, finite_field_zero_search, fletcher_general, is_quasismooth
from .stability import AMatrix, StabilityReport, TorusStatus, a_matrix, g_stability_certificate, in_nabla_open, torus_status

__version__ = "0.1.0"
