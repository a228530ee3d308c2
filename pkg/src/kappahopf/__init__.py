"""kappahopf: exact symbolic engine for the kappa-deformed Poincare algebra,
its two cross-product phase spaces, and the deformed uncertainty relations."""

from .elements import Gen, Monomial, Element
from .errors import (
    IncompleteStateError,
    KappaHopfError,
    NonTerminationError,
    ParameterError,
    PairingError,
    ParseError,
    SectorError,
)
from .hopf import (
    TensorElement,
    antipode,
    casimir,
    check_antipode_axiom,
    check_centrality,
    check_coassociativity,
    check_coproduct_homomorphism,
    check_counit_axiom,
    check_jacobi,
    coproduct,
    counit,
    tensor_multiply,
    tensor_of,
)
from .crossproduct import (
    Convention,
    PairingContext,
    basis_map_check,
    canonical_limit_table,
    cross_commutator,
    cross_multiply,
    derive_phase_space_relations,
    derived_relation_elements,
    left_action,
    pair,
    select_convention,
)
from .grammar import EvalContext, eval_text, evaluate, parse
from .kinematics import (
    BoundSet,
    ExpectationAssignment,
    KinematicParams,
    bounds_bicross,
    bounds_standard,
    check_mass_shell,
    mass_shell_exp,
    modified_bound,
    nonrel_bound,
    nonrel_chain,
    robertson_bound,
    sqrt_bound_estimate,
)
from .presets import (
    AlgebraPreset,
    Basis,
    Sector,
    classical_limit,
    commutator,
    get_preset,
    multiply,
    normal_form,
)
from .scalars import GaussianRational, Scalar, scalar_add, scalar_mul, scalar_to_complex

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
