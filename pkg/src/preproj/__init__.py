"""Exact computations with deformed preprojective algebras of the infinite
affine quivers A_inf, A_plus_inf and D_inf, and their wreath-product
(higher-rank) analogues."""

from .classification import SimpleCertificate, enumerate_simples, exists_simple, interval_conditions, p_value
from .induction import InductionVerdict, check_extension_conditions, verify_relation_I_with_zero_arrows
from .khare import CasimirPolynomial, VrsModule, casimir_scalar, enumerate_Vrs, khare_lambda, morita_params
from .linalg import Mat
from .oracle import ChainSolution, oracle_exists_simple, solve_chain
from .quiver import (
    Arrow,
    DimVector,
    Quiver,
    build_quiver,
    cartan_apply,
    cartan_matrix,
    delta_prefix,
    ringel_form,
    symmetrized_form,
)
from .reflection import SinkContext, in_lambda_i, reflect, reflect_word
from .reps import (
    CheckReport,
    IsoResult,
    Rep,
    WreathRep,
    check_rank1,
    check_wreath,
    induce,
    intertwiner_space,
    is_isomorphic,
    outer_tensor_induce,
)
from .roots import (
    Weight,
    apply_word_to_dims,
    apply_word_to_weight,
    dominate,
    dual_reflection,
    enumerate_positive_roots,
    simple_reflection,
    weight_dot,
)
from .scalars import Gaussian, compare, gauss, parse_scalar, to_scalar
from .young import YoungDiagram, content_sum, is_rectangular, symmetric_group_irrep

__version__ = "0.1.0"
