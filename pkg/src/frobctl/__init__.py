"""Frobenius contraction of characters for simply connected simple groups."""

from .charring import (
    Character,
    char_dual,
    char_tensor,
    decompose_into_hat_nabla,
    decompose_into_weyl,
    euler_character,
    frobenius_contract,
    frobenius_twist,
    hat_nabla_character,
    steinberg_character,
    weyl_character,
)
from .errors import ConfigurationError, DomainError, FrobctlError, PreconditionError, ResourceError
from .filtration import (
    MultiplicityTable,
    adjunction_dimension_check,
    contraction_multiplicities,
    g2_maximal_contracted_weight_check,
    hat_nabla_contraction_check,
    semisimplicity_bound_report,
    signed_sum_multiplicity,
    steinberg_tensor_multiplicity,
)
from .kernels import BACKEND
from .lspaths import (
    LSPath,
    count_dominant_paths,
    generate_path_model,
    root_operator_e,
    root_operator_f,
    straight_path,
)
from .rootdata import RootDatum, build_root_datum, dominant_dot_normalize, pairing, weyl_elements

__version__ = "0.1.0"
__all__ = [n for n in dir() if not n.startswith("_")]
