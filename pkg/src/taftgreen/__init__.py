"""Exact computations in the Green ring of the Taft algebra H_n(q)."""

from .cyclotomic import CycloNum, primitive_root, q_binomial, q_factorial, q_number
from .errors import (
    InvalidArgumentError,
    InvalidOrderError,
    InvalidRepresentationError,
    TaftError,
)
from .green import (
    GreenElement,
    basis_product,
    dimension_character,
    generator_a,
    generator_x,
    green_add,
    green_mul,
    u_sequence,
)
from .modules import (
    MatrixRep,
    ModuleLabel,
    build_rep,
    classify,
    enumerate_labels,
    loewy_length,
    regular_rep,
    socle_head,
)
from .oracle import ModuleMultiset, decompose, direct_sum, tensor_decompose, tensor_reps
from .presentation import (
    BivariatePoly,
    NormalForm,
    fib_poly,
    fib_poly_closed,
    normal_form,
    phi,
    presentation_relations,
    psi,
    standard_fib,
)
from .taft import (
    TaftElement,
    TaftTensorElement,
    antipode,
    coproduct,
    counit,
    idempotent,
    taft_multiply,
)

__version__ = "0.1.0"
