"""descentkit: exact computations in descent algebras of symmetric groups
over Q and F_p — structure constants, the surjection onto class functions,
radicals, primitive orthogonal idempotents, Cartan matrices, Ext quivers,
representation type, and the degree-lowering surjections.
"""

from .algebra import (
    ClassFunction,
    DescentAlgebra,
    DescentElement,
    descent_algebra,
    group_algebra_oracle,
    nilpotency_index,
    oracle_product,
    radical_basis,
    radical_power_dims,
    regular_representation,
    theta,
    w_element,
    young_character,
)
from .cartan import CartanData, cartan_matrix, decomposition_matrix, verify_apw
from .combinat import (
    CHAR_ZERO,
    compositions,
    lambda_of,
    p_equivalent,
    p_regular_partitions,
    p_regularize,
    partitions,
)
from .fields import QQ, FieldSpec, GF
from .idempotents import (
    IdempotentSet,
    corner_algebra,
    lift_idempotent,
    orthogonal_idempotent_set,
    semisimple_preimage,
)
from .morphisms import (
    delta_s,
    delta_idempotent_check,
    pullback_simple_check,
    subquiver_embedding_check,
    verify_bgr_homomorphism,
)
from .quiver import (
    MultiGraph,
    Quiver,
    conjecture_scan,
    dynkin_classify,
    ext_dim,
    ext_quiver,
    rep_type,
    rep_type_two_nilpotent,
    separated_quiver,
)

__version__ = "0.1.0"
