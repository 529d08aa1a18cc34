"""Radical-support verdicts for multigraded ideals, with machine-checked
certificates: Groebner-verified non-radical witnesses on one side,
Cartwright-Sturmfels K-polynomial certificates on the other."""

from .fields import GF2, GF32003, PrimeField, QQ, RationalField, field_from_tag
from .support import (
    LabeledCycle,
    LabeledMultigraph,
    Support,
    SupportVerdict,
    build_graph,
    enumerate_cycles,
    is_radical_support,
    min_ring_dims,
    parse_support,
    parse_support_json,
    parse_support_text,
    reduce_to_distinct_labels,
)
from .polyring import (
    CoordinateChange,
    GroebnerBasis,
    Polynomial,
    RingSpec,
    TermOrder,
    VarIndex,
    apply_coordinate_change,
    basis_of_component,
    buchberger,
    degrevlex_order,
    identity_change,
    initial_ideal,
    lex_order,
    multidegree_of,
    normal_form,
    parse_polynomial,
    probabilistic_radical_initial,
    random_coordinate_change,
    random_form,
    squarefree_initial_certificate,
)
from .monomial import (
    IntPoly,
    MonomialIdeal,
    alexander_dual,
    dualize,
    fine_ring,
    hilbert_count_oracle,
    is_borel_radical,
    kpoly_ideal,
    kpoly_quotient,
    kpoly_taylor,
    linear_ideal,
    minimalize,
    polarize,
    polarized_dual,
    product,
)
from .certify import (
    CSCertificate,
    NonRadicalWitness,
    RegularSequenceCert,
    cs_certificate,
    cycle_witness_ideal,
    dual_k_poly_of_support,
    k_poly_of_support,
    padded_witness,
    random_support_trial,
    regular_sequence,
    regularization_gadget,
    support_product_ideal,
)

__version__ = "0.1.0"
