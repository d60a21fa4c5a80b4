"""Strong homotopy of finite acyclic categories and unordered Delta-complexes.

Core objects are immutable: AcyclicCategory and DeltaComplex, built through
their validators.  On top sit beat/domination detection, greedy cores with
replayable collapse sequences, the classifying space B, the face poset chi,
barycentric subdivisions, simple-collapse expansion, and brute-force oracles
for all of it.
"""

from .categories import (
    AcyclicCategory,
    BeatWitness,
    CatCollapseSequence,
    CatCollapseStep,
    CatIsomorphism,
    FunctorData,
    Ident,
    NaturalTransformationData,
    are_isomorphic_cat,
    check_adjunction,
    check_beat_witness,
    check_cat_isomorphism,
    check_descending,
    check_functor,
    check_natural_transformation,
    compose_functors,
    core_category,
    find_beat,
    find_natural_transformation,
    identity_functor,
    is_minimal_cat,
    is_strongly_collapsible_cat,
    opposite_category,
    punctured_over_category,
    relabel_category,
    remove_object,
    replay_cat_collapse,
    retraction_functor,
    same_strong_equivalence_type,
    underlying_poset,
    validate_category,
)
from .complexes import (
    DeltaCollapseSequence,
    DeltaCollapseStep,
    DeltaComplex,
    DeltaIsomorphism,
    DeltaMap,
    DominationWitness,
    are_isomorphic_delta,
    check_delta_isomorphism,
    compose_delta_maps,
    core_delta,
    delta_map_violation,
    find_domination,
    from_simplicial_complex,
    identity_map,
    inclusion_map,
    is_contiguous,
    is_minimal_delta,
    is_strongly_collapsible_delta,
    relabel_complex,
    remove_vertex,
    replay_delta_collapse,
    retraction_map,
    same_strong_homotopy_type,
    unique_coface_extension,
    validate_complex,
    validate_delta_map,
)
from .errors import (
    BudgetExceeded,
    CollapsarError,
    CompositionNotClosed,
    Condition1Violation,
    Condition2Violation,
    DanglingEndpoint,
    DuplicateId,
    LoopDetected,
    MissingFace,
    NotAssociative,
    NotContiguous,
    NotEndofunctor,
    NotIsomorphism,
    OrderViolation,
    ParseError,
    SchemaVersionMismatch,
    StaleStep,
    UnknownTag,
    VertexSetSizeMismatch,
)
from .nerve import (
    BarycenterIndex,
    classifying_map,
    classifying_space,
    contiguity_join,
    face_poset_category,
    face_poset_map,
    sd_category,
    sd_delta,
)
from .oracles import (
    GeneratorParams,
    OracleBudget,
    THEOREM_TAGS,
    TheoremReport,
    all_orders_cores_cat,
    all_orders_cores_delta,
    check_theorem,
    cylinder_cat,
    cylinder_delta,
    enumerate_delta_maps,
    enumerate_functors,
    homotopic_functors_bounded,
    random_acyclic_category,
    random_delta_complex,
    verify_cylinder_ladder_cat,
    verify_cylinder_ladder_delta,
)
from .simple_collapse import (
    SimpleCollapseStep,
    elementary_simple_collapse,
    euler_characteristic,
    free_faces,
    strong_to_simple,
)

__version__ = "0.1.0"
