"""Exhaustive coherence-law auditing for finite 2-groups, their
2-representations over exact scalars, and cocycle descent data.

The package validates finite groups, groupoids and crossed modules, builds
strict 2-groups and transports their structure across weak equivalences, runs
every stated coherence law as an exhaustive (or seeded-sample) audit, and
exposes the same machinery through a definition-file CLI.
"""

from .groups import (
    FiniteGroup,
    GroupHom,
    RightAction,
    cyclic_group,
    group_hom,
    group_validate,
    right_action_validate,
    symmetric_group,
    trivial_group,
)
from .groupoids import (
    FiniteGroupoid,
    GroupoidFunctor,
    NatTrans,
    SubgroupoidInclusion,
    action_groupoid,
    delooping,
    double_object,
    groupoid_validate,
    quasi_inverse,
    subgroupoid_inclusion,
)
from .twogroups import (
    CoherentTwoGroup,
    CrossedModule,
    StrictTwoGroup,
    coherence_audit,
    crossed_module_validate,
    inner_crossed_module,
    interchange_audit,
    strict_as_coherent,
    strict_two_group,
    transfer_structure,
)
from .reps import (
    GroupoidRep,
    RepMorphism,
    all_one_dim_reps,
    direct_sum,
    hom_space_basis,
    kernel_cokernel,
    regular_rep,
    rep_hom_validate,
    rep_validate,
    trivial_rep,
)
from .tworeps import (
    TwoRepMorphism,
    TwoRepresentation,
    adjoint_pullback,
    canonical_2rep,
    close_rep_list,
    crossed_2rep,
    embed_rep,
    embed_rep_morphism,
    eta_interchange_audit,
    fixed_point_morphism,
    inner_automorphism,
    transformation_audit,
    two_rep_audit,
)
from .descent import (
    DescentMorphism,
    DescentObject,
    PrincipalDescent,
    associated_bundle,
    cech_nerve,
    descent_2morphism_validate,
    descent_morphism_validate,
    descent_object_validate,
    finite_cover,
    hypercover_check,
    prestack_fully_faithful_audit,
    principal_descent_validate,
    refine,
)
from .actions import (
    GroupoidActionOnCategory,
    action_pullback_category,
    autoprop_tower_audit,
    equivariant_descent_audit,
    equivariant_functor_audit,
    groupoid_action_audit,
    vect_family_action,
)
from .report import AuditReport, failing_laws

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
