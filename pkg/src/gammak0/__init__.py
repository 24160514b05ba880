"""Exact computational engine for ordered modules over finite group rings.

Builds finite groups from tables, does arithmetic in their integral group
rings and coset modules, orders direct sums of coset modules by the
coordinatewise cone, and connects that order theory to symbolic graded
matricial rings: class groups, graded isomorphism, realization of groups and
of positive class maps by ring data, decomposition and unperforation
witnesses, kernel-controlled factorizations, sequential towers with
horizon-bounded colimit queries, and ordered extensions by a coset module.
"""

from .errors import (
    ClassMismatch,
    DeltaMismatch,
    DeltaNotNormal,
    EngineError,
    GroupMismatch,
    IndexOutOfRange,
    InternalVerificationFailed,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotEquivariant,
    NotInCone,
    NotOrderUnit,
    NotPositive,
    NotPositiveMap,
    NotRealizable,
    PreorderViolated,
    ProductNotInCone,
    RelationNotZero,
    SchemaError,
    ShapeMismatch,
    SumMismatch,
    TargetLacksSdp,
    UnitMismatch,
    UnitNotPreserved,
)
from .finite_group import (
    CosetSpace,
    FiniteGroup,
    Subgroup,
    coset_space,
    cyclic_group,
    dihedral_group,
    direct_product,
    full_subgroup,
    group_from_table,
    klein_four_group,
    normal_closure,
    subgroup_closure,
    subgroup_from_members,
    trivial_subgroup,
)
from .group_ring import (
    CosetVector,
    GroupRingElt,
    act,
    is_positive,
    lift_vector,
    project_pi,
    ring_add,
    ring_mul,
)
from .ordered_simplicial import (
    GammaVector,
    IdealSplit,
    SimplicialGroup,
    cone_contains,
    dominating_coefficient,
    enumerate_interval,
    group_stabilizer,
    ideal_from_subset,
    interpolate,
    is_gamma_ideal,
    is_order_unit,
    leq,
    riesz_refine,
    unflatten,
)
from .gamma_maps import (
    GammaLinearMap,
    identity_map,
    is_positive_map,
    kernel_lattice,
    kernels_equal,
    map_apply,
    map_compose,
    map_equal,
    map_kernel,
    map_matrix,
    map_new,
    zero_map,
)
from .sdp_engine import (
    SdpWitness,
    UnperfWitness,
    Verdict,
    sdp_witness,
    search_unperforation_witness_m1,
    unperforation_witness,
    verify_sdp_witness,
    verify_unperforation_witness,
)
from .shen import ShenFactorization, shen_step
from .limits import (
    ColimitAnswer,
    ColimitElt,
    Tower,
    colimit_eq,
    colimit_interval_contains,
    colimit_positive,
    constant_tower,
    tower_new,
)
from .graded_matricial import (
    K0Data,
    MatricialComponent,
    MatricialRingDesc,
    component_matching,
    corner_descriptor,
    graded_iso,
    homog_dim,
    k0_of_matricial,
    matricial_ring,
)
from .hom_realization import (
    CopyEmbedding,
    HomSpec,
    RealizedSimplicial,
    RealizedTower,
    hom_compose,
    hom_realizable,
    k0_of_hom,
    realize_simplicial,
    realize_tower,
    verify_hom_spec,
)
from .extension import (
    ExtElt,
    ExtendedGroup,
    ExtendedTower,
    ext_cone_contains,
    ext_dominating_coefficient,
    ext_interval_preimage,
    ext_leq,
    ext_order_unit_check,
    ext_sdp_witness,
    extend_tower,
)

__version__ = "0.1.0"
