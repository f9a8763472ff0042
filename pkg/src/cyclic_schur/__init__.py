"""Exact enumeration and counting of Schur rings over finite cyclic groups."""

from .groupcore import (
    CrtIso,
    ElementSet,
    UnitSubgroup,
    all_unit_subgroups,
    count_subgroups_rank2,
    crt_split,
    divisors,
    generated_unit_subgroup,
    subgroup_of_order,
    totient,
    unit_group,
    unitary_factorizations,
)
from .rings import (
    Partition,
    SchurRing,
    StructureConstants,
    VerifyReport,
    canonicalize,
    inverse_set,
    pullback,
    quotient,
    s_subgroup_divisors,
    structure_constants,
    subring,
    verify,
)
from .construct import (
    Section,
    automorphic_ring,
    direct_product,
    discrete_ring,
    is_wedge_decomposable,
    trivial_ring,
    wedge_compatible,
    wedge_core,
    wedge_product,
)
from .enumerator import (
    BudgetError,
    Classification,
    Enumerator,
    RingSet,
    brute_force_enumerate,
    classify,
    count_by_core,
    enumerate_all,
    omega,
)
from .formulas import (
    OmegaRecord,
    SideConditionError,
    catalan,
    omega_pq,
    omega_prime,
    omega_prime_power,
    omega_special,
    omega_two_power,
    schroeder,
)
from .reference import OMEGA_REFERENCE, reference_omega

__version__ = "0.1.0"
