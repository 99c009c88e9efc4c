"""Partitions, p-cores, blocks and Sylow derived lengths for symmetric and
alternating groups, with exact checks of p-singular character bounds."""

from .blocks import Block, BlockReport, BlockStats, block_stats, blocks_symmetric, character_height, check_block_bounds
from .characters import OrbitCensus, OrbitRecord, census_an, census_sn, degree, degree_p_valuation, degrees_of
from .families import FamilyReport, FamilySpec, alternating_families, case_tag, validate_families
from .padic import (
    DlRange,
    PadicExpansion,
    dl_sylow_classical_p2,
    dl_sylow_gl,
    dl_sylow_symmetric,
    dl_upper_log,
    dl_upper_log_e,
    is_prime,
    mann_max_dl,
    multiplicative_order,
    padic_digits,
    vp,
    vp_factorial,
)
from .partitions import (
    CoreWeight,
    Partition,
    conjugate,
    count_partitions,
    first_p_core,
    hook_lengths,
    is_p_core,
    p_core_and_weight,
    p_core_by_removal,
    p_cores_of_size,
    partitions_of,
    remove_rim_hook,
)
from .permgroups import PermGroup, derived_length, derived_series, derived_subgroup, even_part, group_order, sylow_sn_generators
from .unipotent import (
    CyclotomicContext,
    UnipotentDegree,
    cyclotomic_eval,
    d_p,
    lemma44_families,
    order_mod,
    phi_p_valuation,
    unipotent_degree_gl,
    verify_lemma44,
)
from .verify import CheckResult, SporadicRow, check_sporadic, load_sporadic_table

__version__ = "0.1.0"
