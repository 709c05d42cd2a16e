"""Finite meet-semilattices with bottom and top: equation solving,
isomorph-free catalogs, and exhaustive extremal sweeps."""

from .core import (
    MAX_ORDER,
    ElementView,
    InvalidMeetTable,
    NoBottom,
    NoTop,
    NotAssociative,
    NotCommutative,
    NotIdempotent,
    OrderTooLarge,
    OrderTooSmall,
    Semilattice,
    adjoin_top,
    bits,
    make_chain,
    make_fan,
    validate_meet_table,
)
from .canon import CanonicalForm, canonical_form, canonical_key, isomorphic, key_hex
from .equations import (
    MAX_VARS,
    Equation,
    IndexOutOfRange,
    MTooLarge,
    SolutionSet,
    Term,
    chain_first_kind_count,
    enumerate_equations,
    equation_count,
    equation_holds,
    eval_term,
    fan_first_kind_count,
    first_kind_count,
    first_kind_pairs,
    first_kind_pairs_by_covers,
    first_kind_pairs_rec,
    inconsistent_count,
    is_consistent,
    second_kind_pairs,
    solution_count,
    solution_histogram,
    solution_set,
    total_first_kind,
    total_solutions,
)
from .catalog import (
    Catalog,
    CatalogEntry,
    FormatError,
    generate_catalog,
    generate_catalog_naive,
    lattice_from_hex,
    load_catalog,
    save_catalog,
)
from .extremal import (
    HistogramSummary,
    StatsRecord,
    UnknownMetric,
    VerificationReport,
    find_extremal,
    profile,
    profile_catalog,
    verify_cover_bounds,
    verify_empty_bucket_dominance,
    verify_first_kind_max,
    verify_inconsistent_bounds,
    verify_unique_coatom_minimum,
)
from .landmarks import landmark_report, spire5

__version__ = "0.1.0"
