"""Finite biquandles, long virtual knot colorings, and longitude invariants."""

from ._kernels import BACKEND
from .algebra import (
    AxiomError,
    FiniteBiquandle,
    TableError,
    Verdict,
    alexander_biquandle,
    alexander_tables,
    classify_tables,
    derive_bar_tables,
    from_tables,
    load_biquandle,
    rack_switch,
    read_table_file,
    verify_biquandle,
    verify_birack,
    verify_rack,
    verify_switch,
    wada_biquandle,
    wada_tables,
    write_table_file,
)
from .coloring import (
    check_coloring,
    count_colorings,
    count_fixed,
    counts_by_initial,
    enumerate_colorings,
)
from .diagram import (
    GaussCodeError,
    Incidence,
    LongGaussCode,
    Pass,
    incidence,
    parse_gauss_code,
    r1_delete,
    r1_insert,
    r2_delete,
    r2_insert,
    r3_fixture_pairs,
    reverse_orientation,
)
from .groups import (
    FiniteGroup,
    compose,
    cycle_string,
    cyclic_group,
    invert,
    parse_cycles,
    symmetric_group,
)
from .harness import HarnessReport, run_move_harness
from .longitude import (
    apply_word,
    compare_invariants,
    extract_word,
    families_by_initial,
    invariant_family,
    invariant_sum,
    longitude_map,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "BACKEND",
    "FiniteBiquandle",
    "FiniteGroup",
    "GaussCodeError",
    "HarnessReport",
    "Incidence",
    "LongGaussCode",
    "Pass",
    "TableError",
    "Verdict",
    "alexander_biquandle",
    "alexander_tables",
    "apply_word",
    "check_coloring",
    "classify_tables",
    "compare_invariants",
    "compose",
    "count_colorings",
    "count_fixed",
    "counts_by_initial",
    "cycle_string",
    "cyclic_group",
    "derive_bar_tables",
    "enumerate_colorings",
    "extract_word",
    "families_by_initial",
    "from_tables",
    "incidence",
    "invariant_family",
    "invariant_sum",
    "invert",
    "load_biquandle",
    "longitude_map",
    "parse_cycles",
    "parse_gauss_code",
    "r1_delete",
    "r1_insert",
    "r2_delete",
    "r2_insert",
    "r3_fixture_pairs",
    "rack_switch",
    "read_table_file",
    "reverse_orientation",
    "run_move_harness",
    "symmetric_group",
    "verify_biquandle",
    "verify_birack",
    "verify_rack",
    "verify_switch",
    "wada_biquandle",
    "wada_tables",
    "write_table_file",
]
