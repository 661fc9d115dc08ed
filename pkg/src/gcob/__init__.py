"""Genus-graded invariants r_n(G) of small finite groups."""
from .catalog import (
    Catalog, CatalogEntry, all_entries, by_name, cyclic, dicyclic, dihedral,
    elementary_abelian, group_from_file, load_catalog, parse_catalog, resolve,
)
from .closed_forms import (
    F_closed, F_recurrence, family_formula, jordan2, r1_cyclic, r1_dicyclic,
    r1_dihedral, r1_elementary_abelian, sigma, tau,
)
from .errors import (
    BudgetExceeded, CatalogSyntaxError, ClosureCapExceeded, GcobError, NonIntegralResult,
    NotAGroup, NotPrime, OrderCapExceeded, OrderMismatch, UnknownGroup,
)
from .group import (
    FiniteGroup, direct_product, group_from_generators, group_from_table, perm_from_cycles,
)
from .invariant import (
    OrbitPartition, components_bfs, cyclic_canonical, enumerate_G, is_minimal, members,
    move_1a, move_1b, move_2a, move_2b, orbit_of, partition, r_n,
)
from .report import InvariantReport, build_report, report_for
from .subgroups import (
    all_subgroups, commuting_pairs_count, count_abelian_subgroups, count_cyclic_subgroups,
    count_subgroups, cyclic_subgroups,
)

__version__ = "0.1.0"
