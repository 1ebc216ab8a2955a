"""Three-tope committees of simple oriented matroids given by their topes."""

from .committees import (Committee, count_committees3_lattice, count_committees_eq1,
                         count_no_opposite_triples, count_no_opposite_triples_brute,
                         enumerate_committees3, halfspace, is_anti_committee,
                         is_committee, is_committee_general)
from .convexity import (ConvexLattice, LatticeError, build_lattice, classify,
                        coatoms_above, conv, ex, meet_join, mobius)
from .graphs import (TopeGraph, build_graph, connectivity, count_triangles,
                     degree_check_gamma_max, formula_counts, odd_cycle_committee_check)
from .ingest import Arrangement, arrangement_topes, parse_arrangement
from .signs import (ParseError, ToposSet, ValidationError, ValidationReport,
                    parse_topes, read_topes, reorient, validate)
from .fixtures import load_fixture

__version__ = "0.1.0"
