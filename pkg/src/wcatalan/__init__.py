"""Exact weighted Catalan numbers and the powers of two dividing them."""

from .catalan import (DyckPath, WeightedCount, catalan, dyck_paths, iter_catalan,
                      morse_link_number, q_catalan, weighted_catalan_bruteforce,
                      weighted_catalan_dp, weighted_catalan_dp_sequence,
                      weighted_catalan_series)
from .trees import (Node, OrbitRecord, canonical_shape, enumerate_shapes, enumerate_trees,
                    orbit_census, orbit_decomposition_check, orbit_size, reduced_weight,
                    tree_to_path, tree_weight)
from .valuation import (ValuationReport, ZeroBlockReport, digit_sum, verify_classical,
                        verify_weighted, xi, zero_blocks)
from .weights import (FunctionWindow, MembershipVerdict, WeightSequence, bracket,
                      check_membership, difference, evaluate, parse_weight, product, shift)

__version__ = "0.1.0"
