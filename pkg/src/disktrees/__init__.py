"""
Di-sk trees, separable permutations, and their statistic-preserving
bijections, with exhaustive desk-scale verification of the
equidistribution results relating them.
"""

from .perm import (
    Perm, StatProfile, as_perm, avoids_all, comp, contains_pattern, des,
    desb, direct_sum, format_perm, iar, idr, is_permutation, lmax, lmin,
    parse_perm, reverse_complement, skew_sum, stat_profile,
)
from .disktree import (
    MINUS, PLUS, TRAVERSAL_ORDERS, Tree, conjugate, extract, format_tree,
    initial_count, insert, iroot, omi, parse_tree, size, spine, traverse,
    tree_from_json, tree_to_json, validate,
)
from .bijections import (
    MAPS, NotSeparableError, big_phi, eta, eta_inv, l_inv, l_op, phi,
    phi_inv, psi, psi_inv, theta, theta_inv,
)
from .enumeration import (
    DistributionTable, catalan_triangle, distribution, gen_avoiders,
    gen_disk_trees, matrix_top_iom, pair_matrix, schroder, separable,
)
from .series import TruncatedSeries, build_series
from .verify import CheckResult, check_ids, run_check, run_suite, suite_passed

__version__ = "0.1.0"
