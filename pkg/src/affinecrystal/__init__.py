"""Two combinatorial models of the basic affine sl(n) crystal.

Vertices are integer partitions (grown box by box under a bracket rule
driven by an arm sequence) or Laurent monomials in doubly indexed variables
(multiplied by lattice factors from running-sum statistics).  The corner
map identifies the two models; graph tooling generates, compares, counts,
and exports the resulting colored digraphs.
"""

from ._backend import available_backends, backend_name
from .arms import (
    ArmSequence,
    ArmViolation,
    arm_from_descriptor,
    arm_from_file,
    arm_from_values,
    horizontal_arm,
    is_illegal_box,
    is_regular,
    random_arm,
    unchecked_arm,
    validate_arm,
)
from .brackets import CLOSE, OPEN, BracketString
from .errors import CrystalError
from .graphs import (
    CrystalGraph,
    GraphComparison,
    GraphMismatch,
    compare_graphs,
    count_regular,
    export_dot,
    export_json,
    generate_graph,
    graph_from_json,
)
from .isomorphism import (
    CornerRuleReport,
    IntertwineReport,
    check_add_box_factor,
    check_corner_order_rules,
    check_intertwining,
    partition_to_monomial,
)
from .monomial_crystal import (
    Monomial,
    MonomialStats,
    e_m,
    f_m,
    format_monomial,
    is_compatible,
    is_dominant,
    monomial_bracket_string,
    mult_a,
    one,
    parse_monomial,
    stats,
    weight,
    y,
)
from .partition_crystal import (
    box_order_gt,
    bracket_string,
    e_box,
    e_up,
    eps_phi,
    f_box,
    f_down,
    horizontal_key,
)
from .partitions import (
    Box,
    Partition,
    arm,
    content,
    format_partition,
    height,
    hook,
    parse_partition,
    partitions_of_size,
    residue,
)

__version__ = "0.1.0"
