"""Fooling-set machinery for the spanning tree polytope.

Desk-scale, exactly-checkable combinatorics: labeled-tree and subset
enumeration, the subtour support function, witness extraction, fooling-set
verification and exact maximum search, and audits of the zero-counting
argument that caps fooling sets at 2n(n-1)+1 pairs.
"""

from .audit import (
    AuditReport,
    RowCover,
    audit_column_zeros,
    audit_cover_bounds,
    audit_shared_witness,
    cover_rows,
    fooling_set_size_bound,
)
from .fooling import (
    FoolingSet,
    STPair,
    VerificationReport,
    lift_fooling_set,
    support_matrix,
    verify_fooling_set,
)
from .search import (
    SearchResult,
    greedy_fooling_set,
    random_fooling_sets,
    search_max_fooling_set,
)
from .trees import (
    ENUMERATION_CAP,
    NodeSubset,
    PruferSeq,
    Tree,
    canonical_edge,
    enumerate_subsets,
    enumerate_trees,
    induced_edge_count,
    is_connected_in,
    path_in_tree,
    prufer_decode,
    prufer_encode,
    slack,
    subset_count,
    support,
    tree_count,
    tree_from_index,
    tree_index,
)
from .witness import (
    Witness,
    WitnessSet,
    all_witnesses,
    check_triangle,
    find_witness,
    is_witness,
    witness_edge,
    witness_middles,
    witnesses_with_middle,
)

__version__ = "0.1.0"
