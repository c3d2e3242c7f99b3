"""Exact pendant-tree packing, connectivity, and extremal-size toolkit."""

from .graph import (
    Graph,
    InputError,
    bits,
    build_graph,
    complement,
    degree,
    edge_boundary,
    induced_subgraph,
    is_connected,
    mask_of,
    max_degree,
    min_degree,
    vertex_connectivity,
)
from .packing import (
    ConnectivityResult,
    DisjointnessMode,
    SteinerTree,
    TreePacking,
    connectivity_upper_bounds,
    global_connectivity,
    kappa_k,
    local_connectivity,
    mu,
    packing_violation,
    tau,
    verify_packing,
)
from .generators import (
    cartesian,
    complete,
    complete_bipartite,
    complete_minus_matching,
    cycle,
    empty,
    harary,
    join,
    lemma_3_6_family,
    lexicographic,
    parse_generator,
    path,
    prop_2_3_graph,
    prop_3_3_graph,
    prop_3_4_graph,
    wheel,
)
from .extremal import (
    Budget,
    ExtremalRecord,
    Strategy,
    enumerate_graphs,
    f_min_edges,
    lower_bound_edges,
)
from .formats import (
    FormatError,
    ReportRecord,
    decode_graph6,
    encode_graph6,
    ingest_graph6_stream,
    parse_edge_list,
    write_edge_list,
)
from .verify import TheoremCheck, verify_characterization, verify_theorems

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
