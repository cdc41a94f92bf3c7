"""Output-sensitive enumeration of convex, connected convex and connected vertex sets."""

from .cc import EnumFrame, count_cc, enumerate_cc, subroutine_b
from .connected import ConnFrame, count_connected, enumerate_connected
from .convex import PeelRecord, PeelState, count_convex, enumerate_convex, peel_step, restore_step
from .generators import (
    ExtremalPrediction,
    SplitMix64,
    gen_extremal,
    gen_kpq,
    gen_path,
    gen_random_bipartite_graph,
    gen_random_connected_graph,
    gen_random_dag,
    predict,
    upper_bound,
)
from .graph import (
    AcyclicOrdering,
    ClosureDigraph,
    CyclicGraphError,
    Digraph,
    GraphError,
    ParseError,
    UndirectedGraph,
    acyclic_ordering,
    format_edge_list,
    is_connected_set,
    is_convex,
    orient_bipartite,
    parse_digraph,
    parse_undirected,
    transitive_closure,
    underlying_graph,
)
from .oracle import OracleCapError, SetFamily, brute_cc, brute_connected, brute_convex
from .sink import Collector, SetSink
from .vertexset import VertexSet

__version__ = "0.1.0"
