from .alternating import Decomposition, GreenBlackCycle, GreenBlackPath, decompose, find_max_paths, path_through
from .extremity import (
    ExtremityType,
    Strategy,
    StrategyGadget,
    classify_extremity,
    excision_delta,
    strategy_delta,
    strategy_excision,
    strategy_gadget,
)
from .neighbors import NeighborEdge, NeighborKind, Share, classify_neighbor_edge, edge_share, neighbor_edges
from .score import (
    PathAnnotation,
    Side,
    Terminal,
    annotate,
    path_report,
    score_path,
    score_path_prose,
    score_reverse,
    score_reverse_prose,
    score_truncated,
)
