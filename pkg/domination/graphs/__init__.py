from .cycles import INFINITE, CycleReport, cycle_report, cycles_of_length, girth, has_cycle_of_length, shortest_cycle
from .generators import (
    complete_graph_k4,
    cube_graph,
    cycle_graph,
    generalized_petersen,
    heawood_graph,
    path_graph,
    petersen_graph,
    random_cubic,
    random_subcubic_tree,
    subdivide_edge,
)
from .graph6 import decode as graph6_decode, encode as graph6_encode, read_graph6_file
from .marked_graph import DegreeProfile, MarkedGraph, TwoPath, degree_profile, excise, maximal_two_paths
