from . import endgame, local, multigraph_rules, structural

FAMILIES = (local, multigraph_rules, structural, endgame)
