from .artifacts import Artifact, ArtifactKind, Origin, attach_artifacts, broad_link, fiber, narrow_link
from .coloring import CycleColoring, Shade, Side, abstract_cycle, all_amber, black_ends, derive_sets, find_cycles
from .fixpoint import (
    FixpointResult,
    apply_rules_fixpoint,
    choose_side,
    cycle_report,
    discharge_report,
    fixpoint_lemmas,
    measure,
)
from .rules import CutStats, RuleId, RuleVerdict, Tiebreak, cut_family, cut_greens, cut_stats, rule_lhs
from .scores import (
    ScorePair,
    Seat,
    StructureKind,
    artifact_average,
    baseline,
    fiber_average,
    group_pairs,
    link_average,
    structure_score,
    total_score,
)
