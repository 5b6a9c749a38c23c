"""
Switching loop over the cuts of a green-black cycle.

A cut is switched when it strictly decreases the measure
(-total score, color changes, dotted fibers); candidate cuts are tried by
rule family (R1, then R2, then R3) and within a family by (a, b). The loop
stops when no cut decreases the measure.
"""
import logging
from dataclasses import dataclass

from django.conf import settings

from ..exceptions import DominationError, NonTermination
from ..multigraph import ColoredMultigraph
from .artifacts import attach_artifacts
from .coloring import CycleColoring, Side, all_amber, black_ends, find_cycles
from .rules import RuleId, cut_family, cut_greens, cut_stats, rule_lhs
from .scores import COLOR_CHANGE_COST, ScorePair, baseline, dotted_fibers, group_pairs, total_score


logger = logging.getLogger(__name__)

FAMILIES = (RuleId.R1, RuleId.R2, RuleId.R3)


def measure(coloring: CycleColoring, artifacts) -> tuple:
    """(-total score in twelfths, color changes, dotted fibers); smaller is better."""
    return (-total_score(coloring, artifacts).numerator, len(coloring.changes),
            dotted_fibers(coloring, artifacts))


@dataclass(frozen=True)
class FixpointResult:
    coloring: CycleColoring
    log: tuple

    def to_dict(self) -> dict:
        return {"coloring": self.coloring.to_dict(), "log": list(self.log)}


def _next_switch(coloring: CycleColoring, artifacts):
    k = coloring.cycle.k
    current = measure(coloring, artifacts)
    for family in FAMILIES:
        for a in range(k):
            for b in range(k):
                if a == b or cut_family(coloring, (a, b)) is not family:
                    continue
                switched = coloring.switched(cut_greens(k, (a, b)))
                after = measure(switched, artifacts)
                if after < current:
                    return family, (a, b), switched, current, after
    return None


def apply_rules_fixpoint(cycle, artifacts, initial: CycleColoring = None, max_steps: int = None) -> FixpointResult:
    """
    Switch cuts from ``initial`` (all Amber by default) until none helps.

    Each log entry records the rule family of the cut, the census and the
    displayed left-hand side before the switch, and the measure on both sides.

    Raises:
        NonTermination: after ``max_steps`` switches, or if a switch fails
            to decrease the measure.
    """
    max_steps = settings.DOMINATION_DISCHARGE_MAX_STEPS if max_steps is None else max_steps
    coloring = initial if initial is not None else all_amber(cycle)
    artifacts = list(artifacts)
    log = []
    while True:
        found = _next_switch(coloring, artifacts)
        if found is None:
            break
        if len(log) >= max_steps:
            raise NonTermination("Rule loop exceeded its step budget", steps=len(log), k=cycle.k)
        family, cut, switched, before, after = found
        if not after < before:
            raise NonTermination(cut=list(cut), before=list(before), after=list(after))
        stats = cut_stats(coloring, artifacts, cut)
        verdict = rule_lhs(family, stats)
        log.append({
            "step": len(log) + 1,
            "rule": family.value,
            "cut": list(cut),
            "stats": stats.to_dict(),
            "lhs": str(verdict.lhs),
            "formula_applies": verdict.applies,
            "measure_before": list(before),
            "measure_after": list(after),
        })
        logger.debug("Switched cut %s under %s: measure %s -> %s", cut, family.value, before, after)
        coloring = switched
    return FixpointResult(coloring=coloring, log=tuple(log))


def choose_side(coloring: CycleColoring, artifacts) -> dict:
    """Totals per side (structure pairs minus 4 per color change) and the better side."""
    pairs = group_pairs(coloring, artifacts)
    total = sum((pair for _, pair in pairs), ScorePair())
    penalty = COLOR_CHANGE_COST * len(coloring.changes)
    total = ScorePair(total.a - penalty, total.b - penalty)
    side = Side.A if total.a >= total.b else Side.B
    return {
        "side": side.value,
        "total": total.for_side(side),
        "totals": {"A": total.a, "B": total.b},
        "average": total.average,
        "schedule_total": total_score(coloring, artifacts),
        "structures": [(label, pair) for label, pair in pairs],
    }


def _bad_links_at(coloring: CycleColoring, artifacts, vertices) -> list:
    found = []
    for index, artifact in enumerate(artifacts):
        if not artifact.is_link or not set(artifact.extremities) & set(vertices):
            continue
        x, y = artifact.extremities
        dotted = x in coloring.dotted or y in coloring.dotted
        if not dotted and coloring.side_of(x) is coloring.side_of(y):
            found.append(index)
    return found


def _followed_by_change(coloring: CycleColoring, artifacts, a: int):
    """The next color change after change ``a`` with no live link extremity in between, or None."""
    k = coloring.cycle.k
    live = set()
    for artifact in artifacts:
        if artifact.is_link:
            for end in artifact.extremities:
                if artifact.opposite(end) not in coloring.dotted:
                    live.add(end)
    j = (a + 1) % k
    while j != a:
        if coloring.is_change(j):
            return j
        if live & set(black_ends(coloring.cycle, j)):
            return None
        j = (j + 1) % k
    return None


def fixpoint_lemmas(coloring: CycleColoring, artifacts) -> dict:
    """The three structural properties expected of a reached fixpoint, with witnesses."""
    artifacts = list(artifacts)
    cycle = coloring.cycle
    doubly_bad = [i for i in range(cycle.k)
                  if len(_bad_links_at(coloring, artifacts, black_ends(cycle, i))) >= 2]
    consecutive = []
    for a in coloring.changes:
        b = _followed_by_change(coloring, artifacts, a)
        if b is not None:
            consecutive.append([a, b])
    fiber_spots = {x.extremities[0] for x in artifacts if not x.is_link}
    fiber_hits = [i for i in coloring.changes if fiber_spots & set(black_ends(cycle, i))]
    return {
        "no_double_bad_links": not doubly_bad,
        "no_consecutive_changes": not consecutive,
        "no_change_hits_fiber": not fiber_hits,
        "witnesses": {
            "double_bad_links": doubly_bad,
            "consecutive_changes": consecutive,
            "fiber_hits": fiber_hits,
        },
    }


def cycle_report(cycle, artifacts, max_steps: int = None) -> dict:
    """JSON-ready discharge run of one cycle."""
    start = all_amber(cycle)
    entry = {
        "cycle": cycle.to_dict(),
        "artifacts": [x.to_dict() for x in artifacts],
        "baseline": str(baseline(start, artifacts)),
    }
    try:
        result = apply_rules_fixpoint(cycle, artifacts, initial=start, max_steps=max_steps)
    except NonTermination as exc:
        logger.warning("Discharge loop did not settle on a cycle with k=%d: %s", cycle.k, exc.message)
        entry["error"] = {"code": exc.code, "message": exc.message, **exc.details}
        return entry
    side = choose_side(result.coloring, artifacts)
    entry.update({
        "fixpoint": result.to_dict(),
        "side": side["side"],
        "total": str(side["total"]),
        "totals": {key: str(value) for key, value in side["totals"].items()},
        "schedule_total": str(side["schedule_total"]),
        "structures": [{"kind": label, **pair.to_dict()} for label, pair in side["structures"]],
        "lemmas": fixpoint_lemmas(result.coloring, artifacts),
    })
    return entry


def discharge_report(m: ColoredMultigraph, max_steps: int = None) -> dict:
    """Discharge runs for every alternating cycle of M."""
    try:
        cycles = find_cycles(m)
    except DominationError as exc:
        return {"error": {"code": exc.code, "message": exc.message}}
    return {"cycles": [cycle_report(c, attach_artifacts(m, c), max_steps=max_steps) for c in cycles]}
