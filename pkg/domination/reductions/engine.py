"""
Detection, application and replay of reduction rules.

Every recipe goes through ``verify_recipe`` before it is trusted: the
dominators must number alpha and cover every vertex that leaves the
unmarked world (removed or newly marked), the weight must drop by at least
beta_claimed, and (|V|+|E|, #marked degree-3) must decrease. A recipe that
passes is sound whatever configuration produced it.
"""
import logging
from dataclasses import dataclass

from ..exceptions import InvalidMatch, LiftFailure
from ..graphs.cycles import girth, has_cycle_of_length
from ..graphs.graph6 import decode, encode
from ..graphs.marked_graph import MarkedGraph, excise
from ..solver import DominatingWitness, is_md_set
from ..weights import graph_weight
from .base import Match, Recipe, ReductionRule, ReductionTrace, Step


logger = logging.getLogger(__name__)


def measure(g: MarkedGraph) -> tuple:
    marked_cubic = sum(1 for v in g.vertices() if g.is_marked(v) and g.degree(v) == 3)
    return (g.n + g.edge_count, marked_cubic)


def execute(g: MarkedGraph, recipe: Recipe) -> tuple:
    """Apply a recipe without any check. Returns (H, remap)."""
    staged = g.without_edges(recipe.delete_edges).without_marks(recipe.unmark)
    return excise(staged, recipe.remove, recipe.mark)


@dataclass(frozen=True)
class Verification:
    problems: tuple
    h: MarkedGraph = None
    remap: dict = None
    beta_actual: int = None

    @property
    def ok(self) -> bool:
        return not self.problems


def verify_recipe(g: MarkedGraph, recipe: Recipe) -> Verification:
    problems = []
    touched = recipe.remove | recipe.mark | recipe.unmark | recipe.dominators
    if any(not 0 <= v < g.n for v in touched):
        return Verification(problems=("recipe names vertices outside the graph",))
    if recipe.mark & recipe.remove:
        problems.append("a vertex is both removed and marked")
    if recipe.unmark & recipe.remove:
        problems.append("a vertex is both removed and unmarked")
    if any(not g.is_marked(v) for v in recipe.unmark):
        problems.append("unmarking a vertex that is not marked")
    if any(not g.has_edge(u, v) for u, v in recipe.delete_edges):
        problems.append("deleting an edge that does not exist")
    if len(recipe.dominators) != recipe.alpha:
        problems.append(f"{len(recipe.dominators)} dominators for alpha={recipe.alpha}")
    if problems:
        return Verification(problems=tuple(problems))

    covered = set()
    for d in recipe.dominators:
        covered |= g.closed_neighborhood(d)
    newly_marked = {v for v in recipe.mark if not g.is_marked(v)}
    leaving = {v for v in recipe.remove if not g.is_marked(v)} | newly_marked
    uncovered = sorted(leaving - covered)
    if uncovered:
        problems.append(f"vertices {uncovered} are not dominated by the extension")

    h, remap = execute(g, recipe)
    beta_actual = graph_weight(g).total - graph_weight(h).total
    if beta_actual < recipe.beta_claimed:
        problems.append(f"weight drop {beta_actual} is below beta={recipe.beta_claimed}")
    if not measure(h) < measure(g):
        problems.append("measure does not decrease")
    return Verification(problems=tuple(problems), h=h, remap=remap, beta_actual=beta_actual)


def preconditions_hold(rule: ReductionRule, g: MarkedGraph) -> bool:
    if rule.requires_cubic and not g.is_cubic():
        return False
    if rule.requires_unmarked and g.marked_vertices():
        return False
    if rule.min_girth and girth(g) < rule.min_girth:
        return False
    return not any(has_cycle_of_length(g, k) for k in sorted(rule.forbidden_cycles))


def detect(rule: ReductionRule, g: MarkedGraph, strict: bool = False):
    """
    The lexicographically smallest binding whose recipe verifies, or None.

    With ``strict`` the rule's girth, forbidden-cycle, cubic and unmarked
    preconditions must hold first.
    """
    if strict and not preconditions_hold(rule, g):
        return None
    for match in sorted(set(rule.candidates(g)), key=lambda m: (m.key, m.ell)):
        recipe = rule.recipe(g, match)
        if recipe is not None and verify_recipe(g, recipe).ok:
            return match
    return None


def apply(rule: ReductionRule, g: MarkedGraph, match: Match) -> tuple:
    """
    Apply ``rule`` at ``match``.

    Returns:
        (H, Step)

    Raises:
        InvalidMatch: when the binding does not fit or its recipe fails verification.
    """
    recipe = rule.recipe(g, match)
    if recipe is None:
        raise InvalidMatch(f"{rule.id} does not fit the binding", bindings=match.as_dict())
    checked = verify_recipe(g, recipe)
    if not checked.ok:
        raise InvalidMatch(f"{rule.id} recipe failed verification", bindings=match.as_dict(),
                           problems=list(checked.problems))
    step = Step(rule_id=rule.id, match=match, recipe=recipe, remap=checked.remap,
                beta_actual=checked.beta_actual)
    return checked.h, step


def resolve_order(order=None) -> list:
    from .catalog import catalog, rule_by_id

    if order is None or order == "default":
        return catalog()
    return [rule_by_id(rule_id) for rule_id in order]


def reduce_fixpoint(g: MarkedGraph, order=None, strict: bool = False, max_steps: int = None) -> tuple:
    """
    Apply the first detectable rule of ``order`` until none applies.

    Returns:
        (residual, ReductionTrace)
    """
    rules = resolve_order(order)
    trace = ReductionTrace(original=g)
    current = g
    while max_steps is None or len(trace) < max_steps:
        for rule in rules:
            match = detect(rule, current, strict=strict)
            if match is None:
                continue
            current, step = apply(rule, current, match)
            trace.steps.append(step)
            logger.info("Applied %s at %s (alpha=%d, beta=%d/%d); %d vertices left",
                        rule.id, match.as_dict(), step.recipe.alpha, step.beta_actual,
                        step.recipe.beta_claimed, current.n)
            break
        else:
            break
    return current, trace


def replay(g: MarkedGraph, trace: ReductionTrace, residual_mdset=()) -> DominatingWitness:
    """
    Lift an MD-set of the residual back to ``g``.

    Raises:
        LiftFailure: when the lifted set does not dominate ``g``.
    """
    current = set(residual_mdset)
    for step in reversed(trace.steps):
        inverse = {new: old for old, new in step.remap.items()}
        try:
            current = {inverse[v] for v in current}
        except KeyError as exc:
            raise LiftFailure("residual set names a vertex outside the reduced graph",
                              rule=step.rule_id, vertex=exc.args[0])
        current |= step.recipe.dominators
    if not is_md_set(g, current):
        raise LiftFailure("lifted set does not dominate the original graph", size=len(current))
    return DominatingWitness(size=len(current), vertices=frozenset(current), optimal=False)


def trace_to_payload(trace: ReductionTrace) -> dict:
    return {
        "graph6": encode(trace.original),
        "n": trace.original.n,
        "marked": sorted(trace.original.marked_vertices()),
        "total_alpha": trace.total_alpha,
        "steps": [step.to_dict() for step in trace.steps],
    }


def trace_from_payload(payload: dict) -> ReductionTrace:
    """
    Rebuild a trace by re-executing its steps on the original graph.

    Raises:
        InvalidMatch: when a recorded step no longer verifies.
    """
    original = decode(payload["graph6"]).with_marks(payload.get("marked", ()))
    trace = ReductionTrace(original=original)
    current = original
    for raw in payload["steps"]:
        recipe = Recipe.build(
            remove=raw["removed"],
            mark=raw["marked"],
            unmark=raw.get("unmarked", ()),
            delete_edges=[tuple(e) for e in raw.get("deleted_edges", ())],
            dominators=raw["dominators"],
        ).with_contract(raw["alpha"], raw["beta_claimed"])
        checked = verify_recipe(current, recipe)
        if not checked.ok:
            raise InvalidMatch(f"recorded step {raw['rule']} does not verify",
                               problems=list(checked.problems))
        bindings = tuple((name, tuple(value) if isinstance(value, list) else value)
                         for name, value in raw["bindings"].items())
        match = Match(raw["rule"], bindings, raw.get("ell", 0))
        trace.steps.append(Step(rule_id=raw["rule"], match=match, recipe=recipe,
                                remap=checked.remap, beta_actual=checked.beta_actual))
        current = checked.h
    return trace
