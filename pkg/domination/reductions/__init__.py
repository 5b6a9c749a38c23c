from .base import Contract, Match, Recipe, ReductionRule, ReductionTrace, Step
from .catalog import catalog, rule_by_id, rule_ids
from .engine import (
    apply,
    detect,
    measure,
    reduce_fixpoint,
    replay,
    trace_from_payload,
    trace_to_payload,
    verify_recipe,
)
