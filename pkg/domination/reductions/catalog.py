"""
The ordered rule catalog.

Order is the default application order of ``reduce_fixpoint``: local
clean-up first, then the colored-multigraph rules, the structural ones and
finally the endgame on cubic graphs.
"""
from functools import lru_cache

from .rules import FAMILIES


@lru_cache(maxsize=1)
def _rules() -> tuple:
    rules = tuple(rule for family in FAMILIES for rule in family.RULES)
    ids = [rule.id for rule in rules]
    duplicates = sorted({rule_id for rule_id in ids if ids.count(rule_id) > 1})
    if duplicates:
        raise ValueError(f"duplicate rule ids in catalog: {duplicates}")
    unsound = [rule.id for rule in rules if not rule.contract.sound]
    if unsound:
        raise ValueError(f"contracts with beta < 12 alpha: {unsound}")
    return rules


def catalog(family: str = None) -> list:
    rules = _rules()
    if family is not None:
        rules = [rule for rule in rules if rule.family == family]
    return list(rules)


def rule_ids() -> list:
    return [rule.id for rule in _rules()]


def rule_by_id(rule_id: str):
    """
    Raises:
        KeyError: for an unknown id.
    """
    for rule in _rules():
        if rule.id == rule_id:
            return rule
    raise KeyError(rule_id)
