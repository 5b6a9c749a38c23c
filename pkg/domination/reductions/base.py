"""
Reduction rule types.

A rule pairs a candidate enumerator with a recipe builder. Candidates are
role bindings (``Match``); the recipe says which vertices to remove, which
to mark or unmark, which edges to delete and which vertices extend an
MD-set of the reduced graph back to one of G. The engine checks every
recipe before using it.
"""
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable

from ..graphs.marked_graph import MarkedGraph


@dataclass(frozen=True)
class Contract:
    """(alpha, beta) as linear functions of the match's ``ell``."""
    alpha0: int
    beta0: int
    alpha_per: int = 0
    beta_per: int = 0

    def alpha(self, ell: int = 0) -> int:
        return self.alpha0 + self.alpha_per * ell

    def beta(self, ell: int = 0) -> int:
        return self.beta0 + self.beta_per * ell

    @property
    def sound(self) -> bool:
        """beta >= 12 alpha for every ell >= 0."""
        return self.beta0 >= 12 * self.alpha0 and self.beta_per >= 12 * self.alpha_per

    def label(self) -> str:
        def linear(c0, per):
            if not per:
                return str(c0)
            head = "ell" if per == 1 else f"{per}ell"
            return f"{head}+{c0}" if c0 else head
        return f"alpha={linear(self.alpha0, self.alpha_per)}, beta={linear(self.beta0, self.beta_per)}"

    def to_dict(self) -> dict:
        return {"alpha0": self.alpha0, "alpha_per": self.alpha_per,
                "beta0": self.beta0, "beta_per": self.beta_per}


@dataclass(frozen=True)
class Match:
    """
    Role -> vertex binding. Values are vertex ids or tuples of vertex ids.

    ``ell`` counts the long colored paths, the absorbed red paths, or the
    cycle length, for the rules whose contract grows with it.
    """
    rule_id: str
    bindings: tuple
    ell: int = 0

    @classmethod
    def of(cls, rule_id: str, ell: int = 0, **roles) -> "Match":
        return cls(rule_id, tuple(roles.items()), ell)

    def __getitem__(self, role: str):
        for name, value in self.bindings:
            if name == role:
                return value
        raise KeyError(role)

    def get(self, role: str, default=None):
        try:
            return self[role]
        except KeyError:
            return default

    @property
    def key(self) -> tuple:
        flat = []
        for _, value in self.bindings:
            flat.extend(value if isinstance(value, tuple) else (value,))
        return tuple(flat)

    def as_dict(self) -> dict:
        return {name: list(value) if isinstance(value, tuple) else value for name, value in self.bindings}


def _frozen(values) -> frozenset:
    return frozenset(values or ())


def _edge_set(edges) -> frozenset:
    return frozenset((min(u, v), max(u, v)) for u, v in (edges or ()))


@dataclass(frozen=True)
class Recipe:
    remove: frozenset = frozenset()
    mark: frozenset = frozenset()
    unmark: frozenset = frozenset()
    delete_edges: frozenset = frozenset()
    dominators: frozenset = frozenset()
    alpha: int = 0
    beta_claimed: int = 0

    @classmethod
    def build(cls, remove: Iterable = (), mark: Iterable = (), dominators: Iterable = (),
              unmark: Iterable = (), delete_edges: Iterable = ()) -> "Recipe":
        return cls(remove=_frozen(remove), mark=_frozen(mark), unmark=_frozen(unmark),
                   delete_edges=_edge_set(delete_edges), dominators=_frozen(dominators))

    def with_contract(self, alpha: int, beta: int) -> "Recipe":
        return replace(self, alpha=alpha, beta_claimed=beta)


@dataclass(frozen=True)
class ReductionRule:
    """
    One catalog entry.

    ``candidates(g)`` yields every ``Match`` worth trying; ``plan(g, match)``
    returns the ``Recipe`` without its contract, or None when the binding
    does not fit. Preconditions are only enforced in strict detection.
    """
    id: str
    description: str
    family: str
    contract: Contract
    candidates: Callable = field(repr=False, compare=False)
    plan: Callable = field(repr=False, compare=False)
    min_girth: int = 0
    forbidden_cycles: frozenset = frozenset()
    requires_cubic: bool = False
    requires_unmarked: bool = False

    def recipe(self, g: MarkedGraph, match: Match):
        plan = self.plan(g, match)
        if plan is None:
            return None
        return plan.with_contract(self.contract.alpha(match.ell), self.contract.beta(match.ell))

    def detector(self, g: MarkedGraph, strict: bool = False):
        from .engine import detect
        return detect(self, g, strict=strict)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "family": self.family,
            "contract": self.contract.label(),
            "min_girth": self.min_girth,
            "forbidden_cycles": sorted(self.forbidden_cycles),
        }


@dataclass(frozen=True)
class Step:
    """One applied reduction. ``remap`` maps surviving G ids to H ids."""
    rule_id: str
    match: Match
    recipe: Recipe
    remap: dict = field(compare=False, hash=False)
    beta_actual: int = 0

    def to_dict(self) -> dict:
        recipe = self.recipe
        return {
            "rule": self.rule_id,
            "bindings": self.match.as_dict(),
            "ell": self.match.ell,
            "removed": sorted(recipe.remove),
            "marked": sorted(recipe.mark),
            "unmarked": sorted(recipe.unmark),
            "deleted_edges": [list(e) for e in sorted(recipe.delete_edges)],
            "dominators": sorted(recipe.dominators),
            "alpha": recipe.alpha,
            "beta_claimed": recipe.beta_claimed,
            "beta_actual": self.beta_actual,
        }


@dataclass
class ReductionTrace:
    original: MarkedGraph
    steps: list = field(default_factory=list)

    @property
    def total_alpha(self) -> int:
        return sum(step.recipe.alpha for step in self.steps)

    def __len__(self):
        return len(self.steps)
