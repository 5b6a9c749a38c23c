"""
The potential function w and the (alpha, beta) reduction contract.

w(G) = 4 markn + 4 n3 + 5 n2 + 8 n1 + 12 n0. A reduction G -> H is valid
in the algorithmic direction when w(G) - w(H) >= 12 alpha and every
MD-set of H extends to one of G with at most alpha extra vertices.
"""
import logging
from dataclasses import dataclass

from django.conf import settings

from .exceptions import OracleBudgetExceeded
from .graphs.marked_graph import MarkedGraph, degree_profile
from .solver import is_md_set, mdom_exact


logger = logging.getLogger(__name__)

UNMARKED_WEIGHTS = (12, 8, 5, 4)
MARKED_WEIGHT = 4
DOMINATOR_COST = 12


def vertex_weight(g: MarkedGraph, v: int) -> int:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} is not in the graph")
    if g.is_marked(v):
        return MARKED_WEIGHT
    return UNMARKED_WEIGHTS[g.degree(v)]


@dataclass(frozen=True)
class WeightReport:
    total: int
    marked: int
    n3: int
    n2: int
    n1: int
    n0: int

    @property
    def per_class(self) -> dict:
        return {"marked": self.marked, "n3": self.n3, "n2": self.n2, "n1": self.n1, "n0": self.n0}

    def to_dict(self) -> dict:
        return {"total": self.total, "per_class": self.per_class}


def graph_weight(g: MarkedGraph) -> WeightReport:
    profile = degree_profile(g)
    parts = {
        "marked": MARKED_WEIGHT * profile.markn,
        "n3": UNMARKED_WEIGHTS[3] * profile.n3,
        "n2": UNMARKED_WEIGHTS[2] * profile.n2,
        "n1": UNMARKED_WEIGHTS[1] * profile.n1,
        "n0": UNMARKED_WEIGHTS[0] * profile.n0,
    }
    return WeightReport(total=sum(parts.values()), **parts)


@dataclass(frozen=True)
class ContractVerdict:
    alpha: int
    beta_actual: int
    weight_valid: bool
    strict: bool
    oracle_checked: bool
    oracle_valid: bool
    lift_valid: bool
    gamma_g: int = None
    gamma_h: int = None

    @property
    def valid(self) -> bool:
        if not self.weight_valid:
            return False
        if not self.oracle_checked:
            return True
        return self.oracle_valid and self.lift_valid

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta_actual": self.beta_actual,
            "weight_valid": self.weight_valid,
            "strict": self.strict,
            "oracle_checked": self.oracle_checked,
            "oracle_valid": self.oracle_valid,
            "lift_valid": self.lift_valid,
            "valid": self.valid,
        }


def contract_check(g: MarkedGraph, h: MarkedGraph, alpha: int, extension, *,
                   remap: dict, budget: int = None) -> ContractVerdict:
    """
    Check a reduction G -> H against its contract.

    ``remap`` maps surviving G ids to H ids (as returned by ``excise``).
    When either oracle call runs out of budget the verdict degrades to
    the weight check alone.
    """
    extension = frozenset(extension)
    if len(extension) > alpha:
        raise ValueError("extension is larger than alpha")
    beta_actual = graph_weight(g).total - graph_weight(h).total
    weight_valid = beta_actual >= DOMINATOR_COST * alpha

    budget = settings.DOMINATION_SOLVER_BUDGET if budget is None else budget
    try:
        gamma_g = mdom_exact(g, budget)
        gamma_h = mdom_exact(h, budget)
        if not (gamma_g.optimal and gamma_h.optimal):
            raise OracleBudgetExceeded("oracle budget exhausted", budget=budget)
    except OracleBudgetExceeded as exc:
        logger.warning("Contract check degraded to weight-only: %s", exc.message)
        return ContractVerdict(alpha=alpha, beta_actual=beta_actual, weight_valid=weight_valid,
                               strict=beta_actual > DOMINATOR_COST * alpha, oracle_checked=False,
                               oracle_valid=False, lift_valid=False)

    inverse = {new: old for old, new in remap.items()}
    lifted = frozenset(inverse[v] for v in gamma_h.vertices) | extension
    return ContractVerdict(
        alpha=alpha,
        beta_actual=beta_actual,
        weight_valid=weight_valid,
        strict=beta_actual > DOMINATOR_COST * alpha,
        oracle_checked=True,
        oracle_valid=gamma_g.size <= gamma_h.size + alpha,
        lift_valid=is_md_set(g, lifted),
        gamma_g=gamma_g.size,
        gamma_h=gamma_h.size,
    )
