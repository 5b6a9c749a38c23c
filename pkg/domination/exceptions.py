"""
Exception hierarchy for the domination app.

Every error carries a stable machine ``code`` so that commands and reports
render failures in one consistent shape (see ``error_payload``).
"""


class DominationError(Exception):
    """Base class for every error raised by this app."""

    code = "domination_error"
    default_message = "An error occurred"

    def __init__(self, message=None, **details):
        self.message = message or self.default_message
        self.details = details
        super().__init__(self.message)


# ---------------------------------------------------------------------------
# Graph core
# ---------------------------------------------------------------------------

class InvalidGraph(DominationError):
    code = "invalid_graph"
    default_message = "Adjacency does not describe a marked subcubic graph"


class Graph6Error(DominationError):
    code = "graph6_error"
    default_message = "Invalid graph6 input"


class MalformedHeader(Graph6Error):
    code = "malformed_header"
    default_message = "graph6 header is missing or malformed"


class TruncatedBits(Graph6Error):
    code = "truncated_bits"
    default_message = "graph6 body is shorter than the header requires"


class NonCanonicalPadding(Graph6Error):
    code = "non_canonical_padding"
    default_message = "graph6 body has non-zero padding or trailing data"


class CycleSearchBudgetExceeded(DominationError):
    code = "cycle_budget_exceeded"
    default_message = "Cycle search exceeded its node budget"


class Exhausted(DominationError):
    code = "exhausted"
    default_message = "Random generation exhausted its attempts"


# ---------------------------------------------------------------------------
# Solver and weights
# ---------------------------------------------------------------------------

class MarkedInput(DominationError):
    code = "marked_input"
    default_message = "Operation requires an unmarked graph"


class OracleBudgetExceeded(DominationError):
    code = "oracle_budget_exceeded"
    default_message = "Exact oracle exceeded its budget"


# ---------------------------------------------------------------------------
# Reductions
# ---------------------------------------------------------------------------

class InvalidMatch(DominationError):
    code = "invalid_match"
    default_message = "Match does not satisfy the rule on this graph"


class LiftFailure(DominationError):
    code = "lift_failure"
    default_message = "Lifted set is not a marked dominating set"


# ---------------------------------------------------------------------------
# Colored multigraph
# ---------------------------------------------------------------------------

class MultigraphError(DominationError):
    code = "multigraph_error"
    default_message = "Graph does not admit a colored multigraph"


class BadDegrees(MultigraphError):
    code = "bad_degrees"
    default_message = "Every vertex must have degree 2 or 3"


class BadTwoPathOrder(MultigraphError):
    code = "bad_two_path_order"
    default_message = "Maximal 2-paths must have order 1, 2, 4 or 5"


class DegreeTwoCycleComponent(MultigraphError):
    code = "degree_two_cycle_component"
    default_message = "Graph has a component that is a cycle"


class MarkedPathViolation(MultigraphError):
    code = "marked_path_violation"
    default_message = "Colored path carries more marked vertices than allowed"


class GreenMatchingViolation(MultigraphError):
    code = "green_matching_violation"
    default_message = "Green edges do not form a matching"


# ---------------------------------------------------------------------------
# Path score and discharge
# ---------------------------------------------------------------------------

class Unclassifiable(DominationError):
    code = "unclassifiable"
    default_message = "Extremity matches none of the known structure types"


class UnknownCase(DominationError):
    code = "unknown_case"
    default_message = "Context lies outside the scored case analysis"


class InvalidCutEnds(DominationError):
    code = "invalid_cut_ends"
    default_message = "Cut ends are not black edges of the cycle"


class NonTermination(DominationError):
    code = "non_termination"
    default_message = "Rule loop failed to decrease its measure"


# ---------------------------------------------------------------------------
# Campaigns
# ---------------------------------------------------------------------------

class EmptySource(DominationError):
    code = "empty_source"
    default_message = "Campaign source yielded no graphs"


def error_payload(exc):
    """
    Render an exception in the uniform failure shape.

    Returns:
        { "success": false, "message": "...", "error": "<code>", "details": {...} }
    """
    if isinstance(exc, DominationError):
        payload = {
            "success": False,
            "message": exc.message,
            "error": exc.code,
        }
        if exc.details:
            payload["details"] = exc.details
        return payload
    return {
        "success": False,
        "message": str(exc) or "An error occurred",
        "error": "internal_error",
    }
