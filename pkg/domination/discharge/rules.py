"""
Cuts of a green-black cycle and the three switching rules.

A cut from black edge a to black edge b covers greens a+1 .. b (cyclic);
switching it swaps the shade of those greens. Rule 1 covers cuts whose
ends are not color changes, Rule 2 cuts whose two ends are, Rule 3 cuts
with exactly one such end. Each rule is the displayed linear form over
the cut census, with a simplified variant that ignores link width and a
reformulation that charges ``cc_B`` for color changes touching broad links.
"""
from dataclasses import asdict, dataclass, fields
from enum import Enum

from ..exceptions import InvalidCutEnds
from ..rational import ZERO, Rational12, r12
from .coloring import CycleColoring, black_ends


class RuleId(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R1S = "R1s"
    R2S = "R2s"
    R3S = "R3s"
    R2REF = "R2ref"
    R3REF = "R3ref"
    R2REFS = "R2refs"
    R3REFS = "R3refs"

    @property
    def family(self) -> "RuleId":
        return RuleId(self.value[:2])


class Tiebreak(str, Enum):
    SCORE = "score"
    COLOR_CHANGES = "color_changes"
    DOTTED_FIBERS = "dotted_fibers"
    NONE = "none"


LINK_VARIABLES = ("wc", "bc", "wch", "bch", "wh", "bh", "oh", "whd", "bhd", "wchd", "bchd", "ohd")


@dataclass(frozen=True)
class CutStats:
    wc_B: int = 0
    wc_N: int = 0
    bc_B: int = 0
    bc_N: int = 0
    wch_B: int = 0
    wch_N: int = 0
    bch_B: int = 0
    bch_N: int = 0
    wh_B: int = 0
    wh_N: int = 0
    bh_B: int = 0
    bh_N: int = 0
    oh_B: int = 0
    oh_N: int = 0
    whd_B: int = 0
    whd_N: int = 0
    bhd_B: int = 0
    bhd_N: int = 0
    wchd_B: int = 0
    wchd_N: int = 0
    bchd_B: int = 0
    bchd_N: int = 0
    ohd_B: int = 0
    ohd_N: int = 0
    f: int = 0
    fd: int = 0
    cc_B: int = 0

    def __post_init__(self):
        for field in fields(self):
            if getattr(self, field.name) < 0:
                raise ValueError(f"{field.name} must be a natural number")

    def total(self, name: str) -> int:
        """Broad plus narrow count of a link variable."""
        if name not in LINK_VARIABLES:
            raise KeyError(name)
        return getattr(self, f"{name}_B") + getattr(self, f"{name}_N")

    def to_dict(self) -> dict:
        return {name: value for name, value in asdict(self).items() if value}


@dataclass(frozen=True)
class RuleVerdict:
    rule: RuleId
    lhs: Rational12
    threshold: Rational12
    strict: bool
    applies: bool
    tiebreak_reason: Tiebreak

    def to_dict(self) -> dict:
        return {
            "rule": self.rule.value,
            "lhs": str(self.lhs),
            "threshold": str(self.threshold),
            "strict": self.strict,
            "applies": self.applies,
            "tiebreak_reason": self.tiebreak_reason.value,
        }


def _form(*terms) -> Rational12:
    """Sum of coefficient * count."""
    total = ZERO
    for coefficient, count in terms:
        total += r12(coefficient) * count
    return total


def _rule1(s: CutStats) -> Rational12:
    return _form(
        (6, s.bc_B - s.wc_B),
        ("9/2", s.bc_N - s.wc_N - s.wch_B - s.wh_B),
        (-4, s.wh_N + s.wch_N),
        ("3/2", s.bch_B + s.bh_B),
        ("1/2", s.bch_N + s.bh_N),
        ("1/2", s.oh_B - s.f),
    )


def _rule1_simplified(s: CutStats) -> Rational12:
    t = s.total
    return _form(
        (-6, t("wc")),
        ("9/2", t("bc") - t("wch") - t("wh")),
        ("1/2", t("bch") + t("bh") - s.f),
    )


def _rule2(s: CutStats) -> Rational12:
    return _form(
        (6, s.bc_B - s.wc_B),
        ("9/2", s.bc_N - s.wc_N + s.whd_B + s.bchd_B),
        (4, s.whd_N + s.bchd_N),
        ("-3/2", s.bhd_B + s.wchd_B),
        ("1/2", s.fd - s.bhd_N - s.wchd_N - s.ohd_B),
    )


def _rule2_simplified(s: CutStats) -> Rational12:
    t = s.total
    return _form(
        (-6, t("wc")),
        ("9/2", t("bc")),
        (4, t("whd") + t("bchd")),
        ("-3/2", t("bhd") + t("wchd")),
        ("1/2", s.fd - t("ohd")),
    )


def _rule3(s: CutStats) -> Rational12:
    return _form(
        (6, s.bc_B - s.wc_B),
        ("9/2", s.bc_N - s.wc_N - s.wch_B - s.wh_B + s.whd_B + s.bchd_B),
        (4, s.whd_N + s.bchd_N - s.wh_N - s.wch_N),
        ("3/2", s.bch_B + s.bh_B - s.bhd_B - s.wchd_B),
        ("1/2", s.bch_N + s.bh_N - s.bhd_N - s.wchd_N + s.oh_B - s.ohd_B - s.f + s.fd),
    )


def _rule3_simplified(s: CutStats) -> Rational12:
    t = s.total
    return _form(
        (-6, t("wc")),
        ("9/2", t("bc") - t("wh") - t("wch")),
        (4, t("whd") + t("bchd")),
        ("-3/2", t("wchd") + t("bhd")),
        ("1/2", t("bh") + t("bch") + s.fd - s.f - s.ohd_B),
    )


def _rule2_reformulated(s: CutStats) -> Rational12:
    return _form((6, s.bc_B - s.wc_B), ("9/2", s.bc_N - s.wc_N), (-1, s.cc_B))


def _rule2_reformulated_simplified(s: CutStats) -> Rational12:
    return _form((-6, s.total("wc")), ("9/2", s.total("bc")), (-1, s.cc_B))


def _rule3_reformulated(s: CutStats) -> Rational12:
    return _form(
        (6, s.bc_B - s.wc_B),
        ("9/2", s.bc_N - s.wc_N - s.wch_B - s.wh_B),
        (-4, s.wh_N + s.wch_N),
        ("3/2", s.bch_B + s.bh_B),
        (-1, s.cc_B),
        ("1/2", s.bch_N + s.bh_N + s.oh_B - s.f),
    )


def _rule3_reformulated_simplified(s: CutStats) -> Rational12:
    t = s.total
    return _form(
        (-6, t("wc")),
        ("9/2", t("bc") - t("wch") - t("wh")),
        (-1, s.cc_B),
        ("1/2", t("bch") + t("bh") - s.f),
    )


# rule -> (form, threshold, strict)
RULES = {
    RuleId.R1: (_rule1, r12(8), True),
    RuleId.R1S: (_rule1_simplified, r12(8), True),
    RuleId.R2: (_rule2, r12(-8), False),
    RuleId.R2S: (_rule2_simplified, r12(-8), False),
    RuleId.R2REF: (_rule2_reformulated, r12(-7), False),
    RuleId.R2REFS: (_rule2_reformulated_simplified, r12(-7), False),
    RuleId.R3: (_rule3, ZERO, True),
    RuleId.R3S: (_rule3_simplified, ZERO, True),
    RuleId.R3REF: (_rule3_reformulated, r12("1/2"), True),
    RuleId.R3REFS: (_rule3_reformulated_simplified, r12("1/2"), True),
}


def rule_lhs(rule, stats: CutStats) -> RuleVerdict:
    """
    Evaluate the rule's left-hand side on ``stats``.

    Rule 1 applies above its threshold. Rule 2 also applies at equality,
    which leaves the score and drops two color changes. Rule 3 also applies
    at equality when a dotted fiber is hit.
    """
    rule = RuleId(rule)
    form, threshold, strict = RULES[rule]
    lhs = form(stats)
    reason = Tiebreak.NONE
    if lhs > threshold:
        reason = Tiebreak.SCORE
    elif lhs == threshold:
        if rule.family is RuleId.R2:
            reason = Tiebreak.COLOR_CHANGES
        elif rule.family is RuleId.R3 and stats.fd > 0:
            reason = Tiebreak.DOTTED_FIBERS
    return RuleVerdict(rule=rule, lhs=lhs, threshold=threshold, strict=strict,
                       applies=reason is not Tiebreak.NONE, tiebreak_reason=reason)


# ---------------------------------------------------------------------------
# Cuts
# ---------------------------------------------------------------------------

def cut_greens(k: int, cut) -> tuple:
    a, b = cut
    greens = []
    i = (a + 1) % k
    while True:
        greens.append(i)
        if i == b:
            return tuple(greens)
        i = (i + 1) % k


def _check_cut(coloring: CycleColoring, cut) -> tuple:
    k = coloring.cycle.k
    try:
        a, b = (int(x) for x in cut)
    except (TypeError, ValueError):
        raise InvalidCutEnds("A cut is a pair of black edge indices", cut=repr(cut))
    if not (0 <= a < k and 0 <= b < k) or a == b:
        raise InvalidCutEnds(cut=[a, b], k=k)
    return a, b


def cut_family(coloring: CycleColoring, cut) -> RuleId:
    """R1, R2 or R3 according to how many ends of the cut are color changes."""
    a, b = _check_cut(coloring, cut)
    changes = int(coloring.is_change(a)) + int(coloring.is_change(b))
    return (RuleId.R1, RuleId.R3, RuleId.R2)[changes]


def cut_stats(coloring: CycleColoring, artifacts, cut, rule=None) -> CutStats:
    """
    Census of the links and fibers whose score a switch of ``cut`` changes.

    A link is cut when exactly one extremity lies inside the cut; a link or
    fiber is hit when an extremity is an end vertex of a black edge ending
    the cut. Hit variables count extremities, so a link hit at both ends is
    counted twice.

    Raises:
        InvalidCutEnds: when the ends are not two distinct black edges, or
            do not match ``rule``'s end conditions.
    """
    a, b = _check_cut(coloring, cut)
    if rule is not None:
        family = RuleId(rule).family
        if cut_family(coloring, (a, b)) is not family:
            raise InvalidCutEnds("Cut ends do not match the rule", cut=[a, b], rule=RuleId(rule).value)
    cycle = coloring.cycle
    inside = set()
    for i in cut_greens(cycle.k, (a, b)):
        inside.update((cycle.lower(i), cycle.upper(i)))
    hit = set(black_ends(cycle, a)) | set(black_ends(cycle, b))
    dotted = coloring.dotted
    counts = {}

    def bump(name):
        counts[name] = counts.get(name, 0) + 1

    for artifact in artifacts:
        if not artifact.is_link:
            x = artifact.extremities[0]
            if x in hit:
                bump("fd" if x in dotted else "f")
            continue
        width = "B" if artifact.is_broad else "N"
        x, y = artifact.extremities
        is_cut = (x in inside) != (y in inside)
        well = coloring.side_of(x) is not coloring.side_of(y)
        letter = "w" if well else "b"
        touched = False
        for end in (x, y):
            if end not in hit:
                continue
            touched = True
            opposite_dotted = artifact.opposite(end) in dotted
            if end in dotted:
                if opposite_dotted:
                    bump(f"ohd_{width}")
                else:
                    bump(f"{letter}{'ch' if is_cut else 'h'}d_{width}")
            elif opposite_dotted:
                bump(f"oh_{width}")
            else:
                bump(f"{letter}{'ch' if is_cut else 'h'}_{width}")
        if not touched and is_cut and not (x in dotted or y in dotted):
            bump(f"{letter}c_{width}")

    broad_ends = {v for artifact in artifacts if artifact.is_broad for v in artifact.extremities}
    counts["cc_B"] = sum(1 for i in (a, b)
                         if coloring.is_change(i) and broad_ends & set(black_ends(cycle, i)))
    return CutStats(**counts)
