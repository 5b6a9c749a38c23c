"""
Score pairs [a | b] of the structures around a green-black cycle.

``a`` is the weight gain when set A is played and ``b`` when B is. Case
functions return the pair of the matching proof case; a vertex is given as
a ``Seat`` (its set and whether it is dotted). Cases are stated for the
first vertex in set A and mirrored for B.
"""
import logging
from collections import OrderedDict
from dataclasses import dataclass
from enum import Enum

from ..exceptions import UnknownCase
from ..rational import ZERO, Rational12, r12
from .artifacts import Origin
from .coloring import CycleColoring, Side


logger = logging.getLogger(__name__)

COLOR_CHANGE_COST = 4


@dataclass(frozen=True)
class ScorePair:
    a: Rational12 = ZERO
    b: Rational12 = ZERO

    @classmethod
    def of(cls, a, b) -> "ScorePair":
        return cls(r12(a), r12(b))

    @classmethod
    def even(cls, value) -> "ScorePair":
        """[value | value]: a bound only known on average."""
        value = r12(value)
        return cls(value, value)

    @property
    def average(self) -> Rational12:
        return (self.a + self.b).half()

    def at_least(self, other: "ScorePair") -> bool:
        return self.a >= other.a and self.b >= other.b

    def swapped(self) -> "ScorePair":
        return ScorePair(self.b, self.a)

    def for_side(self, side: Side) -> Rational12:
        return self.a if Side(side) is Side.A else self.b

    def __add__(self, other):
        if not isinstance(other, ScorePair):
            return NotImplemented
        return ScorePair(self.a + other.a, self.b + other.b)

    def to_dict(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "average": str(self.average)}

    def __str__(self):
        return f"[{self.a} | {self.b}]"


@dataclass(frozen=True)
class Seat:
    side: Side
    dotted: bool = False

    @classmethod
    def parse(cls, value) -> "Seat":
        """``"A"``, ``"B"``, ``"A*"`` or ``"B*"`` (a star marks a dotted vertex)."""
        if isinstance(value, Seat):
            return value
        text = str(value)
        return cls(Side(text.rstrip("*")), text.endswith("*"))

    def flipped(self) -> "Seat":
        return Seat(self.side.other(), self.dotted)


# ---------------------------------------------------------------------------
# Link and fiber schedule
# ---------------------------------------------------------------------------

def link_average(broad: bool, well: bool, dotted_ends: int) -> Rational12:
    if dotted_ends:
        if broad:
            return r12(1) if dotted_ends == 2 else r12("1/2")
        return ZERO
    if broad:
        return r12(5) if well else r12(-1)
    return r12(4) if well else r12("-1/2")


def fiber_average(dotted: bool) -> Rational12:
    return r12("-1/2") if dotted else ZERO


def link_state(coloring: CycleColoring, artifact) -> tuple:
    """(well colored, dotted extremities) of a link."""
    a, b = artifact.extremities
    well = coloring.side_of(a) is not coloring.side_of(b)
    return well, sum(1 for x in artifact.extremities if x in coloring.dotted)


def artifact_average(coloring: CycleColoring, artifact) -> Rational12:
    if not artifact.is_link:
        return fiber_average(artifact.extremities[0] in coloring.dotted)
    well, dotted_ends = link_state(coloring, artifact)
    return link_average(artifact.is_broad, well, dotted_ends)


def total_score(coloring: CycleColoring, artifacts) -> Rational12:
    """Links and fibers at their average, minus 4 per color change."""
    total = sum((artifact_average(coloring, x) for x in artifacts), ZERO)
    return total - COLOR_CHANGE_COST * len(coloring.changes)


def dotted_fibers(coloring: CycleColoring, artifacts) -> int:
    return sum(1 for x in artifacts if not x.is_link and x.extremities[0] in coloring.dotted)


def baseline(coloring: CycleColoring, artifacts) -> Rational12:
    """5 w_B + 4 w_N - b_B - b_N / 2 over the links, ignoring dots."""
    total = ZERO
    for x in artifacts:
        if x.is_link:
            well, _ = link_state(coloring, x)
            total += link_average(x.is_broad, well, 0)
    return total


# ---------------------------------------------------------------------------
# Structure case tables
# ---------------------------------------------------------------------------

class StructureKind(str, Enum):
    RED_ISLAND = "red_island"
    GREEN_ISLAND = "green_island"
    GREEN_ISTHMUS = "green_isthmus"
    RED_ISTHMUS = "red_isthmus"
    BLACK_DETOUR = "black_detour"
    SPECIAL_BLACK = "special_black"
    SPECIAL_RED = "special_red"
    ISOLATED_3STAR = "isolated_3star"
    ISOLATED_2STAR = "isolated_2star"
    ADJACENT_2STARS = "adjacent_2stars"
    COMMON_NEIGHBOR_2STARS = "common_neighbor_2stars"
    TWO_ONE_TWO = "two_one_two"
    TWO_ONE_NOT_TWO = "two_one_not_two"
    BROAD_LINK = "broad_link"
    NARROW_LINK = "narrow_link"
    FIBER = "fiber"


ROLES = {
    StructureKind.RED_ISLAND: ("u", "v1", "v2"),
    StructureKind.GREEN_ISLAND: ("u1", "u2", "v3", "v4"),
    StructureKind.GREEN_ISTHMUS: ("u1", "u2"),
    StructureKind.RED_ISTHMUS: ("u1", "u2"),
    StructureKind.BLACK_DETOUR: ("u",),
    StructureKind.SPECIAL_BLACK: ("u",),
    StructureKind.SPECIAL_RED: ("u",),
    StructureKind.ISOLATED_3STAR: ("v1", "v2", "v3"),
    StructureKind.ISOLATED_2STAR: ("u1", "u2"),
    StructureKind.ADJACENT_2STARS: ("u1", "u2", "v1", "v2"),
    StructureKind.COMMON_NEIGHBOR_2STARS: ("u1", "u2", "v1", "v2"),
    StructureKind.TWO_ONE_TWO: ("u1", "u2", "v1", "w1", "w2"),
    StructureKind.TWO_ONE_NOT_TWO: ("u1", "u2", "v1"),
    StructureKind.BROAD_LINK: ("x", "y"),
    StructureKind.NARROW_LINK: ("x", "y"),
    StructureKind.FIBER: ("x",),
}


def _mirrored(case):
    """Run ``case`` with the first seat moved to A, swapping the pair back when it was in B."""

    def wrapper(seats: OrderedDict) -> ScorePair:
        first = next(iter(seats.values()))
        if first.side is Side.A:
            return case(seats)
        flipped = OrderedDict((role, seat.flipped()) for role, seat in seats.items())
        return case(flipped).swapped()

    wrapper.__name__ = case.__name__
    wrapper.__doc__ = case.__doc__
    return wrapper


def _amber(seat: Seat) -> bool:
    return seat.side is Side.A


@_mirrored
def _red_island(s) -> ScorePair:
    u, v1, v2 = s["u"], s["v1"], s["v2"]
    if not _amber(v1) or not _amber(v2):
        return ScorePair.of(2, 0)
    if not u.dotted:
        return ScorePair.of(2, -1)
    return ScorePair.of(2, 0)


@_mirrored
def _special_red(s) -> ScorePair:
    return ScorePair.of(2, 0) if s["u"].dotted else ScorePair.of(2, -1)


def _zero(s) -> ScorePair:
    return ScorePair.of(0, 0)


def _green_island(s) -> ScorePair:
    order = ["u1", "u2", "v3", "v4"]
    if not any(s[r].dotted for r in order):
        return ScorePair.of(1, 1)
    first = next(r for r in order if s[r].dotted)
    # Rename so that the first dotted vertex plays u1, and mirror it into A.
    if first in ("v3", "v4"):
        mapping = {"u1": "v3", "u2": "v4", "v3": "u1", "v4": "u2"}
        s = OrderedDict((role, s[mapping[role]]) for role in order)
        first = mapping[first]
    if first == "u2":
        s = OrderedDict((("u1", s["u2"]), ("u2", s["u1"]), ("v3", s["v3"]), ("v4", s["v4"])))
    return _green_island_dotted(OrderedDict((role, s[role]) for role in order))


@_mirrored
def _green_island_dotted(s) -> ScorePair:
    v3, v4 = s["v3"], s["v4"]
    if any(_amber(v) and v.dotted for v in (v3, v4)):
        return ScorePair.of(0, 0)
    if not _amber(v3) or not _amber(v4):
        return ScorePair.of(0, 2)
    return ScorePair.of(1, -1)


@_mirrored
def _green_isthmus(s) -> ScorePair:
    u1, u2 = s["u1"], s["u2"]
    any_dotted = u1.dotted or u2.dotted
    if u1.side is not u2.side:
        return ScorePair.of(0, 0) if any_dotted else ScorePair.of(1, 1)
    return ScorePair.of(1, 0) if any_dotted else ScorePair.of(1, -1)


def _isolated_3star(s) -> ScorePair:
    v1, v2, v3 = s["v1"], s["v2"], s["v3"]
    if v1.dotted or v2.dotted:
        x, others = (v1, (v2, v3)) if v1.dotted else (v2, (v1, v3))
        cornered = all(o.dotted and o.side is not x.side for o in others)
        pair = ScorePair.of(0, 1) if cornered else ScorePair.of(1, 0)
        return pair if x.side is Side.A else pair.swapped()
    if v1.side is not v2.side:
        if not v3.dotted:
            in_b = sum(1 for v in (v1, v2, v3) if v.side is Side.B)
            return ScorePair.of(4 + in_b, 4 + 3 - in_b)
        return ScorePair.of(5, 2) if v3.side is Side.A else ScorePair.of(2, 5)
    return _isolated_3star_bad(OrderedDict((("v1", v1), ("v2", v2), ("v3", v3))))


@_mirrored
def _isolated_3star_bad(s) -> ScorePair:
    v3 = s["v3"]
    if not v3.dotted:
        return ScorePair.of(4, -5) if _amber(v3) else ScorePair.of(4, 6)
    return ScorePair.of(4, -2) if _amber(v3) else ScorePair.of(1, 6)


@_mirrored
def _isolated_2star(s) -> ScorePair:
    u1, u2 = s["u1"], s["u2"]
    if _amber(u2):
        return ScorePair.of(3, 0 if (u1.dotted or u2.dotted) else -2)
    return ScorePair.of(0 if u2.dotted else 4, 0 if u1.dotted else 4)


def _adjacent_2stars(s) -> ScorePair:
    u1, u2, v1, v2 = s["u1"], s["u2"], s["v1"], s["v2"]
    u_dots = int(u1.dotted) + int(u2.dotted)
    v_dots = int(v1.dotted) + int(v2.dotted)
    u_well = u1.side is not u2.side
    v_well = v1.side is not v2.side
    if not u_dots and not v_dots:
        return ScorePair.even(link_average(True, u_well, 0) + link_average(True, v_well, 0))
    if u_dots and v_dots:
        in_a = sum(1 for x in (u1, u2, v1, v2) if _amber(x))
        if in_a != 2:
            return ScorePair.even("5/2")
        return ScorePair.even(2 if u_well else 1)
    dots, other_well = (u_dots, v_well) if u_dots else (v_dots, u_well)
    if other_well:
        return ScorePair.even("11/2" if dots == 1 else 6)
    return ScorePair.even("-1/2" if dots == 1 else "1/2")


def _common_neighbor_2stars(s) -> ScorePair:
    w = [s["u1"], s["u2"], s["v1"], s["v2"]]
    in_a = sum(1 for x in w if _amber(x))
    if not any(x.dotted for x in w):
        return ScorePair.of(4 - in_a, in_a)
    if in_a in (0, 4):
        return ScorePair.even(1)
    u_mono = w[0].side is w[1].side
    v_mono = w[2].side is w[3].side
    if u_mono and v_mono:
        return ScorePair.even("5/2")
    if in_a in (1, 3):
        majority = Side.A if in_a == 3 else Side.B
        if any(x.dotted for x in w if x.side is majority):
            return ScorePair.even("1/2")
        return ScorePair.of(0, 0)
    return ScorePair.of(0, 0)


def _two_one_two(s) -> ScorePair:
    w = [s["u1"], s["u2"], s["w1"], s["w2"]]
    v1 = s["v1"]
    dotted = sum(1 for x in w if x.dotted)
    if dotted == 2:
        return ScorePair.even("-1/2")
    if dotted > 2:
        return ScorePair.of(0, 0)

    def played(side: Side) -> int:
        gain = 0
        for x in w:
            if x.side is not side:
                gain += -3 if x.dotted else 1
        if v1.dotted or v1.side is not side:
            gain += 1
        return gain

    return ScorePair.of(played(Side.A), played(Side.B))


def _two_one_not_two(s) -> ScorePair:
    u1, u2 = s["u1"], s["u2"]
    if u1.dotted or u2.dotted:
        return ScorePair.of(0, 0)
    return ScorePair.even(link_average(False, u1.side is not u2.side, 0))


def _link(broad: bool):
    def case(s) -> ScorePair:
        x, y = s["x"], s["y"]
        return ScorePair.even(link_average(broad, x.side is not y.side, int(x.dotted) + int(y.dotted)))
    return case


def _fiber(s) -> ScorePair:
    return ScorePair.even(fiber_average(s["x"].dotted))


CASES = {
    StructureKind.RED_ISLAND: _red_island,
    StructureKind.GREEN_ISLAND: _green_island,
    StructureKind.GREEN_ISTHMUS: _green_isthmus,
    StructureKind.RED_ISTHMUS: _zero,
    StructureKind.BLACK_DETOUR: _zero,
    StructureKind.SPECIAL_BLACK: _zero,
    StructureKind.SPECIAL_RED: _special_red,
    StructureKind.ISOLATED_3STAR: _isolated_3star,
    StructureKind.ISOLATED_2STAR: _isolated_2star,
    StructureKind.ADJACENT_2STARS: _adjacent_2stars,
    StructureKind.COMMON_NEIGHBOR_2STARS: _common_neighbor_2stars,
    StructureKind.TWO_ONE_TWO: _two_one_two,
    StructureKind.TWO_ONE_NOT_TWO: _two_one_not_two,
    StructureKind.BROAD_LINK: _link(True),
    StructureKind.NARROW_LINK: _link(False),
    StructureKind.FIBER: _fiber,
}


def structure_score(kind, **context) -> ScorePair:
    """
    Score pair of one structure given the seats of its cycle vertices.

    Raises:
        UnknownCase: for an unknown kind or when a role is missing or extra.
    """
    try:
        kind = StructureKind(kind)
    except ValueError:
        raise UnknownCase("Unknown structure kind", kind=str(kind))
    roles = ROLES[kind]
    if set(context) != set(roles):
        raise UnknownCase("Context does not match the structure's roles", kind=kind.value,
                          expected=list(roles), given=sorted(context))
    try:
        seats = OrderedDict((role, Seat.parse(context[role])) for role in roles)
    except ValueError as exc:
        raise UnknownCase("Unreadable seat in context", kind=kind.value, reason=str(exc))
    return CASES[kind](seats)


# ---------------------------------------------------------------------------
# Artifact groups
# ---------------------------------------------------------------------------

# Configurations whose proof case beats the schedule of their artifacts.
GROUP_KINDS = {
    Origin.ISOLATED_3STAR: StructureKind.ISOLATED_3STAR,
    Origin.TWO_ONE_TWO: StructureKind.TWO_ONE_TWO,
}


def seat_of(coloring: CycleColoring, vertex: int) -> Seat:
    return Seat(coloring.side_of(vertex), vertex in coloring.dotted)


def group_pairs(coloring: CycleColoring, artifacts) -> list:
    """
    (label, ScorePair) per scoring unit: a whole configuration when its
    proof case is tabulated, otherwise one artifact at its schedule value.
    """
    pairs = []
    seen = set()
    for artifact in artifacts:
        kind = GROUP_KINDS.get(artifact.origin)
        if kind is not None and artifact.roles:
            key = (artifact.origin, artifact.group)
            if key in seen:
                continue
            seen.add(key)
            context = {role: seat_of(coloring, vertex) for role, vertex in artifact.roles}
            pairs.append((kind.value, structure_score(kind, **context)))
            continue
        pairs.append((artifact.kind.value, ScorePair.even(artifact_average(coloring, artifact))))
    return pairs
