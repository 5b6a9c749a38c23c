"""
Scores of maximal alternating green-black paths.

``score_path`` and ``score_reverse`` count islands with coefficient 2 on
both colors; the ``_prose`` variants give a green island 1, which is what
the itemised per-structure accounting adds up to. Reports carry both.
"""
import logging
from dataclasses import asdict, dataclass
from enum import Enum

from ..exceptions import DominationError, Unclassifiable
from ..multigraph import ColoredMultigraph
from ..rational import Rational12, r12
from .alternating import find_max_paths
from .extremity import ExtremityType, classify_extremity
from .neighbors import ISTHMUS_KINDS, SPECIAL_KINDS, NeighborKind, edge_share, neighbor_edges


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathAnnotation:
    t1: int = 0
    t1p: int = 0
    k: int = 1
    r_island: int = 0
    g_island: int = 0
    n_isthmus: int = 0
    n_isthmus_p: int = 0
    m_isthmus: int = 0
    b_detour: int = 0
    b_detour_p: int = 0

    def counting_holds(self, lower_slack: int = 0) -> bool:
        """k-1 bounds the upper census; k-1-lower_slack bounds the lower one."""
        return (self.k - 1 >= 2 * self.n_isthmus + self.b_detour
                and self.k - 1 - lower_slack >= 2 * self.n_isthmus_p + self.b_detour_p)

    def reversed(self) -> "PathAnnotation":
        return PathAnnotation(
            t1=self.t1p, t1p=self.t1, k=self.k, r_island=self.r_island, g_island=self.g_island,
            n_isthmus=self.n_isthmus_p, n_isthmus_p=self.n_isthmus, m_isthmus=self.m_isthmus,
            b_detour=self.b_detour_p, b_detour_p=self.b_detour,
        )

    def to_dict(self) -> dict:
        return asdict(self)


def _body(a: PathAnnotation, green_coefficient: int) -> int:
    """(k-1) + islands + isthmuses - lower detours, from the forward side."""
    return ((a.k - 1) + 2 * a.r_island + green_coefficient * a.g_island
            + (a.n_isthmus + a.m_isthmus - 3 * a.n_isthmus_p) - a.b_detour_p)


def score_path(a: PathAnnotation) -> Rational12:
    return r12((1 + a.t1) - a.t1p + _body(a, 2))


def score_reverse(a: PathAnnotation) -> Rational12:
    return score_path(a.reversed())


def score_path_prose(a: PathAnnotation) -> Rational12:
    return r12((1 + a.t1) - a.t1p + _body(a, 1))


def score_reverse_prose(a: PathAnnotation) -> Rational12:
    return score_path_prose(a.reversed())


class Terminal(str, Enum):
    SPECIAL_RED = "special_red"
    SPECIAL_BLACK = "special_black"


class Side(str, Enum):
    AT_UPPER = "at_upper"
    AT_LOWER = "at_lower"


def score_truncated(a: PathAnnotation, terminal: Terminal, side: Side) -> tuple:
    """
    (forward, reverse) scores of the prefix Q ending at the first special
    edge; ``a.k`` is q and ``a.t1`` describes the start of Q.

    At an upper node the prefix is scored with Strategy 1 at its start, the
    terminal costing 1 forward, and 0 (red) or 1 (black) in reverse. At a
    lower node Strategy 2 goes first and the terminal gains 1 forward while
    costing 1 in reverse.
    """
    terminal = Terminal(terminal)
    side = Side(side)
    upper_side = _body(a, 2)
    lower_side = _body(a.reversed(), 2)
    if side is Side.AT_UPPER:
        forward = (1 + a.t1) - 1 + upper_side
        reverse = -a.t1 + lower_side
        if terminal is Terminal.SPECIAL_BLACK:
            reverse -= 1
        return r12(forward), r12(reverse)
    forward = -a.t1 + 1 + (lower_side - 1)
    reverse = (1 + a.t1) - 1 + upper_side
    return r12(forward), r12(reverse)


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------

def _t1(m, path, end) -> int:
    return int(classify_extremity(m, path, end) is ExtremityType.T1)


def census(m: ColoredMultigraph, path, t1: int = 0, t1p: int = 0) -> tuple:
    """(PathAnnotation, neighbour edges) for ``path`` with the given extremity flags."""
    neighbours = neighbor_edges(m, path)
    red_islands, green_islands = set(), set()
    isthmus_sides = {}
    b_detour = b_detour_p = 0
    for ne in neighbours:
        if ne.kind is NeighborKind.RED_ISLAND:
            red_islands.add(ne.group)
        elif ne.kind is NeighborKind.GREEN_ISLAND:
            green_islands.add(ne.group)
        elif ne.kind in ISTHMUS_KINDS:
            isthmus_sides.setdefault(ne.group, []).append(ne.upper)
        elif ne.kind is NeighborKind.BLACK_DETOUR:
            if ne.upper:
                b_detour += 1
            else:
                b_detour_p += 1
    uppers = [sum(sides) for sides in isthmus_sides.values()]
    annotation = PathAnnotation(
        t1=t1, t1p=t1p, k=path.k,
        r_island=len(red_islands), g_island=len(green_islands),
        n_isthmus=sum(1 for c in uppers if c >= 2),
        n_isthmus_p=sum(1 for c in uppers if c == 0),
        m_isthmus=sum(1 for c in uppers if c == 1),
        b_detour=b_detour, b_detour_p=b_detour_p,
    )
    return annotation, neighbours


def annotate(m: ColoredMultigraph, path) -> PathAnnotation:
    """
    Raises:
        Unclassifiable: when an extremity or a neighbour edge fits no known structure.
    """
    annotation, _ = census(m, path, t1=_t1(m, path, path.start), t1p=_t1(m, path, path.end))
    return annotation


def first_special(neighbours, path):
    """(node, neighbour edge) of the earliest internal node carrying a special edge, or None."""
    order = {node: i for i, node in enumerate(path.nodes)}
    specials = sorted((ne for ne in neighbours if ne.kind in SPECIAL_KINDS),
                      key=lambda ne: (order[ne.at], ne.edge))
    return (specials[0].at, specials[0]) if specials else None


def truncation(m: ColoredMultigraph, path, neighbours, t1: int) -> dict:
    """Scores of the prefix ending at the first special edge, or None when there is none."""
    found = first_special(neighbours, path)
    if found is None:
        return None
    node, special = found
    index = path.nodes.index(node)
    prefix = path.prefix(index + 1)
    annotation, _ = census(m, prefix, t1=t1)
    terminal = Terminal(special.kind.value)
    side = Side.AT_UPPER if index % 2 == 1 else Side.AT_LOWER
    forward, reverse = score_truncated(annotation, terminal, side)
    return {
        "node": node,
        "edge": special.edge,
        "terminal": terminal.value,
        "side": side.value,
        "q": prefix.k,
        "annotation": annotation.to_dict(),
        "forward": str(forward),
        "reverse": str(reverse),
        "sum": str(forward + reverse),
    }


def _shares(neighbours) -> list:
    isthmus_uppers = {}
    for ne in neighbours:
        if ne.kind in ISTHMUS_KINDS:
            isthmus_uppers[ne.group] = isthmus_uppers.get(ne.group, 0) + int(ne.upper)
    rows = []
    for ne in neighbours:
        row = ne.to_dict()
        if ne.kind not in SPECIAL_KINDS and ne.kind is not NeighborKind.WELL_BEHAVED:
            share = edge_share(ne.kind, upper_incidences=isthmus_uppers.get(ne.group, 0),
                               removal=ne.removal, center=ne.far)
            row["share"] = share.to_dict()
        rows.append(row)
    return rows


def path_entry(m: ColoredMultigraph, path) -> dict:
    entry = {"path": path.to_dict()}
    try:
        start_type = classify_extremity(m, path, path.start)
        end_type = classify_extremity(m, path, path.end)
        t1 = int(start_type is ExtremityType.T1)
        t1p = int(end_type is ExtremityType.T1)
        annotation, neighbours = census(m, path, t1=t1, t1p=t1p)
    except Unclassifiable as exc:
        logger.info("Path starting at node %d is unclassifiable: %s", path.start, exc.message)
        entry["error"] = {"code": exc.code, "message": exc.message, **exc.details}
        return entry
    forward, reverse = score_path(annotation), score_reverse(annotation)
    forward_prose, reverse_prose = score_path_prose(annotation), score_reverse_prose(annotation)
    entry.update({
        "extremities": {"start": start_type.value, "end": end_type.value},
        "annotation": annotation.to_dict(),
        "score": str(forward),
        "score_reverse": str(reverse),
        "score_sum": str(forward + reverse),
        "score_prose": str(forward_prose),
        "score_reverse_prose": str(reverse_prose),
        "coefficients_agree": annotation.g_island == 0,
        "neighbors": _shares(neighbours),
        "truncation": truncation(m, path, neighbours, t1),
    })
    return entry


def path_report(m: ColoredMultigraph) -> dict:
    """JSON-ready scores of every maximal alternating path plus the alternating cycles found."""
    try:
        paths, cycles = find_max_paths(m)
    except DominationError as exc:
        return {"error": {"code": exc.code, "message": exc.message}}
    return {
        "paths": [path_entry(m, path) for path in paths],
        "cycles": [cycle.to_dict() for cycle in cycles],
    }
