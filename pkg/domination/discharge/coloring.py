"""
Amber/Blue colorings of alternating green-black cycles.

Green i joins lower(i) and upper(i); black i joins upper(i) and
lower(i + 1 mod k). Set A takes the lower end of every Amber green and the
upper end of every Blue green; B takes the rest. A black edge whose two
greens differ is a color change and both its extremities are dotted.
"""
from dataclasses import dataclass
from enum import Enum

from ..multigraph import ColoredMultigraph
from ..paths.alternating import GreenBlackCycle, decompose


class Shade(str, Enum):
    AMBER = "amber"
    BLUE = "blue"

    def switched(self) -> "Shade":
        return Shade.BLUE if self is Shade.AMBER else Shade.AMBER


class Side(str, Enum):
    A = "A"
    B = "B"

    def other(self) -> "Side":
        return Side.B if self is Side.A else Side.A


def find_cycles(m: ColoredMultigraph) -> list:
    """Every alternating green-black cycle of M, disjoint on green edges."""
    return list(decompose(m).cycles)


def abstract_cycle(k: int) -> GreenBlackCycle:
    """A cycle on nodes 0 .. 2k-1 (lower(i) = 2i, upper(i) = 2i + 1) without a multigraph behind it."""
    if k < 1:
        raise ValueError("a green-black cycle needs at least one green edge")
    nodes = tuple(range(2 * k))
    return GreenBlackCycle(nodes=nodes, greens=tuple(range(k)), blacks=tuple(range(k, 2 * k)))


def black_ends(cycle: GreenBlackCycle, i: int) -> tuple:
    """(upper(i), lower(i + 1)): the two extremities of black edge i."""
    return cycle.upper(i), cycle.lower((i + 1) % cycle.k)


@dataclass(frozen=True)
class CycleColoring:
    cycle: GreenBlackCycle
    shades: tuple
    set_a: frozenset
    set_b: frozenset
    dotted: frozenset
    changes: tuple

    def side_of(self, vertex: int) -> Side:
        if vertex in self.set_a:
            return Side.A
        if vertex in self.set_b:
            return Side.B
        raise ValueError(f"vertex {vertex} is not on the cycle")

    def is_change(self, i: int) -> bool:
        return i in self.changes

    @property
    def dotted_amber(self) -> frozenset:
        return self.dotted & self.set_a

    @property
    def dotted_blue(self) -> frozenset:
        return self.dotted & self.set_b

    def switched(self, greens) -> "CycleColoring":
        """The coloring with the given greens switched."""
        flip = set(greens)
        return derive_sets(self.cycle, [s.switched() if i in flip else s for i, s in enumerate(self.shades)])

    def to_dict(self) -> dict:
        return {
            "shades": [s.value for s in self.shades],
            "A": sorted(self.set_a),
            "B": sorted(self.set_b),
            "dotted": sorted(self.dotted),
            "changes": list(self.changes),
        }


def derive_sets(cycle: GreenBlackCycle, shades) -> CycleColoring:
    shades = tuple(Shade(s) for s in shades)
    if len(shades) != cycle.k:
        raise ValueError(f"{len(shades)} shades for a cycle with {cycle.k} green edges")
    set_a, set_b = set(), set()
    for i, shade in enumerate(shades):
        lower, upper = cycle.lower(i), cycle.upper(i)
        if shade is Shade.AMBER:
            set_a.add(lower)
            set_b.add(upper)
        else:
            set_a.add(upper)
            set_b.add(lower)
    changes = tuple(i for i in range(cycle.k) if shades[i] is not shades[(i + 1) % cycle.k])
    dotted = set()
    for i in changes:
        dotted.update(black_ends(cycle, i))
    return CycleColoring(cycle=cycle, shades=shades, set_a=frozenset(set_a), set_b=frozenset(set_b),
                         dotted=frozenset(dotted), changes=changes)


def all_amber(cycle: GreenBlackCycle) -> CycleColoring:
    return derive_sets(cycle, [Shade.AMBER] * cycle.k)
