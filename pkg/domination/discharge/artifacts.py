"""
Links and fibers hung on a green-black cycle by the black stars around it.

A black star is a node whose three edges are black; it is a j-star for the
cycle when j of its neighbours lie on the cycle.
"""
from dataclasses import dataclass
from enum import Enum

from ..multigraph import Color, ColoredMultigraph
from ..paths.alternating import GreenBlackCycle


class ArtifactKind(str, Enum):
    NARROW_LINK = "narrow_link"
    BROAD_LINK = "broad_link"
    FIBER = "fiber"

    @property
    def is_link(self) -> bool:
        return self is not ArtifactKind.FIBER


class Origin(str, Enum):
    ISOLATED_3STAR = "isolated_3star"
    ADJACENT_2STARS = "adjacent_2stars"
    TWO_ONE_TWO = "two_one_two"
    TWO_ONE_NOT_TWO = "two_one_not_two"


@dataclass(frozen=True)
class Artifact:
    kind: ArtifactKind
    extremities: tuple
    origin: Origin = None
    # Star centres of the configuration; artifacts sharing them are scored together.
    group: tuple = ()
    # (role, cycle vertex) pairs of the whole configuration.
    roles: tuple = ()

    def __post_init__(self):
        expected = 2 if self.kind.is_link else 1
        if len(self.extremities) != expected:
            raise ValueError(f"{self.kind.value} needs {expected} extremities, got {len(self.extremities)}")

    @property
    def is_link(self) -> bool:
        return self.kind.is_link

    @property
    def is_broad(self) -> bool:
        return self.kind is ArtifactKind.BROAD_LINK

    def opposite(self, vertex: int) -> int:
        a, b = self.extremities
        return b if vertex == a else a

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "extremities": list(self.extremities),
            "origin": None if self.origin is None else self.origin.value,
            "group": list(self.group),
            "roles": {role: vertex for role, vertex in self.roles},
        }


def narrow_link(a: int, b: int, **kwargs) -> Artifact:
    return Artifact(ArtifactKind.NARROW_LINK, (a, b), **kwargs)


def broad_link(a: int, b: int, **kwargs) -> Artifact:
    return Artifact(ArtifactKind.BROAD_LINK, (a, b), **kwargs)


def fiber(x: int, **kwargs) -> Artifact:
    return Artifact(ArtifactKind.FIBER, (x,), **kwargs)


def _black_neighbors(m: ColoredMultigraph, x: int) -> list:
    return [e.other(x) for e in m.edges_at(x) if e.color is Color.BLACK and not e.is_loop]


def attach_artifacts(m: ColoredMultigraph, cycle: GreenBlackCycle) -> list:
    """
    Links and fibers of ``cycle`` in M:

    - an isolated 3-star gets a narrow link between its first two cycle
      neighbours and a fiber on the third;
    - two adjacent isolated 2-stars get a broad link each;
    - a 1-star between two 2-stars puts a fiber on the four cycle
      neighbours of the 2-stars;
    - a 2-star next to a 1-star whose third neighbour is off the cycle and
      not a 2-star gets a narrow link.

    Cycle neighbours are ordered by their position on the cycle.
    """
    position = {x: i for i, x in enumerate(cycle.nodes)}
    on_cycle = set(position)

    def by_position(xs):
        return sorted(xs, key=position.__getitem__)

    stars = {}
    for x in m.nodes:
        if x in on_cycle or not m.is_black_star(x):
            continue
        neighbours = _black_neighbors(m, x)
        if len(set(neighbours)) != 3:
            continue
        stars[x] = by_position(y for y in neighbours if y in on_cycle)

    def j_star(x, j):
        return x in stars and len(stars[x]) == j

    def off_cycle(x):
        return [y for y in _black_neighbors(m, x) if y not in on_cycle]

    artifacts = []
    done = set()
    for center in sorted(stars, key=lambda x: min(position[y] for y in stars[x]) if stars[x] else -1):
        attached = stars[center]
        if len(attached) == 3:
            v1, v2, v3 = attached
            roles = (("v1", v1), ("v2", v2), ("v3", v3))
            kwargs = dict(origin=Origin.ISOLATED_3STAR, group=(center,), roles=roles)
            artifacts.append(narrow_link(v1, v2, **kwargs))
            artifacts.append(fiber(v3, **kwargs))
            continue
        if len(attached) != 2 or center in done:
            continue
        (x,) = off_cycle(center)
        u1, u2 = attached
        if j_star(x, 2):
            v1, v2 = stars[x]
            group = tuple(sorted((center, x)))
            roles = (("u1", u1), ("u2", u2), ("v1", v1), ("v2", v2))
            kwargs = dict(origin=Origin.ADJACENT_2STARS, group=group, roles=roles)
            artifacts.append(broad_link(u1, u2, **kwargs))
            artifacts.append(broad_link(v1, v2, **kwargs))
            done.update(group)
        elif j_star(x, 1):
            (v1,) = stars[x]
            others = [y for y in off_cycle(x) if y != center]
            if not others:
                continue
            w = others[0]
            if j_star(w, 2):
                w1, w2 = stars[w]
                roles = (("u1", u1), ("u2", u2), ("v1", v1), ("w1", w1), ("w2", w2))
                kwargs = dict(origin=Origin.TWO_ONE_TWO, group=(center, x, w), roles=roles)
                artifacts.extend(fiber(y, **kwargs) for y in (u1, u2, w1, w2))
                done.update((center, w))
            else:
                roles = (("u1", u1), ("u2", u2), ("v1", v1))
                artifacts.append(narrow_link(u1, u2, origin=Origin.TWO_ONE_NOT_TWO,
                                             group=(center, x), roles=roles))
                done.add(center)
    return artifacts
