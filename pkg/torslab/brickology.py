"""
Bricks, semibricks and monobricks.

A semibrick is a set of pairwise Hom-orthogonal bricks; a monobrick is a set
of bricks in which every nonzero map between members is injective. Both are
pairwise conditions, so enumeration grows compatible sets (cliques) over the
sorted brick list instead of sweeping every subset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Tuple

from .errors import NotABrick, NotMonobrick, NotSemibrick, TooLarge
from .nakayama import AlgebraSpec, Indec, hom_arrows, hom_dim, indecomposables, is_brick
from .observability import get_logger, log_event
from .subcat import SubcatSet, sim_in, torf_closure

LOG = get_logger("bricks")

SEMIBRICK = "semibrick"
MONOBRICK = "monobrick"
CC_MONOBRICK = "cc-monobrick"


@dataclass(frozen=True)
class BrickSet:
    algebra: AlgebraSpec
    members: FrozenSet[Indec]
    kind: str = SEMIBRICK

    @classmethod
    def of(cls, a: AlgebraSpec, members: Iterable[Indec], kind: str = SEMIBRICK) -> 'BrickSet':
        members = frozenset(members)
        for m in sorted(members):
            if not is_brick(a, m):
                raise NotABrick(f'{m} is not a brick over {a}')
        return cls(a, members, kind)

    def __contains__(self, m: Indec) -> bool:
        return m in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> List[Indec]:
        return sorted(self.members)

    def key(self) -> Tuple[int, Tuple[Indec, ...]]:
        return len(self.members), tuple(sorted(self.members))

    def as_subcat(self) -> SubcatSet:
        return SubcatSet(self.algebra, self.members)

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind, "members": [m.to_dict() for m in sorted(self.members)]}

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.members))) + "}"


def bricks(a: AlgebraSpec) -> List[Indec]:
    return [m for m in indecomposables(a) if is_brick(a, m)]


def _orthogonal(a: AlgebraSpec, m: Indec, n: Indec) -> bool:
    return hom_dim(a, m, n) == 0 and hom_dim(a, n, m) == 0


def _mono_compatible(a: AlgebraSpec, m: Indec, n: Indec) -> bool:
    # arrow-level: two independent maps could differ in injectivity
    return all(arr.injective for arr in hom_arrows(a, m, n) + hom_arrows(a, n, m))


def is_semibrick(s: BrickSet) -> bool:
    a = s.algebra
    ms = s.sorted_members()
    return all(_orthogonal(a, m, n) for i, m in enumerate(ms) for n in ms[i + 1:])


def is_monobrick(s: BrickSet) -> bool:
    a = s.algebra
    ms = s.sorted_members()
    return all(_mono_compatible(a, m, n) for i, m in enumerate(ms) for n in ms[i:])


def _cliques(items: List[Indec], compatible: Callable[[Indec, Indec], bool]) -> List[Tuple[Indec, ...]]:
    out: List[Tuple[Indec, ...]] = []

    def grow(chosen: Tuple[Indec, ...], start: int) -> None:
        out.append(chosen)
        for k in range(start, len(items)):
            if all(compatible(c, items[k]) for c in chosen):
                grow(chosen + (items[k],), k + 1)

    grow((), 0)
    return out


def _enumerate(a: AlgebraSpec, kind: str, compatible, max_bricks: int) -> List[BrickSet]:
    bs = bricks(a)
    if len(bs) > max_bricks:
        raise TooLarge(f'{a} has {len(bs)} bricks; enumeration is capped at {max_bricks}')
    out = sorted((BrickSet(a, frozenset(c), kind) for c in _cliques(bs, compatible)), key=BrickSet.key)
    log_event(LOG, "enumerate_bricksets", algebra=str(a), kind=kind, count=len(out))
    return out


def enumerate_semibricks(a: AlgebraSpec, max_bricks: int = 22) -> List[BrickSet]:
    return _enumerate(a, SEMIBRICK, lambda m, n: _orthogonal(a, m, n), max_bricks)


def enumerate_monobricks(a: AlgebraSpec, max_bricks: int = 22) -> List[BrickSet]:
    return _enumerate(a, MONOBRICK, lambda m, n: _mono_compatible(a, m, n), max_bricks)


def is_cofinally_closed(m: BrickSet) -> bool:
    """
    No brick b outside m keeps m + {b} a monobrick while injecting into a
    member. Any element of a proper cofinal extension is such a b, so single
    bricks suffice.
    """
    if not is_monobrick(m):
        raise NotMonobrick(f'{m} is not a monobrick')
    a = m.algebra
    for b in bricks(a):
        if b in m:
            continue
        if not all(_mono_compatible(a, b, x) for x in m.members):
            continue
        if any(arr.injective for x in m.members for arr in hom_arrows(a, b, x)):
            return False
    return True


def enumerate_cc_monobricks(a: AlgebraSpec, max_bricks: int = 22) -> List[BrickSet]:
    return [BrickSet(a, m.members, CC_MONOBRICK)
            for m in enumerate_monobricks(a, max_bricks) if is_cofinally_closed(m)]


def phi(s: BrickSet) -> BrickSet:
    """Semibrick S to the simples of its torsion-free closure F(S), a cofinally closed monobrick."""
    if not is_semibrick(s):
        raise NotSemibrick(f'{s} is not a semibrick')
    simples = sim_in(torf_closure(s.as_subcat()))
    return BrickSet(s.algebra, simples, CC_MONOBRICK)
