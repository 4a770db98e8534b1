"""
Per-algebra cache of everything the checks share: enumerations, lattices,
minimal (co-)extending sets. Built lazily so a suite of a few checks only
pays for what it touches.
"""

from functools import cached_property
from typing import Dict, FrozenSet, List, Optional

from ..brickology import BrickSet, bricks, enumerate_cc_monobricks, enumerate_monobricks, enumerate_semibricks
from ..config import WorkbenchConfig, get_config
from ..errors import TooLarge
from ..nakayama import AlgebraSpec, Indec, indecomposables
from ..subcat import (TORF, TORS, WIDE, SubcatSet, TorsLattice, enumerate_by_closure, enumerate_classes,
                      minimal_coextending, minimal_extending)


class Instance:
    def __init__(self, a: AlgebraSpec, config: Optional[WorkbenchConfig] = None):
        self.algebra = a
        self.config = config or get_config()
        self._me: Dict[FrozenSet[Indec], FrozenSet[Indec]] = {}
        self._mce: Dict[FrozenSet[Indec], FrozenSet[Indec]] = {}

    @property
    def p(self) -> int:
        return self.config.field

    @cached_property
    def indecs(self) -> List[Indec]:
        return list(indecomposables(self.algebra))

    @cached_property
    def bricks(self) -> List[Indec]:
        return bricks(self.algebra)

    @property
    def brute_force(self) -> bool:
        return len(self.indecs) <= self.config.max_indecs

    def _classes(self, kind: str) -> List[SubcatSet]:
        if self.brute_force:
            return enumerate_classes(self.algebra, kind, max_indecs=self.config.max_indecs,
                                     jobs=self.config.jobs, bound=self.config.wide_bound, p=self.p)
        return enumerate_by_closure(self.algebra, kind)

    @cached_property
    def tors(self) -> List[SubcatSet]:
        return self._classes(TORS)

    @cached_property
    def torf(self) -> List[SubcatSet]:
        return self._classes(TORF)

    @cached_property
    def tors_by_closure(self) -> List[SubcatSet]:
        return enumerate_by_closure(self.algebra, TORS)

    @cached_property
    def torf_by_closure(self) -> List[SubcatSet]:
        return enumerate_by_closure(self.algebra, TORF)

    @cached_property
    def wide(self) -> List[SubcatSet]:
        if not self.brute_force:
            raise TooLarge(f'{self.algebra} has {len(self.indecs)} indecomposables; '
                           f'wide enumeration is capped at {self.config.max_indecs}')
        return enumerate_classes(self.algebra, WIDE, max_indecs=self.config.max_indecs,
                                 jobs=self.config.jobs, bound=self.config.wide_bound, p=self.p)

    @cached_property
    def semibricks(self) -> List[BrickSet]:
        return enumerate_semibricks(self.algebra, self.config.max_bricks)

    @cached_property
    def monobricks(self) -> List[BrickSet]:
        return enumerate_monobricks(self.algebra, self.config.max_bricks)

    @cached_property
    def cc_monobricks(self) -> List[BrickSet]:
        return enumerate_cc_monobricks(self.algebra, self.config.max_bricks)

    @cached_property
    def tors_lattice(self) -> TorsLattice:
        return TorsLattice(self.algebra, TORS, self.tors)

    @cached_property
    def torf_lattice(self) -> TorsLattice:
        return TorsLattice(self.algebra, TORF, self.torf)

    def me(self, t: SubcatSet) -> FrozenSet[Indec]:
        if t.members not in self._me:
            self._me[t.members] = minimal_extending(t, self.p, self.config.max_ext_classes)
        return self._me[t.members]

    def mce(self, f: SubcatSet) -> FrozenSet[Indec]:
        if f.members not in self._mce:
            self._mce[f.members] = minimal_coextending(f, self.p, self.config.max_ext_classes)
        return self._mce[f.members]

    def subcat(self, members) -> SubcatSet:
        return SubcatSet.of(self.algebra, members)
