"""
Finite lattice toolkit.

Order queries, semidistributivity, join/meet-irreducibles, the Hasse quiver
with its meet-irreducible labeling, the kappa map, canonical join
representations, the extended kappa map and the kappa order.

Element ids are dense integers 0..n-1. The order is a read-only boolean
numpy matrix, leq[i, j] iff i <= j. Everything derived from it is computed
lazily and cached; instances are never mutated after construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .errors import (NoUniqueMax, NotALattice, NotAPoset, NotCanonical, NotJoinIrreducible,
                     TooLarge, UnknownElement)
from .observability import get_logger, log_event

LOG = get_logger("lattice")

MEET = "meet"
JOIN = "join"


@dataclass(frozen=True)
class HasseArrow:
    """a -> b with a covering b."""
    src: int
    dst: int


def _closure(rel: np.ndarray) -> np.ndarray:
    'Reflexive-transitive closure of a boolean relation by repeated squaring'
    n = len(rel)
    out = rel.copy()
    out[np.diag_indices(n)] = True
    while True:
        step = out | ((out.astype(np.int64) @ out.astype(np.int64)) > 0)
        if (step == out).all():
            return out
        out = step


class FinPoset:
    """
    Immutable finite partial order on range(n).

    `labels` remembers, for posets carved out of a bigger structure (the kappa
    poset lives on L_0), which outer id each element stands for.
    """

    def __init__(self, leq: np.ndarray, labels: Optional[Sequence[int]] = None):
        assert leq.dtype == bool, 'leq must be a boolean numpy array'
        n = leq.shape[0]
        assert tuple(leq.shape) == (n, n), f'leq must be square {leq.shape}'
        leq = leq.copy()
        leq.flags.writeable = False
        self.n = n
        self.leq = leq
        self.labels: Tuple[int, ...] = tuple(labels) if labels is not None else tuple(range(n))

    @classmethod
    def from_pairs(cls, n: int, leq_pairs: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[int]] = None) -> 'FinPoset':
        rel = np.zeros((n, n), dtype=bool)
        for a, b in leq_pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise UnknownElement(f'Pair ({a}, {b}) outside 0..{n - 1}')
            rel[a, b] = True
        return cls.from_relation(rel, labels)

    @classmethod
    def from_relation(cls, rel: np.ndarray, labels: Optional[Sequence[int]] = None) -> 'FinPoset':
        leq = _closure(np.asarray(rel, dtype=bool))
        both = leq & leq.T
        both[np.diag_indices(len(leq))] = False
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise NotAPoset(f'Cycle through {i} and {j}: antisymmetry fails')
        return cls(leq, labels)

    def __repr__(self):
        return f'{self.__class__.__name__}(n={self.n}, covers={len(self.hasse_arrows())})'

    def _check(self, x: int) -> int:
        if not (isinstance(x, (int, np.integer)) and 0 <= x < self.n):
            raise UnknownElement(f'Unknown element {x!r} (poset has {self.n} elements)')
        return int(x)

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[self._check(a), self._check(b)])

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.le(a, b)

    @cached_property
    def child(self) -> np.ndarray:
        'child[i, j] iff j covers i'
        lt = self.leq.copy()
        lt[np.diag_indices_from(lt)] = False
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        out = lt & ~between
        out.flags.writeable = False
        return out

    @cached_property
    def lower_covers(self) -> List[List[int]]:
        child = self.child
        return [[int(j) for j in np.flatnonzero(child[:, i])] for i in range(self.n)]

    @cached_property
    def upper_covers(self) -> List[List[int]]:
        child = self.child
        return [[int(j) for j in np.flatnonzero(child[i, :])] for i in range(self.n)]

    def hasse_arrows(self) -> List[HasseArrow]:
        'Arrows a -> b of the Hasse quiver, ordered by (a, b)'
        return [HasseArrow(a, b) for a in range(self.n) for b in self.lower_covers[a]]

    def longest_chain(self) -> int:
        'Number of elements in a longest strict chain'
        if self.n == 0:
            return 0
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((a.dst, a.src) for a in self.hasse_arrows())
        return nx.dag_longest_path_length(graph) + 1

    def cover_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((a.dst, a.src) for a in self.hasse_arrows())
        return graph

    def to_dict(self) -> Dict[str, object]:
        n = self.n
        leq = [[i, j] for i in range(n) for j in range(n) if i != j and self.leq[i, j]]
        covers = [[a.dst, a.src] for a in sorted(self.hasse_arrows(), key=lambda a: (a.dst, a.src))]
        return {"n": n, "leq": leq, "covers": covers}


class FinLattice(FinPoset):
    """
    Finite lattice: a poset where every pair has a meet and a join.

    Construction computes both tables eagerly so a non-lattice fails fast.
    """

    def __init__(self, leq: np.ndarray, labels: Optional[Sequence[int]] = None):
        super().__init__(leq, labels)
        if self.n == 0:
            raise NotALattice('Empty poset has no bottom')
        self.join_table = self._bound_table(self.leq)
        self.meet_table = self._bound_table(self.leq.T)

    @staticmethod
    def _bound_table(up: np.ndarray) -> np.ndarray:
        # up-set(i) & up-set(j) is the up-set of the join iff the join exists
        n = len(up)
        by_upset = {up[i].tobytes(): i for i in range(n)}
        table = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(i, n):
                common = (up[i] & up[j]).tobytes()
                k = by_upset.get(common)
                if k is None:
                    raise NotALattice(f'Elements {i} and {j} have no unique bound')
                table[i, j] = table[j, i] = k
        table.flags.writeable = False
        return table

    @cached_property
    def bottom(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=1))[0])

    @cached_property
    def top(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=0))[0])

    def meet(self, a: int, b: int) -> int:
        return int(self.meet_table[self._check(a), self._check(b)])

    def join(self, a: int, b: int) -> int:
        return int(self.join_table[self._check(a), self._check(b)])

    def down_set(self, x: int) -> List[int]:
        return [int(y) for y in np.flatnonzero(self.leq[:, self._check(x)])]


def build_lattice(n: int, leq_pairs: Iterable[Tuple[int, int]],
                  labels: Optional[Sequence[int]] = None) -> FinLattice:
    """Close the pairs reflexively and transitively; fail unless the result is a lattice."""
    poset = FinPoset.from_pairs(n, leq_pairs, labels)
    return FinLattice(poset.leq, poset.labels)


def bound(l: FinLattice, kind: str, xs: Iterable[int]) -> int:
    """Meet or join of a finite set; meet of nothing is top, join of nothing is bottom."""
    items = [l._check(x) for x in xs]
    if kind == MEET:
        acc, table = l.top, l.meet_table
    elif kind == JOIN:
        acc, table = l.bottom, l.join_table
    else:
        raise ValueError(f'kind must be {MEET!r} or {JOIN!r}, got {kind!r}')
    for x in items:
        acc = int(table[acc, x])
    return acc


def is_completely_semidistributive(l: FinLattice) -> bool:
    """
    In a finite lattice the conditions over arbitrary subsets X reduce to
    pairs: if a v x = a v y = b for all x in X then, inducting over X, it is
    enough that a v x = a v y implies a v (x ^ y) = a v x. Dually for meets.
    """
    return _semidistributive(l.join_table, l.meet_table) and _semidistributive(l.meet_table, l.join_table)


def _semidistributive(op: np.ndarray, dual: np.ndarray) -> bool:
    n = len(op)
    for a in range(n):
        row = op[a]
        same = row[:, None] == row[None, :]
        combined = row[dual]
        if (same & (combined != row[:, None])).any():
            return False
    return True


def irreducibles(l: FinLattice, kind: str) -> Dict[int, int]:
    """
    Join-irreducibles (kind=join) mapped to their unique lower cover j_*,
    or meet-irreducibles mapped to their unique upper cover m^*.
    """
    if kind not in (JOIN, MEET):
        raise ValueError(f'kind must be {MEET!r} or {JOIN!r}, got {kind!r}')
    covers = l.lower_covers if kind == JOIN else l.upper_covers
    return {x: cs[0] for x, cs in enumerate(covers) if len(cs) == 1}


def _unique_max(l: FinLattice, candidates: Sequence[int], what: str) -> int:
    for c in candidates:
        if all(l.leq[x, c] for x in candidates):
            return c
    raise NoUniqueMax(f'No unique maximum for {what}: candidates {list(candidates)}')


def mu_label(l: FinLattice, arrow: HasseArrow) -> int:
    """max{x | src ^ x = dst} for a Hasse arrow src -> dst."""
    src, dst = l._check(arrow.src), l._check(arrow.dst)
    if dst not in l.lower_covers[src]:
        raise UnknownElement(f'{src} -> {dst} is not a Hasse arrow')
    candidates = [int(x) for x in np.flatnonzero(l.meet_table[src] == dst)]
    return _unique_max(l, candidates, f'arrow {src} -> {dst}')


def kappa(l: FinLattice, j: int) -> int:
    jirr = irreducibles(l, JOIN)
    if l._check(j) not in jirr:
        raise NotJoinIrreducible(f'{j} is not join-irreducible')
    return mu_label(l, HasseArrow(j, jirr[j]))


def cjr(l: FinLattice, x: int) -> FrozenSet[int]:
    """
    Canonical join representation of x.

    For each lower cover c of x, take the unique minimal z with z v c = x;
    those z form the candidate. The candidate is then checked exactly: it
    must be an antichain joining to x, and for each member a the join of
    everything below x not above a must fall short of x (otherwise that set
    is a join representation that a does not refine).
    """
    x = l._check(x)
    if x == l.bottom:
        return frozenset()
    below = l.down_set(x)
    parts = set()
    for c in l.lower_covers[x]:
        candidates = [z for z in below if l.join_table[z, c] == x]
        minimal = [z for z in candidates if not any(y != z and l.leq[y, z] for y in candidates)]
        if len(minimal) != 1:
            raise NotCanonical(f'Element {x}: lower cover {c} has minimal complements {minimal}')
        parts.add(minimal[0])
    if bound(l, JOIN, parts) != x:
        raise NotCanonical(f'Element {x}: candidate {sorted(parts)} does not join to it')
    for a in parts:
        if any(b != a and l.leq[a, b] for b in parts):
            raise NotCanonical(f'Element {x}: candidate {sorted(parts)} is not an antichain')
        avoiding = [y for y in below if not l.leq[a, y]]
        if bound(l, JOIN, avoiding) == x:
            raise NotCanonical(f'Element {x}: {a} fails to refine the representation {avoiding}')
    return frozenset(parts)


def refines(l: FinLattice, a: Iterable[int], b: Iterable[int]) -> bool:
    bs = list(b)
    return all(any(l.leq[x, y] for y in bs) for x in a)


def sample_join_representation(l: FinLattice, x: int, rng: random.Random) -> List[int]:
    """A random subset of the down-set of x, grown until it joins to x."""
    below = l.down_set(x)
    rep = [y for y in below if rng.random() < 0.3]
    pool = [y for y in below if y not in rep]
    rng.shuffle(pool)
    while bound(l, JOIN, rep) != x:
        rep.append(pool.pop())
    return rep


def validate_cjr_sampled(l: FinLattice, representations: Mapping[int, FrozenSet[int]],
                         samples: int, seed: int = 0) -> Optional[Tuple[int, List[int]]]:
    """
    Check refinement against `samples` random join representations spread
    over the elements; returns the first (x, representation) that breaks it.
    """
    rng = random.Random(seed)
    elements = sorted(representations)
    if not elements:
        return None
    for _ in range(samples):
        x = rng.choice(elements)
        rep = sample_join_representation(l, x, rng)
        if not refines(l, representations[x], rep):
            return x, rep
    return None


@dataclass(frozen=True)
class KappaData:
    jirr: Dict[int, int]
    mirr: Dict[int, int]
    kappa: Dict[int, int]
    cjr: Dict[int, Optional[FrozenSet[int]]]
    ext_kappa: Dict[int, int] = field(default_factory=dict)

    @property
    def l0(self) -> List[int]:
        return [x for x, rep in self.cjr.items() if rep is not None]


def extended_kappa(l: FinLattice, x: int) -> int:
    return bound(l, MEET, (kappa(l, j) for j in cjr(l, x)))


def kappa_data(l: FinLattice) -> KappaData:
    """Everything kappa-related in one pass; undefined entries are left out (or None for cjr)."""
    jirr = irreducibles(l, JOIN)
    mirr = irreducibles(l, MEET)
    kap: Dict[int, int] = {}
    for j in jirr:
        try:
            kap[j] = kappa(l, j)
        except NoUniqueMax:
            continue
    reps: Dict[int, Optional[FrozenSet[int]]] = {}
    ext: Dict[int, int] = {}
    for x in range(l.n):
        try:
            reps[x] = cjr(l, x)
        except NotCanonical:
            reps[x] = None
            continue
        if all(j in kap for j in reps[x]):
            ext[x] = bound(l, MEET, (kap[j] for j in reps[x]))
    log_event(LOG, "kappa_data", n=l.n, jirr=len(jirr), l0=sum(r is not None for r in reps.values()))
    return KappaData(jirr=jirr, mirr=mirr, kappa=kap, cjr=reps, ext_kappa=ext)


def kappa_poset(l: FinLattice, data: Optional[KappaData] = None) -> FinPoset:
    """(L_0, <=_k): a <=_k b iff a <= b and kbar(a) >= kbar(b). Labels are lattice ids."""
    data = data or kappa_data(l)
    elems = [x for x in data.l0 if x in data.ext_kappa]
    m = len(elems)
    rel = np.zeros((m, m), dtype=bool)
    for i, a in enumerate(elems):
        for k, b in enumerate(elems):
            rel[i, k] = bool(l.leq[a, b] and l.leq[data.ext_kappa[b], data.ext_kappa[a]])
    return FinPoset(rel, labels=elems)


def poset_isomorphic(p: FinPoset, q: FinPoset, candidate: Optional[Mapping[int, int]] = None,
                     max_size: int = 20) -> Tuple[bool, Optional[Dict[int, int]]]:
    """
    Decide p ~= q. With a candidate map only order preservation in both
    directions is tested; otherwise a VF2 search over the cover digraphs
    (a poset is determined by its Hasse quiver) runs, refused above max_size.
    """
    if candidate is not None:
        if sorted(candidate) != list(range(p.n)) or sorted(candidate.values()) != list(range(q.n)):
            return False, None
        for a in range(p.n):
            for b in range(p.n):
                if bool(p.leq[a, b]) != bool(q.leq[candidate[a], candidate[b]]):
                    return False, None
        return True, dict(candidate)
    if p.n != q.n:
        return False, None
    if p.n > max_size:
        raise TooLarge(f'Generic isomorphism search refused for {p.n} > {max_size} elements')
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(p.cover_graph(), q.cover_graph())
    if matcher.is_isomorphic():
        return True, {int(a): int(b) for a, b in sorted(matcher.mapping.items())}
    return False, None
