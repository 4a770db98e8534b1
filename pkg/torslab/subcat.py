"""
Subcategory calculus over a Nakayama algebra.

A subcategory is the additive closure of a set of indecomposables. Torsion,
torsion-free and wide classes are summand-closed, so member sets describe
them faithfully. Gen, Sub and Filt reduce to interval arithmetic on uniserial
modules; anything quantifying over actual morphisms (wideness, alpha/beta by
definition, the extension condition on minimal extending modules) goes through the
matrix oracle.

Internally member sets are bitmasks over `indecomposables(a)`.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import NotExtensionClosed, NotMinimalExtending, TooLarge
from .lattice_core import FinLattice, FinPoset, HasseArrow, KappaData, kappa_data, mu_label
from .linrep_oracle import (RepMorphism, decompose, extension_middles, kernel_cokernel,
                            morphism_from_arrow, realize)
from .nakayama import (QUOTIENTS, SUBMODULES, AlgebraSpec, HomArrow, Indec, arrow_cokernel,
                       arrow_kernel, factors, hom_arrows, hom_dim, indecomposables, is_brick,
                       split_at)
from .observability import get_logger, log_event, timed

LOG = get_logger("subcat")

TORS = "tors"
TORF = "torf"
WIDE = "wide"
KINDS = (TORS, TORF, WIDE)

RIGHT = "right"
LEFT = "left"


@dataclass(frozen=True)
class SubcatSet:
    algebra: AlgebraSpec
    members: FrozenSet[Indec]

    @classmethod
    def of(cls, a: AlgebraSpec, members: Iterable[Indec] = ()) -> 'SubcatSet':
        return cls(a, frozenset(members))

    @classmethod
    def everything(cls, a: AlgebraSpec) -> 'SubcatSet':
        return cls(a, frozenset(indecomposables(a)))

    def __contains__(self, m: Indec) -> bool:
        return m in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Indec]:
        return iter(sorted(self.members))

    def sorted_members(self) -> List[Indec]:
        return sorted(self.members)

    def key(self) -> Tuple[int, Tuple[Indec, ...]]:
        'Canonical sort key: size, then sorted member list'
        return len(self.members), tuple(sorted(self.members))

    def with_members(self, extra: Iterable[Indec]) -> 'SubcatSet':
        return SubcatSet(self.algebra, self.members | frozenset(extra))

    def to_list(self) -> List[Dict[str, int]]:
        return [m.to_dict() for m in sorted(self.members)]

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.members))) + "}"


class _Universe:
    """Bitmask tables over the indecomposables of one algebra."""

    def __init__(self, a: AlgebraSpec):
        self.algebra = a
        self.indecs = indecomposables(a)
        self.pos = {m: k for k, m in enumerate(self.indecs)}
        self.full = (1 << len(self.indecs)) - 1
        pos = self.pos
        self.quotients = [self._mask(factors(a, m, QUOTIENTS)) for m in self.indecs]
        self.submodules = [self._mask(factors(a, m, SUBMODULES)) for m in self.indecs]
        # splits[k]: (quotient, submodule) of every 0 -> M(i+t, l-t) -> M -> M(i, t) -> 0
        self.splits = [tuple((pos[q], pos[s]) for q, s in (split_at(a, m, t) for t in range(1, m.len)))
                       for m in self.indecs]
        self.by_length = sorted(range(len(self.indecs)), key=lambda k: self.indecs[k].len)
        self.hom_out = [self._mask(n for n in self.indecs if hom_dim(a, m, n)) for m in self.indecs]
        self.hom_in = [self._mask(n for n in self.indecs if hom_dim(a, n, m)) for m in self.indecs]
        # every kernel and cokernel of a basis arrow m -> n, as a mask, keyed by (m, n)
        self.arrow_closure: Dict[Tuple[int, int], int] = {}
        for m in self.indecs:
            for n in self.indecs:
                need = 0
                for arr in hom_arrows(a, m, n):
                    need |= self._mask(x for x in (arrow_kernel(a, arr), arrow_cokernel(a, arr)) if x)
                if need:
                    self.arrow_closure[(pos[m], pos[n])] = need

    def _mask(self, ms: Iterable[Indec]) -> int:
        out = 0
        for m in ms:
            out |= 1 << self.pos[m]
        return out

    def mask(self, s: SubcatSet) -> int:
        return self._mask(s.members)

    def subcat(self, mask: int) -> SubcatSet:
        return SubcatSet(self.algebra, frozenset(self.indecs[k] for k in _bits(mask)))


@lru_cache(maxsize=None)
def _universe(a: AlgebraSpec) -> _Universe:
    return _Universe(a)


def _bits(mask: int) -> Iterator[int]:
    k = 0
    while mask:
        if mask & 1:
            yield k
        mask >>= 1
        k += 1


def _union_of(table: Sequence[int], mask: int) -> int:
    out = 0
    for k in _bits(mask):
        out |= table[k]
    return out


def _filt_mask(u: _Universe, s: int) -> int:
    # M(i,l) in Filt(s) iff M(i,t) in s and (t = l or M(i+t, l-t) in Filt(s)) for some t
    out = 0
    for k in u.by_length:
        if s >> k & 1 or any(s >> q & 1 and out >> r & 1 for q, r in u.splits[k]):
            out |= 1 << k
    return out


def _tors_mask(u: _Universe, s: int) -> int:
    out = _filt_mask(u, _union_of(u.quotients, s))
    assert _union_of(u.quotients, out) == out, 'torsion closure not stable after one pass'
    return out


def _torf_mask(u: _Universe, s: int) -> int:
    out = _filt_mask(u, _union_of(u.submodules, s))
    assert _union_of(u.submodules, out) == out, 'torsion-free closure not stable after one pass'
    return out


def _is_tors_mask(u: _Universe, s: int) -> bool:
    return _union_of(u.quotients, s) == s and _filt_mask(u, s) == s


def _is_torf_mask(u: _Universe, s: int) -> bool:
    return _union_of(u.submodules, s) == s and _filt_mask(u, s) == s


def _arrow_closed_mask(u: _Universe, s: int) -> bool:
    'Kernels and cokernels of single basis arrows between members stay inside'
    members = list(_bits(s))
    for m in members:
        for n in members:
            need = u.arrow_closure.get((m, n), 0)
            if need & ~s:
                return False
    return True


# -- closures -----------------------------------------------------------------

def gen_closure(x: SubcatSet) -> SubcatSet:
    """
    Indecomposable quotients of finite direct sums of members. A quotient of
    a sum of uniserials with a local top is a quotient of one summand.
    """
    u = _universe(x.algebra)
    return u.subcat(_union_of(u.quotients, u.mask(x)))


def sub_closure(x: SubcatSet) -> SubcatSet:
    u = _universe(x.algebra)
    return u.subcat(_union_of(u.submodules, u.mask(x)))


def filt_closure(s: SubcatSet) -> SubcatSet:
    u = _universe(s.algebra)
    return u.subcat(_filt_mask(u, u.mask(s)))


def filt_contains(s: SubcatSet, e: Indec) -> bool:
    return e in filt_closure(s)


def tors_closure(x: SubcatSet) -> SubcatSet:
    """T(X) = Filt(Gen(X)): one Gen pass and one Filt pass."""
    u = _universe(x.algebra)
    return u.subcat(_tors_mask(u, u.mask(x)))


def torf_closure(x: SubcatSet) -> SubcatSet:
    """F(X) = Filt(Sub(X))."""
    u = _universe(x.algebra)
    return u.subcat(_torf_mask(u, u.mask(x)))


def is_extension_closed(c: SubcatSet) -> bool:
    return filt_closure(c).members == c.members


def is_torsion_class(c: SubcatSet) -> bool:
    u = _universe(c.algebra)
    return _is_tors_mask(u, u.mask(c))


def is_torsion_free_class(c: SubcatSet) -> bool:
    u = _universe(c.algebra)
    return _is_torf_mask(u, u.mask(c))


def perp(c: SubcatSet, side: str = RIGHT) -> SubcatSet:
    """c^perp = {e : Hom(c, e) = 0} (right) or perp-c = {e : Hom(e, c) = 0} (left)."""
    u = _universe(c.algebra)
    if side == RIGHT:
        hit = _union_of(u.hom_out, u.mask(c))
    elif side == LEFT:
        hit = _union_of(u.hom_in, u.mask(c))
    else:
        raise ValueError(f'side must be {RIGHT!r} or {LEFT!r}, got {side!r}')
    return u.subcat(u.full & ~hit)


def sim_in(c: SubcatSet) -> FrozenSet[Indec]:
    """Members admitting no short exact sequence with both outer terms in c."""
    if not is_extension_closed(c):
        raise NotExtensionClosed(f'{c} is not closed under extensions')
    a = c.algebra
    out = set()
    for m in c.members:
        if not any(q in c and s in c for q, s in (split_at(a, m, t) for t in range(1, m.len))):
            out.add(m)
    return frozenset(out)


# -- oracle-backed wideness -----------------------------------------------------

def _is_scalar(arrow: HomArrow) -> bool:
    return arrow.src == arrow.dst and arrow.injective


def _star_morphism(a: AlgebraSpec, arrows: Tuple[HomArrow, ...], p: int) -> RepMorphism:
    """
    Sum of basis arrows sharing a source (into the sum of their targets) or
    sharing a target (out of the sum of their sources). Arrows between the
    same pair of summands are added up in one block.
    """
    parts = {arr: morphism_from_arrow(arr, a, p) for arr in arrows}
    if len({arr.src for arr in arrows}) == 1:
        targets = sorted({arr.dst for arr in arrows})
        x, y = realize(a, [arrows[0].src], p), realize(a, targets, p)
        maps = []
        for v in range(a.n):
            rows = [sum((parts[arr].maps[v] for arr in arrows if arr.dst == n),
                        np.zeros((realize(a, [n], p).dims[v], x.dims[v]), dtype=np.int64))
                    for n in targets]
            maps.append(np.vstack(rows) % p)
        return RepMorphism(x, y, tuple(maps))
    assert len({arr.dst for arr in arrows}) == 1, 'arrows share neither source nor target'
    sources = sorted({arr.src for arr in arrows})
    x, y = realize(a, sources, p), realize(a, [arrows[0].dst], p)
    maps = []
    for v in range(a.n):
        cols = [sum((parts[arr].maps[v] for arr in arrows if arr.src == m),
                    np.zeros((y.dims[v], realize(a, [m], p).dims[v]), dtype=np.int64))
                for m in sources]
        maps.append(np.hstack(cols) % p)
    return RepMorphism(x, y, tuple(maps))


@lru_cache(maxsize=None)
def star_kernel_cokernel(a: AlgebraSpec, arrows: Tuple[HomArrow, ...],
                         p: int = 2) -> Tuple[Tuple[Indec, ...], Tuple[Indec, ...]]:
    """Indecomposable summands of the kernel and of the cokernel of a star map."""
    ker, coker = kernel_cokernel(_star_morphism(a, arrows, p))
    return decompose(ker), decompose(coker)


def _stars(c: SubcatSet, bound: int, into: Optional[Indec] = None,
           out_of: Optional[Indec] = None) -> Iterator[Tuple[HomArrow, ...]]:
    """
    Sums of 2..bound basis arrows between members that share a source or a
    target. Sums of arrows with disjoint ends split into single arrows and
    are covered by the combinatorial test.
    """
    a = c.algebra
    members = c.sorted_members()
    centers = [into] if into is not None else [out_of] if out_of is not None else members
    for m in centers:
        if into is None:
            outgoing = [arr for n in members for arr in hom_arrows(a, m, n) if not _is_scalar(arr)]
            for k in range(2, bound + 1):
                yield from itertools.combinations(outgoing, k)
        if out_of is None:
            incoming = [arr for n in members for arr in hom_arrows(a, n, m) if not _is_scalar(arr)]
            for k in range(2, bound + 1):
                for combo in itertools.combinations(incoming, k):
                    if into is not None or len({arr.src for arr in combo}) > 1:
                        yield combo


def is_wide(c: SubcatSet, bound: int = 2, p: int = 2) -> bool:
    """
    Extension-closed, closed under kernels and cokernels of basis arrows
    (interval arithmetic), and closed under kernels and cokernels of every
    sum of up to `bound` arrows sharing an end, computed by the oracle.
    """
    u = _universe(c.algebra)
    s = u.mask(c)
    if _filt_mask(u, s) != s or not _arrow_closed_mask(u, s):
        return False
    for star in _stars(c, bound):
        ker, coker = star_kernel_cokernel(c.algebra, star, p)
        if any(m not in c for m in ker + coker):
            return False
    return True


# -- minimal (co-)extending modules ------------------------------------------------

def minimal_extending(t: SubcatSet, p: int = 2, max_classes: int = 256,
                      bricks_only: bool = True) -> FrozenSet[Indec]:
    """
    Indecomposables b (bricks only unless bricks_only is off) with
    every proper quotient in t, Hom(t, b) = 0, and every nonsplit
    0 -> b -> X -> T -> 0 with T indecomposable in t having X in t. The last
    condition is decided by the oracle over the relation-respecting extension classes.
    """
    a = t.algebra
    out = set()
    for b in indecomposables(a):
        if b in t or (bricks_only and not is_brick(a, b)):
            continue
        if any(q not in t for q in factors(a, b, QUOTIENTS, proper=True)):
            continue
        if any(hom_dim(a, e, b) for e in t.members):
            continue
        if all(all(x in t for x in middle)
               for e in t.members
               for middle in extension_middles(a, b, e, p, max_classes)):
            out.add(b)
    return frozenset(out)


def minimal_coextending(f: SubcatSet, p: int = 2, max_classes: int = 256,
                        bricks_only: bool = True) -> FrozenSet[Indec]:
    """Dual: proper submodules in f, Hom(b, f) = 0, nonsplit 0 -> F -> X -> b -> 0 has X in f."""
    a = f.algebra
    out = set()
    for b in indecomposables(a):
        if b in f or (bricks_only and not is_brick(a, b)):
            continue
        if any(s not in f for s in factors(a, b, SUBMODULES, proper=True)):
            continue
        if any(hom_dim(a, b, e) for e in f.members):
            continue
        if all(all(x in f for x in middle)
               for e in f.members
               for middle in extension_middles(a, e, b, p, max_classes)):
            out.add(b)
    return frozenset(out)


def eta(t: SubcatSet, b: Indec, p: int = 2) -> SubcatSet:
    """Filt(t + {b}) for b minimal extending; the cover of t labeled by b."""
    if b not in minimal_extending(t, p):
        raise NotMinimalExtending(f'{b} is not minimal extending for {t}')
    out = filt_closure(t.with_members([b]))
    assert out == tors_closure(t.with_members([b])), f'Filt({t} + {b}) is not a torsion class'
    return out


def zeta(f: SubcatSet, b: Indec, p: int = 2) -> SubcatSet:
    if b not in minimal_coextending(f, p):
        raise NotMinimalExtending(f'{b} is not minimal co-extending for {f}')
    out = filt_closure(f.with_members([b]))
    assert out == torf_closure(f.with_members([b])), f'Filt({f} + {b}) is not a torsion-free class'
    return out


# -- alpha / beta ------------------------------------------------------------------

def alpha(t: SubcatSet, p: int = 2) -> SubcatSet:
    """alpha(T) = Filt(MCE(T^perp))."""
    return filt_closure(SubcatSet.of(t.algebra, minimal_coextending(perp(t, RIGHT), p)))


def beta(f: SubcatSet, p: int = 2) -> SubcatSet:
    """beta(F) = Filt(ME(perp-F))."""
    return filt_closure(SubcatSet.of(f.algebra, minimal_extending(perp(f, LEFT), p)))


def alpha_direct(t: SubcatSet, bound: int = 2, p: int = 2) -> SubcatSet:
    """
    {X in t : ker g in t for every g: Y -> X with Y in t}, tested on basis
    arrows and on sums of up to `bound` arrows into X.
    """
    a = t.algebra
    keep = []
    for x in t.sorted_members():
        ok = all(k is None or k in t
                 for y in t.members for arr in hom_arrows(a, y, x)
                 for k in [arrow_kernel(a, arr)])
        if ok:
            ok = all(m in t for star in _stars(t, bound, into=x)
                     for m in star_kernel_cokernel(a, star, p)[0])
        if ok:
            keep.append(x)
    return SubcatSet.of(a, keep)


def beta_direct(f: SubcatSet, bound: int = 2, p: int = 2) -> SubcatSet:
    """{X in f : coker g in f for every g: X -> Y with Y in f}, bounded like alpha_direct."""
    a = f.algebra
    keep = []
    for x in f.sorted_members():
        ok = all(k is None or k in f
                 for y in f.members for arr in hom_arrows(a, x, y)
                 for k in [arrow_cokernel(a, arr)])
        if ok:
            ok = all(m in f for star in _stars(f, bound, out_of=x)
                     for m in star_kernel_cokernel(a, star, p)[1])
        if ok:
            keep.append(x)
    return SubcatSet.of(a, keep)


def is_widely_generated(t: SubcatSet, p: int = 2, max_classes: int = 256) -> bool:
    """T is widely generated iff T = T(MCE(T^perp))."""
    gen = minimal_coextending(perp(t, RIGHT), p, max_classes)
    return tors_closure(SubcatSet.of(t.algebra, gen)) == t


def is_torf_widely_generated(f: SubcatSet, p: int = 2, max_classes: int = 256) -> bool:
    gen = minimal_extending(perp(f, LEFT), p, max_classes)
    return torf_closure(SubcatSet.of(f.algebra, gen)) == f


def is_finitely_generated(c: SubcatSet, kind: str = TORS) -> bool:
    """T = T(M) for M the direct sum of all members (F(M) for torsion-free classes)."""
    closure = tors_closure if kind == TORS else torf_closure
    return closure(SubcatSet.of(c.algebra, c.members)) == c


# -- enumeration --------------------------------------------------------------------

def _accepts(u: _Universe, kind: str, s: int, bound: int, p: int) -> bool:
    if kind == TORS:
        return _is_tors_mask(u, s)
    if kind == TORF:
        return _is_torf_mask(u, s)
    if _filt_mask(u, s) != s or not _arrow_closed_mask(u, s):
        return False
    return is_wide(u.subcat(s), bound, p)


def _scan_masks(a: AlgebraSpec, kind: str, lo: int, hi: int, bound: int, p: int) -> List[int]:
    u = _universe(a)
    return [s for s in range(lo, hi) if _accepts(u, kind, s, bound, p)]


def _sorted(u: _Universe, masks: Iterable[int]) -> List[SubcatSet]:
    return sorted((u.subcat(s) for s in set(masks)), key=SubcatSet.key)


def enumerate_classes(a: AlgebraSpec, kind: str, max_indecs: int = 22, jobs: int = 1,
                      bound: int = 2, p: int = 2) -> List[SubcatSet]:
    """
    Brute force over every subset of indecomposables with the membership
    test of `kind`; sorted by (size, member list). With jobs > 1 the subset
    range is split across worker processes.
    """
    if kind not in KINDS:
        raise ValueError(f'kind must be one of {KINDS}, got {kind!r}')
    u = _universe(a)
    count = len(u.indecs)
    if count > max_indecs:
        raise TooLarge(f'{a} has {count} indecomposables; brute force is capped at {max_indecs}')
    total = 1 << count
    with timed(LOG, "enumerate", algebra=str(a), kind=kind, jobs=jobs) as extra:
        if jobs <= 1:
            masks = _scan_masks(a, kind, 0, total, bound, p)
        else:
            step = -(-total // (jobs * 4))
            ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunks = pool.map(_scan_masks, *zip(*[(a, kind, lo, hi, bound, p) for lo, hi in ranges]))
                masks = [s for chunk in chunks for s in chunk]
        out = _sorted(u, masks)
        extra["classes"] = len(out)
    return out


def enumerate_by_closure(a: AlgebraSpec, kind: str) -> List[SubcatSet]:
    """
    {T(X) : X a set of indecomposables} (F(X) for torf), grown one
    indecomposable at a time from the zero class.
    """
    if kind not in (TORS, TORF):
        raise ValueError(f'closure enumeration needs {TORS!r} or {TORF!r}, got {kind!r}')
    u = _universe(a)
    close = _tors_mask if kind == TORS else _torf_mask
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for s in frontier:
            for k in range(len(u.indecs)):
                if s >> k & 1:
                    continue
                t = close(u, s | 1 << k)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    log_event(LOG, "enumerate_by_closure", algebra=str(a), kind=kind, classes=len(seen))
    return _sorted(u, seen)


# -- lattices of torsion and torsion-free classes -------------------------------------------

class TorsLattice:
    """
    Torsion classes (kind=tors) or torsion-free classes (kind=torf) ordered
    by inclusion. Meets are intersections; joins are closures of unions.
    Hasse arrows point from the larger class to the smaller one, each carrying
    the brick in larger ∩ smaller^perp (perp-smaller for torf).
    """

    def __init__(self, a: AlgebraSpec, kind: str, classes: Sequence[SubcatSet]):
        self.algebra = a
        self.kind = kind
        self.classes: Tuple[SubcatSet, ...] = tuple(classes)
        self.index = {c.members: k for k, c in enumerate(self.classes)}
        u = _universe(a)
        masks = [u.mask(c) for c in self.classes]
        m = len(masks)
        rel = np.zeros((m, m), dtype=bool)
        for i in range(m):
            for j in range(m):
                rel[i, j] = masks[i] & masks[j] == masks[i]
        self.lattice = FinLattice(FinPoset.from_relation(rel).leq)

    def __repr__(self):
        return f'TorsLattice({self.algebra}, kind={self.kind}, classes={len(self.classes)})'

    def find(self, c: SubcatSet) -> int:
        return self.index[c.members]

    @cached_property
    def brick_labels(self) -> Dict[HasseArrow, Indec]:
        out = {}
        side = RIGHT if self.kind == TORS else LEFT
        for arrow in self.lattice.hasse_arrows():
            big, small = self.classes[arrow.src], self.classes[arrow.dst]
            new = [m for m in big.members & perp(small, side).members if is_brick(self.algebra, m)]
            assert len(new) == 1, f'cover {small} < {big} carries bricks {sorted(new)}'
            out[arrow] = new[0]
        return out

    @cached_property
    def mu_labels(self) -> Dict[HasseArrow, int]:
        return {arrow: mu_label(self.lattice, arrow) for arrow in self.lattice.hasse_arrows()}

    @cached_property
    def kappa(self) -> KappaData:
        return kappa_data(self.lattice)


def tors_lattice(a: AlgebraSpec, kind: str = TORS, classes: Optional[Sequence[SubcatSet]] = None,
                 max_indecs: int = 22, jobs: int = 1) -> TorsLattice:
    """Lattice of all torsion (or torsion-free) classes; closure enumeration above the brute-force cap."""
    if classes is None:
        if len(indecomposables(a)) <= max_indecs:
            classes = enumerate_classes(a, kind, max_indecs=max_indecs, jobs=jobs)
        else:
            classes = enumerate_by_closure(a, kind)
    return TorsLattice(a, kind, classes)


def covers(tl: TorsLattice, t: int) -> List[int]:
    """Upper covers of class t."""
    return list(tl.lattice.upper_covers[tl.lattice._check(t)])
