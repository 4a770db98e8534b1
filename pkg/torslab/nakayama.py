"""
Nakayama algebras and their uniserial modules.

An algebra is a linear (1 -> 2 -> ... -> n) or cyclic quiver with the zero
relations fixed by a Kupisch series. Every indecomposable is uniserial,
M(i, l) with top S_i and composition factors S_i, S_{i+1}, ..., S_{i+l-1},
so Hom, quotients, submodules and bricks reduce to interval arithmetic.

Grammar accepted by parse_algebra:
    linA:<n>                         linear, Kupisch n, n-1, ..., 1
    nakayama:<linear|cyclic>:<c1,...,cn>
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .errors import InvalidKupisch, SpecParseError

LINEAR = "linear"
CYCLIC = "cyclic"

QUOTIENTS = "quotients"
SUBMODULES = "submodules"


@dataclass(frozen=True)
class AlgebraSpec:
    shape: str
    kupisch: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.kupisch)

    @property
    def cyclic(self) -> bool:
        return self.shape == CYCLIC

    def c(self, i: int) -> int:
        return self.kupisch[i - 1]

    def vertex(self, k: int) -> Optional[int]:
        """Vertex reached at position k of a composition series (None off the linear quiver)."""
        if self.cyclic:
            return (k - 1) % self.n + 1
        return k if 1 <= k <= self.n else None

    def arrows(self) -> List[Tuple[int, int]]:
        'Arrows as (src, dst) pairs, arrow a_i : i -> i+1'
        last = self.n if self.cyclic else self.n - 1
        return [(i, self.vertex(i + 1)) for i in range(1, last + 1)]

    def __str__(self) -> str:
        if not self.cyclic and self.kupisch == tuple(range(self.n, 0, -1)):
            return f"linA:{self.n}"
        return f"nakayama:{self.shape}:{','.join(map(str, self.kupisch))}"


@dataclass(frozen=True, order=True)
class Indec:
    top: int
    len: int

    def to_dict(self) -> Dict[str, int]:
        return {"top": self.top, "len": self.len}

    def __str__(self) -> str:
        return f"M({self.top},{self.len})"


@dataclass(frozen=True)
class HomArrow:
    """Basis map src ->> M(src.top, t) -> dst; the image has length t."""
    src: Indec
    dst: Indec
    t: int

    @property
    def injective(self) -> bool:
        return self.t == self.src.len

    @property
    def surjective(self) -> bool:
        return self.t == self.dst.len


def validate(a: AlgebraSpec, cyclic_bound: int = 2) -> AlgebraSpec:
    c, n = a.kupisch, a.n
    if n == 0:
        raise InvalidKupisch("Kupisch series is empty")
    if a.shape == LINEAR:
        if c[-1] != 1:
            raise InvalidKupisch(f"Linear Kupisch series must end in 1: {c}")
        for i in range(n):
            if c[i] < 1 or c[i] > n - i:
                raise InvalidKupisch(f"c_{i + 1} = {c[i]} outside 1..{n - i}")
        for i in range(n - 1):
            if c[i + 1] < c[i] - 1:
                raise InvalidKupisch(f"c_{i + 2} = {c[i + 1]} < c_{i + 1} - 1 = {c[i] - 1}")
    elif a.shape == CYCLIC:
        limit = cyclic_bound * n + 1
        for i in range(n):
            if not 2 <= c[i] <= limit:
                raise InvalidKupisch(f"Cyclic c_{i + 1} = {c[i]} outside 2..{limit}")
            if c[(i + 1) % n] < c[i] - 1:
                raise InvalidKupisch(f"c_{(i + 1) % n + 1} = {c[(i + 1) % n]} < c_{i + 1} - 1")
    else:
        raise InvalidKupisch(f"Unknown shape {a.shape!r}")
    return a


def parse_algebra(text: str, cyclic_bound: int = 2) -> AlgebraSpec:
    parts = text.strip().split(":")
    try:
        if parts[0] == "linA" and len(parts) == 2:
            n = int(parts[1])
            if n < 1:
                raise SpecParseError(f"linA needs n >= 1: {text!r}")
            spec = AlgebraSpec(LINEAR, tuple(range(n, 0, -1)))
        elif parts[0] == "nakayama" and len(parts) == 3 and parts[1] in (LINEAR, CYCLIC):
            spec = AlgebraSpec(parts[1], tuple(int(x) for x in parts[2].split(",")))
        else:
            raise SpecParseError(f"Cannot parse algebra spec {text!r}")
    except ValueError as e:
        raise SpecParseError(f"Cannot parse algebra spec {text!r}: {e}") from e
    return validate(spec, cyclic_bound)


@lru_cache(maxsize=None)
def indecomposables(a: AlgebraSpec) -> Tuple[Indec, ...]:
    """All M(i, l), 1 <= l <= c_i, ordered by i then l."""
    return tuple(Indec(i, l) for i in range(1, a.n + 1) for l in range(1, a.c(i) + 1))


def projective(a: AlgebraSpec, i: int) -> Indec:
    return Indec(i, a.c(i))


def composition_factors(a: AlgebraSpec, m: Indec) -> List[int]:
    return [a.vertex(m.top + k) for k in range(m.len)]


def dim_vector(a: AlgebraSpec, m: Indec) -> Tuple[int, ...]:
    dims = [0] * a.n
    for v in composition_factors(a, m):
        dims[v - 1] += 1
    return tuple(dims)


def _same_vertex(a: AlgebraSpec, p: int, q: int) -> bool:
    return (p - q) % a.n == 0 if a.cyclic else p == q


@lru_cache(maxsize=None)
def hom_arrows(a: AlgebraSpec, m: Indec, x: Indec) -> Tuple[HomArrow, ...]:
    """
    Basis of Hom(m, x): one map per image length t with the length-t quotient
    of m equal to the length-t submodule of x, i.e. m.top == x.top + x.len - t.
    """
    return tuple(HomArrow(m, x, t) for t in range(1, min(m.len, x.len) + 1)
                 if _same_vertex(a, m.top, x.top + x.len - t))


def hom_dim(a: AlgebraSpec, m: Indec, x: Indec) -> int:
    return len(hom_arrows(a, m, x))


def factors(a: AlgebraSpec, m: Indec, kind: str, proper: bool = False) -> List[Indec]:
    """Quotients M(i, t) or submodules M(i+l-t, t), t = 1..l (t < l when proper)."""
    stop = m.len if proper else m.len + 1
    if kind == QUOTIENTS:
        return [Indec(m.top, t) for t in range(1, stop)]
    if kind == SUBMODULES:
        return [Indec(a.vertex(m.top + m.len - t), t) for t in range(1, stop)]
    raise ValueError(f"kind must be {QUOTIENTS!r} or {SUBMODULES!r}, got {kind!r}")


def radical(a: AlgebraSpec, m: Indec) -> Optional[Indec]:
    return Indec(a.vertex(m.top + 1), m.len - 1) if m.len > 1 else None


def split_at(a: AlgebraSpec, m: Indec, t: int) -> Tuple[Indec, Indec]:
    """(quotient M(i,t), submodule M(i+t, l-t)) of 0 -> sub -> m -> quotient -> 0."""
    assert 1 <= t < m.len
    return Indec(m.top, t), Indec(a.vertex(m.top + t), m.len - t)


def is_brick(a: AlgebraSpec, m: Indec) -> bool:
    return hom_dim(a, m, m) == 1


def arrow_kernel(a: AlgebraSpec, arrow: HomArrow) -> Optional[Indec]:
    """ker of a basis arrow with image length t: M(i+t, l-t), None when injective."""
    m, t = arrow.src, arrow.t
    return None if t == m.len else Indec(a.vertex(m.top + t), m.len - t)


def arrow_cokernel(a: AlgebraSpec, arrow: HomArrow) -> Optional[Indec]:
    """coker of a basis arrow with image length t: M(j, m-t), None when surjective."""
    x, t = arrow.dst, arrow.t
    return None if t == x.len else Indec(x.top, x.len - t)
